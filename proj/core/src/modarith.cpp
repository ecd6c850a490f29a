#include "ternrec/modarith.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <utility>

namespace ternrec {

u64 pow_mod(u64 a, u64 e, u64 m) {
  u64 result = 1 % m;
  u64 base = a % m;
  while (e != 0) {
    if (e & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    e >>= 1;
  }
  return result;
}

std::optional<u64> inv_mod(u64 a, u64 m) {
  i128 old_r = static_cast<i128>(a % m), r = static_cast<i128>(m);
  i128 old_s = 1, s = 0;
  while (r != 0) {
    const i128 q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  if (old_r != 1) return std::nullopt;
  return reduce(old_s, m);
}

int kronecker(i64 a_in, i64 n_in) {
  static constexpr std::array<int, 8> kTwo = {0, 1, 0, -1, 0, -1, 0, 1};

  if (n_in == 0) return (a_in == 1 || a_in == -1) ? 1 : 0;
  if ((a_in & 1) == 0 && (n_in & 1) == 0) return 0;

  // Work in 128 bits so that |INT64_MIN| is representable.
  i128 n = n_in;
  int k = 1;
  if (n < 0) {
    n = -n;
    if (a_in < 0) k = -k;
  }
  const int v = std::countr_zero(static_cast<u64>(n));
  n >>= v;
  if (v & 1) k *= kTwo[static_cast<u64>(a_in) & 7];

  // Jacobi symbol (a/n) with n odd and positive.
  u64 nn = static_cast<u64>(n);
  u64 aa = reduce(static_cast<i128>(a_in), nn);
  while (aa != 0) {
    const int t = std::countr_zero(aa);
    aa >>= t;
    if (t & 1) k *= kTwo[nn & 7];
    if ((aa & nn & 2) != 0) k = -k;
    const u64 r = nn % aa;
    nn = aa;
    aa = r;
  }
  return nn == 1 ? k : 0;
}

std::optional<u64> sqrt_mod(u64 a, u64 p) {
  a %= p;
  if (p == 2 || a == 0) return a;
  if (kronecker(static_cast<i64>(a), static_cast<i64>(p)) != 1) return std::nullopt;

  u64 r;
  if ((p & 3) == 3) {
    r = pow_mod(a, (p + 1) / 4, p);
  } else {
    // Tonelli-Shanks: p - 1 = q * 2^s with q odd.
    u64 q = p - 1;
    int s = 0;
    while ((q & 1) == 0) {
      q >>= 1;
      ++s;
    }
    u64 z = 2;
    while (kronecker(static_cast<i64>(z), static_cast<i64>(p)) != -1) ++z;

    u64 c = pow_mod(z, q, p);
    u64 t = pow_mod(a, q, p);
    r = pow_mod(a, (q + 1) / 2, p);
    int m = s;
    while (t != 1) {
      int i = 0;
      u64 t2 = t;
      while (t2 != 1) {
        t2 = mul_mod(t2, t2, p);
        ++i;
      }
      u64 b = c;
      for (int j = 0; j < m - i - 1; ++j) b = mul_mod(b, b, p);
      m = i;
      c = mul_mod(b, b, p);
      t = mul_mod(t, c, p);
      r = mul_mod(r, b, p);
    }
  }
  return std::min(r, p - r);
}

namespace {

bool miller_rabin_witness(u64 n, u64 a, u64 d, int s) {
  u64 x = pow_mod(a % n, d, n);
  if (x == 1 || x == n - 1) return false;
  for (int i = 1; i < s; ++i) {
    x = static_cast<u64>(static_cast<u128>(x) * x % n);
    if (x == n - 1) return false;
  }
  return true;
}

}  // namespace

bool is_prime(u64 n) {
  static constexpr std::array<u64, 12> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  if (n < 2) return false;
  for (u64 b : kBases) {
    if (n == b) return true;
    if (n % b == 0) return false;
  }
  if (n < 41 * 41) return true;

  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // The first twelve prime bases are a deterministic set below 3.3e24.
  for (u64 b : kBases) {
    if (miller_rabin_witness(n, b, d, s)) return false;
  }
  return true;
}

u64 isqrt(u64 n) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && (r > n / r || r * r > n)) --r;
  while ((r + 1) <= n / (r + 1)) ++r;
  return r;
}

PrimeRange primes_in(u64 lo, u64 hi) {
  PrimeRange out{lo, hi, {}};
  if (hi <= 2 || lo >= hi) return out;
  lo = std::max<u64>(lo, 2);

  const u64 root = isqrt(hi - 1);
  std::vector<u64> base;
  if (root >= 2) {
    std::vector<bool> composite(root + 1, false);
    for (u64 i = 2; i <= root; ++i) {
      if (composite[i]) continue;
      base.push_back(i);
      for (u64 j = i * i; j <= root; j += i) composite[j] = true;
    }
  }

  constexpr u64 kSegment = u64{1} << 18;
  std::vector<char> mark(kSegment);
  for (u64 seg_lo = lo; seg_lo < hi; seg_lo += std::min(kSegment, hi - seg_lo)) {
    const u64 seg_hi = seg_lo + std::min(kSegment, hi - seg_lo);
    std::fill(mark.begin(), mark.end(), 1);
    for (u64 q : base) {
      if (q * q >= seg_hi) break;
      u64 start = std::max(q * q, (seg_lo + q - 1) / q * q);
      for (u64 j = start; j < seg_hi; j += q) mark[j - seg_lo] = 0;
    }
    for (u64 x = seg_lo; x < seg_hi; ++x) {
      if (mark[x - seg_lo]) out.primes.push_back(x);
    }
  }
  return out;
}

}  // namespace ternrec
