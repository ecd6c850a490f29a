#include "ternrec/cubic.hpp"

#include <array>
#include <charconv>
#include <cstdlib>
#include <sstream>
#include <vector>

namespace ternrec {

namespace {

i128 general_discriminant(i128 a1, i128 a2, i128 a3) {
  return 18 * a1 * a2 * a3 - 4 * a1 * a1 * a1 * a3 + a1 * a1 * a2 * a2 - 4 * a2 * a2 * a2 -
         27 * a3 * a3;
}

bool has_integer_root(const Cubic& f) {
  if (f.a3() == 0) return true;  // x = 0
  const u64 c = static_cast<u64>(f.a3() < 0 ? -f.a3() : f.a3());
  for (u64 r = 1; r * r <= c; ++r) {
    if (c % r != 0) continue;
    for (u64 div : {r, c / r}) {
      const i128 x = static_cast<i128>(div);
      if (f(x) == 0 || f(-x) == 0) return true;
    }
  }
  return false;
}

}  // namespace

Cubic::Cubic(i64 a1, i64 a2, i64 a3) : a1_(a1), a2_(a2), a3_(a3) {
  for (i64 a : {a1, a2, a3}) {
    if (a > kCoefficientLimit || a < -kCoefficientLimit) {
      throw std::out_of_range("cubic coefficient exceeds 2^24 in magnitude");
    }
  }
  disc_ = general_discriminant(a1, a2, a3);
  d_ = 9 * static_cast<i128>(a3) * a3 - 4 * static_cast<i128>(a2) * a2 * a2;
  irreducible_ = !has_integer_root(*this);
}

Cubic Cubic::parse(std::string_view text) {
  std::array<i64, 3> a{};
  std::size_t pos = 0;
  for (int i = 0; i < 3; ++i) {
    const std::size_t end = i < 2 ? text.find(',', pos) : text.size();
    if (end == std::string_view::npos) {
      throw std::invalid_argument("expected three comma-separated integers a1,a2,a3");
    }
    std::string_view field = text.substr(pos, end - pos);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    if (!field.empty() && field.front() == '+') field.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), a[i]);
    if (ec != std::errc{} || ptr != field.data() + field.size() || field.empty()) {
      throw std::invalid_argument("bad cubic coefficient '" + std::string(field) + "'");
    }
    pos = end + 1;
  }
  return Cubic(a[0], a[1], a[2]);
}

std::string Cubic::str() const {
  std::ostringstream os;
  os << "x^3";
  auto term = [&os](i64 c, const char* mono) {
    if (c == 0) return;
    os << (c < 0 ? " - " : " + ");
    const i64 mag = c < 0 ? -c : c;
    if (mag != 1 || *mono == '\0') os << mag;
    os << mono;
  };
  term(a1_, "x^2");
  term(a2_, "x");
  term(a3_, "");
  return os.str();
}

i128 discriminant(const Cubic& f) { return general_discriminant(f.a1(), f.a2(), f.a3()); }

bool is_irreducible(const Cubic& f) { return !has_integer_root(f); }

int np_brute(const Cubic& f, u64 p) {
  if (p > kBruteCeiling) throw std::out_of_range("np_brute is limited to p <= 10^6");
  if (p < 2) throw std::invalid_argument("np_brute needs a prime modulus");

  // Walk f(x), its first and second forward differences; the third is 6.
  const u64 c1 = reduce(f.a1(), p), c2 = reduce(f.a2(), p), c3 = reduce(f.a3(), p);
  u64 value = c3;                                       // f(0)
  u64 diff1 = (1 + c1 + c2) % p;                        // f(1) - f(0)
  u64 diff2 = (6 + 2 * c1) % p;                         // f(2) - 2 f(1) + f(0)
  const u64 diff3 = 6 % p;
  int count = 0;
  for (u64 x = 0; x < p; ++x) {
    if (value == 0) ++count;
    value = add_mod(value, diff1, p);
    diff1 = add_mod(diff1, diff2, p);
    diff2 = add_mod(diff2, diff3, p);
  }
  return count;
}

namespace {

// Residues modulo a monic cubic over F_p: c0 + c1 x + c2 x^2.
using Poly2 = std::array<u64, 3>;

struct CubicRing {
  u64 p;
  u64 f0, f1, f2;  // x^3 = -(f2 x^2 + f1 x + f0)

  Poly2 mul(const Poly2& a, const Poly2& b) const {
    std::array<u64, 5> c{};
    for (int i = 0; i < 3; ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; j < 3; ++j) c[i + j] = add_mod(c[i + j], mul_mod(a[i], b[j], p), p);
    }
    for (int k = 4; k >= 3; --k) {
      const u64 t = c[k];
      if (t == 0) continue;
      c[k] = 0;
      c[k - 1] = sub_mod(c[k - 1], mul_mod(t, f2, p), p);
      c[k - 2] = sub_mod(c[k - 2], mul_mod(t, f1, p), p);
      c[k - 3] = sub_mod(c[k - 3], mul_mod(t, f0, p), p);
    }
    return {c[0], c[1], c[2]};
  }
};

int degree(const std::vector<u64>& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
    if (a[i] != 0) return i;
  }
  return -1;
}

// a mod b in F_p[x]; b nonzero.
std::vector<u64> poly_rem(std::vector<u64> a, const std::vector<u64>& b, u64 p) {
  const int db = degree(b);
  const u64 lead_inv = *inv_mod(b[db], p);
  for (int da = degree(a); da >= db; da = degree(a)) {
    const u64 q = mul_mod(a[da], lead_inv, p);
    for (int i = 0; i <= db; ++i) {
      a[da - db + i] = sub_mod(a[da - db + i], mul_mod(q, b[i], p), p);
    }
  }
  return a;
}

}  // namespace

int np_gcd(const Cubic& f, u64 p) {
  if (p < 2 || p >= kModulusCeiling) throw std::invalid_argument("np_gcd needs a prime below 2^62");
  const CubicRing ring{p, reduce(f.a3(), p), reduce(f.a2(), p), reduce(f.a1(), p)};

  // x^p mod f by square-and-multiply.
  Poly2 acc{1 % p, 0, 0};
  Poly2 base{0, 1 % p, 0};
  for (u64 e = p; e != 0; e >>= 1) {
    if (e & 1) acc = ring.mul(acc, base);
    base = ring.mul(base, base);
  }
  acc[1] = sub_mod(acc[1], 1 % p, p);  // x^p - x

  std::vector<u64> a{ring.f0, ring.f1, ring.f2, 1 % p};
  std::vector<u64> b{acc[0], acc[1], acc[2]};
  while (degree(b) >= 0) {
    std::vector<u64> r = poly_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return degree(a);
}

}  // namespace ternrec
