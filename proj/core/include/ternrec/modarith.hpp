#pragma once

// Exact modular arithmetic for moduli below 2^62: products, powers, the
// Kronecker symbol, square roots modulo odd primes, deterministic primality
// and segmented prime enumeration.

#include <cstdint>
#include <optional>
#include <vector>

namespace ternrec {

using u64 = std::uint64_t;
using i64 = std::int64_t;
__extension__ typedef unsigned __int128 u128;
__extension__ typedef __int128 i128;

/// Largest supported modulus (exclusive).
inline constexpr u64 kModulusCeiling = u64{1} << 62;

/// Least non-negative residue of a signed value.
inline u64 reduce(i64 a, u64 m) {
  const i64 r = a % static_cast<i64>(m);
  return static_cast<u64>(r < 0 ? r + static_cast<i64>(m) : r);
}

inline u64 reduce(i128 a, u64 m) {
  const i128 r = a % static_cast<i128>(m);
  return static_cast<u64>(r < 0 ? r + static_cast<i128>(m) : r);
}

inline u64 add_mod(u64 a, u64 b, u64 m) {
  const u64 s = a + b;  // a, b < m < 2^63
  return s >= m ? s - m : s;
}

inline u64 sub_mod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + m - b; }

inline u64 neg_mod(u64 a, u64 m) { return a == 0 ? 0 : m - a; }

/// a*b mod m. Operands must already be reduced.
inline u64 mul_mod(u64 a, u64 b, u64 m) {
  if (m <= (u64{1} << 32)) return (a * b) % m;
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 pow_mod(u64 a, u64 e, u64 m);

/// Inverse of a modulo m; requires gcd(a, m) = 1.
std::optional<u64> inv_mod(u64 a, u64 m);

/// Kronecker symbol (a/n) for arbitrary integers.
int kronecker(i64 a, i64 n);

/// Square root of a modulo an odd prime p. Returns the smaller of the two
/// roots, or nothing when a is a non-residue.
std::optional<u64> sqrt_mod(u64 a, u64 p);

/// Deterministic Miller-Rabin, exact for every 64-bit n.
bool is_prime(u64 n);

/// Floor of the square root.
u64 isqrt(u64 n);

inline bool is_square(u64 n, u64 *root = nullptr) {
  const u64 r = isqrt(n);
  if (root != nullptr) *root = r;
  return r * r == n;
}

struct PrimeRange {
  u64 lo = 0;
  u64 hi = 0;
  std::vector<u64> primes;  // ascending, all in [lo, hi)
};

/// Primes in [lo, hi) by a segmented sieve.
PrimeRange primes_in(u64 lo, u64 hi);

/// A residue bound to its modulus.
class Residue {
 public:
  Residue(i64 value, u64 modulus) : value_(reduce(value, modulus)), modulus_(modulus) {}
  static Residue raw(u64 reduced, u64 modulus) { return Residue(reduced, modulus, 0); }

  u64 value() const { return value_; }
  u64 modulus() const { return modulus_; }

  friend Residue operator+(Residue a, Residue b) {
    return raw(add_mod(a.value_, b.value_, a.modulus_), a.modulus_);
  }
  friend Residue operator-(Residue a, Residue b) {
    return raw(sub_mod(a.value_, b.value_, a.modulus_), a.modulus_);
  }
  friend Residue operator*(Residue a, Residue b) {
    return raw(mul_mod(a.value_, b.value_, a.modulus_), a.modulus_);
  }
  Residue operator-() const { return raw(neg_mod(value_, modulus_), modulus_); }
  Residue pow(u64 e) const { return raw(pow_mod(value_, e, modulus_), modulus_); }

  friend bool operator==(Residue a, Residue b) = default;
  bool operator==(i64 v) const { return value_ == reduce(v, modulus_); }

 private:
  Residue(u64 reduced, u64 modulus, int) : value_(reduced), modulus_(modulus) {}
  u64 value_;
  u64 modulus_;
};

}  // namespace ternrec
