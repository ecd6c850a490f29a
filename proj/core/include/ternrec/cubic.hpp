#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "ternrec/modarith.hpp"

namespace ternrec {

/// Monic integer cubic x^3 + a1 x^2 + a2 x + a3.
///
/// Coefficients are limited to |a_i| <= kCoefficientLimit so that the
/// discriminant and d = 9 a3^2 - 4 a2^3 are exact in 128-bit arithmetic.
class Cubic {
 public:
  static constexpr i64 kCoefficientLimit = i64{1} << 24;

  Cubic(i64 a1, i64 a2, i64 a3);

  /// Parses "a1,a2,a3".
  static Cubic parse(std::string_view text);

  i64 a1() const { return a1_; }
  i64 a2() const { return a2_; }
  i64 a3() const { return a3_; }

  i128 disc() const { return disc_; }
  /// 9 a3^2 - 4 a2^3; only meaningful for depressed cubics.
  i128 d() const { return d_; }
  bool depressed() const { return a1_ == 0; }
  bool irreducible() const { return irreducible_; }

  /// f(x) evaluated exactly.
  i128 operator()(i128 x) const { return ((x + a1_) * x + a2_) * x + a3_; }

  std::string str() const;

  friend bool operator==(const Cubic& a, const Cubic& b) {
    return a.a1_ == b.a1_ && a.a2_ == b.a2_ && a.a3_ == b.a3_;
  }

 private:
  i64 a1_, a2_, a3_;
  i128 disc_;
  i128 d_;
  bool irreducible_;
};

/// Discriminant by the general five-term formula.
i128 discriminant(const Cubic& f);

/// True iff f has no rational (hence no integer) root.
bool is_irreducible(const Cubic& f);

/// Largest prime accepted by np_brute.
inline constexpr u64 kBruteCeiling = 1'000'000;

/// Number of distinct roots of f mod p by evaluating every residue.
/// Throws std::out_of_range for p > kBruteCeiling.
int np_brute(const Cubic& f, u64 p);

/// Number of distinct roots of f mod p as deg gcd(x^p - x, f) over F_p.
int np_gcd(const Cubic& f, u64 p);

}  // namespace ternrec
