#pragma once

// Recurrence-based root-count criteria. Each criterion maps one term of a
// third-order recurrence modulo p to N_p(f) in {0, 1, 3}, for the primes
// its admissibility predicate accepts.

#include <stdexcept>
#include <string>
#include <string_view>

#include "ternrec/bigint.hpp"
#include "ternrec/cubic.hpp"
#include "ternrec/recurrence.hpp"

namespace ternrec {

enum class Method { Sun, U, CapU };

std::string_view to_string(Method m);
Method parse_method(std::string_view name);

enum class RootClass { Zero = 0, One = 1, Three = 3 };

struct Classification {
  RootClass value;
  Method method;

  int count() const { return static_cast<int>(value); }
};

/// The excluded expression of a criterion vanishes identically, so its
/// prime filter says nothing.
class CriterionInapplicable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A classification was requested at a prime the criterion does not cover,
/// or for a cubic it does not accept.
class PreconditionViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Admissibility {
  bool admissible = false;
  /// Primes dividing this integer are excluded.
  BigInt excluded_divisor;
};

/// A criterion bound to one cubic. The excluded divisor is computed once, in
/// exact arithmetic, at construction.
class Criterion {
 public:
  /// Throws PreconditionViolation if f does not fit the method (reducible,
  /// or not depressed for Method::U) and CriterionInapplicable when the
  /// excluded expression is zero.
  Criterion(Method method, const Cubic& f);

  Method method() const { return method_; }
  const Cubic& cubic() const { return cubic_; }
  const RecurrenceSpec& sequence() const { return sequence_; }
  const BigInt& excluded_divisor() const { return excluded_; }

  Admissibility admissibility(u64 p) const;
  bool admissible(u64 p) const { return reduce(excluded_, p) != 0; }

  /// Throws PreconditionViolation when p is not admissible.
  Classification classify(u64 p) const;

 private:
  Method method_;
  Cubic cubic_;
  RecurrenceSpec sequence_;
  BigInt excluded_;
};

/// 6 disc(f) (a1^2 - 3 a2).
BigInt sun_excluded_divisor(const Cubic& f);
/// 6 D a2 a3 ((20 a2^3 a3 + 27 a2^3 + 9 a2 d)^2 - d (31 a2^2 + d)^2).
BigInt u_excluded_divisor(const Cubic& f);
/// 6 disc(f) (a1^2 - 3 a2); the U-criterion's true exception set is finite
/// but not given in closed form, so this is only a baseline filter.
BigInt capu_excluded_divisor(const Cubic& f);

bool sun_admissible(const Cubic& f, u64 p);
Classification sun_classify(const Cubic& f, u64 p);

bool u_admissible(const Cubic& f, u64 p);
Classification u_classify(const Cubic& f, u64 p);

bool capu_admissible(const Cubic& f, u64 p);
Classification capu_classify(const Cubic& f, u64 p);

}  // namespace ternrec
