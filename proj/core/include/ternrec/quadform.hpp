#pragma once

#include <optional>
#include <string_view>

#include "ternrec/modarith.hpp"

namespace ternrec {

enum class Constraint { None, XNonzero, ParityEvenSum };

std::string_view to_string(Constraint c);
Constraint parse_constraint(std::string_view name);

/// m p = X^2 + n Y^2 with m in {1, 4}.
struct FormSpec {
  u64 n = 1;
  unsigned m = 1;
  Constraint constraint = Constraint::None;
};

/// A solution (X, Y) with X, Y >= 0.
struct Representation {
  u64 x = 0;
  u64 y = 0;

  friend bool operator==(const Representation&, const Representation&) = default;
};

/// p = X^2 + n Y^2 by Cornacchia's algorithm. Primes dividing 2n are
/// handled by direct enumeration. Among solutions the one with the smaller
/// Y is returned.
std::optional<Representation> represent(u64 n, u64 p);

/// 4p = X^2 + n Y^2 by enumeration over Y <= sqrt(4p/n). Solutions with
/// X + Y even are preferred, then the smallest Y.
std::optional<Representation> represent4(u64 n, u64 p);

/// Dispatches on spec.m. Does not apply spec.constraint.
std::optional<Representation> find_representation(const FormSpec& spec, u64 p);

inline constexpr u64 kEnumCeiling = 1'000'000'000;

/// Exhaustive search over Y; m p must not exceed kEnumCeiling. Returns the
/// smallest-Y solution satisfying spec.constraint if one exists, otherwise
/// the smallest-Y solution.
std::optional<Representation> represent_enum(const FormSpec& spec, u64 p);

bool satisfies(const Representation& rep, Constraint c);

}  // namespace ternrec
