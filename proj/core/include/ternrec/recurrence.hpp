#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "ternrec/bigint.hpp"
#include "ternrec/cubic.hpp"

namespace ternrec {

/// Third-order recurrence t(k+3) + c1 t(k+2) + c2 t(k+1) + c3 t(k) = 0.
///
/// The three stored initial terms are t(origin), t(origin+1), t(origin+2).
/// All built-in sequences start at origin 0 except Tribonacci, which keeps
/// the conventional T_1 = T_2 = 1, T_3 = 2; its T_0 is obtained by running
/// the recurrence backwards once (requires c3 = +-1).
struct RecurrenceSpec {
  std::array<i64, 3> coeffs{};
  std::array<i64, 3> initial{};
  unsigned origin = 0;
  std::string label;

  friend bool operator==(const RecurrenceSpec&, const RecurrenceSpec&) = default;
};

enum class SequenceKind {
  SunS,    // s_0 = 3, s_1 = -a1, s_2 = a1^2 - 2 a2 (power sums of the roots)
  SmallU,  // u_0 = 0, u_1 = -a2, u_2 = -a3 (depressed cubics only)
  CapU,    // U_0 = 0, U_1 = 1, U_2 = -a1
};

SequenceKind parse_sequence_kind(std::string_view name);

/// Recurrence whose characteristic polynomial is f. Throws
/// std::invalid_argument for SmallU when f is not depressed.
RecurrenceSpec spec_from(SequenceKind kind, const Cubic& f);

/// tribonacci, padovan, perrin, berstel, cseq, ex31. Throws
/// std::invalid_argument for any other name.
RecurrenceSpec named_spec(std::string_view name);

std::vector<std::string> named_spec_names();

/// t(k) mod p by companion-matrix exponentiation, O(log k).
u64 term_mod(const RecurrenceSpec& spec, u64 k, u64 p);

inline constexpr unsigned kExactTermLimit = 64;

/// t(k) exactly by forward iteration; k <= kExactTermLimit.
BigInt term_exact(const RecurrenceSpec& spec, unsigned k);

}  // namespace ternrec
