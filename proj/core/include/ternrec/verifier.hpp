#pragma once

// Machine-checkable prime equivalences and the sweep engine that tests them
// over every prime below a bound.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ternrec/criteria.hpp"
#include "ternrec/cubic.hpp"
#include "ternrec/qseries.hpp"
#include "ternrec/quadform.hpp"
#include "ternrec/recurrence.hpp"

namespace ternrec {

enum class PredicateKind {
  DividesTerm,       // scale * t(p + offset)^e == target (mod p) for some target
  Representation,    // m p = X^2 + n Y^2 subject to a constraint
  NpfEquals,         // N_p(f) == count
  KroneckerAndRoot,  // (-n/p) = 1 and f has a root mod p
  SeriesCongruence,  // coefficient p of a q-series == target (mod modulus)
  ResidueClass,      // p mod F in a residue list
};

std::string_view to_string(PredicateKind k);

struct TermTest {
  RecurrenceSpec sequence;
  i64 index_offset = 0;  // index is p + index_offset
  i128 scale = 1;
  bool squared = false;
  std::vector<i128> targets{0};
};

struct NpfTest {
  Cubic cubic;
  int count = 3;
};

struct KroneckerRootTest {
  u64 n = 1;
  Cubic cubic;
};

struct SeriesTest {
  SeriesKind which = SeriesKind::Delta;
  u64 modulus = 23;
  i64 target = 0;
  std::size_t limit = kDefaultSeriesLimit;  // undefined for p > limit
};

struct ResidueTest {
  u64 modulus = 1;
  std::vector<u64> residues;
};

class Predicate {
 public:
  using Data = std::variant<TermTest, FormSpec, NpfTest, KroneckerRootTest, SeriesTest, ResidueTest>;

  static Predicate divides_term(RecurrenceSpec seq, i64 index_offset);
  static Predicate term_congruence(TermTest test);
  static Predicate representation(FormSpec form);
  static Predicate npf_equals(const Cubic& f, int count);
  static Predicate kronecker_and_root(u64 n, const Cubic& f);
  static Predicate series_congruence(SeriesTest test);
  static Predicate residue_class(ResidueTest test);

  PredicateKind kind() const;
  const Data& data() const { return data_; }
  std::string describe() const;

  /// Value at p, or nothing where the predicate is undefined (a series
  /// coefficient beyond the truncation limit).
  std::optional<bool> evaluate(u64 p) const;

 private:
  explicit Predicate(Data data) : data_(std::move(data)) {}
  Data data_;
};

/// One equivalence: all predicates agree at every prime outside
/// `exceptions`. When `otherwise` is set it must hold wherever the first
/// predicate is false.
struct TheoremCase {
  std::string id;
  Cubic cubic{0, 0, 0};
  std::vector<Predicate> predicates;  // [0] left, [1] right, then extras
  std::optional<Predicate> otherwise;
  std::vector<u64> exceptions;  // ascending
  std::string source;

  bool is_exception(u64 p) const;
};

struct PrimeRecord {
  u64 p = 0;
  std::vector<std::optional<bool>> values;
  bool otherwise_holds = true;
  bool exceptional = false;
  bool agree = true;

  std::optional<bool> left() const { return values.at(0); }
  std::optional<bool> right() const { return values.at(1); }
};

PrimeRecord evaluate(const TheoremCase& c, u64 p);

struct FlaggedPrime {
  u64 p = 0;
  std::optional<bool> left;
  std::optional<bool> right;

  friend bool operator==(const FlaggedPrime&, const FlaggedPrime&) = default;
};

struct SweepReport {
  std::string case_id;
  u64 bound = 0;
  u64 primes_checked = 0;
  std::vector<u64> mismatches;
  std::vector<FlaggedPrime> flagged_exceptions;
  bool pass = true;

  friend bool operator==(const SweepReport&, const SweepReport&) = default;
};

inline constexpr u64 kSweepBoundMax = 1'000'000'000;

/// Evaluates every prime below `bound`. Primes outside the exception list
/// are counted and compared; listed primes are evaluated and itemized.
/// Work is split into contiguous prime ranges; the report does not depend
/// on `workers`.
SweepReport sweep(const TheoremCase& c, u64 bound, unsigned workers = 1);

/// Every prime below `bound`, listed or not, where the case's predicates
/// disagree or p divides disc(f).
std::vector<u64> discover_exceptions(const TheoremCase& c, u64 bound, unsigned workers = 1);

/// The built-in cases, in a fixed order.
const std::vector<TheoremCase>& registry();

/// Throws std::invalid_argument for an unknown id.
const TheoremCase& find_case(std::string_view id);

/// Case built from a cubic, a recurrence criterion kind and a form: left is
/// p | t(p - 1) (or the power-sum s_{p+1} test), right is the
/// representation, third is (-n/p) = 1 with a root mod p.
TheoremCase make_form_case(std::string id, const Cubic& f, Method kind, FormSpec form,
                           std::vector<u64> exceptions, std::string source);

/// Abelian congruence-class case for f = x^3 + A x + B with square
/// discriminant: p | N_{p-1} iff p mod F lies in `residues`, and otherwise
/// D N_{p-1}^2 == A^4.
TheoremCase make_residue_case(std::string id, const Cubic& f, u64 modulus,
                              std::vector<u64> residues, std::vector<u64> exceptions,
                              std::string source);

}  // namespace ternrec
