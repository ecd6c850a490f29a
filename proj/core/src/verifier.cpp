#include "ternrec/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace ternrec {

std::string_view to_string(PredicateKind k) {
  switch (k) {
    case PredicateKind::DividesTerm: return "divides_term";
    case PredicateKind::Representation: return "representation";
    case PredicateKind::NpfEquals: return "npf_equals";
    case PredicateKind::KroneckerAndRoot: return "kronecker_and_root";
    case PredicateKind::SeriesCongruence: return "series_congruence";
    case PredicateKind::ResidueClass: return "residue_class";
  }
  return "?";
}

namespace {

// Series are shared by every case and worker; each (kind, limit, modulus) is
// built once.
const SeriesMod& cached_series(SeriesKind kind, std::size_t limit, u64 modulus) {
  static std::mutex mutex;
  static std::map<std::tuple<SeriesKind, std::size_t, u64>, std::unique_ptr<SeriesMod>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{kind, limit, modulus}];
  if (!slot) slot = std::make_unique<SeriesMod>(make_series(kind, limit, modulus));
  return *slot;
}

std::string i128_str(i128 v) {
  if (v == 0) return "0";
  const bool neg = v < 0;
  u128 mag = neg ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
  std::string s;
  while (mag != 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(mag % 10)));
    mag /= 10;
  }
  if (neg) s.push_back('-');
  return {s.rbegin(), s.rend()};
}

std::string index_str(i64 offset) {
  if (offset == 0) return "p";
  return offset > 0 ? "p+" + std::to_string(offset) : "p" + std::to_string(offset);
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

Predicate Predicate::divides_term(RecurrenceSpec seq, i64 index_offset) {
  return Predicate(TermTest{std::move(seq), index_offset, 1, false, {0}});
}
Predicate Predicate::term_congruence(TermTest test) { return Predicate(std::move(test)); }
Predicate Predicate::representation(FormSpec form) { return Predicate(form); }
Predicate Predicate::npf_equals(const Cubic& f, int count) { return Predicate(NpfTest{f, count}); }
Predicate Predicate::kronecker_and_root(u64 n, const Cubic& f) {
  return Predicate(KroneckerRootTest{n, f});
}
Predicate Predicate::series_congruence(SeriesTest test) { return Predicate(test); }
Predicate Predicate::residue_class(ResidueTest test) {
  std::sort(test.residues.begin(), test.residues.end());
  return Predicate(std::move(test));
}

PredicateKind Predicate::kind() const {
  return std::visit(overloaded{
                        [](const TermTest&) { return PredicateKind::DividesTerm; },
                        [](const FormSpec&) { return PredicateKind::Representation; },
                        [](const NpfTest&) { return PredicateKind::NpfEquals; },
                        [](const KroneckerRootTest&) { return PredicateKind::KroneckerAndRoot; },
                        [](const SeriesTest&) { return PredicateKind::SeriesCongruence; },
                        [](const ResidueTest&) { return PredicateKind::ResidueClass; },
                    },
                    data_);
}

std::string Predicate::describe() const {
  std::ostringstream os;
  std::visit(overloaded{
                 [&](const TermTest& t) {
                   if (t.scale != 1) os << i128_str(t.scale) << "*";
                   os << t.sequence.label << "(" << index_str(t.index_offset) << ")";
                   if (t.squared) os << "^2";
                   os << " == ";
                   for (std::size_t i = 0; i < t.targets.size(); ++i) {
                     os << (i ? " or " : "") << i128_str(t.targets[i]);
                   }
                   os << " (mod p)";
                 },
                 [&](const FormSpec& f) {
                   os << (f.m == 1 ? "p" : std::to_string(f.m) + "p") << " = X^2 + " << f.n << "Y^2";
                   if (f.constraint != Constraint::None) os << " [" << to_string(f.constraint) << "]";
                 },
                 [&](const NpfTest& t) { os << "N_p(" << t.cubic.str() << ") = " << t.count; },
                 [&](const KroneckerRootTest& t) {
                   os << "(-" << t.n << "/p) = 1 and " << t.cubic.str() << " has a root mod p";
                 },
                 [&](const SeriesTest& t) {
                   os << to_string(t.which) << "(p) == " << t.target << " (mod " << t.modulus
                      << "), p <= " << t.limit;
                 },
                 [&](const ResidueTest& t) {
                   os << "p mod " << t.modulus << " in {";
                   for (std::size_t i = 0; i < t.residues.size(); ++i) os << (i ? "," : "") << t.residues[i];
                   os << "}";
                 },
             },
             data_);
  return os.str();
}

std::optional<bool> Predicate::evaluate(u64 p) const {
  return std::visit(
      overloaded{
          [p](const TermTest& t) -> std::optional<bool> {
            const i64 index = static_cast<i64>(p) + t.index_offset;
            if (index < 0) return std::nullopt;
            u64 v = term_mod(t.sequence, static_cast<u64>(index), p);
            if (t.squared) v = mul_mod(v, v, p);
            v = mul_mod(reduce(t.scale, p), v, p);
            return std::any_of(t.targets.begin(), t.targets.end(),
                               [&](i128 target) { return reduce(target, p) == v; });
          },
          [p](const FormSpec& f) -> std::optional<bool> {
            const auto rep = find_representation(f, p);
            if (!rep) return false;
            if (satisfies(*rep, f.constraint)) return true;
            // Fall back to the exhaustive search for a constrained solution.
            if (p > kEnumCeiling / f.m) return false;
            const auto alt = represent_enum(f, p);
            return alt && satisfies(*alt, f.constraint);
          },
          [p](const NpfTest& t) -> std::optional<bool> { return np_gcd(t.cubic, p) == t.count; },
          [p](const KroneckerRootTest& t) -> std::optional<bool> {
            return kronecker(-static_cast<i64>(t.n), static_cast<i64>(p)) == 1 && np_gcd(t.cubic, p) >= 1;
          },
          [p](const SeriesTest& t) -> std::optional<bool> {
            if (p > t.limit) return std::nullopt;
            return cached_series(t.which, t.limit, t.modulus)[p] == reduce(t.target, t.modulus);
          },
          [p](const ResidueTest& t) -> std::optional<bool> {
            return std::binary_search(t.residues.begin(), t.residues.end(), p % t.modulus);
          },
      },
      data_);
}

bool TheoremCase::is_exception(u64 p) const {
  return std::binary_search(exceptions.begin(), exceptions.end(), p);
}

PrimeRecord evaluate(const TheoremCase& c, u64 p) {
  PrimeRecord rec;
  rec.p = p;
  rec.exceptional = c.is_exception(p);
  rec.values.reserve(c.predicates.size());
  std::optional<bool> reference;
  for (const Predicate& pred : c.predicates) {
    const auto v = pred.evaluate(p);
    rec.values.push_back(v);
    if (!v) continue;
    if (!reference) {
      reference = v;
    } else if (*reference != *v) {
      rec.agree = false;
    }
  }
  if (c.otherwise && rec.values.front() == false) {
    rec.otherwise_holds = c.otherwise->evaluate(p).value_or(true);
    if (!rec.otherwise_holds) rec.agree = false;
  }
  return rec;
}

namespace {

struct ChunkResult {
  u64 checked = 0;
  std::vector<u64> mismatches;
  std::vector<u64> discovered;
  std::vector<FlaggedPrime> flagged;
};

// Contiguous value ranges, several per worker for balance; results are
// stored by chunk index so the merge order never depends on scheduling.
std::vector<ChunkResult> run_chunks(const TheoremCase& c, u64 bound, unsigned workers) {
  if (bound > kSweepBoundMax) throw std::invalid_argument("sweep bound must be <= 10^9");
  workers = std::max(1u, workers);
  const u64 chunk_count = std::clamp<u64>(bound / 4096, 1, u64{workers} * 16);
  const u64 width = (bound + chunk_count - 1) / chunk_count;
  std::vector<ChunkResult> results(chunk_count);
  std::atomic<u64> next{0};

  auto work = [&] {
    for (u64 i = next++; i < chunk_count; i = next++) {
      const u64 lo = i * width;
      const u64 hi = std::min(bound, lo + width);
      ChunkResult& out = results[i];
      for (u64 p : primes_in(lo, hi).primes) {
        const PrimeRecord rec = evaluate(c, p);
        // A repeated root mod p is a precondition failure for every criterion.
        if (!rec.agree || c.cubic.disc() % static_cast<i128>(p) == 0) out.discovered.push_back(p);
        if (rec.exceptional) {
          out.flagged.push_back({p, rec.left(), rec.right()});
        } else {
          ++out.checked;
          if (!rec.agree) out.mismatches.push_back(p);
        }
      }
    }
  };

  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  return results;
}

}  // namespace

SweepReport sweep(const TheoremCase& c, u64 bound, unsigned workers) {
  SweepReport report;
  report.case_id = c.id;
  report.bound = bound;
  for (ChunkResult& r : run_chunks(c, bound, workers)) {
    report.primes_checked += r.checked;
    report.mismatches.insert(report.mismatches.end(), r.mismatches.begin(), r.mismatches.end());
    report.flagged_exceptions.insert(report.flagged_exceptions.end(), r.flagged.begin(), r.flagged.end());
  }
  report.pass = report.mismatches.empty();
  return report;
}

std::vector<u64> discover_exceptions(const TheoremCase& c, u64 bound, unsigned workers) {
  std::vector<u64> out;
  for (ChunkResult& r : run_chunks(c, bound, workers)) {
    out.insert(out.end(), r.discovered.begin(), r.discovered.end());
  }
  return out;
}

TheoremCase make_form_case(std::string id, const Cubic& f, Method kind, FormSpec form,
                           std::vector<u64> exceptions, std::string source) {
  TheoremCase c;
  c.id = std::move(id);
  c.cubic = f;
  switch (kind) {
    case Method::Sun: {
      TermTest t{spec_from(SequenceKind::SunS, f), 1, 1, false,
                 {static_cast<i128>(f.a1()) * f.a1() - 2 * static_cast<i128>(f.a2())}};
      c.predicates.push_back(Predicate::term_congruence(std::move(t)));
      break;
    }
    case Method::U:
      c.predicates.push_back(Predicate::divides_term(spec_from(SequenceKind::SmallU, f), -1));
      break;
    case Method::CapU:
      c.predicates.push_back(Predicate::divides_term(spec_from(SequenceKind::CapU, f), -1));
      break;
  }
  c.predicates.push_back(Predicate::representation(form));
  c.predicates.push_back(Predicate::kronecker_and_root(form.n, f));
  std::sort(exceptions.begin(), exceptions.end());
  c.exceptions = std::move(exceptions);
  c.source = std::move(source);
  return c;
}

TheoremCase make_residue_case(std::string id, const Cubic& f, u64 modulus,
                              std::vector<u64> residues, std::vector<u64> exceptions,
                              std::string source) {
  if (!f.depressed()) throw std::invalid_argument("residue-class cases need x^3 + A x + B");
  if (modulus < 2) throw std::invalid_argument("residue-class modulus must be >= 2");
  TheoremCase c;
  c.id = std::move(id);
  c.cubic = f;
  const RecurrenceSpec seq = spec_from(SequenceKind::SmallU, f);
  c.predicates.push_back(Predicate::divides_term(seq, -1));
  c.predicates.push_back(Predicate::residue_class({modulus, std::move(residues)}));
  const i128 a = f.a2();
  c.otherwise = Predicate::term_congruence({seq, -1, f.disc(), true, {a * a * a * a}});
  std::sort(exceptions.begin(), exceptions.end());
  c.exceptions = std::move(exceptions);
  c.source = std::move(source);
  return c;
}

namespace {

std::vector<TheoremCase> build_registry() {
  std::vector<TheoremCase> cases;

  {
    TheoremCase c;
    c.id = "tribonacci";
    c.cubic = Cubic(-1, -1, -1);
    c.predicates = {Predicate::divides_term(named_spec("tribonacci"), -1),
                    Predicate::representation({11, 1, Constraint::None}),
                    Predicate::series_congruence({SeriesKind::R12, 11, 4, kDefaultSeriesLimit})};
    c.exceptions = {11, 19};
    c.source = "p | T_{p-1} iff p = X^2 + 11Y^2 iff r12(p) == 4 mod 11";
    cases.push_back(std::move(c));
  }
  {
    TheoremCase c;
    c.id = "padovan";
    c.cubic = Cubic(0, -1, -1);
    c.predicates = {Predicate::divides_term(named_spec("padovan"), -1),
                    Predicate::representation({23, 1, Constraint::XNonzero}),
                    Predicate::npf_equals(c.cubic, 3),
                    Predicate::series_congruence({SeriesKind::Delta, 23, 2, kDefaultSeriesLimit})};
    c.exceptions = {3, 23};
    c.source = "p | B_{p-1} iff p = X^2 + 23Y^2, X != 0 iff N_p(x^3-x-1) = 3 iff tau(p) == 2 mod 23";
    cases.push_back(std::move(c));
  }
  {
    TheoremCase c;
    c.id = "perrin";
    c.cubic = Cubic(0, -1, -1);
    c.predicates = {Predicate::term_congruence({named_spec("perrin"), 1, 1, false, {2}}),
                    Predicate::representation({23, 1, Constraint::None}),
                    Predicate::kronecker_and_root(23, c.cubic)};
    c.exceptions = {2, 3, 23};
    c.source = "Perrin: P_{p+1} == 2 mod p iff p = X^2 + 23Y^2 iff (-23/p) = 1 and x^3-x-1 has a root";
    cases.push_back(std::move(c));
  }
  {
    TheoremCase c;
    c.id = "berstel";
    c.cubic = Cubic(-2, 4, -4);
    c.predicates = {Predicate::divides_term(named_spec("berstel"), 0),
                    Predicate::representation({11, 1, Constraint::None})};
    c.exceptions = {2, 3, 11, 13};
    c.source = "Berstel: p | B_p iff p = X^2 + 11Y^2";
    cases.push_back(std::move(c));
  }
  {
    TheoremCase c;
    c.id = "cseq";
    c.cubic = Cubic(-1, 0, -1);
    c.predicates = {Predicate::divides_term(named_spec("cseq"), 0),
                    Predicate::representation({31, 1, Constraint::None}),
                    Predicate::series_congruence({SeriesKind::Tau16, 31, 2, kDefaultSeriesLimit})};
    c.exceptions = {2, 3, 29, 31};
    c.source = "C_{n+3} = C_{n+2} + C_n: p | C_p iff p = X^2 + 31Y^2 iff tau16(p) == 2 mod 31";
    cases.push_back(std::move(c));
  }
  {
    TheoremCase c;
    c.id = "ex31";
    c.cubic = Cubic(0, -31, 62);
    const RecurrenceSpec seq = named_spec("ex31");
    c.predicates = {Predicate::term_congruence({seq, -1, 4, false, {0}}),
                    Predicate::residue_class({31, {1, 2, 4, 8, 15, 16, 23, 27, 29, 30}})};
    c.otherwise = Predicate::term_congruence({seq, -1, 4, false, {31, -31}});
    c.exceptions = {2, 3, 31};
    c.source = "x^3-31x+62 (abelian): 4N_{p-1} == 0 mod p iff p mod 31 in {1,2,4,8,15,16,23,27,29,30}, "
               "else 4N_{p-1} == +-31";
    cases.push_back(std::move(c));
  }

  struct Row {
    u64 n;
    i64 a1, a2, a3;
    std::vector<u64> exceptions;
  };
  const std::vector<Row> table1 = {
      {23, 0, -1, 1, {3, 23}},       {31, 0, 1, 1, {3, 31}},
      {59, 0, 2, 1, {2, 3, 59}},     {211, 0, -2, 3, {2, 3, 211}},
      {283, 0, 4, 1, {2, 3, 283}},   {499, 0, 4, 3, {2, 3, 499}},
      {643, 0, -2, 5, {2, 3, 5, 643}},
  };
  for (const Row& r : table1) {
    cases.push_back(make_form_case("table1-n" + std::to_string(r.n), Cubic(r.a1, r.a2, r.a3), Method::U,
                                   {r.n, 4, Constraint::ParityEvenSum}, r.exceptions,
                                   "u-sequence family: p | u_{p-1} iff p = (X/2)^2 + " + std::to_string(r.n) +
                                       "(Y/2)^2, 2 | X+Y"));
  }
  const std::vector<Row> table2 = {
      {83, 1, 1, 2, {2, 3, 47, 83}},         {107, 1, 3, 2, {2, 3, 7, 107}},
      {139, -1, 1, 2, {2, 3, 47, 139}},      {307, -1, 3, 2, {2, 3, 7, 307}},
      {331, -2, 4, 1, {2, 3, 5, 17, 331}},   {379, 1, 1, 4, {2, 3, 101, 379}},
      {547, 1, -3, 4, {2, 3, 7, 547}},       {883, 5, -5, 2, {2, 3, 5, 421, 883}},
      {907, 5, 1, 2, {2, 3, 5, 11, 19, 907}},
  };
  for (const Row& r : table2) {
    cases.push_back(make_form_case("table2-n" + std::to_string(r.n), Cubic(r.a1, r.a2, r.a3), Method::CapU,
                                   {r.n, 4, Constraint::None}, r.exceptions,
                                   "U-sequence family: p | U_{p-1} iff 4p = X^2 + " + std::to_string(r.n) + "Y^2"));
  }
  return cases;
}

}  // namespace

const std::vector<TheoremCase>& registry() {
  static const std::vector<TheoremCase> cases = build_registry();
  return cases;
}

const TheoremCase& find_case(std::string_view id) {
  for (const TheoremCase& c : registry()) {
    if (c.id == id) return c;
  }
  throw std::invalid_argument("unknown case '" + std::string(id) + "'");
}

}  // namespace ternrec
