#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <optional>
#include <thread>

#include "ternrec/criteria.hpp"
#include "ternrec/cubic.hpp"
#include "ternrec/modarith.hpp"
#include "ternrec/qseries.hpp"
#include "ternrec/quadform.hpp"
#include "ternrec/recurrence.hpp"
#include "ternrec/report.hpp"
#include "ternrec/verifier.hpp"

namespace ternrec::cli {

namespace {

// Raised for argument values that parse but are out of range.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

u64 require_prime(u64 p, const char* flag) {
  if (p >= kModulusCeiling || !is_prime(p)) {
    throw UsageError(std::string(flag) + ": " + std::to_string(p) + " is not a prime below 2^62");
  }
  return p;
}

struct SweepArgs {
  std::string case_id;
  u64 bound = 100'000;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  std::string format = "json";
  std::string case_file;
};

int do_sweep(const SweepArgs& a, std::ostream& out, std::ostream& err) {
  if (a.bound > kSweepBoundMax) throw UsageError("--bound: must be <= 1000000000");
  if (a.jobs == 0 || a.jobs > 1024) throw UsageError("--jobs: must be in [1, 1024]");

  std::vector<TheoremCase> user;
  if (!a.case_file.empty()) {
    std::ifstream in(a.case_file);
    if (!in) throw UsageError("--cases: cannot open " + a.case_file);
    user = read_case_file(in);
  }

  std::vector<const TheoremCase*> selected;
  if (a.case_id == "all") {
    for (const TheoremCase& c : registry()) selected.push_back(&c);
    for (const TheoremCase& c : user) selected.push_back(&c);
  } else {
    auto it = std::find_if(user.begin(), user.end(), [&](const TheoremCase& c) { return c.id == a.case_id; });
    if (it != user.end()) {
      selected.push_back(&*it);
    } else {
      try {
        selected.push_back(&find_case(a.case_id));
      } catch (const std::invalid_argument&) {
        throw UsageError("--case: unknown case '" + a.case_id + "'");
      }
    }
  }

  bool all_pass = true;
  if (a.format == "csv") out << csv_header() << '\n';
  for (const TheoremCase* c : selected) {
    const SweepReport r = sweep(*c, a.bound, a.jobs);
    all_pass = all_pass && r.pass;
    out << (a.format == "csv" ? to_csv_row(r) : to_json(r)) << '\n';
    if (!r.pass) err << "case " << r.case_id << ": " << r.mismatches.size() << " mismatch(es)\n";
  }
  return all_pass ? kExitOk : kExitFail;
}

struct NpfArgs {
  std::string poly;
  u64 prime = 0;
  std::string method = "gcd";
};

int do_npf(const NpfArgs& a, std::ostream& out) {
  const Cubic f = Cubic::parse(a.poly);
  const u64 p = require_prime(a.prime, "--prime");
  int count;
  if (a.method == "brute") {
    if (p > kBruteCeiling) throw UsageError("--prime: brute force is limited to p <= 1000000");
    count = np_brute(f, p);
  } else if (a.method == "gcd") {
    count = np_gcd(f, p);
  } else {
    const Criterion crit(parse_method(a.method), f);
    if (!crit.admissible(p)) {
      throw UsageError("--prime: p = " + std::to_string(p) + " is not admissible for the " + a.method +
                       " criterion");
    }
    count = crit.classify(p).count();
  }
  out << count << '\n';
  return kExitOk;
}

struct RepArgs {
  u64 n = 0;
  unsigned m = 1;
  u64 prime = 0;
};

int do_rep(const RepArgs& a, std::ostream& out) {
  if (a.n == 0 || a.n >= kModulusCeiling) throw UsageError("--n: must be a positive integer below 2^62");
  const u64 p = require_prime(a.prime, "--prime");
  if (a.m == 4 && p > kEnumCeiling) throw UsageError("--prime: m = 4 enumeration is limited to p <= 10^9");
  const auto rep = find_representation({a.n, a.m, Constraint::None}, p);
  if (!rep) {
    out << "none\n";
    return kExitOk;
  }
  out << rep->x << ' ' << rep->y << " x_nonzero=" << (satisfies(*rep, Constraint::XNonzero) ? "true" : "false")
      << " parity_even_sum=" << (satisfies(*rep, Constraint::ParityEvenSum) ? "true" : "false") << '\n';
  return kExitOk;
}

struct SeriesArgs {
  std::string which;
  u64 modulus = 0;
  std::size_t limit = kDefaultSeriesLimit;
  std::string out_path;
};

int do_series(const SeriesArgs& a, std::ostream& out) {
  if (a.modulus < 2 || a.modulus >= kSeriesModulusMax) throw UsageError("--mod: must be in [2, 2^31)");
  if (a.limit > kSeriesLimitMax) throw UsageError("--limit: must be <= 100000");
  const SeriesMod s = make_series(parse_series_kind(a.which), a.limit, a.modulus);

  std::ofstream file;
  std::ostream* sink = &out;
  if (!a.out_path.empty()) {
    file.open(a.out_path);
    if (!file) throw UsageError("--out: cannot write " + a.out_path);
    sink = &file;
  }
  *sink << "n,coefficient\n";
  for (std::size_t n = 0; n <= s.limit(); ++n) *sink << n << ',' << s[n] << '\n';
  return kExitOk;
}

struct TermArgs {
  std::string seq;
  std::string poly;
  std::string kind = "capu";
  u64 index = 0;
  std::optional<u64> modulus;
};

int do_term(const TermArgs& a, std::ostream& out) {
  if (a.seq.empty() == a.poly.empty()) throw UsageError("term: give exactly one of --seq or --poly");
  const RecurrenceSpec spec =
      a.seq.empty() ? spec_from(parse_sequence_kind(a.kind), Cubic::parse(a.poly)) : named_spec(a.seq);
  if (a.modulus) {
    if (*a.modulus < 2 || *a.modulus >= kModulusCeiling) throw UsageError("--mod: must be in [2, 2^62)");
    out << term_mod(spec, a.index, *a.modulus) << '\n';
  } else {
    if (a.index > kExactTermLimit) throw UsageError("--index: exact terms are limited to k <= 64; pass --mod");
    out << term_exact(spec, static_cast<unsigned>(a.index)) << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ternary recurrences, cubic root counts and prime representations"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  SweepArgs sweep_args;
  auto* sweep_cmd = app.add_subcommand("sweep", "Check a registered equivalence at every prime below a bound");
  sweep_cmd->add_option("--case", sweep_args.case_id, "Case id, or 'all'")->required();
  sweep_cmd->add_option("--bound", sweep_args.bound, "Exclusive prime bound (<= 1e9)")->capture_default_str();
  sweep_cmd->add_option("--jobs", sweep_args.jobs, "Worker threads")->capture_default_str();
  sweep_cmd->add_option("--format", sweep_args.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  sweep_cmd->add_option("--cases", sweep_args.case_file, "Extra cases, one JSON object per line");

  NpfArgs npf_args;
  auto* npf_cmd = app.add_subcommand("npf", "Number of distinct roots of a monic cubic mod p");
  npf_cmd->add_option("--poly", npf_args.poly, "a1,a2,a3 for x^3 + a1 x^2 + a2 x + a3")->required();
  npf_cmd->add_option("--prime", npf_args.prime, "Prime modulus")->required();
  npf_cmd->add_option("--method", npf_args.method, "brute, gcd, sun, u or capu")
      ->check(CLI::IsMember({"brute", "gcd", "sun", "u", "capu"}))
      ->capture_default_str();

  RepArgs rep_args;
  auto* rep_cmd = app.add_subcommand("rep", "Solve m p = X^2 + n Y^2");
  rep_cmd->add_option("--n", rep_args.n, "Form coefficient n")->required();
  rep_cmd->add_option("--m", rep_args.m, "1 or 4")->check(CLI::IsMember({1u, 4u}))->capture_default_str();
  rep_cmd->add_option("--prime", rep_args.prime, "Prime p")->required();

  SeriesArgs series_args;
  auto* series_cmd = app.add_subcommand("series", "Print q-series coefficients mod m as CSV");
  series_cmd->add_option("--which", series_args.which, "delta, tau16 or r12")
      ->check(CLI::IsMember({"delta", "tau16", "r12"}))
      ->required();
  series_cmd->add_option("--mod", series_args.modulus, "Modulus (< 2^31)")->required();
  series_cmd->add_option("--limit", series_args.limit, "Highest coefficient index")->capture_default_str();
  series_cmd->add_option("--out", series_args.out_path, "Write to a file instead of stdout");

  TermArgs term_args;
  auto* term_cmd = app.add_subcommand("term", "Evaluate a recurrence term, exactly or mod m");
  term_cmd->add_option("--seq", term_args.seq, "tribonacci, padovan, perrin, berstel, cseq or ex31");
  term_cmd->add_option("--poly", term_args.poly, "a1,a2,a3 of the characteristic cubic");
  term_cmd->add_option("--kind", term_args.kind, "sun, u or capu (with --poly)")
      ->check(CLI::IsMember({"sun", "u", "capu"}))
      ->capture_default_str();
  term_cmd->add_option("--index", term_args.index, "Index k")->required();
  term_cmd->add_option("--mod", term_args.modulus, "Reduce mod m; omit for the exact value (k <= 64)");

  auto* registry_cmd = app.add_subcommand("registry", "List built-in case ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*sweep_cmd) return do_sweep(sweep_args, out, err);
    if (*npf_cmd) return do_npf(npf_args, out);
    if (*rep_cmd) return do_rep(rep_args, out);
    if (*series_cmd) return do_series(series_args, out);
    if (*term_cmd) return do_term(term_args, out);
    if (*registry_cmd) {
      for (const TheoremCase& c : registry()) out << c.id << '\n';
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"ternrec"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace ternrec::cli
