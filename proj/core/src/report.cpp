#include "ternrec/report.hpp"

#include <json.hpp>
#include <sstream>
#include <stdexcept>

namespace ternrec {

using json = nlohmann::ordered_json;

namespace {

json optional_bool(const std::optional<bool>& v) { return v ? json(*v) : json(nullptr); }

std::optional<bool> read_optional_bool(const json& v) {
  if (v.is_null()) return std::nullopt;
  return v.get<bool>();
}

}  // namespace

std::string to_json(const SweepReport& report) {
  json flagged = json::array();
  for (const FlaggedPrime& f : report.flagged_exceptions) {
    flagged.push_back({{"p", f.p}, {"left", optional_bool(f.left)}, {"right", optional_bool(f.right)}});
  }
  json j;
  j["case"] = report.case_id;
  j["bound"] = report.bound;
  j["primes_checked"] = report.primes_checked;
  j["mismatches"] = report.mismatches;
  j["flagged_exceptions"] = std::move(flagged);
  j["verdict"] = report.pass ? "pass" : "fail";
  return j.dump();
}

SweepReport report_from_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    SweepReport r;
    r.case_id = j.at("case").get<std::string>();
    r.bound = j.at("bound").get<u64>();
    r.primes_checked = j.at("primes_checked").get<u64>();
    r.mismatches = j.at("mismatches").get<std::vector<u64>>();
    for (const json& f : j.at("flagged_exceptions")) {
      r.flagged_exceptions.push_back(
          {f.at("p").get<u64>(), read_optional_bool(f.at("left")), read_optional_bool(f.at("right"))});
    }
    const std::string verdict = j.at("verdict").get<std::string>();
    if (verdict != "pass" && verdict != "fail") throw std::invalid_argument("bad verdict '" + verdict + "'");
    r.pass = verdict == "pass";
    return r;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

std::string csv_header() { return "case,bound,primes_checked,mismatches,flagged_exceptions,verdict"; }

std::string to_csv_row(const SweepReport& report) {
  std::ostringstream os;
  os << report.case_id << ',' << report.bound << ',' << report.primes_checked << ',';
  for (std::size_t i = 0; i < report.mismatches.size(); ++i) os << (i ? ";" : "") << report.mismatches[i];
  os << ',';
  auto flag = [](const std::optional<bool>& v) { return v ? (*v ? "T" : "F") : "-"; };
  for (std::size_t i = 0; i < report.flagged_exceptions.size(); ++i) {
    const FlaggedPrime& f = report.flagged_exceptions[i];
    os << (i ? ";" : "") << f.p << ':' << flag(f.left) << flag(f.right);
  }
  os << ',' << (report.pass ? "pass" : "fail");
  return os.str();
}

TheoremCase parse_case(std::string_view json_line) {
  json j;
  try {
    j = json::parse(json_line);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("case line is not JSON: ") + e.what());
  }
  try {
    const std::string id = j.at("id").get<std::string>();
    const Cubic f(j.at("a1").get<i64>(), j.at("a2").get<i64>(), j.at("a3").get<i64>());
    const std::string kind = j.at("kind").get<std::string>();
    std::vector<u64> exceptions = j.value("exceptions", std::vector<u64>{});
    const std::string source = j.value("source", std::string("user case"));

    if (kind == "residue") {
      return make_residue_case(id, f, j.at("modulus").get<u64>(), j.at("residues").get<std::vector<u64>>(),
                               std::move(exceptions), source);
    }
    FormSpec form;
    form.n = j.at("n").get<u64>();
    form.m = j.value("m", 1u);
    form.constraint = parse_constraint(j.value("constraint", std::string("none")));
    if (form.n == 0) throw std::invalid_argument("form needs n >= 1");
    if (form.m != 1 && form.m != 4) throw std::invalid_argument("form multiplier m must be 1 or 4");
    return make_form_case(id, f, parse_method(kind == "capU" ? "capu" : kind), form, std::move(exceptions),
                          source);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad case line: ") + e.what());
  }
}

std::vector<TheoremCase> read_case_file(std::istream& in) {
  std::vector<TheoremCase> cases;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      cases.push_back(parse_case(line));
    } catch (const std::exception& e) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return cases;
}

}  // namespace ternrec
