#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "ternrec/report.hpp"

using namespace ternrec;

TEST_CASE("json field order and round trip") {
  SweepReport r;
  r.case_id = "table2-n83";
  r.bound = 1000;
  r.primes_checked = 164;
  r.mismatches = {61, 97};
  r.flagged_exceptions = {{2, true, false}, {47, std::nullopt, true}};
  r.pass = false;

  const std::string text = to_json(r);
  CHECK(text ==
        R"({"case":"table2-n83","bound":1000,"primes_checked":164,"mismatches":[61,97],)"
        R"("flagged_exceptions":[{"p":2,"left":true,"right":false},{"p":47,"left":null,"right":true}],)"
        R"("verdict":"fail"})");
  CHECK(report_from_json(text) == r);

  SweepReport ok;
  ok.case_id = "padovan";
  ok.bound = 10;
  ok.pass = true;
  CHECK(report_from_json(to_json(ok)) == ok);
}

TEST_CASE("round trip of real sweeps") {
  for (const char* id : {"padovan", "table2-n907", "ex31"}) {
    const SweepReport r = sweep(find_case(id), 20'000);
    CHECK(report_from_json(to_json(r)) == r);
  }
}

TEST_CASE("malformed reports") {
  CHECK_THROWS_AS(report_from_json("{"), std::invalid_argument);
  CHECK_THROWS_AS(report_from_json(R"({"case":"x"})"), std::invalid_argument);
  CHECK_THROWS_AS(report_from_json(
                      R"({"case":"x","bound":1,"primes_checked":0,"mismatches":[],"flagged_exceptions":[],"verdict":"maybe"})"),
                  std::invalid_argument);
}

TEST_CASE("csv") {
  SweepReport r;
  r.case_id = "cseq";
  r.bound = 100;
  r.primes_checked = 21;
  r.mismatches = {5, 7};
  r.flagged_exceptions = {{29, true, false}, {31, std::nullopt, true}};
  r.pass = false;
  CHECK(csv_header() == "case,bound,primes_checked,mismatches,flagged_exceptions,verdict");
  CHECK(to_csv_row(r) == "cseq,100,21,5;7,29:TF;31:-T,fail");
}

TEST_CASE("case lines") {
  const TheoremCase u = parse_case(
      R"({"id":"t23","kind":"u","a1":0,"a2":-1,"a3":1,"n":23,"m":4,"constraint":"parity_even_sum","exceptions":[23,3]})");
  CHECK(u.id == "t23");
  CHECK(u.cubic == Cubic(0, -1, 1));
  CHECK(u.exceptions == std::vector<u64>{3, 23});
  CHECK(u.predicates.size() == 3);
  CHECK(sweep(u, 10'000).pass);

  const TheoremCase cu = parse_case(R"({"id":"c","kind":"capU","a1":1,"a2":1,"a3":2,"n":83,"m":4})");
  CHECK(cu.predicates[1].describe() == "4p = X^2 + 83Y^2");

  const TheoremCase res = parse_case(
      R"({"id":"r","kind":"residue","a1":0,"a2":-31,"a3":62,"modulus":31,"residues":[1,2,4,8,15,16,23,27,29,30],"exceptions":[2,3,31]})");
  CHECK(res.otherwise.has_value());
  CHECK(sweep(res, 10'000).pass);

  CHECK_THROWS_AS(parse_case("not json"), std::invalid_argument);
  CHECK_THROWS_AS(parse_case(R"({"id":"x","kind":"u","a1":0,"a2":-1,"a3":1})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_case(R"({"id":"x","kind":"u","a1":0,"a2":-1,"a3":1,"n":23,"m":3})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_case(R"({"id":"x","kind":"w","a1":0,"a2":-1,"a3":1,"n":23})"), std::invalid_argument);
}

TEST_CASE("case files") {
  std::istringstream in(
      "# comment\n"
      "\n"
      R"({"id":"a","kind":"sun","a1":0,"a2":1,"a3":1,"n":31,"exceptions":[2,3,31]})"
      "\n"
      R"({"id":"b","kind":"u","a1":0,"a2":-1,"a3":-1,"n":23,"constraint":"x_nonzero","exceptions":[3,23]})"
      "\n");
  const auto cases = read_case_file(in);
  REQUIRE(cases.size() == 2);
  CHECK(cases[0].id == "a");
  CHECK(cases[1].id == "b");

  std::istringstream bad("{\"id\":\"a\"}\n");
  CHECK_THROWS_WITH_AS(read_case_file(bad), doctest::Contains("line 1"), std::invalid_argument);
}
