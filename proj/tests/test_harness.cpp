#include "doctest.h"
#include "hh/harness.hpp"
#include "hh/zoo.hpp"

using namespace hh;

namespace {
const FieldSpec QQ = FieldSpec::rationals();
const FieldSpec F5 = FieldSpec::prime_field(5);
const FieldSpec F7 = FieldSpec::prime_field(7);

// k[x, y]/(x, y)^2: local with a two-dimensional socle, so not Frobenius.
const char* kLocalNonFrobenius = R"({
  "field": {"kind": "Q"}, "dim": 3, "basis": ["1", "x", "y"],
  "unit": ["1", "0", "0"],
  "mul": [[0, 0, 0, "1"], [0, 1, 1, "1"], [1, 0, 1, "1"], [0, 2, 2, "1"], [2, 0, 2, "1"]]
})";

}  // namespace

TEST_CASE("loading zoo names and JSON files") {
  CHECK(load_algebra<Rational>("dual-numbers", QQ).dim() == 2);
  CHECK(load_algebra<Fp>("taft:3", F7).dim() == 9);
  auto a = parse_algebra_json<Rational>(kLocalNonFrobenius, "mem");
  CHECK(a.dim() == 3);
  CHECK(a.labels()[2] == "y");
  auto half = parse_algebra_json<Rational>(
      R"({"field": {"kind": "Q"}, "dim": 1, "unit": ["2"], "mul": [[0, 0, 0, "1/2"]]})", "mem");
  CHECK(half.unit()[0] == Rational::parse(QQ, "2"));
  auto f5 = parse_algebra_json<Fp>(R"({"field": {"kind": "Fp", "p": 5}, "dim": 1, "unit": [1], "mul": [[0, 0, 0, 1]]})",
                                   "mem");
  CHECK(f5.field() == F5);
}

TEST_CASE("algebra file diagnostics") {
  // Syntax error on line 3.
  try {
    parse_algebra_json<Rational>("{\"field\": {\"kind\": \"Q\"},\n\"dim\": 1,\n\"unit\": [\"1\" \"0\"]}", "f.json");
    FAIL("expected a load error");
  } catch (const LoadError& e) {
    CHECK(e.where == "f.json:3");
  }
  try {
    parse_algebra_json<Rational>(R"({"field": {"kind": "Q"}, "dim": 1, "unit": ["1"], "mul": [[0, 0, 0, "1"], [0, 3, 0, "1"]]})",
                                 "f.json");
    FAIL("expected a load error");
  } catch (const LoadError& e) {
    CHECK(e.where == "f.json: field \"mul[1]\"");
  }
  CHECK_THROWS_AS(parse_algebra_json<Rational>(R"({"field": {"kind": "R"}, "dim": 1, "unit": ["1"], "mul": []})", "f"),
                  LoadError);
  CHECK_THROWS_AS(parse_algebra_json<Fp>(R"({"field": {"kind": "Fp", "p": 6}, "dim": 1, "unit": [1], "mul": []})", "f"),
                  LoadError);
  CHECK_THROWS_AS(parse_algebra_json<Rational>(R"({"field": {"kind": "Q"}, "dim": 1, "unit": ["1/0"], "mul": []})", "f"),
                  LoadError);
  // e1 e1 = e2, e2 e1 = e1, everything else on e1, e2 zero: (e1 e1) e1 != e1 (e1 e1).
  try {
    parse_algebra_json<Rational>(R"({"field": {"kind": "Q"}, "dim": 3, "unit": ["1", "0", "0"],
      "mul": [[0, 0, 0, "1"], [0, 1, 1, "1"], [1, 0, 1, "1"], [0, 2, 2, "1"], [2, 0, 2, "1"],
              [1, 1, 2, "1"], [2, 1, 1, "1"]]})",
                                 "f");
    FAIL("expected an associativity violation");
  } catch (const AssociativityViolation& e) {
    CHECK(e.i < 3);
    CHECK(e.j < 3);
    CHECK(e.k < 3);
  }
}

TEST_CASE("check id lists") {
  auto all = parse_check_list("all");
  CHECK(all.size() == 16);
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK(all == all_check_ids());
  CHECK(parse_check_list("thm3.8, thm1.1,thm3.8") == std::vector<std::string>{"thm1.1", "thm3.8"});
  CHECK(parse_check_list("").empty());
  CHECK_THROWS_AS(parse_check_list("thm9.9"), UsageError);
}

TEST_CASE("reports: every requested check once, sorted, exit codes") {
  auto a = zoo<Rational>("cyclic:2", QQ);
  RunOptions opt;
  opt.n_max = 2;
  auto empty = run_checks(a, "cyclic:2", {}, opt);
  CHECK(empty.checks.empty());
  CHECK(exit_code(empty) == 0);
  auto rep = run_checks(a, "cyclic:2", parse_check_list("all"), opt);
  REQUIRE(rep.checks.size() == 16);
  for (std::size_t i = 0; i < rep.checks.size(); ++i) {
    CHECK(rep.checks[i].id == all_check_ids()[i]);
    CHECK(rep.checks[i].status != Status::Fail);
    if (rep.checks[i].status == Status::Pass) CHECK(rep.checks[i].all_hold());
  }
  CHECK(exit_code(rep) == 0);
  opt.inject_corruption = true;
  auto bad = run_checks(a, "cyclic:2", {"thm2.7"}, opt);
  CHECK(bad.checks.back().status == Status::Fail);
  CHECK(exit_code(bad) == 1);
}

TEST_CASE("Frobenius-dependent checks are skipped with a reason") {
  auto a = parse_algebra_json<Rational>(kLocalNonFrobenius, "local");
  auto rep = run_checks(a, "local", {"prop3.1", "thm2.7"}, RunOptions{});
  REQUIRE(rep.checks.size() == 2);
  CHECK(rep.checks[0].id == "prop3.1");
  CHECK(rep.checks[0].status == Status::Skipped);
  REQUIRE(!rep.checks[0].notes.empty());
  CHECK(rep.checks[0].notes[0].starts_with("Inconclusive"));
  // Over Q a cube root of unity is missing for cyclic:3 only if ord(rho) = 3; it is 1 here.
  RunOptions opt;
  opt.n_max = 2;
  auto c3 = run_checks(zoo<Rational>("cyclic:3", QQ), "cyclic:3", {"thm3.15"}, opt);
  CHECK(c3.checks[0].status == Status::Pass);
  opt.root = "3";
  auto t2 = run_checks(zoo<Fp>("taft:2", F5), "taft:2", {"thm3.10"}, opt);
  CHECK(t2.checks[0].status == Status::Skipped);
  CHECK(t2.checks[0].notes[0].starts_with("NotPrimitiveRoot"));
}

TEST_CASE("taft:2 eigenspace prediction passes with tables") {
  RunOptions opt;
  opt.n_max = 3;
  auto rep = run_checks(zoo<Fp>("taft:2", F5), "taft:2", {"thm3.10"}, opt);
  REQUIRE(rep.checks.size() == 1);
  CHECK(rep.checks[0].status == Status::Pass);
  CHECK(rep.checks[0].comparisons[0].lhs.dims.size() == 4);
}

TEST_CASE("size limits turn into skipped checks") {
  RunOptions opt;
  opt.n_max = 3;
  opt.limits.max_space_dim = 100;
  auto rep = run_checks(zoo<Rational>("dual-numbers", QQ), "dual-numbers", {"thm1.1"}, opt);
  CHECK(rep.checks[0].status == Status::Skipped);
  CHECK(rep.checks[0].notes[0].starts_with("size limit"));
}

TEST_CASE("JSON reports round-trip and are deterministic") {
  RunOptions opt;
  opt.n_max = 2;
  auto a = zoo<Rational>("dual-numbers", QQ);
  auto rep = run_checks(a, "dual-numbers", parse_check_list("thm1.1,rmk3.6,ex3.16"), opt);
  const auto text = emit_json(rep);
  CHECK(parse_report_json(text) == rep);
  CHECK(emit_json(parse_report_json(text)) == text);
  CHECK(emit_json(run_checks(a, "dual-numbers", parse_check_list("thm1.1,rmk3.6,ex3.16"), opt)) == text);
  for (Status s : {Status::Pass, Status::Fail, Status::Skipped, Status::HypothesisViolated, Status::Inconclusive}) {
    VerificationReport r{"x", "F5", 1, {}};
    CheckResult c{"thm1.1"};
    c.status = s;
    c.compare("w", {"a", {1, 2}}, {"b", {}});
    c.note("n");
    r.checks.push_back(c);
    CHECK(parse_report_json(emit_json(r)) == r);
  }
  CHECK(emit_table(rep).starts_with("algebra dual-numbers  field Q  n_max 2\n"));
}
