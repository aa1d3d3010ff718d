#include "bcwork/suites.hpp"

#include "doctest.h"

#include <fstream>

using namespace bcwork;
namespace fs = std::filesystem;

namespace {

FixtureStore fixtures() {
  return FixtureStore(BCWORK_FIXTURE_DIR);
}

}  // namespace

TEST_CASE("summary suite") {
  const SuiteReport r = run_suite("summary", fixtures());
  REQUIRE(r.checks.size() == 3);
  for (const Check& c : r.checks) CHECK(c.status == Status::Pass);
  CHECK(r.find("summary.SA")->actual == "LHS 14/1, RHS 14/1");
  CHECK(r.find("summary.GA")->actual == "LHS 11/0, RHS 11/0");
  CHECK(r.find("summary.Gamma2")->actual == "LHS 6/12, RHS 6/12");
  CHECK(r.passed());
}

TEST_CASE("sa-lhs suite on intact fixtures") {
  const SuiteReport r = run_suite("sa-lhs", fixtures());
  CHECK(r.passed());
  CHECK(r.count(Status::Fixture) == 1);
}

TEST_CASE("corrupted fixture entry fails its check") {
  const fs::path dir = fs::temp_directory_path() / "bcwork_corrupt";
  fs::remove_all(dir);
  fs::copy(BCWORK_FIXTURE_DIR, dir);
  const FixtureStore s(dir);
  nlohmann::json j = s.raw("SA_LHS_H0");
  j["entries"][0][0] = j["entries"][0][0].get<long long>() + 5;
  std::ofstream(dir / "SA_LHS_H0.json") << j.dump(1);
  const SuiteReport r = run_suite("sa-lhs", s);
  CHECK_FALSE(r.passed());
  CHECK(r.find("sa-lhs.stack")->status == Status::Fail);
  fs::remove(dir / "TABLE1.json");
  const SuiteReport missing = run_suite("sa-lhs", s);
  CHECK(missing.find("sa-lhs.table")->status == Status::Fail);
  CHECK(missing.find("sa-lhs.table")->actual.find("fixture problem") == 0);
  fs::remove_all(dir);
}

TEST_CASE("suite names and report formats") {
  CHECK(suite_names().size() == 9);
  CHECK_THROWS_AS(run_suite("nope", fixtures()), std::invalid_argument);
  const SuiteReport r = run_suite("gamma2-lhs", fixtures());
  const nlohmann::json j = report_to_json(r);
  CHECK(j["suite"] == "gamma2-lhs");
  CHECK(j["checks"].size() == r.checks.size());
  CHECK(j["checks"][0].contains("ref"));
  CHECK(j["totals"]["FAIL"] == 0);
  CHECK(report_to_json(run_suite("gamma2-lhs", fixtures())) == j);
  CHECK(report_to_text(r).find("[PASS] gamma2-lhs.k-groups") != std::string::npos);
}

TEST_CASE("gamma2-rhs marks the formal class as imported") {
  const SuiteReport r = run_suite("gamma2-rhs", fixtures());
  CHECK(r.passed());
  CHECK(r.count(Status::Fixture) == 2);
  CHECK(r.find("gamma2-rhs.action-alpha1-F2")->status == Status::Fixture);
}

TEST_CASE("dump") {
  const FixtureStore s = fixtures();
  const DumpOutput m = dump("SA_LHS_H0", s);
  CHECK(m.json["rows"] == 17);
  CHECK(m.text.rfind("SA_LHS_H0 (17x5)", 0) == 0);
  CHECK(dump("IOTA24", s).json["rows"] == 9);
  CHECK(dump("IOTA24_COMPUTED", s).json["entries"] == dump("IOTA24", s).json["entries"]);
  CHECK(dump("COORDS_CMM_COMPUTED", s).json["entries"] == dump("COORDS_CMM", s).json["entries"]);
  CHECK(dump("COORDS_P4M_COMPUTED", s).json["row_labels"].size() == 14);
  CHECK(dump("CHARTABLE_p6m", s).json["irreps"].size() == 6);
  CHECK(dump("GAMMA2", s).json["name"] == "GAMMA2");
  CHECK_THROWS_AS(dump("UNKNOWN", s), std::invalid_argument);
}

TEST_CASE("coordinate pipelines") {
  const FixtureStore s = fixtures();
  const CoordinateResult c = basis_coordinates(s, "cmm");
  CHECK(c.permuted == s.matrix("COORDS_CMM"));
  CHECK(c.col_labels.size() == 6);
  CHECK(reconstruct_iota(s, "p4m") == s.matrix("IOTA24"));
  CHECK(reconstruct_iota(s, "p6m") == s.matrix("IOTA26"));
}
