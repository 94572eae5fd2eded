#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "gl2d/experiment.hpp"

using namespace gl2d;

namespace {

const char* kGrid = R"(
# comment line
[experiment]
name = unit
[field]
p = 3
u = 1
e = 1
[group]
d = 1
[rep]
kind = principal_series   # trailing comment
v1 = -2
[engine]
max_iter = 12
min_iter = 10
[sweep]
v1 = -3..1
)";

}  // namespace

TEST_CASE("parsing a valid config") {
  const ExperimentConfig c = parse_config(kGrid);
  CHECK(c.name == "unit");
  CHECK(c.field.p == 3);
  CHECK(c.kind == RepKind::PrincipalSeries);
  CHECK(c.v1 == -2);
  CHECK(c.v2_value() == 2);
  CHECK(c.engine.max_iter == 12);
  CHECK(c.sweep_v1 == std::vector<int64_t>{-3, -2, -1, 0, 1});
  CHECK_NOTHROW(validate_config(c));

  CHECK(parse_config("[sweep]\nv1 = -6..2:2\n").sweep_v1 == std::vector<int64_t>{-6, -4, -2, 0, 2});
  CHECK(parse_config("[sweep]\nv1 = 3, -1\n").sweep_v1 == std::vector<int64_t>{3, -1});
}

TEST_CASE("malformed configs") {
  CHECK_THROWS_AS(parse_config("[field]\np = three\n"), ConfigParseError);
  CHECK_THROWS_AS(parse_config("[nope]\n"), ConfigParseError);
  CHECK_THROWS_AS(parse_config("[field]\np 3\n"), ConfigParseError);
  CHECK_THROWS_AS(parse_config("p = 3\n"), ConfigParseError);
  CHECK_THROWS_AS(parse_config("[field]\np = 3\np = 5\n"), ConfigParseError);
  CHECK_THROWS_AS(parse_config("[field]\nq = 3\n"), ConfigParseError);
  CHECK_THROWS_AS(parse_config("[rep]\nkind = other\n"), ConfigParseError);
  CHECK_THROWS_AS(parse_config("[field\n"), ConfigParseError);
  CHECK_THROWS_AS(load_config("/nonexistent/config.cfg"), ConfigParseError);
}

TEST_CASE("cross validation") {
  ExperimentConfig c = parse_config("[field]\nu = 1\n[group]\nd = 2\n");
  CHECK_THROWS_AS(validate_config(c), ConfigError);  // u not a multiple of d f
  c = parse_config("[field]\nu = 2\n[group]\nd = 2\n[rep]\ndprime = 1\nv1 = 1\n");
  CHECK_THROWS_AS(validate_config(c), ConfigError);  // pi^{1/2} is not available
  c = parse_config("[field]\nu = 2\ne = 2\n[group]\nd = 2\n[rep]\nkind = speh_tensor_sym1\n");
  CHECK_THROWS_AS(validate_config(c), ConfigError);  // needs 4 | e
  c = parse_config("[field]\nu = 2\n[group]\nd = 2\n[rep]\nkind = speh\ncenter = 3\n");
  CHECK_THROWS_AS(validate_config(c), ConfigError);
}

TEST_CASE("checks, exit codes and reports") {
  ExperimentConfig c = parse_config(kGrid);
  c.sweep_v1.clear();
  const CheckResult r = run_check(c);
  REQUIRE(r.ok());
  CHECK(r.verdict.kind == VerdictKind::DivergedPeriodic);
  CHECK_FALSE(r.predicate);
  CHECK(r.agree);
  CHECK(exit_code(r) == 0);
  CHECK(check_report_json(r) == check_report_json(run_check(c)));
  CHECK(check_report_json(r).find("\"kind\": \"DivergedPeriodic\"") != std::string::npos);
  CHECK(check_report_json(r).find("millis") == std::string::npos);

  ExperimentConfig bad = c;
  bad.field.u = 0;
  const CheckResult e = run_check(bad);
  CHECK(e.error_code == codes::ConfigInvalid);
  CHECK(exit_code(e) == 1);

  // a verdict contradicting the predicate is reported as disagreement
  CheckResult fake = r;
  fake.agree = verdict_agrees({VerdictKind::Stabilized, 1, 0, 0}, false, true);
  CHECK_FALSE(fake.agree);
  CHECK(exit_code(fake) == 2);
  CHECK_FALSE(verdict_agrees({VerdictKind::Inconclusive, 5, 0, 0}, false, false));
}

TEST_CASE("parallel sweep matches the serial one") {
  const ExperimentConfig c = parse_config(kGrid);
  const SweepResult a = run_sweep(c, 1), b = run_sweep(c, 4);
  CHECK(a.points.size() == 5);
  CHECK(a.agreements == 5);
  CHECK(exit_code(a) == 0);
  CHECK(sweep_report_json(a) == sweep_report_json(b));
}

TEST_CASE("atomic report writes") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "gl2d_unit_reports";
  fs::remove_all(dir);
  const std::string path = (dir / "sub" / "r.json").string();
  write_file_atomic(path, "{}\n");
  write_file_atomic(path, "{\"a\": 1}\n");
  std::ifstream in(path);
  std::string s((std::istreambuf_iterator<char>(in)), {});
  CHECK(s == "{\"a\": 1}\n");
  int files = 0;
  for (const auto& e : fs::directory_iterator(dir / "sub")) {
    (void)e;
    ++files;
  }
  CHECK(files == 1);
  fs::remove_all(dir);
}
