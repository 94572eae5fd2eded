#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gl2d {

struct SuiteResult {
  std::string name;
  int64_t cases = 0;
  std::vector<std::string> failures;  // one line per failed case, capped
  int64_t failed = 0;
  bool passed() const { return failed == 0; }
  void check(bool ok, const std::string& what);
};

// inversion, convolution and Gauss-sum identities over F_{p^m}, all characters
SuiteResult fourier_suite(int64_t p, int m);
// sum / intersect / meet_subspace / member against an exact rational oracle over Z_3
SuiteResult lattice_oracle_suite(int cases, uint64_t seed);
// group relations, Frobenius and t compatibilities, explicit formulas, verdict invariance
SuiteResult model_relation_suite();
// dimension_formula against dimension_measured
SuiteResult dimension_suite();

std::vector<SuiteResult> run_selftest(int jobs = 1);
std::string selftest_report_json(const std::vector<SuiteResult>& suites);

}  // namespace gl2d
