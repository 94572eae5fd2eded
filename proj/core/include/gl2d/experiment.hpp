#pragma once

#include <string>
#include <vector>

#include "gl2d/config.hpp"

namespace gl2d {

inline constexpr const char* kToolVersion = "0.1.0";

// Builds the diagram described by the config over F.
DiagramModel build_model(const ExperimentConfig& c, const LocalFieldPtr& F);
PredicateInput predicate_input(const ExperimentConfig& c);
// name of the integrality criterion applied to this config
std::string predicate_name(const ExperimentConfig& c);
bool predicate_value(const ExperimentConfig& c);

struct CheckResult {
  ExperimentConfig config;
  std::string error_code;  // empty on success
  std::string error_message;

  Verdict verdict;
  std::vector<IterationRecord> records;
  std::vector<int64_t> final_profile;
  bool monotone = true;
  bool confirmed = true;
  bool predicate = false;
  bool index_increasing = false;  // index strictly grows at every recorded step
  bool agree = false;

  int precision_used = 0;
  std::vector<std::string> precision_trail;
  double millis = 0;

  bool ok() const { return error_code.empty(); }
};

// Integral verdicts must be Stabilized; non-integral ones must be DivergedPeriodic or
// Inconclusive with a strictly increasing index.
bool verdict_agrees(const Verdict& v, bool predicate, bool index_increasing);

// Never throws; failures are recorded in error_code.
CheckResult run_check(const ExperimentConfig& c);

struct SweepResult {
  ExperimentConfig config;
  std::vector<CheckResult> points;
  int agreements = 0;
  int disagreements = 0;
  int errors = 0;
  double millis = 0;
};
SweepResult run_sweep(const ExperimentConfig& c, int jobs);

// Deterministic JSON; timing fields are emitted only when asked for.
std::string check_report_json(const CheckResult& r, bool timing = false);
std::string sweep_report_json(const SweepResult& s, bool timing = false);
std::string error_report_json(const std::string& code, const std::string& message);

int exit_code(const CheckResult& r);
int exit_code(const SweepResult& s);

// Writes to a sibling temporary file and renames it over the target.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace gl2d
