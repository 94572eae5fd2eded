#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gl2d/local_field.hpp"
#include "gl2d/zigzag.hpp"

namespace gl2d {

// Machine-readable error codes used in reports and on stderr.
namespace codes {
inline constexpr const char* ConfigParse = "CONFIG_PARSE";
inline constexpr const char* ConfigInvalid = "CONFIG_INVALID";
inline constexpr const char* Model = "MODEL";
inline constexpr const char* Precision = "PRECISION";
inline constexpr const char* Closure = "CLOSURE";
inline constexpr const char* Predicate = "PREDICATE";
inline constexpr const char* Io = "IO";
inline constexpr const char* Internal = "INTERNAL";
}  // namespace codes

class ConfigParseError : public ConfigError {
 public:
  ConfigParseError(int line, const std::string& msg)
      : ConfigError("line " + std::to_string(line) + ": " + msg), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

enum class RepKind { PrincipalSeries, Speh, SpehSym1 };
enum class Normalization { Plain, Normalized };

std::string to_string(RepKind k);
std::string to_string(Normalization n);

struct ExperimentConfig {
  std::string name;  // [experiment] name, echoed in reports

  LocalFieldSpec field;
  int precision = 24;

  int d = 1;
  int f = 1;

  RepKind kind = RepKind::PrincipalSeries;
  // principal series: tau_i has residue character exponent theta_i on F_{q^d}
  // and central value omega_i(pi_F) = pi^{v_i}
  int dprime = 1;
  int64_t theta1 = 0, theta2 = 0;
  int64_t v1 = 0;
  std::optional<int64_t> v2;  // defaults to -v1
  Normalization normalization = Normalization::Plain;
  // Speh models
  int64_t theta = 1;
  std::optional<int64_t> nu;       // defaults to -v(q)
  std::optional<int64_t> epsilon;  // rational integer unit, default solved
  int64_t center = 1;

  ZigZagOptions engine;
  std::string report_path;

  std::vector<int64_t> sweep_v1;  // [sweep] v1

  int64_t q() const { return ipow(field.p, f); }
  int64_t v2_value() const { return v2.value_or(-v1); }
};

// Flat text: "[section]" headers, "key = value" lines, '#' comments.
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::string& path);
// cross-checks divisibility constraints; throws ConfigError
void validate_config(const ExperimentConfig& c);

}  // namespace gl2d
