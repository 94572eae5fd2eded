#include <cstdlib>
#include <iostream>
#include <optional>
#include <thread>

#include "CLI11.hpp"
#include "gl2d/experiment.hpp"
#include "gl2d/selftest.hpp"
#include "json.hpp"

using namespace gl2d;

namespace {

struct Overrides {
  std::optional<int> max_iter;
  std::optional<int> precision;
  std::optional<int> jobs;
  std::string out;
};

std::optional<int> env_int(const char* name) {
  const char* v = std::getenv(name);
  if (!v || !*v) return std::nullopt;
  try {
    size_t pos = 0;
    const int x = std::stoi(v, &pos);
    if (pos != std::string(v).size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError(std::string("environment variable ") + name + " is not an integer");
  }
}

int resolve_jobs(const Overrides& o) {
  if (o.jobs) return std::max(1, *o.jobs);
  if (auto e = env_int("GL2D_JOBS")) return std::max(1, *e);
  return std::max(1u, std::thread::hardware_concurrency());
}

void apply_overrides(ExperimentConfig& c, const Overrides& o) {
  if (auto e = env_int("GL2D_PRECISION")) c.precision = *e;
  if (o.precision) c.precision = *o.precision;
  if (o.max_iter) c.engine.max_iter = *o.max_iter;
}

int fail(const std::string& code, const std::string& msg) {
  std::cerr << "gl2d: error " << code << ": " << msg << "\n";
  std::cout << error_report_json(code, msg);
  return 1;
}

// report to --out, else to the config's report path, else stdout
void emit(const std::string& json, const std::string& path) {
  if (path.empty()) {
    std::cout << json;
    return;
  }
  write_file_atomic(path, json);
}

ExperimentConfig load(const std::string& path, const Overrides& o) {
  ExperimentConfig c = load_config(path);
  apply_overrides(c, o);
  return c;
}

int cmd_check(const std::string& path, const Overrides& o) {
  ExperimentConfig c;
  try {
    c = load(path, o);
  } catch (const ConfigParseError& e) {
    return fail(codes::ConfigParse, e.what());
  } catch (const ConfigError& e) {
    return fail(codes::ConfigInvalid, e.what());
  }
  const CheckResult r = run_check(c);
  const std::string out = o.out.empty() ? c.report_path : o.out;
  try {
    emit(check_report_json(r), out);
  } catch (const std::exception& e) {
    return fail(codes::Io, e.what());
  }
  if (!r.ok()) {
    std::cerr << "gl2d: error " << r.error_code << ": " << r.error_message << "\n";
  } else {
    std::cerr << "verdict " << r.verdict.to_string() << ", " << predicate_name(c) << " predicate "
              << (r.predicate ? "true" : "false") << ": " << (r.agree ? "agree" : "DISAGREE") << "\n";
  }
  return exit_code(r);
}

int cmd_sweep(const std::string& path, const Overrides& o) {
  ExperimentConfig c;
  try {
    c = load(path, o);
    if (c.sweep_v1.empty()) throw ConfigError("sweep needs a [sweep] section with v1");
  } catch (const ConfigParseError& e) {
    return fail(codes::ConfigParse, e.what());
  } catch (const ConfigError& e) {
    return fail(codes::ConfigInvalid, e.what());
  }
  const SweepResult s = run_sweep(c, resolve_jobs(o));
  const std::string out = o.out.empty() ? c.report_path : o.out;
  try {
    emit(sweep_report_json(s), out);
  } catch (const std::exception& e) {
    return fail(codes::Io, e.what());
  }
  for (const auto& p : s.points) {
    std::cerr << "  v1=" << p.config.v1 << " v2=" << p.config.v2_value() << "  ";
    if (!p.ok())
      std::cerr << "error " << p.error_code << ": " << p.error_message << "\n";
    else
      std::cerr << p.verdict.to_string() << "  predicate=" << (p.predicate ? "true" : "false")
                << (p.agree ? "  agree" : "  DISAGREE") << "\n";
  }
  std::cerr << s.agreements << "/" << s.points.size() << " agree, " << s.disagreements << " disagree, " << s.errors
            << " errors\n";
  return exit_code(s);
}

int cmd_selftest(const Overrides& o) {
  const auto suites = run_selftest(resolve_jobs(o));
  bool ok = true;
  for (const auto& s : suites) {
    std::cerr << (s.passed() ? "PASS " : "FAIL ") << s.name << " (" << s.cases << " cases";
    if (!s.passed()) std::cerr << ", " << s.failed << " failed";
    std::cerr << ")\n";
    for (const auto& f : s.failures) std::cerr << "    " << f << "\n";
    ok = ok && s.passed();
  }
  try {
    emit(selftest_report_json(suites), o.out);
  } catch (const std::exception& e) {
    return fail(codes::Io, e.what());
  }
  return ok ? 0 : 1;
}

int cmd_dims(int d, int dprime, int64_t q, const Overrides& o) {
  nlohmann::ordered_json j;
  j["tool"] = "gl2d";
  j["command"] = "dims";
  j["d"] = d;
  j["dprime"] = dprime;
  j["q"] = q;
  bool agree = true;
  try {
    for (auto kind : {SteinbergKind::St, SteinbergKind::Sp}) {
      const DimReport f = dimension_formula(kind, d, dprime, q);
      const DimReport m = dimension_measured(kind, d, dprime, q);
      const bool same = f.dim_i1 == m.dim_i1 && f.dim_k1 == m.dim_k1;
      agree = agree && same;
      j[kind == SteinbergKind::St ? "St" : "Sp"] = {{"formula", {{"I1", f.dim_i1}, {"K1", f.dim_k1}}},
                                                    {"measured", {{"I1", m.dim_i1}, {"K1", m.dim_k1}}},
                                                    {"agrees", same}};
    }
  } catch (const ConfigError& e) {
    return fail(codes::ConfigInvalid, e.what());
  } catch (const std::exception& e) {
    return fail(codes::Model, e.what());
  }
  j["agrees"] = agree;
  try {
    emit(j.dump(2) + "\n", o.out);
  } catch (const std::exception& e) {
    return fail(codes::Io, e.what());
  }
  return agree ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zig-zag integrality experiments for GL2 over a division algebra"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);
  app.fallthrough();

  Overrides o;
  int max_iter = 0, precision = 0, jobs = 0;
  auto* o_iter = app.add_option("--max-iter", max_iter, "Iteration cap for the zig-zag")->check(CLI::PositiveNumber);
  auto* o_prec = app.add_option("--precision", precision, "Starting relative precision")->check(CLI::Range(2, 100000));
  auto* o_jobs = app.add_option("--jobs", jobs, "Worker threads for sweeps and selftest")->check(CLI::PositiveNumber);
  app.add_option("--out", o.out, "Write the JSON report here (write-then-rename)");

  std::string cfg;
  auto* check = app.add_subcommand("check", "Run one configuration and compare with the predicate");
  check->add_option("config", cfg, "Config file")->required();
  auto* sweep = app.add_subcommand("sweep", "Run every grid point of a configuration in parallel");
  sweep->add_option("config", cfg, "Config file")->required();
  auto* selftest = app.add_subcommand("selftest", "Run the built-in property suites");
  int d = 0, dprime = 0;
  int64_t q = 0;
  auto* dims = app.add_subcommand("dims", "Compare dimension formulas with measured models");
  dims->add_option("d", d)->required();
  dims->add_option("dprime", dprime)->required();
  dims->add_option("q", q)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }
  if (o_iter->count()) o.max_iter = max_iter;
  if (o_prec->count()) o.precision = precision;
  if (o_jobs->count()) o.jobs = jobs;

  try {
    if (*check) return cmd_check(cfg, o);
    if (*sweep) return cmd_sweep(cfg, o);
    if (*selftest) return cmd_selftest(o);
    if (*dims) return cmd_dims(d, dprime, q, o);
  } catch (const ConfigError& e) {
    return fail(codes::ConfigInvalid, e.what());
  } catch (const std::exception& e) {
    return fail(codes::Internal, e.what());
  }
  return 1;
}
