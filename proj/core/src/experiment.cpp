#include "gl2d/experiment.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <thread>

#include "json.hpp"

namespace gl2d {

using ojson = nlohmann::ordered_json;

DiagramModel build_model(const ExperimentConfig& c, const LocalFieldPtr& F) {
  const int64_t q = c.q();
  const auto k = F->residue_field()->subfield(c.d * c.f);
  switch (c.kind) {
    case RepKind::PrincipalSeries: {
      int64_t shift = 0;
      if (c.normalization == Normalization::Normalized)
        shift = static_cast<int64_t>(c.field.e) * c.f * c.d * c.dprime / 2;
      auto tau = [&](int64_t theta, int64_t v, int64_t s) {
        TameCharacterData td;
        td.d = c.d;
        td.dprime = c.dprime;
        td.theta = MultChar{k, theta};
        td.q = q;
        td.unif_value = F->pi_pow(v * c.dprime / c.d + s);
        return TameIrrep::build(F, td);
      };
      return build_principal_series(F, tau(c.theta1, c.v1, -shift), tau(c.theta2, c.v2_value(), shift));
    }
    case RepKind::Speh:
    case RepKind::SpehSym1: {
      SpehParams sp;
      sp.theta = MultChar{k, c.theta};
      sp.q = q;
      sp.nu = c.nu.value_or(-static_cast<int64_t>(c.field.e) * c.f);
      sp.center = F->from_int(c.center);
      if (c.epsilon) sp.epsilon = F->from_int(*c.epsilon);
      DiagramModel sm = build_speh(F, sp);
      if (c.kind == RepKind::Speh) return sm;
      return tensor_diagram(sm, build_sym1_algebraic(F, q));
    }
  }
  throw ModelError("unsupported representation kind");
}

PredicateInput predicate_input(const ExperimentConfig& c) {
  return {c.v1, c.v2_value(), c.d, c.field.e, c.f};
}

std::string predicate_name(const ExperimentConfig& c) {
  if (c.kind != RepKind::PrincipalSeries) return "speh_unit_center";
  return c.normalization == Normalization::Plain ? "emerton" : "normalized";
}

bool predicate_value(const ExperimentConfig& c) {
  // Speh models with a unit central value are integral
  if (c.kind != RepKind::PrincipalSeries) return c.center % c.field.p != 0;
  const PredicateInput in = predicate_input(c);
  return c.normalization == Normalization::Plain ? emerton_predicate(in) : normalized_predicate(in);
}

bool verdict_agrees(const Verdict& v, bool predicate, bool index_increasing) {
  if (predicate) return v.kind == VerdictKind::Stabilized;
  return v.kind != VerdictKind::Stabilized && index_increasing;
}

namespace {

bool strictly_increasing_index(const std::vector<IterationRecord>& recs) {
  if (recs.size() < 2) return false;
  for (size_t i = 1; i < recs.size(); ++i) {
    if (!recs[i].index || !recs[i - 1].index) return false;
    if (*recs[i].index <= *recs[i - 1].index) return false;
  }
  return true;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

CheckResult run_check(const ExperimentConfig& c) {
  const auto t0 = std::chrono::steady_clock::now();
  CheckResult r;
  r.config = c;
  try {
    validate_config(c);
    r.predicate = predicate_value(c);
    const int ceiling = LocalField::precision_ceiling(c.field);
    const int start = std::min(c.precision, ceiling);
    std::function<ZigZagTrace(const LocalFieldPtr&)> fn = [&](const LocalFieldPtr& F) {
      r.precision_used = F->precision();
      const DiagramModel M = build_model(c, F);
      return run_zigzag(M, seed_lattice(M), c.engine);
    };
    const ZigZagTrace tr = with_escalation(c.field, start, ceiling, fn, &r.precision_trail);
    r.verdict = tr.verdict;
    r.records = tr.records;
    r.final_profile = tr.final_lattice.profile();
    r.monotone = tr.monotone;
    r.confirmed = tr.confirmed;
    r.index_increasing = strictly_increasing_index(tr.records);
    r.agree = verdict_agrees(r.verdict, r.predicate, r.index_increasing);
  } catch (const ConfigParseError& e) {
    r.error_code = codes::ConfigParse;
    r.error_message = e.what();
  } catch (const ConfigError& e) {
    r.error_code = codes::ConfigInvalid;
    r.error_message = e.what();
  } catch (const PredicateError& e) {
    r.error_code = codes::Predicate;
    r.error_message = e.what();
  } catch (const ModelError& e) {
    r.error_code = codes::Model;
    r.error_message = e.what();
  } catch (const PrecisionError& e) {
    r.error_code = codes::Precision;
    r.error_message = e.what();
  } catch (const ClosureError& e) {
    r.error_code = codes::Closure;
    r.error_message = e.what();
  } catch (const std::exception& e) {
    r.error_code = codes::Internal;
    r.error_message = e.what();
  }
  r.millis = ms_since(t0);
  return r;
}

SweepResult run_sweep(const ExperimentConfig& c, int jobs) {
  const auto t0 = std::chrono::steady_clock::now();
  SweepResult s;
  s.config = c;
  std::vector<ExperimentConfig> grid;
  if (c.sweep_v1.empty()) {
    grid.push_back(c);
  } else {
    for (const int64_t v : c.sweep_v1) {
      ExperimentConfig p = c;
      p.sweep_v1.clear();
      p.v1 = v;
      p.v2.reset();
      grid.push_back(p);
    }
  }
  s.points.resize(grid.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i; (i = next.fetch_add(1)) < grid.size();) s.points[i] = run_check(grid[i]);
  };
  const int n = std::max(1, std::min<int>(jobs, static_cast<int>(grid.size())));
  std::vector<std::thread> pool;
  for (int i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (const auto& p : s.points) {
    if (!p.ok())
      ++s.errors;
    else if (p.agree)
      ++s.agreements;
    else
      ++s.disagreements;
  }
  s.millis = ms_since(t0);
  return s;
}

namespace {

ojson config_json(const ExperimentConfig& c) {
  ojson j;
  if (!c.name.empty()) j["name"] = c.name;
  j["field"] = {{"p", c.field.p}, {"u", c.field.u}, {"e", c.field.e}, {"c", c.field.eis_const},
                {"precision", c.precision}};
  j["group"] = {{"d", c.d}, {"f", c.f}, {"q", c.q()}};
  ojson rep;
  rep["kind"] = to_string(c.kind);
  if (c.kind == RepKind::PrincipalSeries) {
    rep["dprime"] = c.dprime;
    rep["theta1"] = c.theta1;
    rep["theta2"] = c.theta2;
    rep["v1"] = c.v1;
    rep["v2"] = c.v2_value();
    rep["normalization"] = to_string(c.normalization);
  } else {
    rep["theta"] = c.theta;
    rep["nu"] = c.nu.value_or(-static_cast<int64_t>(c.field.e) * c.f);
    if (c.epsilon)
      rep["epsilon"] = *c.epsilon;
    else
      rep["epsilon"] = nullptr;
    rep["center"] = c.center;
  }
  j["rep"] = rep;
  j["engine"] = {{"max_iter", c.engine.max_iter},
                 {"min_iter", c.engine.min_iter},
                 {"closure_cap", c.engine.closure_cap},
                 {"confirm_steps", c.engine.confirm_steps}};
  return j;
}

ojson verdict_json(const Verdict& v) {
  ojson j;
  switch (v.kind) {
    case VerdictKind::Stabilized:
      j["kind"] = "Stabilized";
      j["at"] = v.at;
      break;
    case VerdictKind::DivergedPeriodic:
      j["kind"] = "DivergedPeriodic";
      j["at"] = v.at;
      j["i0"] = v.i0;
      j["j"] = v.j;
      break;
    default:
      j["kind"] = "Inconclusive";
      j["at"] = v.at;
  }
  j["text"] = v.to_string();
  return j;
}

ojson check_json(const CheckResult& r, bool timing) {
  ojson j;
  j["tool"] = "gl2d";
  j["version"] = kToolVersion;
  j["config"] = config_json(r.config);
  if (!r.ok()) {
    j["status"] = "error";
    j["error"] = {{"code", r.error_code}, {"message", r.error_message}};
    return j;
  }
  j["status"] = r.agree ? "agree" : "disagree";
  j["verdict"] = verdict_json(r.verdict);
  j["predicate"] = {{"name", predicate_name(r.config)}, {"value", r.predicate}, {"agrees", r.agree}};
  ojson trace = ojson::array();
  for (const auto& rec : r.records) {
    ojson e;
    e["i"] = rec.i;
    e["profile"] = rec.profile;
    if (rec.index)
      e["index"] = *rec.index;
    else
      e["index"] = nullptr;
    if (timing) e["millis"] = rec.millis;
    trace.push_back(std::move(e));
  }
  j["trace"] = {{"iterations", static_cast<int>(r.records.size()) - 1},
                {"monotone", r.monotone},
                {"confirmed", r.confirmed},
                {"index_increasing", r.index_increasing},
                {"final_profile", r.final_profile},
                {"records", trace}};
  j["precision"] = {{"used", r.precision_used}, {"escalations", r.precision_trail}};
  if (timing) j["timing"] = {{"millis", r.millis}};
  return j;
}

}  // namespace

std::string check_report_json(const CheckResult& r, bool timing) { return check_json(r, timing).dump(2) + "\n"; }

std::string sweep_report_json(const SweepResult& s, bool timing) {
  ojson j;
  j["tool"] = "gl2d";
  j["version"] = kToolVersion;
  j["config"] = config_json(s.config);
  j["config"]["sweep"] = {{"v1", s.config.sweep_v1}};
  j["summary"] = {{"points", s.points.size()},
                  {"agreements", s.agreements},
                  {"disagreements", s.disagreements},
                  {"errors", s.errors}};
  ojson table = ojson::array();
  ojson pts = ojson::array();
  for (const auto& p : s.points) {
    ojson row;
    row["v1"] = p.config.v1;
    row["v2"] = p.config.v2_value();
    row["verdict"] = p.ok() ? p.verdict.to_string() : "error:" + p.error_code;
    row["predicate"] = p.predicate;
    row["agrees"] = p.ok() && p.agree;
    table.push_back(std::move(row));
    pts.push_back(check_json(p, timing));
  }
  j["table"] = table;
  j["points"] = pts;
  if (timing) j["timing"] = {{"millis", s.millis}};
  return j.dump(2) + "\n";
}

std::string error_report_json(const std::string& code, const std::string& message) {
  ojson j;
  j["tool"] = "gl2d";
  j["version"] = kToolVersion;
  j["status"] = "error";
  j["error"] = {{"code", code}, {"message", message}};
  return j.dump(2) + "\n";
}

int exit_code(const CheckResult& r) {
  if (!r.ok()) return 1;
  return r.agree ? 0 : 2;
}

int exit_code(const SweepResult& s) {
  if (s.errors > 0) return 1;
  return s.disagreements > 0 ? 2 : 0;
}

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()) % 1000000);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
    out << content;
    out.flush();
    if (!out) {
      out.close();
      fs::remove(tmp);
      throw std::runtime_error("write to '" + tmp.string() + "' failed");
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw std::runtime_error("rename to '" + path + "' failed: " + ec.message());
  }
}

}  // namespace gl2d
