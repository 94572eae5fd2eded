#include "gl2d/config.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace gl2d {

std::string to_string(RepKind k) {
  switch (k) {
    case RepKind::PrincipalSeries:
      return "principal_series";
    case RepKind::Speh:
      return "speh";
    default:
      return "speh_tensor_sym1";
  }
}

std::string to_string(Normalization n) { return n == Normalization::Plain ? "plain" : "normalized"; }

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

int64_t parse_int(const std::string& s, int line) {
  int64_t v = 0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end || s.empty()) throw ConfigParseError(line, "expected an integer, got '" + s + "'");
  return v;
}

int parse_small(const std::string& s, int line) {
  const int64_t v = parse_int(s, line);
  if (v < -1000000 || v > 1000000) throw ConfigParseError(line, "value out of range: " + s);
  return static_cast<int>(v);
}

// "a..b", "a..b:step" or a comma separated list
std::vector<int64_t> parse_int_list(const std::string& s, int line) {
  std::vector<int64_t> out;
  const auto dots = s.find("..");
  if (dots != std::string::npos) {
    std::string rest = trim(s.substr(dots + 2));
    int64_t step = 1;
    if (const auto colon = rest.find(':'); colon != std::string::npos) {
      step = parse_int(trim(rest.substr(colon + 1)), line);
      rest = trim(rest.substr(0, colon));
    }
    const int64_t a = parse_int(trim(s.substr(0, dots)), line), b = parse_int(rest, line);
    if (step <= 0) throw ConfigParseError(line, "range step must be positive");
    if (b < a) throw ConfigParseError(line, "empty range");
    if ((b - a) / step > 10000) throw ConfigParseError(line, "range too long");
    for (int64_t x = a; x <= b; x += step) out.push_back(x);
    return out;
  }
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_int(trim(item), line));
  if (out.empty()) throw ConfigParseError(line, "empty list");
  return out;
}

}  // namespace

ExperimentConfig parse_config(const std::string& text) {
  ExperimentConfig c;
  using Setter = std::function<void(const std::string&, int)>;
  const std::map<std::string, std::map<std::string, Setter>> table = {
      {"experiment", {{"name", [&](const std::string& v, int) { c.name = v; }}}},
      {"field",
       {{"p", [&](const std::string& v, int l) { c.field.p = parse_int(v, l); }},
        {"u", [&](const std::string& v, int l) { c.field.u = parse_small(v, l); }},
        {"e", [&](const std::string& v, int l) { c.field.e = parse_small(v, l); }},
        {"c", [&](const std::string& v, int l) { c.field.eis_const = parse_small(v, l); }},
        {"precision", [&](const std::string& v, int l) { c.precision = parse_small(v, l); }}}},
      {"group",
       {{"d", [&](const std::string& v, int l) { c.d = parse_small(v, l); }},
        {"f", [&](const std::string& v, int l) { c.f = parse_small(v, l); }}}},
      {"rep",
       {{"kind",
         [&](const std::string& v, int l) {
           if (v == "principal_series")
             c.kind = RepKind::PrincipalSeries;
           else if (v == "speh")
             c.kind = RepKind::Speh;
           else if (v == "speh_tensor_sym1")
             c.kind = RepKind::SpehSym1;
           else
             throw ConfigParseError(l, "unknown rep kind '" + v + "'");
         }},
        {"dprime", [&](const std::string& v, int l) { c.dprime = parse_small(v, l); }},
        {"theta1", [&](const std::string& v, int l) { c.theta1 = parse_int(v, l); }},
        {"theta2", [&](const std::string& v, int l) { c.theta2 = parse_int(v, l); }},
        {"v1", [&](const std::string& v, int l) { c.v1 = parse_int(v, l); }},
        {"v2", [&](const std::string& v, int l) { c.v2 = parse_int(v, l); }},
        {"normalization",
         [&](const std::string& v, int l) {
           if (v == "plain")
             c.normalization = Normalization::Plain;
           else if (v == "normalized")
             c.normalization = Normalization::Normalized;
           else
             throw ConfigParseError(l, "normalization must be plain or normalized");
         }},
        {"theta", [&](const std::string& v, int l) { c.theta = parse_int(v, l); }},
        {"nu", [&](const std::string& v, int l) { c.nu = parse_int(v, l); }},
        {"epsilon", [&](const std::string& v, int l) { c.epsilon = parse_int(v, l); }},
        {"center", [&](const std::string& v, int l) { c.center = parse_int(v, l); }}}},
      {"engine",
       {{"max_iter", [&](const std::string& v, int l) { c.engine.max_iter = parse_small(v, l); }},
        {"min_iter", [&](const std::string& v, int l) { c.engine.min_iter = parse_small(v, l); }},
        {"closure_cap", [&](const std::string& v, int l) { c.engine.closure_cap = parse_small(v, l); }},
        {"confirm_steps", [&](const std::string& v, int l) { c.engine.confirm_steps = parse_small(v, l); }}}},
      {"report", {{"path", [&](const std::string& v, int) { c.report_path = v; }}}},
      {"sweep", {{"v1", [&](const std::string& v, int l) { c.sweep_v1 = parse_int_list(v, l); }}}},
  };

  std::istringstream in(text);
  std::string raw, section;
  std::set<std::string> seen;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (const auto h = raw.find('#'); h != std::string::npos) raw.resize(h);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigParseError(lineno, "unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      if (!table.count(section)) throw ConfigParseError(lineno, "unknown section [" + section + "]");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigParseError(lineno, "expected key = value");
    if (section.empty()) throw ConfigParseError(lineno, "key outside of any section");
    const std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
    const auto& keys = table.at(section);
    const auto it = keys.find(key);
    if (it == keys.end()) throw ConfigParseError(lineno, "unknown key '" + key + "' in [" + section + "]");
    if (!seen.insert(section + "." + key).second) throw ConfigParseError(lineno, "duplicate key '" + key + "'");
    it->second(val, lineno);
  }
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigParseError(0, "cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str());
}

void validate_config(const ExperimentConfig& c) {
  auto bad = [](const std::string& m) { throw ConfigError(m); };
  try {
    LocalField::validate(c.field);
  } catch (const std::exception& e) {
    bad(std::string("field: ") + e.what());
  }
  if (c.precision < 2) bad("precision must be at least 2");
  if (c.d < 1 || c.f < 1) bad("d and f must be positive");
  if (c.field.u % (c.d * c.f) != 0) bad("u must be a multiple of d*f");
  if (c.engine.max_iter < 1) bad("max_iter must be at least 1");
  if (c.engine.closure_cap < 1) bad("closure_cap must be positive");
  if (c.engine.confirm_steps < 0 || c.engine.min_iter < 0) bad("engine counts must be nonnegative");

  switch (c.kind) {
    case RepKind::PrincipalSeries: {
      if (c.dprime < 1 || c.d % c.dprime != 0) bad("d' must divide d");
      const std::vector<int64_t> vs = c.sweep_v1.empty() ? std::vector<int64_t>{c.v1} : c.sweep_v1;
      for (const int64_t v : vs) {
        if ((v * c.dprime) % c.d != 0) bad("v1 * d' must be divisible by d (uniformizer value pi^{v1 d'/d})");
        if (!c.sweep_v1.empty() || !c.v2) continue;
        if (v + *c.v2 != 0) bad("central character must be a unit: v1 + v2 = 0");
        if ((*c.v2 * c.dprime) % c.d != 0) bad("v2 * d' must be divisible by d");
      }
      if (c.normalization == Normalization::Normalized &&
          (static_cast<int64_t>(c.field.e) * c.f * c.d * c.dprime) % 2 != 0)
        bad("normalized induction needs e*f*d*d' even");
      break;
    }
    case RepKind::Speh:
    case RepKind::SpehSym1:
      if (c.d != 2) bad("Speh models need d = 2");
      if (c.kind == RepKind::SpehSym1 && c.field.e % 4 != 0) bad("the Sym^1 twist needs 4 | e");
      if (c.center % c.field.p == 0) bad("center must be a unit");
      if (c.epsilon && *c.epsilon % c.field.p == 0) bad("epsilon must be a unit");
      if (!c.sweep_v1.empty()) bad("[sweep] applies to principal series only");
      break;
  }
}

}  // namespace gl2d
