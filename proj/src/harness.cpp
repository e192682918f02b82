#include "fs5/harness.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "checks.hpp"
#include "fs5/error.hpp"

namespace fs5::harness {

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Flag: return "flag";
  }
  return "?";
}

const std::map<std::string, double>& default_tolerances() {
  static const std::map<std::string, double> t = {
      {"exact", 0.0},          {"float", 1e-13},      {"roundtrip", 1e-11},  {"fd", 1e-5},
      {"annihilation", 1e-4},  {"regularity", 1e-5},  {"closed", 1e-11},     {"series", 1e-10},
      {"p0", 1e-10},           {"forms", 1e-11},      {"integral", 1e-9},    {"independence", 1e-10},
      {"spectrum", 1e-10},     {"calculus", 1e-8},    {"moment", 1e-9},      {"resolvent", 1e-9},
      {"reseq", 1e-10},        {"product", 1e-8},     {"tcost", 1e-9},       {"vekua", 1e-8},
      {"vekua_fd", 1e-4},
  };
  return t;
}

double SuiteConfig::tolerance(const std::string& key) const {
  if (auto it = tol.find(key); it != tol.end()) return it->second;
  return default_tolerances().at(key);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> s = {"identities", "kernels", "integrals", "calculus",
                                             "vekua",      "structures", "all"};
  return s;
}

const std::vector<std::string>& group_names(const std::string& suite) {
  static std::map<std::string, std::vector<std::string>> cache = [] {
    std::map<std::string, std::vector<std::string>> m;
    for (const auto& g : detail::groups()) {
      m[g.suite].push_back(g.name);
      m["all"].push_back(g.name);
    }
    return m;
  }();
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
    throw Error(Errc::UnknownSuite, "unknown suite '" + suite + "'");
  return cache[suite];
}

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

std::vector<Check> run_group(const std::string& group, const SuiteConfig& cfg) {
  for (const auto& g : detail::groups()) {
    if (group != g.name) continue;
    const std::uint64_t h = fnv1a(g.name);
    std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                      static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32)};
    detail::Ctx ctx{cfg, fixtures::Rng(seq), {}};
    g.fn(ctx);
    return std::move(ctx.out);
  }
  throw Error(Errc::ConfigError, "unknown check group '" + group + "'");
}

Summary Report::summary() const {
  Summary s;
  for (const auto& c : checks) {
    if (c.status == Status::Pass) ++s.pass;
    else if (c.status == Status::Fail) ++s.fail;
    else ++s.flag;
  }
  return s;
}

Report run_suite(const SuiteConfig& cfg) {
  Report r;
  r.suite = cfg.suite;
  r.seed = cfg.seed;
  r.config = cfg;
  for (const auto& g : group_names(cfg.suite)) {
    auto c = run_group(g, cfg);
    r.checks.insert(r.checks.end(), std::make_move_iterator(c.begin()), std::make_move_iterator(c.end()));
  }
  std::stable_sort(r.checks.begin(), r.checks.end(), [](const Check& a, const Check& b) { return a.id < b.id; });
  return r;
}

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

}  // namespace

std::string emit(const Report& r, const std::string& format) {
  const Summary s = r.summary();
  if (format == "csv") {
    std::string out = "id,status,value,tol,ms\n";
    for (const auto& c : r.checks)
      out += c.id + "," + status_name(c.status) + "," + num(c.value) + "," + num(c.tol) + "," + num(c.ms) + "\n";
    return out;
  }
  if (format != "json") throw Error(Errc::ConfigError, "format must be json or csv");
  using nlohmann::ordered_json;
  ordered_json j;
  j["suite"] = r.suite;
  j["version"] = r.version;
  j["seed"] = r.seed;
  ordered_json cfg;
  cfg["nodes"] = r.config.nodes;
  cfg["dim"] = r.config.dim;
  cfg["degree_cap"] = r.config.degree_cap;
  cfg["timing"] = r.config.timing;
  ordered_json tol = ordered_json::object();
  // Effective tolerances, overrides applied.
  for (const auto& [k, v] : default_tolerances()) tol[k] = r.config.tolerance(k);
  cfg["tol"] = tol;
  j["config"] = cfg;
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks) {
    ordered_json e;
    e["id"] = c.id;
    e["status"] = status_name(c.status);
    e["value"] = c.value;
    e["tol"] = c.tol;
    e["ms"] = c.ms;
    if (!c.detail.empty()) e["detail"] = c.detail;
    checks.push_back(e);
  }
  j["checks"] = checks;
  j["summary"] = {{"pass", s.pass}, {"fail", s.fail}, {"flag", s.flag}};
  return j.dump(2) + "\n";
}

void write_report(const Report& r, const SuiteConfig& cfg) {
  const std::string text = emit(r, cfg.format);
  if (cfg.out_path.empty() || cfg.out_path == "-") {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::ofstream f(cfg.out_path, std::ios::binary);
  if (!f) throw Error(Errc::IoError, "cannot open '" + cfg.out_path + "' for writing");
  f << text;
  if (!f) throw Error(Errc::IoError, "write to '" + cfg.out_path + "' failed");
}

int exit_code(const Report& r) { return r.summary().fail == 0 ? 0 : 1; }

std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(Errc::ConfigError, "cannot read config file '" + path + "'");
  std::map<std::string, std::string> kv;
  std::string line;
  int n = 0;
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  while (std::getline(f, line)) {
    ++n;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw Error(Errc::ConfigError, path + ":" + std::to_string(n) + ": expected key=value");
    const std::string k = trim(line.substr(0, eq));
    if (!kv.emplace(k, trim(line.substr(eq + 1))).second)
      throw Error(Errc::ConfigError, path + ":" + std::to_string(n) + ": duplicate key '" + k + "'");
  }
  return kv;
}

namespace {

template <class T>
T parse_number(const std::string& key, const std::string& v) {
  std::istringstream is(v);
  T x{};
  if (!(is >> x) || !(is >> std::ws).eof()) throw Error(Errc::ConfigError, "bad value for '" + key + "': " + v);
  return x;
}

void set_tol(SuiteConfig& c, const std::string& key, const std::string& v,
             std::map<std::string, std::string>& seen) {
  if (!default_tolerances().count(key)) throw Error(Errc::ConfigError, "unknown tolerance key '" + key + "'");
  if (auto it = seen.find(key); it != seen.end() && it->second != v)
    throw Error(Errc::ConfigError, "conflicting values for tolerance '" + key + "'");
  seen[key] = v;
  const double t = parse_number<double>("tol." + key, v);
  if (!(t >= 0.0)) throw Error(Errc::ConfigError, "tolerance '" + key + "' must be non-negative");
  c.tol[key] = t;
}

void apply_key(SuiteConfig& c, const std::string& k, const std::string& v) {
  if (k == "suite") c.suite = v;
  else if (k == "seed") c.seed = parse_number<std::uint64_t>(k, v);
  else if (k == "nodes") c.nodes = parse_number<int>(k, v);
  else if (k == "dim") c.dim = parse_number<int>(k, v);
  else if (k == "degree_cap") c.degree_cap = parse_number<int>(k, v);
  else if (k == "out") c.out_path = v;
  else if (k == "format") c.format = v;
  else if (k == "timing") c.timing = (v == "1" || v == "true");
  else throw Error(Errc::ConfigError, "unknown config key '" + k + "'");
}

void validate(const SuiteConfig& c) {
  group_names(c.suite);
  if (c.nodes < 16) throw Error(Errc::ConfigError, "nodes must be at least 16");
  if (c.dim < 2 || c.dim > 16) throw Error(Errc::ConfigError, "dim must lie in [2, 16]");
  if (c.degree_cap < 1 || c.degree_cap > 12) throw Error(Errc::ConfigError, "degree_cap must lie in [1, 12]");
  if (c.format != "json" && c.format != "csv") throw Error(Errc::ConfigError, "format must be json or csv");
}

}  // namespace

std::optional<SuiteConfig> parse_config(int argc, const char* const* argv, std::ostream& help_out) {
  CLI::App app{"Run verification suites and emit a report", "verify"};
  std::string suite, out, format, config;
  std::uint64_t seed = 0;
  int nodes = 0, dim = 0, degree_cap = 0;
  std::vector<std::string> tols;
  bool timing = false;
  auto* o_suite = app.add_option("--suite", suite, "identities|kernels|integrals|calculus|vekua|structures|all");
  auto* o_seed = app.add_option("--seed", seed, "generator seed");
  auto* o_nodes = app.add_option("--nodes", nodes, "contour nodes");
  auto* o_dim = app.add_option("--dim", dim, "largest operator dimension");
  auto* o_deg = app.add_option("--degree-cap", degree_cap, "largest random polynomial degree");
  app.add_option("--tol", tols, "tolerance override key=value (repeatable)");
  auto* o_cfg = app.add_option("--config", config, "flat key=value config file");
  auto* o_out = app.add_option("--out", out, "report path (default stdout)");
  auto* o_fmt = app.add_option("--format", format, "json|csv");
  auto* o_time = app.add_flag("--timing", timing, "record per-check wall time (reports stop being byte-stable)");
  for (auto* o : {o_suite, o_seed, o_nodes, o_dim, o_deg, o_cfg, o_out, o_fmt})
    o->multi_option_policy(CLI::MultiOptionPolicy::Throw);
  o_time->multi_option_policy(CLI::MultiOptionPolicy::Throw);
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    help_out << app.help();
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw Error(Errc::ConfigError, e.what());
  }

  SuiteConfig c;
  std::map<std::string, std::string> seen;
  if (o_cfg->count()) {
    for (const auto& [k, v] : read_config_file(config)) {
      if (k.rfind("tol.", 0) == 0) set_tol(c, k.substr(4), v, seen);
      else apply_key(c, k, v);
    }
    seen.clear();
  }
  if (o_suite->count()) c.suite = suite;
  if (o_seed->count()) c.seed = seed;
  if (o_nodes->count()) c.nodes = nodes;
  if (o_dim->count()) c.dim = dim;
  if (o_deg->count()) c.degree_cap = degree_cap;
  if (o_out->count()) c.out_path = out;
  if (o_fmt->count()) c.format = format;
  if (o_time->count()) c.timing = timing;
  for (const auto& t : tols) {
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw Error(Errc::ConfigError, "--tol expects key=value, got '" + t + "'");
    set_tol(c, t.substr(0, eq), t.substr(eq + 1), seen);
  }
  validate(c);
  return c;
}

}  // namespace fs5::harness
