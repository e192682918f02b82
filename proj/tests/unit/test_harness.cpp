#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "fs5/error.hpp"
#include "fs5/harness.hpp"

using namespace fs5;
using namespace fs5::harness;

namespace {

std::optional<SuiteConfig> parse(std::vector<const char*> args) {
  args.insert(args.begin(), "verify");
  std::ostringstream help;
  return parse_config(static_cast<int>(args.size()), args.data(), help);
}

Errc code_of(std::vector<const char*> args) {
  try {
    parse(std::move(args));
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::IoError;  // sentinel: nothing thrown
}

std::string temp_file(const std::string& name, const std::string& body) {
  const std::string path = "fs5_test_" + name;
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST_CASE("defaults") {
  const auto c = parse({});
  REQUIRE(c);
  CHECK(c->suite == "all");
  CHECK(c->seed == 1);
  CHECK(c->nodes == 256);
  CHECK(c->format == "json");
  CHECK(c->tolerance("fd") == 1e-5);
}

TEST_CASE("populated config from flags") {
  const auto c = parse({"--suite", "kernels", "--seed", "42", "--nodes", "256", "--out", "r.json", "--tol", "fd=2e-5"});
  REQUIRE(c);
  CHECK(c->suite == "kernels");
  CHECK(c->seed == 42);
  CHECK(c->out_path == "r.json");
  CHECK(c->tolerance("fd") == 2e-5);
}

TEST_CASE("configuration errors") {
  CHECK(code_of({"--suite", "kernels", "--suite", "vekua"}) == Errc::ConfigError);
  CHECK(code_of({"--tol", "fd=1e-3", "--tol", "fd=1e-4"}) == Errc::ConfigError);
  CHECK(code_of({"--tol", "nonsense=1"}) == Errc::ConfigError);
  CHECK(code_of({"--bogus", "1"}) == Errc::ConfigError);
  CHECK(code_of({"--suite", "nope"}) == Errc::UnknownSuite);
  CHECK(code_of({"--nodes", "4"}) == Errc::ConfigError);
  CHECK(code_of({"--format", "xml"}) == Errc::ConfigError);
}

TEST_CASE("help prints and yields no config") { CHECK_FALSE(parse({"--help"})); }

TEST_CASE("config file with command-line precedence") {
  const auto path = temp_file("ok.cfg", "# comment\nsuite = vekua\nseed = 9\ntol.fd = 3e-5\nnodes=128\n");
  auto c = parse({"--config", path.c_str(), "--seed", "10"});
  REQUIRE(c);
  CHECK(c->suite == "vekua");
  CHECK(c->seed == 10);
  CHECK(c->nodes == 128);
  CHECK(c->tolerance("fd") == 3e-5);
  c = parse({"--config", path.c_str(), "--tol", "fd=4e-5"});
  CHECK(c->tolerance("fd") == 4e-5);

  const auto bad = temp_file("bad.cfg", "colour = blue\n");
  CHECK(code_of({"--config", bad.c_str()}) == Errc::ConfigError);
  const auto dup = temp_file("dup.cfg", "seed = 1\nseed = 2\n");
  CHECK(code_of({"--config", dup.c_str()}) == Errc::ConfigError);
  CHECK(code_of({"--config", "fs5_test_missing.cfg"}) == Errc::ConfigError);
  for (const char* f : {"fs5_test_ok.cfg", "fs5_test_bad.cfg", "fs5_test_dup.cfg"}) std::remove(f);
}

TEST_CASE("empty report") {
  Report r;
  r.suite = "identities";
  const auto j = nlohmann::json::parse(emit(r, "json"));
  CHECK(j["checks"].empty());
  CHECK(j["summary"]["pass"] == 0);
  CHECK(j["summary"]["fail"] == 0);
  CHECK(j["summary"]["flag"] == 0);
  CHECK(exit_code(r) == 0);
}

TEST_CASE("exit code contract") {
  Report r;
  r.checks.push_back({"a", Status::Pass, 0, 0, 0, {}});
  r.checks.push_back({"b", Status::Flag, 1, 0, 0, "x"});
  CHECK(exit_code(r) == 0);
  r.checks.push_back({"c", Status::Fail, 1, 0, 0, {}});
  CHECK(exit_code(r) == 1);
}

TEST_CASE("identities suite") {
  SuiteConfig c;
  c.suite = "identities";
  c.seed = 7;
  const Report r = run_suite(c);
  CHECK(r.checks.size() >= 90);
  CHECK(r.summary().fail == 0);
  CHECK(std::is_sorted(r.checks.begin(), r.checks.end(), [](const Check& a, const Check& b) { return a.id < b.id; }));

  const std::string csv = emit(r, "csv");
  CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(r.checks.size()) + 1);
  CHECK(csv.rfind("id,status,value,tol,ms\n", 0) == 0);

  const auto j = nlohmann::json::parse(emit(r, "json"));
  CHECK(j["suite"] == "identities");
  CHECK(j["seed"] == 7);
  CHECK(j["version"] == kVersion);
  CHECK(j["checks"].size() == r.checks.size());
  CHECK(j["summary"]["pass"] == r.summary().pass);
}

TEST_CASE("reports are deterministic") {
  SuiteConfig c;
  c.suite = "structures";
  CHECK(emit(run_suite(c), "json") == emit(run_suite(c), "json"));
  c.suite = "kernels";
  c.seed = 3;
  CHECK(emit(run_suite(c), "csv") == emit(run_suite(c), "csv"));
}

TEST_CASE("groups are seeded independently of the suite they run in") {
  SuiteConfig c;
  c.seed = 5;
  const auto alone = run_group("slice", c);
  c.suite = "identities";
  const Report r = run_suite(c);
  for (const auto& a : alone) {
    const auto it = std::find_if(r.checks.begin(), r.checks.end(), [&](const Check& b) { return b.id == a.id; });
    REQUIRE(it != r.checks.end());
    CHECK(it->value == a.value);
  }
}

TEST_CASE("structures suite lists the Dirac chains") {
  SuiteConfig c;
  c.suite = "structures";
  const Report r = run_suite(c);
  int dirac = 0, flags = 0;
  for (const auto& k : r.checks) {
    if (k.id.rfind("structure.dirac.", 0) == 0 && k.id.find(".rule") == std::string::npos) ++dirac;
    if (k.status == Status::Flag) {
      ++flags;
      CHECK_FALSE(k.detail.empty());
    }
  }
  CHECK(dirac == 6);
  CHECK(flags == 1);
  CHECK(r.summary().fail == 0);
}

TEST_CASE("unwritable output path") {
  Report r;
  SuiteConfig c;
  c.out_path = "/nonexistent_dir_fs5/r.json";
  CHECK_THROWS_AS(write_report(r, c), Error);
}
