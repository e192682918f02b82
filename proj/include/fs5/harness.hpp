#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fs5::harness {

inline constexpr const char* kVersion = "1.0.0";

enum class Status { Pass, Fail, Flag };
const char* status_name(Status s);

struct Check {
  std::string id;
  Status status = Status::Pass;
  double value = 0.0;
  double tol = 0.0;
  double ms = 0.0;
  // Both computed sides of a transcription flag.
  std::string detail;
};

struct SuiteConfig {
  std::string suite = "all";
  std::uint64_t seed = 1;
  std::map<std::string, double> tol;
  int nodes = 256;
  int dim = 6;
  int degree_cap = 8;
  std::string out_path;
  std::string format = "json";
  bool timing = false;

  double tolerance(const std::string& key) const;
};

// Tolerance keys accepted by --tol and the config file, with their defaults.
const std::map<std::string, double>& default_tolerances();
const std::vector<std::string>& suite_names();
// Check groups: each belongs to one suite and seeds its own generator from (seed, name).
const std::vector<std::string>& group_names(const std::string& suite);
std::vector<Check> run_group(const std::string& group, const SuiteConfig& cfg);

struct Summary {
  int pass = 0;
  int fail = 0;
  int flag = 0;
};

struct Report {
  std::string suite;
  std::string version = kVersion;
  std::uint64_t seed = 0;
  SuiteConfig config;
  std::vector<Check> checks;
  Summary summary() const;
};

Report run_suite(const SuiteConfig& cfg);
std::string emit(const Report& r, const std::string& format);
void write_report(const Report& r, const SuiteConfig& cfg);
int exit_code(const Report& r);

// Flat key=value lines; '#' starts a comment.
std::map<std::string, std::string> read_config_file(const std::string& path);
// Returns nullopt after printing help. CLI flags override file values override defaults.
std::optional<SuiteConfig> parse_config(int argc, const char* const* argv, std::ostream& help_out);

}  // namespace fs5::harness
