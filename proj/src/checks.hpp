#pragma once

#include <chrono>
#include <cmath>
#include <string>
#include <vector>

#include "fs5/fixtures.hpp"
#include "fs5/harness.hpp"

namespace fs5::harness::detail {

struct Ctx {
  const SuiteConfig& cfg;
  fixtures::Rng rng;
  std::vector<Check> out;
  std::chrono::steady_clock::time_point last = std::chrono::steady_clock::now();

  double tol(const char* key) const { return cfg.tolerance(key); }

  void record(std::string id, Status st, double value, double tol, std::string detail = {}) {
    const auto now = std::chrono::steady_clock::now();
    const double ms = cfg.timing ? std::chrono::duration<double, std::milli>(now - last).count() : 0.0;
    last = now;
    out.push_back({std::move(id), st, value, tol, ms, std::move(detail)});
  }
  // Pass iff value <= tol; NaN fails.
  void le(std::string id, double value, double tol) {
    record(std::move(id), value <= tol ? Status::Pass : Status::Fail, value, tol);
  }
  void truth(std::string id, bool ok) { record(std::move(id), ok ? Status::Pass : Status::Fail, ok ? 0.0 : 1.0, 0.0); }
  // Transcription channel: a printed form that disagrees with the verified one is a flag, not a failure.
  void flag(std::string id, double value, double tol, std::string detail) {
    record(std::move(id), value <= tol ? Status::Pass : Status::Flag, value, tol, std::move(detail));
  }
};

using GroupFn = void (*)(Ctx&);

struct GroupDef {
  const char* name;
  const char* suite;
  GroupFn fn;
};

const std::vector<GroupDef>& groups();

}  // namespace fs5::harness::detail
