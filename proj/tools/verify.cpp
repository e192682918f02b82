#include <cstdio>
#include <iostream>

#include "fs5/error.hpp"
#include "fs5/harness.hpp"

int main(int argc, char** argv) {
  using namespace fs5::harness;
  try {
    const auto cfg = parse_config(argc, argv, std::cout);
    if (!cfg) return 0;
    std::cerr << "verify: suite " << cfg->suite << ", seed " << cfg->seed << "\n";
    const Report r = run_suite(*cfg);
    write_report(r, *cfg);
    const Summary s = r.summary();
    std::cerr << "verify: " << s.pass << " pass, " << s.fail << " fail, " << s.flag << " flag\n";
    for (const auto& c : r.checks)
      if (c.status == Status::Fail) std::cerr << "  FAIL " << c.id << " value " << c.value << " tol " << c.tol << "\n";
    return exit_code(r);
  } catch (const fs5::Error& e) {
    std::cerr << "verify: " << e.what() << "\n";
    return 2;
  }
}
