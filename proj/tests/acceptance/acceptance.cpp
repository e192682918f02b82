// One line per acceptance criterion. Each criterion runs its own check groups at the
// default configuration and passes when none of its selected checks fails and the
// runtime budget (where one applies) holds.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "fs5/harness.hpp"

using namespace fs5::harness;

namespace {

struct Criterion {
  int n;
  const char* what;
  std::vector<const char*> groups;
  std::vector<const char*> prefixes;
  double budget_s;  // 0: none
  const char* note = "";
};

bool selected(const Check& c, const Criterion& k) {
  for (const char* p : k.prefixes)
    if (c.id.rfind(p, 0) == 0) return true;
  return false;
}

}  // namespace

int main() {
  const std::vector<Criterion> crit = {
      {1, "monomial tables equal engine images exactly, with anchors", {"table", "anchor"}, {"table.", "anchor."}, 1.0},
      {2, "closed-form sums exact for 3 <= m <= 200", {"sum"}, {"sum."}, 0.1},
      {3, "D(Delta^2 P) == 0 for 50 random slice polynomials", {"fueter_sce"}, {"fueter_sce."}, 0},
      {4, "fine kernels and F5 against finite differences", {"kernel_fd"}, {"kernel.fd."}, 30.0},
      {5, "kernel series against closed forms", {"kernel_series"}, {"kernel.series."}, 0},
      {6,
       "integral representations, J and contour independence, anchors",
       {"integral_rep", "integral_indep", "integral_anchor"},
       {"integral.rep.", "integral.J_independence.", "integral.radius_independence.", "integral.anchor.F5_x4",
        "integral.anchor.DeltaD_x4"},
       0},
      {7, "p0 residual, scalar and operator", {"kernel_p0", "p0_operator"}, {"p0."}, 0},
      {8,
       "operator calculi against exact substitution, moments, Delta^2(s^4)(T)",
       {"calculus_oracle", "calculus_moment"},
       {"calculus.oracle.", "calculus.moment.", "calculus.anchor.delta2_s4"},
       0},
      {9, "resolvent series and the two-sided inverse identity", {"resolvent"}, {"resolvent."}, 0},
      {10, "F-resolvent equation", {"reseq"}, {"reseq.same_slice.", "reseq.cross_slice."}, 0},
      {11, "product rule with scalar anchor", {"product"}, {"product."}, 0},
      {12, "insensitivity to low-degree perturbations", {"tcost"}, {"tcost."}, 0},
      {13,
       "fine-structure enumeration",
       {"structure"},
       {"structure."},
       0,
       "(Dbar,Dbar,D,D) third label: displayed AH, image of Dbar Dbar D lies in AP2 and not in AH"},
      {14, "S-spectrum against joint eigenvalues", {"spectrum"}, {"spectrum."}, 0},
  };

  const SuiteConfig cfg;
  int failed = 0;
  const auto t_all = std::chrono::steady_clock::now();
  for (const auto& k : crit) {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<Check> checks;
    for (const char* g : k.groups) {
      auto c = run_group(g, cfg);
      checks.insert(checks.end(), c.begin(), c.end());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    int n = 0, bad = 0, flags = 0;
    std::string first_bad;
    for (const auto& c : checks) {
      if (!selected(c, k)) continue;
      ++n;
      if (c.status == Status::Fail) {
        if (!bad) first_bad = c.id;
        ++bad;
      }
      if (c.status == Status::Flag) ++flags;
    }
    const bool over = k.budget_s > 0 && secs >= k.budget_s;
    const bool ok = n > 0 && bad == 0 && !over;
    failed += !ok;
    std::printf("%s criterion %2d: %s [%d checks, %d fail, %d flag, %.3f s", ok ? "PASS" : "FAIL", k.n, k.what, n, bad,
                flags, secs);
    if (k.budget_s > 0) std::printf(" < %.1f s", k.budget_s);
    std::printf("]");
    if (!first_bad.empty()) std::printf(" first failure %s", first_bad.c_str());
    if (over) std::printf(" over budget");
    if (*k.note) std::printf(" note: %s", k.note);
    std::printf("\n");
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t_all).count();
  std::printf("%d of %zu criteria pass, %.2f s total\n", int(crit.size()) - failed, crit.size(), total);
  return failed ? 1 : 0;
}
