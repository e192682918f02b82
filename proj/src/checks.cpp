#include "checks.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <numbers>
#include <set>

#include "fs5/contour.hpp"
#include "fs5/error.hpp"
#include "fs5/fueter_ops.hpp"
#include "fs5/kernels.hpp"
#include "fs5/op_calculus.hpp"
#include "fs5/slice_poly.hpp"

namespace fs5::harness::detail {

namespace {

using LD = long double;
using fixtures::Rng;
using fixtures::uniform;

const char* side_tag(Side s) { return s == Side::Left ? "L" : "R"; }

std::string idx(int i) {
  char b[8];
  std::snprintf(b, sizeof b, "%02d", i);
  return b;
}

std::string sci(double v) {
  char b[32];
  std::snprintf(b, sizeof b, "%.6e", v);
  return b;
}

template <class S>
double coeff_gap(const CanonicalPoly<S>& a, const CanonicalPoly<S>& b) {
  const CanonicalPoly<S> d = a - b;
  double m = 0;
  for (const auto& [k, c] : d.terms()) m = std::max(m, static_cast<double>(c.norm_inf()));
  return m;
}

CanonicalPoly<double> constant_poly(double c, Side side = Side::Left) {
  CanonicalPoly<double> p(side);
  p.add(0, 0, MV(c));
  return p;
}

SlicePolynomial<double> xm(int m, Side side = Side::Left) {
  return SlicePolynomial<double>::monomial(m, MV(1.0), side);
}

double rel(double err, double ref) { return err / std::max(1.0, ref); }

// (s, x) with |s| in [1, 2] (or fixed) and |x| = frac |s|.
std::pair<PV, PV> kernel_pair(Rng& g, double frac_lo, double frac_hi, double s_norm = 0.0) {
  const PV s = fixtures::with_norm(fixtures::random_paravector(g), s_norm > 0 ? s_norm : uniform(g, 1.0, 2.0));
  const PV x = fixtures::with_norm(fixtures::random_paravector(g), uniform(g, frac_lo, frac_hi) * s.norm());
  return {s, x};
}

constexpr std::array<Side, 2> kSides = {Side::Left, Side::Right};

std::vector<KernelKind> all_kinds() {
  std::vector<KernelKind> k(kFineKinds.begin(), kFineKinds.end());
  k.push_back(KernelKind::Cauchy);
  return k;
}

template <class F>
bool throws(Errc code, F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

// ---------------------------------------------------------------- identities

void g_clifford(Ctx& c) {
  double ex = 0, fl = 0;
  for (int i = 0; i < 200; ++i) {
    const MV a = fixtures::random_int_mv(c.rng), b = fixtures::random_int_mv(c.rng), d = fixtures::random_int_mv(c.rng);
    ex = std::max(ex, ((a * b) * d - a * (b * d)).norm_inf());
    const MV x = fixtures::random_mv(c.rng), y = fixtures::random_mv(c.rng), z = fixtures::random_mv(c.rng);
    const MV p = (x * y) * z;
    fl = std::max(fl, rel((p - x * (y * z)).norm_inf(), p.norm_inf()));
  }
  c.le("clifford.assoc.integer", ex, c.tol("exact"));
  c.le("clifford.assoc.float", fl, c.tol("float"));

  double ac = 0;
  for (int l = 1; l <= 5; ++l) {
    ac = std::max(ac, (MV::e(l) * MV::e(l) + MV(1.0)).norm_inf());
    for (int m = 1; m <= 5; ++m)
      if (l != m) ac = std::max(ac, (MV::e(l) * MV::e(m) + MV::e(m) * MV::e(l)).norm_inf());
  }
  c.le("clifford.anticommute", ac, c.tol("exact"));

  const auto [s1, b1] = blade_product(1, 1);
  const auto [s2, b2] = blade_product(1, 2);
  const auto [s3, b3] = blade_product(3, 2);
  c.truth("clifford.blade.e1e1", s1 == -1 && b1 == 0);
  c.truth("clifford.blade.e1e2", s2 == 1 && b2 == 3);
  c.truth("clifford.blade.e12e2", s3 == -1 && b3 == 1);

  double np = 0, inv = 0;
  for (int i = 0; i < 100; ++i) {
    const PV x = fixtures::random_paravector(c.rng);
    np = std::max(np, rel((x * conj(x) - MV(x.norm2())).norm_inf(), x.norm2()));
    np = std::max(np, rel((conj(x) * x - MV(x.norm2())).norm_inf(), x.norm2()));
    inv = std::max(inv, (x * inverse(x) - MV(1.0)).norm_inf());
  }
  c.le("clifford.norm_product", np, c.tol("float"));
  c.le("clifford.inverse", inv, c.tol("float"));
  c.truth("clifford.inverse.zero", throws(Errc::ZeroParavector, [] { inverse(PV()); }));
  c.truth("clifford.embed.bad_unit", throws(Errc::NotImaginaryUnit, [] { embed(1.0, 1.0, PV::basis(1, 2.0)); }));
  const auto d = axis_decompose(PV(std::array<double, 6>{0, 3, 4, 0, 0, 0}));
  c.truth("clifford.axis.345", d.r == 5.0 && d.omega && std::abs((*d.omega)[1] - 0.6) < 1e-15);
}

void g_slice(Ctx& c) {
  for (int t = 0; t < 10; ++t) {
    const Side side = t % 2 ? Side::Right : Side::Left;
    const auto P = fixtures::random_slice_poly(c.rng, 10, side);
    const CanonicalPoly<double> C = to_canonical(P);
    double e = 0;
    for (int i = 0; i < 20; ++i) {
      const PV x = fixtures::with_norm(fixtures::random_paravector(c.rng), uniform(c.rng, 0.1, 2.0));
      const MV v = eval_slice_poly(P, x);
      e = std::max(e, rel((canonical_eval(C, x) - v).norm_inf(), v.norm_inf()));
    }
    c.le("slice.roundtrip.p" + idx(t), e, c.tol("roundtrip"));
  }
  const PV x(std::array<double, 6>{0.5, 0, 0.5, 0, 0, 0});
  c.le("slice.eval.x2", (eval_slice_poly(xm(2), x) - MV::e(2) * 0.5).norm_inf(), c.tol("float"));
  c.le("slice.eval.right_coeff",
       (eval_slice_poly(SlicePolynomial<double>::monomial(1, MV::e(1)), PV::basis(2)) - MV::e(2) * MV::e(1)).norm_inf(),
       c.tol("exact"));

  double eo = 0, st = 0;
  for (int t = 0; t < 5; ++t) {
    const auto P = fixtures::random_slice_poly(c.rng, 8, Side::Left, false, true);
    const StemPair<double> S = intrinsic_stem(P);
    for (int i = 0; i < 10; ++i) {
      const double u = uniform(c.rng, -1, 1), v = uniform(c.rng, 0.05, 1);
      eo = std::max(eo, (S.alpha(u, v) - S.alpha(u, -v)).norm_inf());
      eo = std::max(eo, (S.beta(u, v) + S.beta(u, -v)).norm_inf());
      const PV J = fixtures::random_unit(c.rng);
      const PV y = embed(u, v, J);
      st = std::max(st, rel((extend_stem(S, y) - eval_slice_poly(P, y)).norm_inf(), eval_slice_poly(P, y).norm_inf()));
    }
  }
  c.le("slice.stem.even_odd", eo, c.tol("exact"));
  c.le("slice.stem.extension", st, c.tol("roundtrip"));
  c.truth("slice.stem.axis_singularity", throws(Errc::AxisSingularity, [] {
            StemPair<double> s{[](double, double) { return MV(1.0); }, [](double, double) { return MV(1.0); }};
            extend_stem(s, PV(2.0));
          }));
}

void g_table(Ctx& c) {
  for (KernelKind k : kTabulatedKinds)
    for (Side side : kSides)
      for (int m = 0; m <= 12; ++m) {
        const auto table = to_canonical(monomial_image<double>(k, m, side));
        const auto engine = apply_word(word_of(k), xm(m, side));
        c.le(std::string("table.") + kind_name(k) + "." + side_tag(side) + ".m" + idx(m), coeff_gap(table, engine),
             c.tol("exact"));
      }
}

void g_anchor(Ctx& c) {
  struct A {
    const char* id;
    OpWord w;
    int m;
    double value;
  };
  using L = Letter;
  const std::vector<A> anchors = {
      {"D_x", {L::D}, 1, -4},
      {"Delta_x", {L::Delta}, 1, 0},
      {"Delta_x2", {L::Delta}, 2, -8},
      {"D2_x2", {L::D, L::D}, 2, -8},
      {"DeltaD_x3", {L::Delta, L::D}, 3, 16},
      {"Dbar_x", {L::Dbar}, 1, 6},
      {"Dbar2_x2", {L::Dbar, L::Dbar}, 2, 32},
      {"DeltaDbar_x3", {L::Delta, L::Dbar}, 3, -64},
      {"Delta2_x4", {L::Delta, L::Delta}, 4, 64},
      {"Delta2_x3", {L::Delta, L::Delta}, 3, 0},
  };
  for (const auto& a : anchors) {
    const auto img = apply_word(a.w, xm(a.m));
    c.le(std::string("anchor.") + a.id, coeff_gap(img, a.value == 0 ? CanonicalPoly<double>() : constant_poly(a.value)),
         c.tol("exact"));
  }
  CanonicalPoly<double> xv, x0, mix;
  xv.add(0, 1, MV(1.0));
  x0.add(1, 0, MV(1.0));
  mix.add(2, 0, MV(1.0));
  mix.add(0, 2, MV(1.0));
  c.le("anchor.D_xvec", coeff_gap(apply_operator(BasicOp::D, xv), constant_poly(-5)), c.tol("exact"));
  c.le("anchor.Dbar_x0", coeff_gap(apply_operator(BasicOp::Dbar, x0), constant_poly(1)), c.tol("exact"));
  c.le("anchor.Delta_x0sq_plus_xvecsq", coeff_gap(apply_operator(BasicOp::Delta, mix), constant_poly(-8)),
       c.tol("exact"));
  // Delta^2 x^4 through the intermediate -8[3x^2 + 2x xbar + xbar^2].
  XBarPolynomial<double> mid;
  mid.terms = {{2, 0, MV(-24.0)}, {1, 1, MV(-16.0)}, {0, 2, MV(-8.0)}};
  c.le("anchor.Delta_x4_intermediate", coeff_gap(apply_word({L::Delta}, xm(4)), to_canonical(mid)), c.tol("exact"));
}

void g_sum(Ctx& c) {
  int bad1 = 0, bad2 = 0;
  for (std::int64_t m = 3; m <= 200; ++m) {
    std::int64_t s1 = 0, s2 = 0;
    for (std::int64_t k = 1; k <= m - 2; ++k) {
      s1 += (m - k - 1) * k;
      s2 += (m - k - 1) * (m + k);
    }
    bad1 += s1 * 6 != m * (m - 1) * (m - 2);
    bad2 += s2 * 3 != 2 * m * (m - 1) * (m - 2);
  }
  c.le("sum.first", bad1, c.tol("exact"));
  c.le("sum.second", bad2, c.tol("exact"));
}

void g_fueter_sce(Ctx& c) {
  const OpWord w = {Letter::D, Letter::Delta, Letter::Delta};
  for (int t = 0; t < 50; ++t) {
    std::uniform_int_distribution<int> deg(0, 10);
    const auto P = fixtures::random_slice_poly(c.rng, deg(c.rng), t % 2 ? Side::Right : Side::Left, true);
    const auto img = apply_word(w, P);
    c.le("fueter_sce.p" + idx(t), static_cast<double>(img.terms().size()), c.tol("exact"));
  }
}

void g_commute(Ctx& c) {
  for (int t = 0; t < 50; ++t) {
    std::uniform_int_distribution<int> deg(0, 8);
    const auto P = fixtures::random_slice_poly(c.rng, deg(c.rng), t % 2 ? Side::Right : Side::Left, true);
    const auto a = apply_word({Letter::D, Letter::Dbar}, P);
    const auto b = apply_word({Letter::Dbar, Letter::D}, P);
    const auto l = apply_word({Letter::Delta}, P);
    c.le("commute.p" + idx(t), std::max(coeff_gap(a, b), coeff_gap(a, l)), c.tol("exact"));
  }
}

CanonicalPoly<double> times_x(const CanonicalPoly<double>& f) {
  CanonicalPoly<double> r(f.side());
  for (const auto& [k, v] : f.terms()) {
    r.add(k.first + 1, k.second, v);
    r.add(k.first, k.second + 1, v);
  }
  return r;
}

void g_laplace_x(Ctx& c) {
  for (int m = 0; m <= 8; ++m) {
    const auto f = to_canonical(SlicePolynomial<double>::monomial(m, fixtures::random_int_mv(c.rng)));
    const auto lhs = apply_operator(BasicOp::Delta, times_x(f));
    auto rhs = times_x(apply_operator(BasicOp::Delta, f));
    rhs += apply_operator(BasicOp::D, f) * 2.0;
    c.le("laplace_x.m" + idx(m), coeff_gap(lhs, rhs), c.tol("exact"));
  }
}

void g_classify(Ctx& c) {
  const auto all = classify_space(constant_poly(3.0));
  c.truth("classify.constant", all.size() == kAllSpaces.size());
  XBarPolynomial<double> xb;
  xb.terms = {{0, 1, MV(1.0)}};
  const auto b = classify_space(to_canonical(xb));
  c.truth("classify.xbar", b.count(FineSpace::AH) && b.count(FineSpace::AP2) && !b.count(FineSpace::AM));
  const auto x4 = classify_space(xm(4));
  c.truth("classify.x4", x4 == std::set<FineSpace>{FineSpace::SH});

  int bad = 0;
  const Letter letters[] = {Letter::D, Letter::Dbar, Letter::Delta};
  std::uniform_int_distribution<int> len(0, 4), pick(0, 2), deg(0, 8);
  for (int t = 0; t < 30; ++t) {
    OpWord w;
    for (int i = len(c.rng); i > 0; --i) w.push_back(letters[pick(c.rng)]);
    const auto f = apply_word(w, fixtures::random_slice_poly(c.rng, deg(c.rng), Side::Left, true));
    const auto s = classify_space(f);
    auto in = [&](FineSpace x) { return s.count(x) > 0; };
    if (in(FineSpace::AM) && !in(FineSpace::AH)) ++bad;
    if (in(FineSpace::AH) && !in(FineSpace::ABH)) ++bad;
    if (in(FineSpace::AM) && !in(FineSpace::AP2)) ++bad;
    if (in(FineSpace::AP2) && !in(FineSpace::AP3)) ++bad;
  }
  c.le("classify.nesting", bad, c.tol("exact"));
}

// ---------------------------------------------------------------- kernels

// Kernels are homogeneous under (s, x) -> (l s, l x), so the relative error depends only on
// x / |s| and the direction of s. Fixing |s| = 1 keeps the fourth differences at h = 1e-3 above
// long double cancellation.
void g_kernel_fd(Ctx& c) {
  const LD h = 1e-3L;
  for (KernelKind k : kFineKinds)
    for (Side side : kSides) {
      double worst = 0;
      for (int i = 0; i < 30; ++i) {
        const auto [sd, xd] = kernel_pair(c.rng, 0.05, 0.5, 1.0);
        const Paravector<LD> s = sd.cast<LD>(), x = xd.cast<LD>();
        ParaFn<LD> f = [&](const Paravector<LD>& y) { return cauchy_kernel(side, CauchyForm::II, s, y); };
        const Multivector<LD> fd = fd_apply(word_of(k), f, x, h, side);
        const Multivector<LD> K = fine_kernel(k, side, s, x);
        worst = std::max(worst, static_cast<double>((fd - K).norm() / K.norm()));
      }
      c.le(std::string("kernel.fd.") + kind_name(k) + "." + side_tag(side), worst, c.tol("fd"));
    }
}

void g_kernel_series(Ctx& c) {
  for (KernelKind k : all_kinds())
    for (Side side : kSides) {
      double worst = 0;
      for (int i = 0; i < 10; ++i) {
        const auto [s, x] = kernel_pair(c.rng, 0.3, 0.3);
        const MV K = fine_kernel(k, side, s, x);
        worst = std::max(worst, (fine_kernel_series(k, side, s, x, 60) - K).norm() / K.norm());
      }
      c.le(std::string("kernel.series.") + kind_name(k) + "." + side_tag(side), worst, c.tol("series"));
    }
  const MV g = fine_kernel_series(KernelKind::Cauchy, Side::Left, PV(2.0), PV(0.5), 40);
  c.le("kernel.series.anchor.geometric", (g - MV(2.0 / 3.0)).norm_inf(), 1e-12);
  c.truth("kernel.series.outside_disk",
          throws(Errc::OutsideConvergenceDisk, [] { fine_kernel_series(KernelKind::D, Side::Left, PV(1.0), PV(1.0), 10); }));
}

void g_kernel_closed(Ctx& c) {
  for (KernelKind k : kFineKinds)
    for (Side side : kSides) {
      double worst = 0;
      for (int i = 0; i < 10; ++i) {
        const auto [s, x] = kernel_pair(c.rng, 0.05, 0.9);
        const MV K = fine_kernel(k, side, s, x);
        worst = std::max(worst, (fine_kernel_via_f5(k, side, s, x) - K).norm() / K.norm());
      }
      c.le(std::string("kernel.viaf5.") + kind_name(k) + "." + side_tag(side), worst, c.tol("closed"));
    }

  double f = 0, lr = 0;
  for (int i = 0; i < 100; ++i) {
    const auto [s, x] = kernel_pair(c.rng, 0.05, 1.5);
    for (Side side : kSides) {
      const MV a = cauchy_kernel(side, CauchyForm::I, s, x), b = cauchy_kernel(side, CauchyForm::II, s, x);
      f = std::max(f, (a - b).norm() / b.norm());
    }
    for (KernelKind k : {KernelKind::D, KernelKind::DeltaD}) {
      const MV a = fine_kernel(k, Side::Left, s, x);
      lr = std::max(lr, (a - fine_kernel(k, Side::Right, s, x)).norm() / a.norm());
    }
  }
  c.le("kernel.cauchy_forms", f, c.tol("forms"));
  c.le("kernel.sides.D_DeltaD", lr, 1e-13);

  struct A {
    const char* id;
    MV got;
    double want;
  };
  const PV s3(3.0), x1(1.0);
  const std::vector<A> anchors = {
      {"cauchy_II", cauchy_kernel(Side::Left, CauchyForm::II, s3, x1), 0.5},
      {"cauchy_II_right", cauchy_kernel(Side::Right, CauchyForm::II, s3, x1), 0.5},
      {"F5", f5_kernel(Side::Left, s3, x1), 2.0},
      {"D", fine_kernel(KernelKind::D, Side::Left, s3, x1), -1.0},
      {"DeltaD", fine_kernel(KernelKind::DeltaD, Side::Left, s3, x1), 1.0},
      {"Dbar", fine_kernel(KernelKind::Dbar, Side::Left, s3, x1), 1.5},
      {"D2", fine_kernel(KernelKind::D2, Side::Left, s3, x1), -1.0},
      {"DeltaD_viaf5", fine_kernel_via_f5(KernelKind::DeltaD, Side::Left, s3, x1), 1.0},
  };
  for (const auto& a : anchors) c.le(std::string("kernel.anchor.") + a.id, (a.got - MV(a.want)).norm_inf(), 1e-14);
  c.le("kernel.anchor.gamma5", std::abs(gamma_constant(5) - 64.0), c.tol("exact"));
  c.le("kernel.anchor.pseudo", (pseudo_kernel(PseudoVariant::Commutative, PV::basis(1), PV(0.0)) - PV(-1.0)).norm(),
       c.tol("exact"));
  c.truth("kernel.sphere_hit", throws(Errc::SpectralSphereHit, [] {
            PV s(std::array<double, 6>{1, 2, 0, 0, 0, 0}), x(std::array<double, 6>{1, 0, 0, 0, 2, 0});
            fine_kernel(KernelKind::D, Side::Left, s, x);
          }));

  // Factor order in the Dbar-type forms matters: moving (s - x0) across (s - xbar) changes the value.
  for (KernelKind k : {KernelKind::Dbar, KernelKind::Dbar2, KernelKind::DeltaDbar}) {
    const auto [s, x] = kernel_pair(c.rng, 0.2, 0.6);
    const PV qi = inverse(pseudo_kernel(PseudoVariant::Commutative, s, x));
    const PV sxb = s - conj(x), sx0 = s - PV(x[0]);
    MV permuted;
    if (k == KernelKind::Dbar) permuted = sx0 * slice_mul(qi, qi) * sxb * 4.0 + qi.mv() * 2.0;
    if (k == KernelKind::Dbar2) permuted = slice_mul(sx0, sx0) * power(qi, 3) * sxb * 32.0;
    if (k == KernelKind::DeltaDbar) permuted = sx0 * power(qi, 3) * sxb * -64.0;
    c.truth(std::string("kernel.order.") + kind_name(k),
            (permuted - fine_kernel(k, Side::Left, s, x)).norm() > 1e-6);
  }
}

void g_kernel_p0(Ctx& c) {
  double w = 0, wide = 0;
  for (int i = 0; i < 100; ++i) {
    const auto [s, x] = kernel_pair(c.rng, 0.05, 0.5);
    w = std::max(w, p0_residual(s, x).norm());
  }
  // Near the sphere [s] the terms grow like |Q|^-2, so this range is measured against 64 |Q|^-2.
  for (int i = 0; i < 100; ++i) {
    const auto [s, x] = kernel_pair(c.rng, 0.05, 1.5);
    const double q = pseudo_kernel(PseudoVariant::Commutative, s, x).norm();
    wide = std::max(wide, p0_residual(s, x).norm() * q * q / 64.0);
  }
  c.le("p0.scalar", w, c.tol("p0"));
  c.le("p0.scalar.wide_relative", wide, c.tol("p0"));
  c.le("p0.scalar.anchor_real", p0_residual(PV(3.0), PV(1.0)).norm(), 1e-12);
  c.le("p0.scalar.anchor_e1", p0_residual(PV::basis(1, 2.0), PV(0.5)).norm(), 1e-12);
}

// Right slice regularity in s for Left kernels (J on the right), left regularity for Right ones.
void g_kernel_regularity(Ctx& c) {
  const LD h = 1e-4L;
  for (KernelKind k : all_kinds())
    for (Side side : kSides) {
      double worst = 0;
      for (int i = 0; i < 3; ++i) {
        const auto [sd, xd] = kernel_pair(c.rng, 0.1, 0.5);
        const Paravector<LD> x = xd.cast<LD>();
        const Paravector<LD> J = fixtures::random_unit(c.rng).cast<LD>();
        const LD u = sd[0], v = sd.vec_norm();
        auto K = [&](LD a, LD b) { return fine_kernel(k, side, embed(a, b, J), x); };
        auto d = [&](auto f, LD step) { return (f(step) - f(-step)) / (2 * step); };
        auto du = [&](LD st) { return d([&](LD e) { return K(u + e, v); }, st); };
        auto dv = [&](LD st) { return d([&](LD e) { return K(u, v + e); }, st); };
        const Multivector<LD> Du = (du(h) * LD(4) - du(2 * h)) / LD(3);
        const Multivector<LD> Dv = (dv(h) * LD(4) - dv(2 * h)) / LD(3);
        const Multivector<LD> cr = side == Side::Left ? Du + Dv * J.mv() : Du + J.mv() * Dv;
        worst = std::max(worst, static_cast<double>(cr.norm() / std::max(Du.norm(), Dv.norm())));
      }
      c.le(std::string("kernel.regularity.") + kind_name(k) + "." + side_tag(side), worst, c.tol("regularity"));
    }
}

// D^3 Dbar^2 divided by the kind's word.
OpWord complement(const OpWord& w) {
  const NormalWord n = normalize(w);
  const int a = 3 - n.delta - n.d, b = 2 - n.delta - n.dbar;
  OpWord r(a, Letter::D);
  r.insert(r.end(), b, Letter::Dbar);
  return r;
}

void g_kernel_annihilation(Ctx& c) {
  const LD h = 1e-3L;
  for (KernelKind k : kFineKinds) {
    const OpWord ann = expand(normalize(complement(word_of(k))));
    double worst = 0;
    for (int i = 0; i < 3; ++i) {
      const auto [sd, xd] = kernel_pair(c.rng, 0.1, 0.5, 1.0);
      const Paravector<LD> s = sd.cast<LD>();
      ParaFn<LD> f = [&](const Paravector<LD>& y) { return fine_kernel(k, Side::Left, s, y); };
      const Multivector<LD> K = f(xd.cast<LD>());
      worst = std::max(worst, static_cast<double>(fd_apply(ann, f, xd.cast<LD>(), h).norm() / K.norm()));
    }
    c.le(std::string("kernel.annihilation.") + kind_name(k), worst, c.tol("annihilation"));
  }
}

void g_kernel_flags(Ctx& c) {
  const LD h = 1e-3L;
  double gap = 0;
  MV printed, fdv;
  for (int i = 0; i < 5; ++i) {
    const auto [sd, xd] = kernel_pair(c.rng, 0.1, 0.5);
    const Paravector<LD> s = sd.cast<LD>();
    ParaFn<LD> f = [&](const Paravector<LD>& y) { return cauchy_kernel(Side::Left, CauchyForm::II, s, y); };
    const auto fd = fd_apply(word_of(KernelKind::D2), f, xd.cast<LD>(), h).cast<double>();
    const MV st = d2_kernel_as_stated(Side::Left, sd, xd);
    const double g = (st - fd).norm() / fd.norm();
    if (g >= gap) {
      gap = g;
      printed = st;
      fdv = fd;
    }
  }
  c.flag("kernel.flag.D2_as_stated", gap, c.tol("fd"),
         "printed +8 form scalar part " + sci(printed.scalar()) + " vs D^2 S_L^{-1} by differences " + sci(fdv.scalar()));
}

// ---------------------------------------------------------------- integrals

MV oracle(KernelKind k, const SlicePolynomial<double>& P, const PV& x) {
  return canonical_eval(apply_word(word_of(k), P), x);
}

void g_integral_rep(Ctx& c) {
  std::uniform_int_distribution<int> deg(0, c.cfg.degree_cap);
  for (KernelKind k : all_kinds())
    for (Side side : kSides) {
      double worst = 0;
      for (int i = 0; i < 20; ++i) {
        const auto P = fixtures::random_slice_poly(c.rng, deg(c.rng), side);
        const PV x = fixtures::with_norm(fixtures::random_paravector(c.rng), uniform(c.rng, 0.05, 0.5));
        const auto ct = circle(0.0, 1.2, fixtures::random_unit(c.rng), c.cfg.nodes);
        worst = std::max(worst, (fine_integral_eval(k, P, x, ct) - oracle(k, P, x)).norm());
      }
      c.le(std::string("integral.rep.") + kind_name(k) + "." + side_tag(side), worst, c.tol("integral"));
    }
}

void g_integral_indep(Ctx& c) {
  for (KernelKind k : all_kinds()) {
    const auto P = fixtures::random_slice_poly(c.rng, 6, Side::Left);
    const PV x = fixtures::with_norm(fixtures::random_paravector(c.rng), 0.4);
    const PV J0 = PV::basis(2);
    const MV ref = fine_integral_eval(k, P, x, circle(0.0, 1.0, J0, c.cfg.nodes));
    double dj = 0, dr = 0;
    for (int i = 0; i < 3; ++i) {
      const PV J = i == 0 ? PV::basis(5) : fixtures::random_unit(c.rng);
      dj = std::max(dj, (fine_integral_eval(k, P, x, circle(0.0, 1.0, J, c.cfg.nodes)) - ref).norm());
    }
    for (double R : {1.3, 1.7})
      dr = std::max(dr, (fine_integral_eval(k, P, x, circle(0.0, R, J0, c.cfg.nodes)) - ref).norm());
    c.le(std::string("integral.J_independence.") + kind_name(k), dj, c.tol("independence"));
    c.le(std::string("integral.radius_independence.") + kind_name(k), dr, c.tol("independence"));
  }
}

void g_integral_anchor(Ctx& c) {
  const int N = c.cfg.nodes;
  const PV x(std::array<double, 6>{0.3, 0.2, 0, 0, 0, 0});
  const auto ct = circle(0.0, 1.0, PV::basis(1), N);
  c.le("integral.anchor.DeltaD_x4", (fine_integral_eval(KernelKind::DeltaD, xm(4), x, ct) - MV(19.2)).norm(), 1e-9);
  c.le("integral.anchor.F5_x4", (fine_integral_eval(KernelKind::F5, xm(4), x, ct) - MV(64.0)).norm(), 1e-9);
  c.le("integral.anchor.F5_x2", fine_integral_eval(KernelKind::F5, xm(2), x, ct).norm(), 1e-10);
  c.le("integral.anchor.D_x", (fine_integral_eval(KernelKind::D, xm(1), x, ct) - MV(-4.0)).norm(), 1e-10);
  c.le("integral.anchor.cauchy_constant", (cauchy_eval(xm(0), x, ct) - MV(1.0)).norm(), 1e-12);

  const PV y(std::array<double, 6>{0.5, 0, 0.5, 0, 0, 0});
  SliceFn<double> K = [&](const PV& s) { return cauchy_kernel(Side::Left, CauchyForm::II, s, y); };
  SliceFn<double> sq = [](const PV& s) { return slice_mul(s, s).mv(); };
  c.le("integral.anchor.s2", (slice_integral(K, circle(0.0, 1.0, PV::basis(1), N), sq, Side::Left) - MV::e(2) * 0.5).norm(),
       1e-11);
  const PV out(std::array<double, 6>{2.5, 0, 0.5, 0, 0, 0});
  SliceFn<double> Ko = [&](const PV& s) { return cauchy_kernel(Side::Left, CauchyForm::II, s, out); };
  SliceFn<double> one = [](const PV&) { return MV(1.0); };
  c.le("integral.anchor.exterior", slice_integral(Ko, ct, one, Side::Left).norm(), 1e-11);
  c.truth("integral.outside_point", throws(Errc::PointOutsideDomain,
                                           [&] { fine_integral_eval(KernelKind::D, xm(2), out, ct); }));
  c.truth("integral.bad_radius", throws(Errc::DegenerateRadius, [] { circle(0.0, 0.0, PV::basis(1), 64); }));
  c.truth("integral.bad_unit", throws(Errc::NotImaginaryUnit, [] { circle(0.0, 1.0, PV(1.0), 64); }));

  // Geometric decay of the trapezoid error in N.
  const PV z(std::array<double, 6>{0.5, 0, 0, 0.3, 0, 0});
  const MV exact = oracle(KernelKind::F5, xm(7), z);
  double e[3];
  for (int i = 0; i < 3; ++i)
    e[i] = (fine_integral_eval(KernelKind::F5, xm(7), z, circle(0.0, 1.0, PV::basis(3), 32 << i)) - exact).norm();
  const double floor = 1e-12 * std::max(1.0, exact.norm());
  c.truth("integral.trapezoid_decay", (e[1] <= 0.5 * e[0] || e[1] < floor) && (e[2] <= 0.5 * e[1] || e[2] < floor));
}

// ---------------------------------------------------------------- calculus

int tuple_dim(const Ctx& c, int t) { return 2 + t % (std::min(c.cfg.dim, 6) - 1); }

Contour<double> default_contour(Ctx& c, const OperatorTuple& T) {
  return circle(0.0, default_radius(T), fixtures::random_unit(c.rng), c.cfg.nodes);
}

void g_spectrum(Ctx& c) {
  for (int t = 0; t < 10; ++t) {
    const int d = tuple_dim(c, t);
    std::vector<PV> joint;
    for (int i = 0; i < d; ++i) joint.push_back(fixtures::random_paravector(c.rng, 0.8));
    if (t % 3 == 1) joint[0] = PV(joint[0][0]);          // a real sphere, v = 0
    if (t % 3 == 2 && d > 2) joint[1] = joint[0];        // repeated joint eigenvalue
    if (t == 9) joint[d - 1] = conj(joint[0]);           // same sphere through a different point
    const auto F = fixtures::diagonal_family(c.rng, joint, t != 0);
    std::vector<SpectralSphere> truth;
    for (const auto& s : F.truth)
      if (std::none_of(truth.begin(), truth.end(),
                       [&](const SpectralSphere& o) { return std::hypot(o.u - s.u, o.v - s.v) < 1e-12; }))
        truth.push_back(s);
    const auto& got = F.T.spectrum();
    double w = got.size() == truth.size() ? 0.0 : 1.0;
    for (const auto& s : truth) {
      double best = 1e300;
      for (const auto& g : got) best = std::min(best, std::hypot(g.u - s.u, g.v - s.v));
      w = std::max(w, best);
    }
    c.le("spectrum.t" + idx(t), w, c.tol("spectrum"));
  }
}

void g_calculus_oracle(Ctx& c) {
  std::map<std::string, double> worst;
  for (int t = 0; t < 10; ++t) {
    const auto F = fixtures::random_tuple(c.rng, tuple_dim(c, t), 0.5);
    const auto ct = default_contour(c, F.T);
    for (KernelKind k : all_kinds())
      for (Side side : kSides) {
        const auto P = fixtures::random_slice_poly(c.rng, 6, side);
        const double e = (poly_calculus_integral(k, side, P, F.T, ct) - poly_calculus_exact(k, side, P, F.T)).norm();
        auto& w = worst[std::string(kind_name(k == KernelKind::Cauchy ? k : k)) + "." + side_tag(side)];
        w = std::max(w, e);
      }
  }
  for (const auto& [id, w] : worst) c.le("calculus.oracle." + id, w, c.tol("calculus"));
}

void g_calculus_moment(Ctx& c) {
  double m[4][2] = {}, anchor = 0;
  for (int t = 0; t < 10; ++t) {
    const auto F = fixtures::random_tuple(c.rng, tuple_dim(c, t), 0.5);
    const auto ct = default_contour(c, F.T);
    for (int j = 0; j <= 3; ++j)
      for (int si = 0; si < 2; ++si)
        m[j][si] = std::max(m[j][si], poly_calculus_integral(KernelKind::F5, kSides[si], xm(j, kSides[si]), F.T, ct).norm());
    const CliffordMatrix d4 = poly_calculus_integral(KernelKind::F5, Side::Left, xm(4), F.T, ct);
    anchor = std::max(anchor, (d4 - CliffordMatrix::identity(F.T.dim()) * 64.0).norm());
  }
  for (int j = 0; j <= 3; ++j)
    for (int si = 0; si < 2; ++si)
      c.le("calculus.moment.j" + std::to_string(j) + "." + side_tag(kSides[si]), m[j][si], c.tol("moment"));
  c.le("calculus.anchor.delta2_s4", anchor, c.tol("calculus"));
}

CliffordMatrix q_matrix(const OperatorTuple& T, const PV& s) {
  const auto [J, z] = slice_of(s);
  const int d = T.dim();
  const CMat Q = z * z * CMat::Identity(d, d) - 2.0 * z * T[0].cast<std::complex<double>>() +
                 T.abs2().cast<std::complex<double>>();
  return SliceMatrix{J, Q}.clifford();
}

void g_resolvent(Ctx& c) {
  std::map<std::string, double> ser, via;
  for (int t = 0; t < 10; ++t) {
    const auto F = fixtures::random_tuple(c.rng, tuple_dim(c, t), 0.5);
    const PV s = fixtures::with_norm(fixtures::random_paravector(c.rng), 2.0 * F.T.norm());
    for (KernelKind k : all_kinds())
      for (Side side : kSides) {
        const CliffordMatrix R = fine_resolvent(k, side, F.T, s);
        const std::string id = std::string(kind_name(k)) + "." + side_tag(side);
        auto& a = ser[id];
        a = std::max(a, (fine_resolvent_series(k, side, F.T, s, 60) - R).norm());
        if (k != KernelKind::Cauchy) {
          auto& b = via[id];
          b = std::max(b, (fine_resolvent_via_f5(k, side, F.T, s) - R).norm());
        }
      }
  }
  for (const auto& [id, w] : ser) c.le("resolvent.series." + id, w, c.tol("resolvent"));
  for (const auto& [id, w] : via) c.le("resolvent.viaf5." + id, w, c.tol("resolvent"));

  // Q_{c,s}(T) sum_{m,k} T^{m-k} Tbar^{k-1} s^{-1-m} = I from both sides.
  double left = 0, right = 0;
  for (int t = 0; t < 5; ++t) {
    const auto T = fixtures::scaled(fixtures::random_tuple(c.rng, tuple_dim(c, t), 0.5).T, 0.3);
    const PV s = fixtures::with_norm(fixtures::random_paravector(c.rng), 1.0);
    const CliffordMatrix S = fine_resolvent_series(KernelKind::D, Side::Left, T, s, 80) * -0.25;
    const CliffordMatrix Q = q_matrix(T, s), I = CliffordMatrix::identity(T.dim());
    left = std::max(left, (Q * S - I).norm());
    right = std::max(right, (S * Q - I).norm());
  }
  c.le("resolvent.es1bis.QS", left, c.tol("resolvent"));
  c.le("resolvent.es1bis.SQ", right, c.tol("resolvent"));
}

void g_p0_op(Ctx& c) {
  double w = 0;
  for (int t = 0; t < 10; ++t) {
    const auto F = fixtures::random_tuple(c.rng, tuple_dim(c, t), 0.5);
    const PV s = fixtures::with_norm(fixtures::random_paravector(c.rng), uniform(c.rng, 1.5, 2.5));
    w = std::max(w, f5_p0_residual(F.T, s).norm());
  }
  c.le("p0.operator", w, c.tol("p0"));
}

void g_reseq(Ctx& c) {
  for (int t = 0; t < 20; ++t) {
    const auto F = fixtures::random_tuple(c.rng, 2 + t % 3, 0.3);
    const PV s = fixtures::with_norm(fixtures::random_paravector(c.rng), uniform(c.rng, 1.2, 2.0));
    PV p;
    if (t % 2 == 0) {
      const auto [J, z] = slice_of(s);
      p = embed(uniform(c.rng, -1.5, 1.5), uniform(c.rng, -1.5, 1.5), J);
      if (p.norm() < 1.1) p = fixtures::with_norm(p, 1.4);
    } else {
      p = fixtures::with_norm(fixtures::random_paravector(c.rng), uniform(c.rng, 1.2, 2.0));
    }
    c.le(std::string("reseq.") + (t % 2 == 0 ? "same_slice." : "cross_slice.") + idx(t),
         f_resolvent_equation_residual(F.T, s, p).norm(), c.tol("reseq"));
  }
  const auto Z = fixtures::zero_tuple(1);
  c.le("reseq.scalar_anchor", f_resolvent_equation_residual(Z, PV(2.0), PV(0.5)).norm(), 1e-12);
  c.truth("reseq.sphere_hit", throws(Errc::SpectralSphereHit, [&] {
            f_resolvent_equation_residual(Z, PV(std::array<double, 6>{1, 2, 0, 0, 0, 0}),
                                          PV(std::array<double, 6>{1, 0, 0, 2, 0, 0}));
          }));
}

void g_product(Ctx& c) {
  std::uniform_int_distribution<int> deg(0, 5);
  for (int t = 0; t < 20; ++t) {
    const auto F = fixtures::random_tuple(c.rng, 2 + t % 3, 0.4);
    const auto f = fixtures::random_slice_poly(c.rng, deg(c.rng), Side::Left, false, true);
    const auto g = fixtures::random_slice_poly(c.rng, deg(c.rng), Side::Left);
    c.le("product." + idx(t), product_rule_residual(f, g, F.T, default_contour(c, F.T)).norm(), c.tol("product"));
  }
  // f = g = x^2 at T = 0: Delta^2 x^4 = 64 = (-8)(-8), every other term vanishes; exact substitution.
  const auto Z = fixtures::zero_tuple(1);
  auto ex = [&](KernelKind k, const SlicePolynomial<double>& P) { return poly_calculus_exact(k, Side::Left, P, Z); };
  using K = KernelKind;
  const auto f = xm(2);
  const CliffordMatrix lhs = ex(K::F5, xm(4));
  const CliffordMatrix rhs = ex(K::F5, f) * ex(K::Cauchy, f) + ex(K::Cauchy, f) * ex(K::F5, f) +
                             ex(K::Delta, f) * ex(K::Delta, f) - ex(K::DeltaD, f) * ex(K::D, f) -
                             ex(K::D, f) * ex(K::DeltaD, f);
  c.truth("product.scalar_anchor",
          lhs.block(0)(0, 0) == 64.0 && ex(K::Delta, f).block(0)(0, 0) == -8.0 && (lhs - rhs).norm() == 0.0);
  const auto F = fixtures::random_tuple(c.rng, 3, 0.4);
  c.le("product.linear", product_rule_residual(xm(1), xm(1), F.T, default_contour(c, F.T)).norm(), c.tol("product"));
  c.truth("product.not_intrinsic", throws(Errc::NotIntrinsic, [&] {
            product_rule_residual(SlicePolynomial<double>::monomial(1, MV::e(1)), xm(1), F.T, default_contour(c, F.T));
          }));
}

SlicePolynomial<double> low_perturbation(Rng& g, int t, Side side) {
  SlicePolynomial<double> p;
  p.side = side;
  for (int j = 0; j <= t; ++j) p.coeffs.push_back(fixtures::random_mv(g));
  return p;
}

void g_tcost(Ctx& c) {
  const auto F = fixtures::random_tuple(c.rng, 4, 0.5);
  const auto ct = default_contour(c, F.T);
  for (KernelKind k : kFineKinds)
    for (Side side : kSides) {
      const int t = kind_degree(k) - 1;
      const auto P = fixtures::random_slice_poly(c.rng, 6, side);
      const CliffordMatrix a = poly_calculus_integral(k, side, P, F.T, ct);
      const CliffordMatrix b = poly_calculus_integral(k, side, P + low_perturbation(c.rng, t, side), F.T, ct);
      c.le(std::string("tcost.") + kind_name(k) + "." + side_tag(side), (a - b).norm(), c.tol("tcost"));
      // One degree higher is no longer invisible.
      const auto bump = SlicePolynomial<double>::monomial(t + 1, fixtures::random_mv(c.rng), side);
      const CliffordMatrix e = poly_calculus_integral(k, side, P + bump, F.T, ct);
      c.truth(std::string("tcost.control.") + kind_name(k) + "." + side_tag(side), (a - e).norm() > 1e-6);
    }

  // Two spectral clusters near -2 and 2, one circle each, different constants on each component.
  const auto G = fixtures::two_cluster_tuple(c.rng, 4);
  const PV J = fixtures::random_unit(c.rng);
  const auto c1 = circle(-2.0, 1.0, J, c.cfg.nodes), c2 = circle(2.0, 1.0, J, c.cfg.nodes);
  for (KernelKind k : kFineKinds) {
    const int t = kind_degree(k) - 1;
    const auto P = fixtures::random_slice_poly(c.rng, 6, Side::Left);
    const std::vector<std::pair<Contour<double>, SlicePolynomial<double>>> plain = {{c1, P}, {c2, P}};
    const std::vector<std::pair<Contour<double>, SlicePolynomial<double>>> shifted = {
        {c1, P + low_perturbation(c.rng, t, Side::Left)}, {c2, P + low_perturbation(c.rng, t, Side::Left)}};
    const CliffordMatrix a = poly_calculus_integral(k, Side::Left, plain, G.T);
    const CliffordMatrix b = poly_calculus_integral(k, Side::Left, shifted, G.T);
    const CliffordMatrix e = poly_calculus_exact(k, Side::Left, P, G.T);
    c.le(std::string("tcost.two_component.") + kind_name(k), (a - b).norm(), c.tol("tcost"));
    c.le(std::string("tcost.two_component_exact.") + kind_name(k), (a - e).norm(), c.tol("calculus"));
  }
}

void g_calculus_misc(Ctx& c) {
  // The printed right Delta resolvent starts with F^R T^2 where s^2 F^R is meant.
  const auto F = fixtures::random_tuple(c.rng, 3, 0.5);
  const PV s = fixtures::with_norm(fixtures::random_paravector(c.rng), 2.0);
  const CliffordMatrix FR = f5_resolvent(Side::Right, F.T, s);
  const CliffordMatrix Tm = CliffordMatrix::of(F.T);
  const CliffordMatrix T0 = CliffordMatrix::scalar(F.T[0]), n2 = CliffordMatrix::scalar(F.T.abs2());
  const CliffordMatrix printed = (FR * Tm * Tm - s.mv() * FR * T0 * 2.0 + FR * n2) * (-0.125);
  const CliffordMatrix R = fine_resolvent(KernelKind::Delta, Side::Right, F.T, s);
  c.flag("calculus.flag.Delta_right_as_printed", (printed - R).norm() / R.norm(), c.tol("resolvent"),
         "printed form norm " + sci(printed.norm()) + " vs closed resolvent norm " + sci(R.norm()));

  c.truth("calculus.not_commuting", throws(Errc::NotCommuting, [] {
            std::array<Mat, 6> T;
            for (auto& m : T) m = Mat::Zero(2, 2);
            T[1] << 0, 1, 0, 0;
            T[2] << 0, 0, 1, 0;
            OperatorTuple X(T);
          }));
  const auto& sp = F.T.spectrum().front();
  c.truth("calculus.on_spectrum", throws(Errc::OnSpectrum, [&] {
            sc_resolvent(Side::Left, F.T, embed(sp.u, sp.v, fixtures::random_unit(c.rng)));
          }));
  c.truth("calculus.not_enclosed", throws(Errc::SpectrumNotEnclosed, [&] {
            poly_calculus_integral(KernelKind::D, Side::Left, xm(2), F.T, circle(0.0, 1e-3, PV::basis(1), 64));
          }));
  c.truth("calculus.outside_disk", throws(Errc::OutsideConvergenceDisk, [&] {
            fine_resolvent_series(KernelKind::D, Side::Left, F.T, PV(0.5 * F.T.norm()), 10);
          }));
}

// ---------------------------------------------------------------- vekua

// A + omega B with B allowed negative powers of r; D and Dbar act through their axial formulas.
struct Laurent {
  std::map<std::pair<int, int>, MV> t;
  void add(int i, int j, const MV& c) {
    auto& v = t[{i, j}];
    v += c;
    if (v.is_zero()) t.erase({i, j});
  }
  Laurent d0() const {
    Laurent r;
    for (const auto& [k, c] : t)
      if (k.first) r.add(k.first - 1, k.second, c * double(k.first));
    return r;
  }
  Laurent dr() const {
    Laurent r;
    for (const auto& [k, c] : t)
      if (k.second) r.add(k.first, k.second - 1, c * double(k.second));
    return r;
  }
  Laurent over_r(double f) const {
    Laurent r;
    for (const auto& [k, c] : t) r.add(k.first, k.second - 1, c * f);
    return r;
  }
  Laurent& operator+=(const Laurent& o) {
    for (const auto& [k, c] : o.t) add(k.first, k.second, c);
    return *this;
  }
  Laurent operator-() const {
    Laurent r;
    for (const auto& [k, c] : t) r.add(k.first, k.second, -c);
    return r;
  }
  double norm_inf() const {
    double m = 0;
    for (const auto& [k, c] : t) m = std::max(m, c.norm_inf());
    return m;
  }
};

Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
Laurent operator-(Laurent a, const Laurent& b) { return a += -b; }

using AxialPair = std::pair<Laurent, Laurent>;

AxialPair axial_letter(Letter l, const AxialPair& f) {
  const auto& [A, B] = f;
  if (l == Letter::D) return {A.d0() - B.dr() - B.over_r(4), B.d0() + A.dr()};
  if (l == Letter::Dbar) return {A.d0() + B.dr() + B.over_r(4), B.d0() - A.dr()};
  return axial_letter(Letter::D, axial_letter(Letter::Dbar, f));
}

AxialPair to_laurent(const CanonicalPoly<double>& c) {
  const auto [A, B] = axial_form(c);
  AxialPair r;
  for (const auto& [k, v] : A.terms) r.first.add(k.first, k.second, v);
  for (const auto& [k, v] : B.terms) r.second.add(k.first, k.second, v);
  return r;
}

std::pair<double, double> jet_point(Rng& g) { return {uniform(g, -1.0, 1.0), uniform(g, 0.4, 1.5)}; }

void g_vekua(Ctx& c) {
  for (VekuaSystem sys : kAllSystems) {
    const FineSpace space = system_space(sys);
    const OpWord pre = complement(expand(annihilator(space)));
    const std::string name = system_name(sys);
    double member = 0;
    bool exact_member = true;
    for (int m = 5; m <= 7; ++m) {
      const auto g = apply_word(pre, SlicePolynomial<double>::monomial(m, fixtures::random_int_mv(c.rng)));
      exact_member = exact_member && classify_space(g).count(space) > 0;
      const auto [A, B] = axial_form(g);
      for (int i = 0; i < 4; ++i) {
        const auto [x0, r] = jet_point(c.rng);
        const auto [e1, e2] = vekua_residual(sys, A, B, x0, r);
        double scale = 1.0;
        for (const auto& [k, v] : g.terms()) scale = std::max(scale, v.norm_inf());
        member = std::max(member, std::max(e1.norm(), e2.norm()) / scale);
      }
    }
    c.truth("vekua." + name + ".member_exact", exact_member);
    // The axial Dirac formulas composed along the annihilator reproduce the engine exactly.
    {
      const auto h = to_canonical(fixtures::random_slice_poly(c.rng, 8, Side::Left, true));
      const OpWord w = expand(annihilator(space));
      AxialPair composed = to_laurent(h);
      for (Letter l : w) composed = axial_letter(l, composed);
      const AxialPair engine = to_laurent(apply_word(w, h));
      c.le("vekua." + name + ".axial_composition",
           std::max((composed.first - engine.first).norm_inf(), (composed.second - engine.second).norm_inf()),
           c.tol("exact"));
    }
    c.flag("vekua." + name + ".member_residual", member, c.tol("vekua"),
           "largest residual of the printed system on exact members " + sci(member));

    // Printed system against the annihilator applied by differences to a non-member.
    const auto h = to_canonical(SlicePolynomial<double>::monomial(5, fixtures::random_int_mv(c.rng)));
    const auto [A, B] = axial_form(h);
    const auto Al = A, Bl = B;
    AxialFn<LD> fa = [&](LD a, LD b) { return Al(double(a), double(b)).cast<LD>(); };
    AxialFn<LD> fb = [&](LD a, LD b) { return Bl(double(a), double(b)).cast<LD>(); };
    // Exact polynomial evaluation in long double keeps the difference quotients clean.
    AxialPoly<LD> AL, BL;
    for (const auto& [k, v] : A.terms) AL.add(k.first, k.second, v.cast<LD>());
    for (const auto& [k, v] : B.terms) BL.add(k.first, k.second, v.cast<LD>());
    fa = [&](LD a, LD b) { return AL(a, b); };
    fb = [&](LD a, LD b) { return BL(a, b); };
    double gap = 0, e1n = 0, s1n = 0;
    for (int i = 0; i < 2; ++i) {
      const auto [x0, r] = jet_point(c.rng);
      const auto [e1, e2] = vekua_residual(sys, A, B, x0, r);
      const auto [s1, s2] = annihilator_split<LD>(sys, fa, fb, x0, r, fixtures::random_unit(c.rng).cast<LD>());
      const double ref = std::max({1.0, double(s1.norm()), double(s2.norm())});
      const double g = std::max((e1 - s1.cast<double>()).norm(), (e2 - s2.cast<double>()).norm()) / ref;
      if (g >= gap) {
        gap = g;
        e1n = std::max(e1.norm(), e2.norm());
        s1n = std::max(double(s1.norm()), double(s2.norm()));
      }
    }
    c.flag("vekua." + name + ".annihilator_match", gap, c.tol("vekua_fd"),
           "printed system residual norm " + sci(e1n) + " vs annihilator split norm " + sci(s1n));
  }

  AxialPoly<double> A, B, Z;
  A.add(1, 0, MV(64.0));
  const auto [h1, h2] = vekua_residual(VekuaSystem::Harmonic, A, Z, 0.5, 1.0);
  c.le("vekua.Harmonic.anchor_64x0", std::max(h1.norm(), h2.norm()), c.tol("vekua"));
  B.add(2, 0, MV(1.0));
  const auto [n1, n2] = vekua_residual(VekuaSystem::Harmonic, B, Z, 0.5, 1.0);
  c.le("vekua.Harmonic.anchor_x0sq", (n1 - MV(2.0)).norm() + n2.norm(), c.tol("vekua"));
  const auto [DA, DB] = axial_form(apply_word({Letter::D, Letter::D}, xm(4)));
  const auto [a1, a2] = vekua_residual(VekuaSystem::AntiCliffordian, DA, DB, 0.3, 0.8);
  c.flag("vekua.AntiCliffordian.anchor_D2x4", std::max(a1.norm(), a2.norm()), 1e-6,
         "residuals " + sci(a1.norm()) + ", " + sci(a2.norm()));
  c.truth("vekua.axis_too_close",
          throws(Errc::AxisTooClose, [&] { vekua_residual(VekuaSystem::Harmonic, A, Z, 0.5, 0.05); }));
}

// ---------------------------------------------------------------- structures

std::string chain_name(const std::vector<Block>& w) {
  std::string s;
  for (Block b : w) s += block_name(b);
  return s;
}

std::string labels_text(const std::vector<FineSpace>& l) {
  std::string s = "[";
  for (std::size_t i = 0; i < l.size(); ++i) s += (i ? "," : "") + std::string(space_name(l[i]));
  return s + "]";
}

void g_structure(Ctx& c) {
  using F = FineSpace;
  using B = Block;
  const auto dirac = enumerate_factorizations(false);
  c.le("structure.count", std::abs(double(dirac.size()) - 6.0), c.tol("exact"));

  // Chains as displayed in the text.
  const std::map<std::string, std::vector<F>> displayed = {
      {"DDbarDDbar", {F::ABH, F::ACH1, F::AH, F::AM}},      {"DDbarDbarD", {F::ABH, F::ACH1, F::AP2, F::AM}},
      {"DDDbarDbar", {F::ABH, F::AntiACH1, F::AH, F::AM}},  {"DbarDDbarD", {F::APC12, F::ACH1, F::AP2, F::AM}},
      {"DbarDDDbar", {F::APC12, F::ACH1, F::AH, F::AM}},    {"DbarDbarDD", {F::APC12, F::AP3, F::AH, F::AM}},
  };
  bool ends = true;
  for (const auto& f : dirac) {
    const std::string n = chain_name(f.word);
    ends = ends && f.labels.back() == F::AM;
    auto it = displayed.find(n);
    if (it == displayed.end()) {
      c.truth("structure.dirac." + n, false);
      continue;
    }
    const bool same = it->second == f.labels;
    if (n == "DbarDbarDD") {
      c.flag("structure.dirac." + n, same ? 0.0 : 1.0, 0.0,
             "displayed " + labels_text(it->second) + " vs prefix rule " + labels_text(f.labels));
      c.truth("structure.dirac." + n + ".rule", f.labels == std::vector<F>{F::APC12, F::AP3, F::AP2, F::AM});
    } else {
      c.truth("structure.dirac." + n, same);
    }
  }
  c.truth("structure.ends_in_AM", ends);

  // The third prefix Dbar Dbar D maps into AP2 and not into AH.
  bool ap2 = true, some_not_ah = false;
  for (int m = 4; m <= 10; ++m) {
    const auto w = apply_word({Letter::Dbar, Letter::Dbar, Letter::D}, xm(m));
    ap2 = ap2 && apply_word({Letter::D, Letter::D}, w).is_zero();
    some_not_ah = some_not_ah || !apply_word({Letter::Delta}, w).is_zero();
  }
  c.truth("structure.DbarDbarD_image.in_AP2", ap2);
  c.truth("structure.DbarDbarD_image.not_in_AH", some_not_ah);

  const auto coarse = enumerate_factorizations(true);
  auto find = [&](const std::vector<B>& w) -> const Factorization* {
    for (const auto& f : coarse)
      if (f.word == w) return &f;
    return nullptr;
  };
  struct Want {
    const char* id;
    std::vector<B> w;
    std::vector<F> l;
  };
  const std::vector<Want> wants = {
      {"laplace", {B::Delta, B::Delta}, {F::ACH1, F::AM}},
      {"harmonic", {B::D, B::Delta, B::Dbar}, {F::ABH, F::AH, F::AM}},
      {"polyanalytic", {B::Dbar2, B::D, B::D}, {F::AP3, F::AP2, F::AM}},
  };
  for (const auto& w : wants) {
    const Factorization* f = find(w.w);
    c.truth(std::string("structure.coarse.") + w.id, f && f->labels == w.l);
  }
  c.truth("structure.coarse.contains_dirac", coarse.size() > dirac.size());
}

}  // namespace

const std::vector<GroupDef>& groups() {
  static const std::vector<GroupDef> g = {
      {"clifford", "identities", g_clifford},
      {"slice", "identities", g_slice},
      {"table", "identities", g_table},
      {"anchor", "identities", g_anchor},
      {"sum", "identities", g_sum},
      {"fueter_sce", "identities", g_fueter_sce},
      {"commute", "identities", g_commute},
      {"laplace_x", "identities", g_laplace_x},
      {"classify", "identities", g_classify},
      {"kernel_fd", "kernels", g_kernel_fd},
      {"kernel_series", "kernels", g_kernel_series},
      {"kernel_closed", "kernels", g_kernel_closed},
      {"kernel_p0", "kernels", g_kernel_p0},
      {"kernel_regularity", "kernels", g_kernel_regularity},
      {"kernel_annihilation", "kernels", g_kernel_annihilation},
      {"kernel_flags", "kernels", g_kernel_flags},
      {"integral_rep", "integrals", g_integral_rep},
      {"integral_indep", "integrals", g_integral_indep},
      {"integral_anchor", "integrals", g_integral_anchor},
      {"spectrum", "calculus", g_spectrum},
      {"calculus_oracle", "calculus", g_calculus_oracle},
      {"calculus_moment", "calculus", g_calculus_moment},
      {"resolvent", "calculus", g_resolvent},
      {"p0_operator", "calculus", g_p0_op},
      {"reseq", "calculus", g_reseq},
      {"product", "calculus", g_product},
      {"tcost", "calculus", g_tcost},
      {"calculus_misc", "calculus", g_calculus_misc},
      {"vekua", "vekua", g_vekua},
      {"structure", "structures", g_structure},
  };
  return g;
}

}  // namespace fs5::harness::detail
