#include <doctest.h>

#include "fs5/error.hpp"
#include "fs5/fixtures.hpp"
#include "fs5/fueter_ops.hpp"

using namespace fs5;

namespace {

using P = SlicePolynomial<double>;

PV pv(double a, double b = 0, double c = 0, double d = 0, double e = 0, double f = 0) {
  return PV(std::array<double, 6>{a, b, c, d, e, f});
}

CanonicalPoly<double> constant(double c) {
  CanonicalPoly<double> p;
  p.add(0, 0, MV(c));
  return p;
}

CanonicalPoly<double> img(KernelKind k, int m, Side side = Side::Left) {
  return to_canonical(monomial_image<double>(k, m, side));
}

}  // namespace

TEST_CASE("monomial images at the anchor degrees") {
  CHECK(img(KernelKind::D, 1) == constant(-4));
  CHECK(img(KernelKind::Delta, 2) == constant(-8));
  CHECK(img(KernelKind::DeltaD, 3) == constant(16));
  CHECK(img(KernelKind::Dbar, 1) == constant(6));
  CHECK(img(KernelKind::Dbar2, 2) == constant(32));
  CHECK(img(KernelKind::DeltaDbar, 3) == constant(-64));
  CHECK(img(KernelKind::D2, 2) == constant(-8));
}

TEST_CASE("tables agree with the engine on both sides") {
  for (KernelKind k : kTabulatedKinds)
    for (Side side : {Side::Left, Side::Right})
      for (int m = 0; m <= 12; ++m) CHECK(img(k, m, side) == apply_word(word_of(k), P::monomial(m, MV(1.0), side)));
}

TEST_CASE("basic operators on axis monomials") {
  CanonicalPoly<double> xv, x0, mix;
  xv.add(0, 1, MV(1.0));
  x0.add(1, 0, MV(1.0));
  mix.add(2, 0, MV(1.0));
  mix.add(0, 2, MV(1.0));
  CHECK(apply_operator(BasicOp::D, xv) == constant(-5));
  CHECK(apply_operator(BasicOp::Dbar, x0) == constant(1));
  CHECK(apply_operator(BasicOp::Delta, mix) == constant(-8));
}

TEST_CASE("words") {
  CHECK(apply_word({Letter::Delta, Letter::Delta}, P::monomial(4)) == constant(64));
  CHECK(apply_word({Letter::Delta, Letter::Delta}, P::monomial(3)).is_zero());
  for (int m = 0; m <= 10; ++m) {
    const auto a = apply_word({Letter::D, Letter::Dbar}, P::monomial(m));
    CHECK(a == apply_word({Letter::Dbar, Letter::D}, P::monomial(m)));
    CHECK(a == apply_word({Letter::Delta}, P::monomial(m)));
  }
  const NormalWord n = normalize({Letter::Dbar, Letter::D, Letter::D, Letter::Dbar, Letter::Dbar});
  CHECK(n == NormalWord{2, 0, 1});
  CHECK(normalize(expand(n)) == n);
}

TEST_CASE("Fueter-Sce endpoint is monogenic") {
  fixtures::Rng g(17);
  for (int t = 0; t < 10; ++t) {
    const auto p = fixtures::random_slice_poly(g, 10, t % 2 ? Side::Right : Side::Left, true);
    CHECK(apply_word({Letter::D, Letter::Delta, Letter::Delta}, p).is_zero());
  }
}

TEST_CASE("finite differences") {
  ParaFn<double> sq = [](const PV& y) { return y.mv() * y.mv(); };
  const PV x = pv(0.4, -0.2, 0.1, 0.3, 0, 0.2);
  CHECK((fd_apply({Letter::D}, sq, x, 1e-3) - MV(-8 * x[0])).norm_inf() < 1e-6);

  ParaFn<double> c = [](const PV&) { return MV(2.5); };
  CHECK(fd_apply({Letter::Delta}, c, x, 1e-3).norm_inf() < 1e-9);

  // Fourth differences at h = 1e-3 lose about eps / h^4 to cancellation, hence long double.
  using LD = long double;
  ParaFn<LD> q = [](const Paravector<LD>& y) { return y.mv() * y.mv() * y.mv() * y.mv(); };
  const auto d4 = fd_apply({Letter::Delta, Letter::Delta}, q, pv(0.3, 0.2).cast<LD>(), 1e-3L);
  CHECK(static_cast<double>((d4 - Multivector<LD>(64.0L)).norm_inf()) < 1e-4);

  // Right polynomials take the coefficient on the left.
  ParaFn<double> right = [](const PV& y) { return MV::e(2) * y.mv(); };
  CHECK((fd_apply({Letter::D}, right, x, 1e-3, Side::Right) - MV::e(2) * -4.0).norm_inf() < 1e-9);

  DomainFn<double> ball = [](const PV& y) { return y.norm() < 0.5; };
  CHECK_THROWS_AS(fd_apply({Letter::D}, sq, pv(0.499), 1e-3, Side::Left, ball), Error);
}

TEST_CASE("classification") {
  CHECK(classify_space(constant(1)).size() == kAllSpaces.size());
  XBarPolynomial<double> xb;
  xb.terms = {{0, 1, MV(1.0)}};
  const auto s = classify_space(to_canonical(xb));
  CHECK(s.count(FineSpace::AH));
  CHECK(s.count(FineSpace::AP2));
  CHECK_FALSE(s.count(FineSpace::AM));
  CHECK(classify_space(P::monomial(4)) == std::set<FineSpace>{FineSpace::SH});
}

TEST_CASE("annihilators round trip") {
  for (FineSpace f : kAllSpaces) {
    const auto back = space_of_annihilator(annihilator(f));
    REQUIRE(back);
    CHECK(*back == f);
  }
}

TEST_CASE("Dirac fine structures") {
  const auto all = enumerate_factorizations(false);
  REQUIRE(all.size() == 6);
  using B = Block;
  using F = FineSpace;
  auto find = [&](std::vector<B> w) {
    for (const auto& f : all)
      if (f.word == w) return f.labels;
    return std::vector<F>{};
  };
  CHECK(find({B::D, B::Dbar, B::D, B::Dbar}) == std::vector<F>{F::ABH, F::ACH1, F::AH, F::AM});
  CHECK(find({B::D, B::D, B::Dbar, B::Dbar}) == std::vector<F>{F::ABH, F::AntiACH1, F::AH, F::AM});
  // The third label follows from Dbar Dbar D: its image is killed by D^2 but not by Delta.
  CHECK(find({B::Dbar, B::Dbar, B::D, B::D}) == std::vector<F>{F::APC12, F::AP3, F::AP2, F::AM});
  const auto w = apply_word({Letter::Dbar, Letter::Dbar, Letter::D}, P::monomial(5));
  CHECK(apply_word({Letter::D, Letter::D}, w).is_zero());
  CHECK_FALSE(apply_word({Letter::Delta}, w).is_zero());
  for (const auto& f : all) CHECK(f.labels.back() == F::AM);
}

TEST_CASE("coarse structures include the Laplace chain") {
  bool found = false;
  for (const auto& f : enumerate_factorizations(true))
    if (f.word == std::vector<Block>{Block::Delta, Block::Delta}) {
      found = true;
      CHECK(f.labels == std::vector<FineSpace>{FineSpace::ACH1, FineSpace::AM});
    }
  CHECK(found);
}

TEST_CASE("Vekua residuals") {
  AxialPoly<double> A, Z;
  A.add(1, 0, MV(64.0));
  auto [e1, e2] = vekua_residual(VekuaSystem::Harmonic, A, Z, 0.5, 1.0);
  CHECK(e1.norm() < 1e-12);
  CHECK(e2.norm() < 1e-12);

  AxialPoly<double> B;
  B.add(2, 0, MV(1.0));
  std::tie(e1, e2) = vekua_residual(VekuaSystem::Harmonic, B, Z, 0.5, 1.0);
  CHECK(e1 == MV(2.0));
  CHECK(e2.is_zero());

  const auto [DA, DB] = axial_form(apply_word({Letter::D, Letter::D}, P::monomial(4)));
  std::tie(e1, e2) = vekua_residual(VekuaSystem::AntiCliffordian, DA, DB, 0.3, 0.8);
  CHECK(e1.norm() < 1e-6);
  CHECK(e2.norm() < 1e-6);

  CHECK_THROWS_AS(vekua_residual(VekuaSystem::Harmonic, A, Z, 0.5, 0.05), Error);
}

TEST_CASE("axial form splits even and odd vector powers") {
  CanonicalPoly<double> c;
  c.add(0, 2, MV(1.0));
  c.add(1, 3, MV(2.0));
  const auto [A, B] = axial_form(c);
  CHECK(A(0.0, 2.0) == MV(-4.0));
  CHECK(B(1.0, 1.0) == MV(-2.0));
}
