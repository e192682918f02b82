#include <doctest.h>

#include "fs5/error.hpp"
#include "fs5/fixtures.hpp"
#include "fs5/op_calculus.hpp"

using namespace fs5;

namespace {

using P = SlicePolynomial<double>;

PV pv(double a, double b = 0, double c = 0, double d = 0, double e = 0, double f = 0) {
  return PV(std::array<double, 6>{a, b, c, d, e, f});
}

OperatorTuple scalar_tuple(std::array<double, 6> t) {
  std::array<Mat, 6> T;
  for (int k = 0; k < 6; ++k) T[k] = Mat::Constant(1, 1, t[k]);
  return OperatorTuple(T);
}

OperatorTuple e1_tuple() { return scalar_tuple({0, 1, 0, 0, 0, 0}); }

// 1x1 CliffordMatrix as a multivector.
MV value(const CliffordMatrix& m) { return m.entry(0, 0); }

bool near(const CliffordMatrix& a, const CliffordMatrix& b, double tol) { return (a - b).norm() <= tol; }

Contour<double> around(const OperatorTuple& T, int N = 256) {
  return circle(0.0, default_radius(T), PV::basis(2), N);
}

}  // namespace

TEST_CASE("S-spectrum of small tuples") {
  auto sp = e1_tuple().spectrum();
  REQUIRE(sp.size() == 1);
  CHECK(sp[0].u == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(sp[0].v == doctest::Approx(1.0));

  sp = scalar_tuple({2, 0, 0, 0, 0, 0}).spectrum();
  REQUIRE(sp.size() == 1);
  CHECK(sp[0].u == doctest::Approx(2.0));
  CHECK(sp[0].v == doctest::Approx(0.0).epsilon(1e-6));

  std::array<Mat, 6> T;
  for (auto& m : T) m = Mat::Zero(2, 2);
  T[0].diagonal() << 1, 2;
  T[1].diagonal() << 1, 0;
  sp = OperatorTuple(T).spectrum();
  REQUIRE(sp.size() == 2);
  CHECK(sp[0].u == doctest::Approx(1.0));
  CHECK(sp[0].v == doctest::Approx(1.0));
  CHECK(sp[1].u == doctest::Approx(2.0));
  CHECK(sp[1].v == doctest::Approx(0.0).epsilon(1e-6));
}

TEST_CASE("S-spectrum matches joint eigenvalues") {
  fixtures::Rng g(21);
  for (int d = 2; d <= 6; ++d) {
    const auto F = fixtures::random_tuple(g, d);
    const auto& sp = F.T.spectrum();
    REQUIRE(sp.size() == F.truth.size());
    for (const auto& t : F.truth) {
      double best = 1e9;
      for (const auto& s : sp) best = std::min(best, std::hypot(s.u - t.u, s.v - t.v));
      CHECK(best < 1e-10);
    }
  }
}

TEST_CASE("non-commuting components are rejected") {
  std::array<Mat, 6> T;
  for (auto& m : T) m = Mat::Zero(2, 2);
  T[1] << 0, 1, 0, 0;
  T[2] << 0, 0, 1, 0;
  CHECK_THROWS_AS(OperatorTuple{T}, Error);
}

TEST_CASE("scalar resolvents") {
  const PV s = pv(1, 0, 1);
  const auto Z = fixtures::zero_tuple(2);
  const MV s2i = inverse(slice_mul(s, s)).mv();
  CHECK(near(q_resolvent(Z, s, 1), CliffordMatrix::constant(s2i, 2), 1e-14));
  CHECK((value(q_resolvent(e1_tuple(), PV(2.0), 1)) - MV(0.2)).norm_inf() < 1e-15);

  CHECK(near(sc_resolvent(Side::Left, Z, s), CliffordMatrix::constant(inverse(s).mv(), 2), 1e-14));
  CHECK((value(sc_resolvent(Side::Left, e1_tuple(), PV(2.0))) - (MV(2.0) + MV::e(1)) * 0.2).norm_inf() < 1e-15);

  CHECK(near(f5_resolvent(Side::Left, Z, s), CliffordMatrix::constant(power(inverse(s), 5).mv() * 64.0, 2), 1e-12));
  const auto t = scalar_tuple({0.5, 0, 0, 0, 0, 0});
  CHECK((value(f5_resolvent(Side::Left, t, PV(3.0))) - MV(64.0 / std::pow(2.5, 5))).norm_inf() < 1e-13);

  CHECK(near(fine_resolvent(KernelKind::D, Side::Left, Z, s),
             CliffordMatrix::constant(s2i * -4.0, 2), 1e-14));
  CHECK((value(fine_resolvent(KernelKind::DeltaD, Side::Left, e1_tuple(), PV(2.0))) - MV(16.0 / 25)).norm_inf() <
        1e-14);
}

TEST_CASE("q resolvent powers") {
  fixtures::Rng g(22);
  const auto F = fixtures::random_tuple(g, 3);
  const PV s = pv(1.2, 0.3, 0, -0.4);
  const auto q1 = q_resolvent(F.T, s, 1);
  CHECK(near(q_resolvent(F.T, s, 2), q1 * q1, 1e-11 * (q1 * q1).norm()));
}

TEST_CASE("resolvent closed forms against series and F5") {
  fixtures::Rng g(23);
  const auto T = fixtures::scaled(fixtures::random_tuple(g, 3).T, 0.3);
  const PV s = fixtures::with_norm(fixtures::random_paravector(g), 1.0);
  const auto sc = sc_resolvent(Side::Left, T, s);
  CHECK(near(fine_resolvent_series(KernelKind::Cauchy, Side::Left, T, s, 60), sc, 1e-12 * sc.norm()));
  const auto d = fine_resolvent(KernelKind::D, Side::Left, T, s);
  CHECK(near(fine_resolvent_series(KernelKind::D, Side::Left, T, s, 60), d, 1e-10 * d.norm()));
  const auto d2 = fine_resolvent(KernelKind::Dbar2, Side::Left, T, s);
  CHECK(near(fine_resolvent_series(KernelKind::Dbar2, Side::Left, T, s, 60), d2, 1e-9 * d2.norm()));
  for (KernelKind k : kTabulatedKinds)
    for (Side side : {Side::Left, Side::Right}) {
      const auto R = fine_resolvent(k, side, T, s);
      CHECK(near(fine_resolvent_via_f5(k, side, T, s), R, 1e-11 * R.norm()));
    }
  CHECK(near(fine_resolvent_series(KernelKind::D, Side::Left, fixtures::zero_tuple(2), s, 5),
             CliffordMatrix::constant(inverse(slice_mul(s, s)).mv() * -4.0, 2), 1e-14));
  CHECK_THROWS_AS(fine_resolvent_series(KernelKind::D, Side::Left, T, PV(0.2), 10), Error);
}

TEST_CASE("operator p0 identity") {
  fixtures::Rng g(24);
  const auto F = fixtures::random_tuple(g, 4);
  CHECK(f5_p0_residual(F.T, pv(1.5, 0.5, 0, 0, 0.5)).norm() <= 1e-10);
}

TEST_CASE("resolvents refuse the spectrum") {
  CHECK_THROWS_AS(sc_resolvent(Side::Left, e1_tuple(), PV::basis(3)), Error);
}

TEST_CASE("polynomial calculi by contour integration") {
  fixtures::Rng g(25);
  const auto F = fixtures::random_tuple(g, 3);
  const auto c = around(F.T);
  const auto Tm = CliffordMatrix::of(F.T);
  const auto I = CliffordMatrix::identity(3);
  CHECK(near(poly_calculus_integral(KernelKind::Cauchy, Side::Left, P::monomial(2), F.T, c), Tm * Tm, 1e-10));
  CHECK(near(poly_calculus_integral(KernelKind::F5, Side::Left, P::monomial(4), F.T, c), I * 64.0, 1e-8));
  for (int j = 0; j <= 3; ++j)
    CHECK(poly_calculus_integral(KernelKind::F5, Side::Left, P::monomial(j), F.T, c).norm() <= 1e-9);
  CHECK(near(poly_calculus_integral(KernelKind::D, Side::Left, P::monomial(1), F.T, c), I * -4.0, 1e-10));
  CHECK_THROWS_AS(poly_calculus_integral(KernelKind::D, Side::Left, P::monomial(1), F.T,
                                         circle(5.0, 0.5, PV::basis(1), 64)),
                  Error);
}

TEST_CASE("exact substitution") {
  fixtures::Rng g(26);
  const auto F = fixtures::random_tuple(g, 3);
  const auto T0 = CliffordMatrix::scalar(F.T[0]);
  const auto I = CliffordMatrix::identity(3);
  CHECK(near(poly_calculus_exact(KernelKind::D, Side::Left, P::monomial(2), F.T), T0 * -8.0, 1e-13));
  CHECK(near(poly_calculus_exact(KernelKind::Delta, Side::Left, P::monomial(2), F.T), I * -8.0, 1e-13));
  CHECK(near(poly_calculus_exact(KernelKind::DeltaD, Side::Left, P::monomial(4), F.T), T0 * 64.0, 1e-12));
  const auto p = fixtures::random_slice_poly(g, 6, Side::Right);
  const auto c = around(F.T);
  for (KernelKind k : kFineKinds) {
    const auto e = poly_calculus_exact(k, Side::Right, p, F.T);
    CHECK(near(poly_calculus_integral(k, Side::Right, p, F.T, c), e, 1e-8 * std::max(1.0, e.norm())));
  }
}

TEST_CASE("F-resolvent equation") {
  const auto Z = fixtures::zero_tuple(1);
  CHECK(f_resolvent_equation_residual(Z, PV(2.0), PV(0.5)).norm() < 1e-12);
  fixtures::Rng g(27);
  const auto T = fixtures::scaled(fixtures::random_tuple(g, 4).T, 0.3);
  CHECK(f_resolvent_equation_residual(T, pv(1.2, 0.5, 0, 0.3), pv(-0.4, 0, 1.1, 0, 0.6)).norm() <= 1e-10);
  CHECK_THROWS_AS(f_resolvent_equation_residual(T, pv(1, 2), pv(1, 0, 0, 2)), Error);
}

TEST_CASE("product rule") {
  fixtures::Rng g(28);
  const auto F = fixtures::random_tuple(g, 3);
  const auto c = around(F.T);
  CHECK(product_rule_residual(P::monomial(1), P::monomial(1), F.T, c).norm() <= 1e-10);
  SlicePolynomial<double> gp;
  gp.coeffs = {MV(), MV(1.0), MV(), MV::e(2)};
  CHECK(product_rule_residual(P::real({1, 0, 1}), gp, F.T, c).norm() <= 1e-8);
  CHECK(product_rule_residual(P::monomial(2), P::monomial(2), fixtures::zero_tuple(1),
                              circle(0.0, 1.0, PV::basis(1), 256))
            .norm() <= 1e-8);
  CHECK_THROWS_AS(product_rule_residual(gp, P::monomial(1), F.T, c), Error);
}

TEST_CASE("low-degree perturbations are invisible") {
  fixtures::Rng g(29);
  const auto F = fixtures::random_tuple(g, 3);
  const auto c = around(F.T);
  const auto p = fixtures::random_slice_poly(g, 6, Side::Left);
  for (KernelKind k : kFineKinds) {
    const auto low = fixtures::random_slice_poly(g, kind_degree(k) - 1, Side::Left);
    const auto a = poly_calculus_integral(k, Side::Left, p, F.T, c);
    CHECK(near(poly_calculus_integral(k, Side::Left, p + low, F.T, c), a, 1e-9 * std::max(1.0, a.norm())));
  }
}

TEST_CASE("Clifford matrices") {
  const auto I = CliffordMatrix::identity(2);
  const auto E = CliffordMatrix::constant(MV::e(1), 2);
  CHECK(near(E * E, I * -1.0, 0));
  CHECK(near(MV::e(2) * E, CliffordMatrix::constant(MV::e(2) * MV::e(1), 2), 0));
  const SliceMatrix sm{PV::basis(3), CMat::Identity(2, 2) * std::complex<double>(1, 2)};
  CHECK(near(sm.clifford(), CliffordMatrix::constant(MV(1.0) + MV::e(3) * 2.0, 2), 0));
}
