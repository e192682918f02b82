#include <doctest.h>

#include "fs5/contour.hpp"
#include "fs5/error.hpp"
#include "fs5/fixtures.hpp"

using namespace fs5;

namespace {

PV pv(double a, double b = 0, double c = 0, double d = 0, double e = 0, double f = 0) {
  return PV(std::array<double, 6>{a, b, c, d, e, f});
}

using P = SlicePolynomial<double>;

SliceFn<double> left_cauchy(const PV& x) {
  return [x](const PV& s) { return cauchy_kernel(Side::Left, CauchyForm::II, s, x); };
}

}  // namespace

TEST_CASE("circle nodes") {
  const auto c = circle(0.0, 1.0, PV::basis(1), 64);
  CHECK(c.size() == 64);
  for (const auto& s : c.nodes) {
    CHECK(s.norm() == doctest::Approx(1.0));
    CHECK(s[2] == 0.0);
  }
  const auto d = circle(2.0, 0.5, PV::basis(3), 128);
  for (const auto& s : d.nodes) CHECK((s - PV(2.0)).norm() == doctest::Approx(0.5));
  CHECK_THROWS_AS(circle(0.0, 0.0, PV::basis(1), 64), Error);
  CHECK_THROWS_AS(circle(0.0, 1.0, pv(0, 1, 1), 64), Error);
}

TEST_CASE("slice Cauchy formula") {
  const auto c = circle(0.0, 1.0, PV::basis(1), 256);
  SliceFn<double> one = [](const PV&) { return MV(1.0); };
  CHECK((slice_integral(left_cauchy(PV(0.0)), c, one, Side::Left) - MV(1.0)).norm() < 1e-12);
  CHECK((slice_integral(left_cauchy(pv(0.2, 0, 0.3)), c, one, Side::Left) - MV(1.0)).norm() < 1e-12);

  SliceFn<double> sq = [](const PV& s) { return s.mv() * s.mv(); };
  CHECK((slice_integral(left_cauchy(pv(0.5, 0, 0.5)), c, sq, Side::Left) - MV::e(2) * 0.5).norm() < 1e-11);
  CHECK(slice_integral(left_cauchy(pv(2.5, 0, 0.5)), c, one, Side::Left).norm() < 1e-11);
}

TEST_CASE("reproduction and independence") {
  const PV x = pv(0.2, 0, 0, 0, 0.1);
  const auto x3 = P::monomial(3);
  const MV direct = eval_slice_poly(x3, x);
  CHECK((cauchy_eval(x3, x, circle(0.0, 1.0, PV::basis(1), 128)) - direct).norm() < 1e-11);
  const MV a = cauchy_eval(x3, x, circle(0.0, 1.0, PV::basis(2), 128));
  const MV b = cauchy_eval(x3, x, circle(0.0, 1.0, PV::basis(5), 128));
  const MV r = cauchy_eval(x3, x, circle(0.0, 1.7, PV::basis(2), 128));
  CHECK((a - b).norm() < 1e-11);
  CHECK((a - r).norm() < 1e-11);
}

TEST_CASE("fine integral anchors") {
  const auto c = circle(0.0, 1.0, PV::basis(1), 256);
  const PV x = pv(0.3, 0.2);
  CHECK((fine_integral_eval(KernelKind::DeltaD, P::monomial(4), x, c) - MV(19.2)).norm() < 1e-9);
  CHECK((fine_integral_eval(KernelKind::F5, P::monomial(4), pv(0.1, 0, 0.4), c) - MV(64.0)).norm() < 1e-9);
  CHECK(fine_integral_eval(KernelKind::F5, P::monomial(2), x, c).norm() < 1e-10);
  CHECK((fine_integral_eval(KernelKind::D, P::monomial(1), x, c) - MV(-4.0)).norm() < 1e-10);
  CHECK_THROWS_AS(fine_integral_eval(KernelKind::D, P::monomial(1), pv(1.2), c), Error);
}

TEST_CASE("right integrals reproduce right polynomials") {
  fixtures::Rng g(8);
  const auto p = fixtures::random_slice_poly(g, 6, Side::Right);
  const PV x = pv(0.1, 0.2, -0.1, 0.1, 0, 0.2);
  const auto c = circle(0.0, 1.2, fixtures::random_unit(g), 256);
  const MV want = eval_slice_poly(p, x);
  CHECK((cauchy_eval(p, x, c) - want).norm() < 1e-10 * std::max(1.0, want.norm()));
}
