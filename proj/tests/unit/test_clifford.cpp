#include <doctest.h>

#include <random>

#include "fs5/clifford.hpp"
#include "fs5/error.hpp"
#include "fs5/fixtures.hpp"

using namespace fs5;

namespace {

PV pv(double a, double b = 0, double c = 0, double d = 0, double e = 0, double f = 0) {
  return PV(std::array<double, 6>{a, b, c, d, e, f});
}

}  // namespace

TEST_CASE("blade products follow the anticommutation rule") {
  CHECK(blade_product(1, 1) == std::pair<int, Blade>{-1, 0});
  CHECK(blade_product(1, 2) == std::pair<int, Blade>{1, 3});
  CHECK(blade_product(3, 2) == std::pair<int, Blade>{-1, 1});
  CHECK(blade_product(2, 1) == std::pair<int, Blade>{-1, 3});
}

TEST_CASE("generators square to -1 and anticommute") {
  for (int l = 1; l <= 5; ++l) {
    CHECK(MV::e(l) * MV::e(l) == MV(-1.0));
    for (int m = l + 1; m <= 5; ++m) CHECK(MV::e(l) * MV::e(m) == -(MV::e(m) * MV::e(l)));
  }
  CHECK((MV(1.0) + MV::e(1)) * (MV(1.0) - MV::e(1)) == MV(2.0));
}

TEST_CASE("unit 1-vectors square to -1") {
  fixtures::Rng g(3);
  for (int i = 0; i < 20; ++i) {
    const PV w = fixtures::random_unit(g);
    CHECK((w * w - MV(-1.0)).norm_inf() < 1e-14);
  }
}

TEST_CASE("product is associative on integer multivectors") {
  fixtures::Rng g(11);
  for (int i = 0; i < 50; ++i) {
    const MV a = fixtures::random_int_mv(g), b = fixtures::random_int_mv(g), c = fixtures::random_int_mv(g);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("linear combination") {
  CHECK(mv_linear(MV(1.0), MV::e(1), 1.0, 1.0) == MV(1.0) + MV::e(1));
  const MV a = MV::e(2) * MV::e(3);
  CHECK(mv_linear(a, a, 1.0, -1.0).is_zero());
  CHECK(mv_linear(MV(), a, 0.0, 2.0) == a * 2.0);
}

TEST_CASE("conjugation flips the vector part") {
  CHECK(conj(pv(1, 1)) == pv(1, -1));
  CHECK(conj(PV(3.0)) == PV(3.0));
  CHECK(conj(pv(0, 0, 1, 0, 0, 1)) == pv(0, 0, -1, 0, 0, -1));
}

TEST_CASE("paravector inverse") {
  CHECK(inverse(PV(2.0)) == PV(0.5));
  CHECK(inverse(PV::basis(1)) == PV::basis(1, -1.0));
  const PV q = inverse(pv(1, 0, 1));
  CHECK((q * pv(1, 0, 1) - MV(1.0)).norm_inf() < 1e-15);
  CHECK(q[0] == doctest::Approx(0.5));
  CHECK(q[2] == doctest::Approx(-0.5));
  CHECK_THROWS_AS(inverse(PV()), Error);
}

TEST_CASE("axis decomposition") {
  auto d = axis_decompose(pv(1, 0, 0, 2));
  CHECK(d.x0 == 1.0);
  CHECK(d.r == 2.0);
  REQUIRE(d.omega);
  CHECK(*d.omega == PV::basis(3));

  d = axis_decompose(PV(7.0));
  CHECK(d.r == 0.0);
  CHECK_FALSE(d.omega);

  d = axis_decompose(pv(0, 3, 4));
  CHECK(d.r == 5.0);
  CHECK((*d.omega - pv(0, 0.6, 0.8)).norm() < 1e-15);
}

TEST_CASE("slice embedding") {
  CHECK(embed(0.0, 1.0, PV::basis(1)) == PV::basis(1));
  CHECK(embed(2.0, 3.0, PV::basis(2)) == pv(2, 0, 3));
  CHECK(embed(4.0, 0.0, PV::basis(5)) == PV(4.0));
  CHECK_THROWS_AS(embed(1.0, 1.0, pv(0, 2)), Error);
  CHECK_THROWS_AS(embed(1.0, 1.0, pv(1, 1)), Error);
}

TEST_CASE("norm is multiplicative against the conjugate") {
  fixtures::Rng g(5);
  for (int i = 0; i < 20; ++i) {
    const PV x = fixtures::random_paravector(g);
    CHECK((x * conj(x) - MV(x.norm2())).norm_inf() < 1e-14);
  }
}
