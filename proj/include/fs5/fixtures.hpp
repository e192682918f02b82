#pragma once

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "fs5/clifford.hpp"
#include "fs5/op_calculus.hpp"
#include "fs5/slice_poly.hpp"

// Seeded random fixtures shared by the harness and the tests.
namespace fs5::fixtures {

using Rng = std::mt19937_64;

inline double uniform(Rng& g, double a, double b) { return std::uniform_real_distribution<double>(a, b)(g); }

inline PV random_paravector(Rng& g, double scale = 1.0) {
  PV x;
  for (int i = 0; i < 6; ++i) x[i] = uniform(g, -scale, scale);
  return x;
}

inline PV with_norm(PV x, double n) { return x * (n / x.norm()); }

inline PV random_unit(Rng& g) {
  PV J;
  do {
    for (int i = 1; i < 6; ++i) J[i] = uniform(g, -1, 1);
  } while (J.vec_norm() < 0.1);
  return J * (1.0 / J.vec_norm());
}

inline MV random_mv(Rng& g, double scale = 1.0) {
  MV m;
  for (int b = 0; b < kBlades; ++b) m[b] = uniform(g, -scale, scale);
  return m;
}

// Small-integer coefficients so exact comparisons stay exact.
inline MV random_int_mv(Rng& g, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> d(lo, hi);
  MV m;
  for (int b = 0; b < kBlades; ++b) m[b] = d(g);
  return m;
}

template <class S = double>
SlicePolynomial<S> random_slice_poly(Rng& g, int degree, Side side, bool integer = false, bool intrinsic = false) {
  SlicePolynomial<S> p;
  p.side = side;
  for (int m = 0; m <= degree; ++m) {
    MV c = integer ? random_int_mv(g) : random_mv(g);
    if (intrinsic) c = MV(c.scalar());
    p.coeffs.push_back(c.template cast<S>());
  }
  return p;
}

// T_i = S D_i S^{-1} with one shared, well-conditioned S; the joint eigenvalues are the
// diagonal entries, so the S-spectrum spheres are (d0, |dvec|) exactly.
struct TupleFixture {
  OperatorTuple T;
  std::vector<SpectralSphere> truth;
};

inline TupleFixture diagonal_family(Rng& g, const std::vector<PV>& joint, bool shear = true) {
  const int d = static_cast<int>(joint.size());
  Mat S = Mat::Identity(d, d);
  if (shear)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) S(i, j) += 0.3 * uniform(g, -1, 1);
  const Mat Si = S.inverse();
  std::array<Mat, 6> T;
  for (int k = 0; k < 6; ++k) {
    Eigen::VectorXd v(d);
    for (int i = 0; i < d; ++i) v[i] = joint[i][k];
    T[k] = S * v.asDiagonal() * Si;
  }
  std::vector<SpectralSphere> truth;
  for (const PV& p : joint) truth.push_back({p[0], p.vec_norm()});
  return {OperatorTuple(T), truth};
}

inline TupleFixture random_tuple(Rng& g, int d, double scale = 0.5) {
  std::vector<PV> joint;
  for (int i = 0; i < d; ++i) joint.push_back(random_paravector(g, scale));
  return diagonal_family(g, joint);
}

// Rescales so that sum_A ||T_A|| equals n.
inline OperatorTuple scaled(const OperatorTuple& T, double n) {
  const double f = n / T.norm();
  std::array<Mat, 6> c;
  for (int k = 0; k < 6; ++k) c[k] = T[k] * f;
  return OperatorTuple(c);
}

inline OperatorTuple zero_tuple(int d) {
  std::array<Mat, 6> c;
  for (auto& m : c) m = Mat::Zero(d, d);
  return OperatorTuple(c);
}

// Two spectral clusters near c and -c on the real axis, with T4 = T5 = 0.
inline TupleFixture two_cluster_tuple(Rng& g, int d, double c = 2.0, double spread = 0.3) {
  std::vector<PV> joint;
  for (int i = 0; i < d; ++i) {
    PV p = random_paravector(g, spread);
    p[4] = p[5] = 0.0;
    p[0] += (i % 2 == 0) ? c : -c;
    joint.push_back(p);
  }
  return diagonal_family(g, joint);
}

}  // namespace fs5::fixtures
