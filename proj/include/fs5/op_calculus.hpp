#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "fs5/clifford.hpp"
#include "fs5/contour.hpp"
#include "fs5/fueter_ops.hpp"
#include "fs5/slice_poly.hpp"

namespace fs5 {

using Mat = Eigen::MatrixXd;
using CMat = Eigen::MatrixXcd;
using MV = Multivector<double>;
using PV = Paravector<double>;

struct SpectralSphere {
  double u = 0;
  double v = 0;
};

// Paravector operator T0 + sum T_i e_i with pairwise commuting real components.
class OperatorTuple {
 public:
  explicit OperatorTuple(std::array<Mat, 6> T, double tol = 1e-10);

  int dim() const { return static_cast<int>(T_[0].rows()); }
  const Mat& operator[](int i) const { return T_[i]; }
  OperatorTuple conj() const;
  // sum_A ||T_A|| in the spectral norm.
  double norm() const;
  // T Tbar = sum_{i=0..5} T_i^2.
  Mat abs2() const;
  // sum_{i=1..5} T_i^2, so that Tvec^2 = -vec_abs2().
  Mat vec_abs2() const;
  const std::vector<SpectralSphere>& spectrum() const { return spectrum_; }

 private:
  std::array<Mat, 6> T_;
  std::vector<SpectralSphere> spectrum_;
};

std::vector<SpectralSphere> s_spectrum(const OperatorTuple& T);

// sum_A M_A e_A with real d x d blocks; the blocks commute with blade constants.
class CliffordMatrix {
 public:
  explicit CliffordMatrix(int d = 0);
  static CliffordMatrix identity(int d);
  static CliffordMatrix scalar(const Mat& m);
  static CliffordMatrix constant(const MV& c, int d);
  static CliffordMatrix of(const OperatorTuple& T);

  int dim() const { return d_; }
  bool has(int b) const { return (mask_ >> b) & 1u; }
  const Mat& block(int b) const { return blocks_[b]; }
  void add_block(int b, const Mat& m);

  double norm() const;
  // Clifford-valued (i, j) entry.
  MV entry(int i, int j) const;

  CliffordMatrix& operator+=(const CliffordMatrix& o);
  CliffordMatrix& operator-=(const CliffordMatrix& o);
  CliffordMatrix& operator*=(double s);
  friend CliffordMatrix operator+(CliffordMatrix a, const CliffordMatrix& b) { return a += b; }
  friend CliffordMatrix operator-(CliffordMatrix a, const CliffordMatrix& b) { return a -= b; }
  friend CliffordMatrix operator*(CliffordMatrix a, double s) { return a *= s; }
  friend CliffordMatrix operator*(double s, CliffordMatrix a) { return a *= s; }
  friend CliffordMatrix operator*(const CliffordMatrix& a, const CliffordMatrix& b);
  friend CliffordMatrix operator*(const CliffordMatrix& a, const MV& c);
  friend CliffordMatrix operator*(const MV& c, const CliffordMatrix& a);

 private:
  int d_;
  std::uint32_t mask_ = 0;
  std::array<Mat, kBlades> blocks_;
};

// Element X + J Y of (C_J) x R^{d x d}, stored as the complex matrix X + iY.
struct SliceMatrix {
  PV J;
  CMat Z;
  CliffordMatrix clifford() const;
};

// Slice coordinates of s: unit J (e1 on the real axis) and z = s0 + i |s_vec|.
std::pair<PV, std::complex<double>> slice_of(const PV& s);

SliceMatrix q_slice(const OperatorTuple& T, const PV& s, int k);
CliffordMatrix q_resolvent(const OperatorTuple& T, const PV& s, int k);
CliffordMatrix sc_resolvent(Side side, const OperatorTuple& T, const PV& s);
CliffordMatrix f5_resolvent(Side side, const OperatorTuple& T, const PV& s);
CliffordMatrix fine_resolvent(KernelKind kind, Side side, const OperatorTuple& T, const PV& s);
CliffordMatrix fine_resolvent_via_f5(KernelKind kind, Side side, const OperatorTuple& T, const PV& s);
CliffordMatrix fine_resolvent_series(KernelKind kind, Side side, const OperatorTuple& T, const PV& s, int N);
// F5^L(s,T) s - T F5^L(s,T) - 64 Q^{-2}.
CliffordMatrix f5_p0_residual(const OperatorTuple& T, const PV& s);

bool spectrum_enclosed(const OperatorTuple& T, const Contour<double>& c);
double default_radius(const OperatorTuple& T);

// Kind Cauchy stands for the SC calculus.
CliffordMatrix poly_calculus_integral(KernelKind kind, Side side, const SlicePolynomial<double>& P,
                                      const OperatorTuple& T, const Contour<double>& c);
// Several disjoint circles, each with its own integrand; every sphere must sit inside one.
CliffordMatrix poly_calculus_integral(KernelKind kind, Side side,
                                      const std::vector<std::pair<Contour<double>, SlicePolynomial<double>>>& parts,
                                      const OperatorTuple& T);
CliffordMatrix poly_calculus_exact(KernelKind kind, Side side, const SlicePolynomial<double>& P,
                                   const OperatorTuple& T);

CliffordMatrix f_resolvent_equation_residual(const OperatorTuple& T, const PV& s, const PV& p);
CliffordMatrix product_rule_residual(const SlicePolynomial<double>& f, const SlicePolynomial<double>& g,
                                     const OperatorTuple& T, const Contour<double>& c);

}  // namespace fs5
