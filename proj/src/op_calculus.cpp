#include "fs5/op_calculus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/SVD>

#include "fs5/error.hpp"
#include "fs5/kernels.hpp"

namespace fs5 {

namespace {

double op_norm(const Mat& m) {
  if (m.size() == 0) return 0.0;
  return Eigen::JacobiSVD<Mat>(m).singularValues()(0);
}

// X + Tvec Y with X, Y polynomial in the components; Tvec^2 = -R.
struct Axial {
  Mat X, Y;
};

Axial mul(const Axial& a, const Axial& b, const Mat& R) {
  return {a.X * b.X - R * (a.Y * b.Y), a.X * b.Y + a.Y * b.X};
}

CliffordMatrix vec_times(const OperatorTuple& T, const Mat& Y) {
  CliffordMatrix r(T.dim());
  for (int k = 1; k < 6; ++k)
    if (!T[k].isZero(0.0)) r.add_block(1 << (k - 1), T[k] * Y);
  return r;
}

CliffordMatrix to_clifford(const Axial& a, const OperatorTuple& T) {
  CliffordMatrix r = CliffordMatrix::scalar(a.X);
  r += vec_times(T, a.Y);
  return r;
}

// Powers T^a and Tbar^b in axial form.
struct AxialPowers {
  const OperatorTuple& T;
  Mat R;
  std::vector<Axial> tp, tbp;

  AxialPowers(const OperatorTuple& t, int n) : T(t), R(t.vec_abs2()) {
    const int d = T.dim();
    const Mat I = Mat::Identity(d, d);
    const Mat Z = Mat::Zero(d, d);
    tp.push_back({I, Z});
    tbp.push_back({I, Z});
    const Axial x{T[0], I}, xb{T[0], -I};
    for (int i = 1; i <= n; ++i) {
      tp.push_back(mul(tp.back(), x, R));
      tbp.push_back(mul(tbp.back(), xb, R));
    }
  }

  Axial xbar_term(int a, int b) const { return mul(tp[a], tbp[b], R); }

  // x0^a xvec^b
  Axial canonical_term(int a, int b) const {
    const int d = T.dim();
    Mat m = Mat::Identity(d, d);
    for (int i = 0; i < a; ++i) m = m * T[0];
    for (int i = 0; i < b / 2; ++i) m = -(m * R);
    if (b % 2 == 0) return {m, Mat::Zero(d, d)};
    return {Mat::Zero(d, d), m};
  }
};

// P_m(T) for the kind's series, m = 0..N.
std::vector<Axial> series_axial(KernelKind kind, const AxialPowers& ap, int N) {
  const int d = ap.T.dim();
  std::vector<Axial> out;
  for (int m = 0; m <= N; ++m) {
    Axial acc{Mat::Zero(d, d), Mat::Zero(d, d)};
    if (kind == KernelKind::F5) {
      const CanonicalPoly<double> img = kind_image<double>(kind, m);
      for (const auto& [k, c] : img.terms()) {
        const Axial t = ap.canonical_term(k.first, k.second);
        acc.X += c.scalar() * t.X;
        acc.Y += c.scalar() * t.Y;
      }
    } else {
      for (const auto& t : monomial_image<double>(kind, m).terms) {
        const Axial a = ap.xbar_term(t.a, t.b);
        acc.X += t.c.scalar() * a.X;
        acc.Y += t.c.scalar() * a.Y;
      }
    }
    out.push_back(std::move(acc));
  }
  return out;
}

SliceMatrix slice_scalar(const PV& J, const CMat& Z) { return {J, Z}; }

// s - Tbar and s - T
CliffordMatrix s_minus(const OperatorTuple& T, const PV& s, bool bar) {
  const int d = T.dim();
  const Mat I = Mat::Identity(d, d);
  CliffordMatrix r = CliffordMatrix::scalar(s[0] * I - T[0]);
  for (int k = 1; k < 6; ++k) {
    const Mat b = bar ? Mat(s[k] * I + T[k]) : Mat(s[k] * I - T[k]);
    if (!b.isZero(0.0)) r.add_block(1 << (k - 1), b);
  }
  return r;
}

// s - T0 in the slice of s.
CMat s_minus_t0(const OperatorTuple& T, std::complex<double> z) {
  const int d = T.dim();
  return z * CMat::Identity(d, d) - T[0].cast<std::complex<double>>();
}

}  // namespace

// ---- OperatorTuple ----

OperatorTuple::OperatorTuple(std::array<Mat, 6> T, double tol) : T_(std::move(T)) {
  const Eigen::Index d = T_[0].rows();
  for (const Mat& m : T_)
    if (m.rows() != d || m.cols() != d)
      throw Error(Errc::ConfigError, "operator components must be square and of equal size");
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      const double c = (T_[i] * T_[j] - T_[j] * T_[i]).norm();
      if (c > tol * (1.0 + T_[i].norm() * T_[j].norm()))
        throw Error(Errc::NotCommuting, "T_" + std::to_string(i) + " and T_" + std::to_string(j) +
                                            " do not commute");
    }
  spectrum_ = s_spectrum(*this);
}

OperatorTuple OperatorTuple::conj() const {
  std::array<Mat, 6> c = T_;
  for (int i = 1; i < 6; ++i) c[i] = -c[i];
  return OperatorTuple(std::move(c));
}

double OperatorTuple::norm() const {
  double n = 0;
  for (const Mat& m : T_) n += op_norm(m);
  return n;
}

Mat OperatorTuple::abs2() const { return T_[0] * T_[0] + vec_abs2(); }

Mat OperatorTuple::vec_abs2() const {
  Mat r = Mat::Zero(dim(), dim());
  for (int i = 1; i < 6; ++i) r += T_[i] * T_[i];
  return r;
}

// Roots of det(z^2 - 2 z T0 + |T|^2) through the companion linearisation. Real double roots come
// out as sqrt(eps)-split pairs, so nearby roots are clustered and averaged in the complex plane.
std::vector<SpectralSphere> s_spectrum(const OperatorTuple& T) {
  const int d = T.dim();
  Mat C = Mat::Zero(2 * d, 2 * d);
  C.topRightCorner(d, d) = Mat::Identity(d, d);
  C.bottomLeftCorner(d, d) = -T.abs2();
  C.bottomRightCorner(d, d) = 2.0 * T[0];
  Eigen::EigenSolver<Mat> es(C, false);
  if (es.info() != Eigen::Success) throw Error(Errc::EigensolverFailure, "companion eigensolver failed");
  const Eigen::VectorXcd ev = es.eigenvalues();
  const int n = static_cast<int>(ev.size());

  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  constexpr double kCluster = 1e-5;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(ev[i] - ev[j]) < kCluster * (1.0 + std::abs(ev[i]))) parent[find(i)] = find(j);

  std::vector<std::complex<double>> sum(n, 0.0);
  std::vector<int> cnt(n, 0);
  for (int i = 0; i < n; ++i) {
    sum[find(i)] += ev[i];
    ++cnt[find(i)];
  }
  std::vector<SpectralSphere> out;
  for (int i = 0; i < n; ++i) {
    if (cnt[i] == 0) continue;
    const std::complex<double> mu = sum[i] / double(cnt[i]);
    const SpectralSphere sp{mu.real(), std::abs(mu.imag())};
    const bool dup = std::any_of(out.begin(), out.end(), [&](const SpectralSphere& o) {
      return std::hypot(o.u - sp.u, o.v - sp.v) < kCluster * (1.0 + std::abs(mu));
    });
    if (!dup) out.push_back(sp);
  }
  std::sort(out.begin(), out.end(),
            [](const SpectralSphere& a, const SpectralSphere& b) { return a.u < b.u || (a.u == b.u && a.v < b.v); });
  return out;
}

// ---- CliffordMatrix ----

CliffordMatrix::CliffordMatrix(int d) : d_(d) {
  for (auto& b : blocks_) b = Mat::Zero(d, d);
}

CliffordMatrix CliffordMatrix::identity(int d) { return scalar(Mat::Identity(d, d)); }

CliffordMatrix CliffordMatrix::scalar(const Mat& m) {
  CliffordMatrix r(static_cast<int>(m.rows()));
  r.add_block(0, m);
  return r;
}

CliffordMatrix CliffordMatrix::constant(const MV& c, int d) {
  CliffordMatrix r(d);
  for (int b = 0; b < kBlades; ++b)
    if (c[b] != 0.0) r.add_block(b, c[b] * Mat::Identity(d, d));
  return r;
}

CliffordMatrix CliffordMatrix::of(const OperatorTuple& T) {
  CliffordMatrix r = scalar(T[0]);
  for (int k = 1; k < 6; ++k)
    if (!T[k].isZero(0.0)) r.add_block(1 << (k - 1), T[k]);
  return r;
}

void CliffordMatrix::add_block(int b, const Mat& m) {
  blocks_[b] += m;
  mask_ |= 1u << b;
}

double CliffordMatrix::norm() const {
  double s = 0;
  for (int b = 0; b < kBlades; ++b)
    if (has(b)) s += blocks_[b].squaredNorm();
  return std::sqrt(s);
}

MV CliffordMatrix::entry(int i, int j) const {
  MV m;
  for (int b = 0; b < kBlades; ++b)
    if (has(b)) m[b] = blocks_[b](i, j);
  return m;
}

CliffordMatrix& CliffordMatrix::operator+=(const CliffordMatrix& o) {
  for (int b = 0; b < kBlades; ++b)
    if (o.has(b)) add_block(b, o.blocks_[b]);
  return *this;
}

CliffordMatrix& CliffordMatrix::operator-=(const CliffordMatrix& o) {
  for (int b = 0; b < kBlades; ++b)
    if (o.has(b)) add_block(b, -o.blocks_[b]);
  return *this;
}

CliffordMatrix& CliffordMatrix::operator*=(double s) {
  for (int b = 0; b < kBlades; ++b)
    if (has(b)) blocks_[b] *= s;
  return *this;
}

CliffordMatrix operator*(const CliffordMatrix& a, const CliffordMatrix& b) {
  CliffordMatrix r(a.d_);
  for (int i = 0; i < kBlades; ++i) {
    if (!a.has(i)) continue;
    for (int j = 0; j < kBlades; ++j) {
      if (!b.has(j)) continue;
      const int sg = detail::kSign[i][j];
      const Mat p = a.blocks_[i] * b.blocks_[j];
      r.add_block(i ^ j, sg > 0 ? p : Mat(-p));
    }
  }
  return r;
}

CliffordMatrix operator*(const CliffordMatrix& a, const MV& c) {
  CliffordMatrix r(a.d_);
  for (int i = 0; i < kBlades; ++i) {
    if (!a.has(i)) continue;
    for (int j = 0; j < kBlades; ++j)
      if (c[j] != 0.0) r.add_block(i ^ j, (detail::kSign[i][j] * c[j]) * a.blocks_[i]);
  }
  return r;
}

CliffordMatrix operator*(const MV& c, const CliffordMatrix& a) {
  CliffordMatrix r(a.d_);
  for (int j = 0; j < kBlades; ++j) {
    if (c[j] == 0.0) continue;
    for (int i = 0; i < kBlades; ++i)
      if (a.has(i)) r.add_block(j ^ i, (detail::kSign[j][i] * c[j]) * a.blocks_[i]);
  }
  return r;
}

CliffordMatrix SliceMatrix::clifford() const {
  CliffordMatrix r = CliffordMatrix::scalar(Z.real());
  const Mat Y = Z.imag();
  for (int k = 1; k < 6; ++k)
    if (J[k] != 0.0) r.add_block(1 << (k - 1), J[k] * Y);
  return r;
}

// ---- resolvents ----

std::pair<PV, std::complex<double>> slice_of(const PV& s) {
  const double r = s.vec_norm();
  if (r == 0.0) return {PV::basis(1), {s[0], 0.0}};
  return {s.vec() * (1.0 / r), {s[0], r}};
}

SliceMatrix q_slice(const OperatorTuple& T, const PV& s, int k) {
  const auto [J, z] = slice_of(s);
  for (const auto& sp : T.spectrum())
    if (std::hypot(sp.u - z.real(), sp.v - z.imag()) <= 1e-8)
      throw Error(Errc::OnSpectrum, "s lies on a sphere of the S-spectrum");
  const int d = T.dim();
  const CMat Q = z * z * CMat::Identity(d, d) - 2.0 * z * T[0].cast<std::complex<double>>() +
                 T.abs2().cast<std::complex<double>>();
  const Eigen::PartialPivLU<CMat> lu(Q);
  if (!(lu.rcond() > 1e-14)) throw Error(Errc::SingularSolve, "Q_{c,s}(T) is numerically singular");
  const CMat Qi = lu.inverse();
  CMat P = CMat::Identity(d, d);
  for (int i = 0; i < k; ++i) P = P * Qi;
  return slice_scalar(J, P);
}

CliffordMatrix q_resolvent(const OperatorTuple& T, const PV& s, int k) { return q_slice(T, s, k).clifford(); }

CliffordMatrix sc_resolvent(Side side, const OperatorTuple& T, const PV& s) {
  const CliffordMatrix a = s_minus(T, s, true);
  const CliffordMatrix q = q_resolvent(T, s, 1);
  return side == Side::Left ? a * q : q * a;
}

CliffordMatrix f5_resolvent(Side side, const OperatorTuple& T, const PV& s) {
  const CliffordMatrix a = s_minus(T, s, true);
  const CliffordMatrix q = q_resolvent(T, s, 3);
  return (side == Side::Left ? a * q : q * a) * kGamma5;
}

CliffordMatrix fine_resolvent(KernelKind kind, Side side, const OperatorTuple& T, const PV& s) {
  const bool L = side == Side::Left;
  auto sandwich = [&](const CliffordMatrix& a, const CliffordMatrix& q) { return L ? a * q : q * a; };
  switch (kind) {
    case KernelKind::Cauchy:
      return sc_resolvent(side, T, s);
    case KernelKind::F5:
      return f5_resolvent(side, T, s);
    case KernelKind::D:
      return q_resolvent(T, s, 1) * -4.0;
    case KernelKind::Delta:
      return sandwich(s_minus(T, s, true), q_resolvent(T, s, 2)) * -8.0;
    case KernelKind::DeltaD:
      return q_resolvent(T, s, 2) * 16.0;
    case KernelKind::Dbar: {
      SliceMatrix q = q_slice(T, s, 2);
      q.Z = q.Z * s_minus_t0(T, slice_of(s).second);
      return sandwich(s_minus(T, s, true), q.clifford()) * 4.0 + q_resolvent(T, s, 1) * 2.0;
    }
    case KernelKind::Dbar2: {
      SliceMatrix q = q_slice(T, s, 3);
      const CMat a = s_minus_t0(T, slice_of(s).second);
      q.Z = q.Z * a * a;
      return sandwich(s_minus(T, s, true), q.clifford()) * 32.0;
    }
    case KernelKind::D2:
      return sandwich(s_minus(T, s, false), q_resolvent(T, s, 2)) * -8.0;
    case KernelKind::DeltaDbar: {
      SliceMatrix q = q_slice(T, s, 3);
      q.Z = q.Z * s_minus_t0(T, slice_of(s).second);
      return sandwich(s_minus(T, s, true), q.clifford()) * -64.0;
    }
  }
  return CliffordMatrix(T.dim());
}

CliffordMatrix fine_resolvent_via_f5(KernelKind kind, Side side, const OperatorTuple& T, const PV& s) {
  const int d = T.dim();
  const bool L = side == Side::Left;
  const CliffordMatrix F = f5_resolvent(side, T, s);
  const CliffordMatrix one = CliffordMatrix::identity(d);
  const CliffordMatrix Tm = CliffordMatrix::of(T);
  const Mat& T0 = T[0];
  const Mat n2 = T.abs2();
  const MV s1 = s.mv();
  const MV s2 = slice_mul(s, s).mv();
  const MV s3 = power(s, 3).mv();
  const MV e(1.0);
  auto sc = [](const Mat& m) { return CliffordMatrix::scalar(m); };
  auto term = [&](const CliffordMatrix& p, const MV& sk) { return L ? p * F * sk : sk * F * p; };
  switch (kind) {
    case KernelKind::F5:
      return F;
    case KernelKind::D:
      return (term(one, s3) - term(Tm + sc(2.0 * T0), s2) + term(Tm * sc(2.0 * T0) + sc(n2), s1) -
              term(Tm * sc(n2), e)) *
             (-1.0 / 16.0);
    case KernelKind::Delta:
      return (term(one, s2) - term(sc(2.0 * T0), s1) + term(sc(n2), e)) * (-1.0 / 8.0);
    case KernelKind::DeltaD:
      return (term(one, s1) - term(Tm, e)) * 0.25;
    case KernelKind::Dbar:
      return (term(one * 3.0, s3) - term(sc(8.0 * T0) + Tm, s2) +
              term(sc(4.0 * T0 * T0 + 3.0 * n2) + Tm * sc(2.0 * T0), s1) - term(Tm * sc(n2) + sc(2.0 * T0 * n2), e)) *
             (1.0 / 32.0);
    case KernelKind::D2:
      return (term(one, s2) - term(Tm * 2.0, s1) + term(Tm * Tm, e)) * (-1.0 / 8.0);
    case KernelKind::Dbar2:
      return (term(one, s2) - term(sc(2.0 * T0), s1) + term(sc(T0 * T0), e)) * 0.5;
    case KernelKind::DeltaDbar:
      return term(sc(T0), e) - term(one, s1);
    case KernelKind::Cauchy:
      break;
  }
  throw Error(Errc::ConfigError, "no F5 combination for the SC resolvent");
}

CliffordMatrix fine_resolvent_series(KernelKind kind, Side side, const OperatorTuple& T, const PV& s, int N) {
  if (T.norm() >= s.norm()) throw Error(Errc::OutsideConvergenceDisk, "sum ||T_A|| must be below |s|");
  const int d = T.dim();
  const AxialPowers ap(T, N);
  const std::vector<Axial> P = series_axial(kind, ap, N);
  const auto [J, z] = slice_of(s);
  Mat SX = Mat::Zero(d, d), SXJ = SX, SY = SX, SYJ = SX;
  const std::complex<double> zi = 1.0 / z;
  std::complex<double> w = zi;
  for (int m = 0; m <= N; ++m) {
    SX += w.real() * P[m].X;
    SXJ += w.imag() * P[m].X;
    SY += w.real() * P[m].Y;
    SYJ += w.imag() * P[m].Y;
    w *= zi;
  }
  const MV Jm = J.mv();
  CliffordMatrix r = CliffordMatrix::scalar(SX) + vec_times(T, SY);
  const CliffordMatrix jpart = CliffordMatrix::scalar(SXJ) + vec_times(T, SYJ);
  r += side == Side::Left ? jpart * Jm : Jm * jpart;
  return r;
}

CliffordMatrix f5_p0_residual(const OperatorTuple& T, const PV& s) {
  const CliffordMatrix F = f5_resolvent(Side::Left, T, s);
  return F * s.mv() - CliffordMatrix::of(T) * F - q_resolvent(T, s, 2) * kGamma5;
}

// ---- calculi ----

bool spectrum_enclosed(const OperatorTuple& T, const Contour<double>& c) {
  for (const auto& sp : T.spectrum())
    if (!(std::hypot(sp.u - c.center, sp.v) < c.radius * (1.0 - 1e-9))) return false;
  return true;
}

double default_radius(const OperatorTuple& T) {
  const double r = 1.25 * T.norm();
  return r > 0.0 ? r : 1.0;
}

namespace {

CliffordMatrix integrate(KernelKind kind, Side side, const SlicePolynomial<double>& P, const OperatorTuple& T,
                         const Contour<double>& c) {
  CliffordMatrix acc(T.dim());
  for (int i = 0; i < c.size(); ++i) {
    const PV& s = c.nodes[i];
    const CliffordMatrix K = fine_resolvent(kind, side, T, s);
    const MV f = eval_slice_poly(P, s);
    acc += side == Side::Left ? K * (c.dsJ[i] * f) : (f * c.dsJ[i]) * K;
  }
  return acc * (1.0 / (2.0 * std::numbers::pi));
}

}  // namespace

CliffordMatrix poly_calculus_integral(KernelKind kind, Side side, const SlicePolynomial<double>& P,
                                      const OperatorTuple& T, const Contour<double>& c) {
  if (!spectrum_enclosed(T, c)) throw Error(Errc::SpectrumNotEnclosed, "contour does not enclose the S-spectrum");
  return integrate(kind, side, P, T, c);
}

CliffordMatrix poly_calculus_integral(KernelKind kind, Side side,
                                      const std::vector<std::pair<Contour<double>, SlicePolynomial<double>>>& parts,
                                      const OperatorTuple& T) {
  for (const auto& sp : T.spectrum()) {
    const bool in = std::any_of(parts.begin(), parts.end(), [&](const auto& pc) {
      return std::hypot(sp.u - pc.first.center, sp.v) < pc.first.radius * (1.0 - 1e-9);
    });
    if (!in) throw Error(Errc::SpectrumNotEnclosed, "a spectral sphere lies outside every contour");
  }
  CliffordMatrix acc(T.dim());
  for (const auto& [c, P] : parts) acc += integrate(kind, side, P, T, c);
  return acc;
}

CliffordMatrix poly_calculus_exact(KernelKind kind, Side side, const SlicePolynomial<double>& P,
                                   const OperatorTuple& T) {
  const int d = T.dim();
  const int n = std::max(P.degree(), 0);
  const AxialPowers ap(T, n);
  CliffordMatrix acc(d);
  for (int m = 0; m <= P.degree(); ++m) {
    const MV& a = P.coeffs[m];
    if (a.is_zero()) continue;
    Axial img{Mat::Zero(d, d), Mat::Zero(d, d)};
    if (kind == KernelKind::Cauchy) {
      img = ap.tp[m];
    } else if (kind == KernelKind::F5) {
      const CanonicalPoly<double> ci = kind_image<double>(kind, m);
      for (const auto& [k, c] : ci.terms()) {
        const Axial t = ap.canonical_term(k.first, k.second);
        img.X += c.scalar() * t.X;
        img.Y += c.scalar() * t.Y;
      }
    } else {
      for (const auto& t : monomial_image<double>(kind, m).terms) {
        const Axial x = ap.xbar_term(t.a, t.b);
        img.X += t.c.scalar() * x.X;
        img.Y += t.c.scalar() * x.Y;
      }
    }
    const CliffordMatrix im = to_clifford(img, T);
    acc += side == Side::Left ? im * a : a * im;
  }
  return acc;
}

CliffordMatrix f_resolvent_equation_residual(const OperatorTuple& T, const PV& s, const PV& p) {
  const PV qsp = slice_mul(p, p) - p * (2.0 * s[0]) + PV(s.norm2());
  if (qsp.norm() <= 1e-10 * (1.0 + s.norm2() + p.norm2()))
    throw Error(Errc::SpectralSphereHit, "p lies on the sphere [s]");
  const CliffordMatrix FRs = f5_resolvent(Side::Right, T, s);
  const CliffordMatrix FLp = f5_resolvent(Side::Left, T, p);
  const CliffordMatrix SLp = sc_resolvent(Side::Left, T, p);
  const CliffordMatrix SRs = sc_resolvent(Side::Right, T, s);
  const CliffordMatrix Qs1 = q_resolvent(T, s, 1), Qs2 = q_resolvent(T, s, 2);
  const CliffordMatrix Qp1 = q_resolvent(T, p, 1), Qp2 = q_resolvent(T, p, 2);
  const CliffordMatrix lhs = FRs * SLp + SRs * FLp + (Qs1 * SRs * SLp * Qp1) * kGamma5 +
                             (Qs2 * Qp1 + Qs1 * Qp2) * kGamma5;
  const CliffordMatrix A = FRs - FLp;
  const CliffordMatrix rhs = (A * p.mv() - conj(s).mv() * A) * inverse(qsp).mv();
  return lhs - rhs;
}

CliffordMatrix product_rule_residual(const SlicePolynomial<double>& f, const SlicePolynomial<double>& g,
                                     const OperatorTuple& T, const Contour<double>& c) {
  if (!is_intrinsic(f)) throw Error(Errc::NotIntrinsic, "f must have real coefficients");
  if (!spectrum_enclosed(T, c)) throw Error(Errc::SpectrumNotEnclosed, "contour does not enclose the S-spectrum");
  auto at = [&](KernelKind k, const SlicePolynomial<double>& P) {
    return poly_calculus_integral(k, Side::Left, P, T, c);
  };
  using K = KernelKind;
  const CliffordMatrix lhs = at(K::F5, multiply_intrinsic(f, g));
  const CliffordMatrix rhs = at(K::F5, f) * at(K::Cauchy, g) + at(K::Cauchy, f) * at(K::F5, g) +
                             at(K::Delta, f) * at(K::Delta, g) - at(K::DeltaD, f) * at(K::D, g) -
                             at(K::D, f) * at(K::DeltaD, g);
  return lhs - rhs;
}

}  // namespace fs5
