#pragma once

#include <Eigen/Core>

#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <ostream>
#include <utility>

#include "fs5/error.hpp"

namespace fs5 {

inline constexpr int kGenerators = 5;
inline constexpr int kBlades = 1 << kGenerators;

// Bit i-1 set <=> e_i belongs to the index set; 0 is the scalar unit.
using Blade = std::uint8_t;

constexpr int blade_grade(Blade b) { return std::popcount(static_cast<unsigned>(b)); }

// Sign of e_a e_b once reordered ascending; shared generators contribute e_i^2 = -1.
constexpr int blade_sign(Blade a, Blade b) {
  int swaps = 0;
  for (unsigned t = static_cast<unsigned>(a) >> 1; t != 0; t >>= 1)
    swaps += std::popcount(t & b);
  swaps += std::popcount(static_cast<unsigned>(a & b));
  return (swaps & 1) ? -1 : 1;
}

constexpr std::pair<int, Blade> blade_product(Blade a, Blade b) {
  return {blade_sign(a, b), static_cast<Blade>(a ^ b)};
}

namespace detail {
constexpr auto make_sign_table() {
  std::array<std::array<signed char, kBlades>, kBlades> t{};
  for (int i = 0; i < kBlades; ++i)
    for (int j = 0; j < kBlades; ++j)
      t[i][j] = static_cast<signed char>(blade_sign(Blade(i), Blade(j)));
  return t;
}
inline constexpr auto kSign = make_sign_table();
}  // namespace detail

template <class S>
class Multivector {
 public:
  using Scalar = S;
  using Coeffs = Eigen::Matrix<S, kBlades, 1>;

  Multivector() : c_(Coeffs::Zero()) {}
  Multivector(S scalar) : c_(Coeffs::Zero()) { c_[0] = scalar; }  // NOLINT: scalars embed
  explicit Multivector(const Coeffs& c) : c_(c) {}

  static Multivector blade(Blade b, S v = S(1)) {
    Multivector m;
    m.c_[b] = v;
    return m;
  }
  // e(0) is the unit, e(i) the generator e_i.
  static Multivector e(int i) { return blade(i == 0 ? Blade(0) : Blade(1u << (i - 1))); }

  S& operator[](int b) { return c_[b]; }
  const S& operator[](int b) const { return c_[b]; }
  const Coeffs& coeffs() const { return c_; }
  Coeffs& coeffs() { return c_; }

  S scalar() const { return c_[0]; }

  bool is_zero() const { return (c_.array() == S(0)).all(); }
  bool is_scalar() const {
    for (int i = 1; i < kBlades; ++i)
      if (c_[i] != S(0)) return false;
    return true;
  }

  // Max-abs coefficient norm.
  S norm_inf() const { return c_.cwiseAbs().maxCoeff(); }
  S norm() const { return c_.norm(); }

  template <class T>
  Multivector<T> cast() const { return Multivector<T>(c_.template cast<T>()); }

  Multivector& operator+=(const Multivector& o) { c_ += o.c_; return *this; }
  Multivector& operator-=(const Multivector& o) { c_ -= o.c_; return *this; }
  Multivector& operator*=(S s) { c_ *= s; return *this; }

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator-(Multivector a) { a.c_ = -a.c_; return a; }
  friend Multivector operator*(Multivector a, S s) { return a *= s; }
  friend Multivector operator*(S s, Multivector a) { return a *= s; }
  friend Multivector operator/(Multivector a, S s) { a.c_ /= s; return a; }
  friend bool operator==(const Multivector& a, const Multivector& b) { return a.c_ == b.c_; }

  friend Multivector operator*(const Multivector& a, const Multivector& b) {
    Multivector r;
    for (int i = 0; i < kBlades; ++i) {
      const S ai = a.c_[i];
      if (ai == S(0)) continue;
      for (int j = 0; j < kBlades; ++j) {
        const S bj = b.c_[j];
        if (bj == S(0)) continue;
        if (detail::kSign[i][j] > 0) r.c_[i ^ j] += ai * bj;
        else r.c_[i ^ j] -= ai * bj;
      }
    }
    return r;
  }

  friend std::ostream& operator<<(std::ostream& os, const Multivector& m) {
    bool any = false;
    for (int i = 0; i < kBlades; ++i) {
      if (m.c_[i] == S(0)) continue;
      if (any) os << " + ";
      os << m.c_[i];
      if (i != 0) {
        os << "e";
        for (int k = 0; k < kGenerators; ++k)
          if (i & (1 << k)) os << (k + 1);
      }
      any = true;
    }
    if (!any) os << "0";
    return os;
  }

 private:
  Coeffs c_;
};

template <class S>
Multivector<S> mv_linear(const Multivector<S>& a, const Multivector<S>& b, S s, S t) {
  return Multivector<S>(s * a.coeffs() + t * b.coeffs());
}

// x0 + x1 e1 + ... + x5 e5.
template <class S>
class Paravector {
 public:
  using Scalar = S;

  Paravector() { x_.fill(S(0)); }
  Paravector(S x0) { x_.fill(S(0)); x_[0] = x0; }  // NOLINT: real axis embeds
  explicit Paravector(const std::array<S, 6>& x) : x_(x) {}

  static Paravector basis(int i, S v = S(1)) {
    Paravector p;
    p.x_[i] = v;
    return p;
  }

  S& operator[](int i) { return x_[i]; }
  const S& operator[](int i) const { return x_[i]; }
  S re() const { return x_[0]; }

  S norm2() const {
    S r = S(0);
    for (S v : x_) r += v * v;
    return r;
  }
  S norm() const { return std::sqrt(norm2()); }
  S vec_norm2() const {
    S r = S(0);
    for (int i = 1; i < 6; ++i) r += x_[i] * x_[i];
    return r;
  }
  S vec_norm() const { return std::sqrt(vec_norm2()); }
  Paravector vec() const { Paravector p = *this; p.x_[0] = S(0); return p; }

  Multivector<S> mv() const {
    Multivector<S> m(x_[0]);
    for (int i = 1; i < 6; ++i) m[1 << (i - 1)] = x_[i];
    return m;
  }
  operator Multivector<S>() const { return mv(); }  // NOLINT: paravectors are multivectors

  template <class T>
  Paravector<T> cast() const {
    std::array<T, 6> y;
    for (int i = 0; i < 6; ++i) y[i] = static_cast<T>(x_[i]);
    return Paravector<T>(y);
  }

  Paravector& operator+=(const Paravector& o) { for (int i = 0; i < 6; ++i) x_[i] += o.x_[i]; return *this; }
  Paravector& operator-=(const Paravector& o) { for (int i = 0; i < 6; ++i) x_[i] -= o.x_[i]; return *this; }
  Paravector& operator*=(S s) { for (S& v : x_) v *= s; return *this; }

  friend Paravector operator+(Paravector a, const Paravector& b) { return a += b; }
  friend Paravector operator-(Paravector a, const Paravector& b) { return a -= b; }
  friend Paravector operator-(Paravector a) { return a *= S(-1); }
  friend Paravector operator*(Paravector a, S s) { return a *= s; }
  friend Paravector operator*(S s, Paravector a) { return a *= s; }
  friend bool operator==(const Paravector& a, const Paravector& b) { return a.x_ == b.x_; }

 private:
  std::array<S, 6> x_;
};

template <class S>
Multivector<S> operator*(const Paravector<S>& a, const Paravector<S>& b) { return a.mv() * b.mv(); }
template <class S>
Multivector<S> operator*(const Paravector<S>& a, const Multivector<S>& b) { return a.mv() * b; }
template <class S>
Multivector<S> operator*(const Multivector<S>& a, const Paravector<S>& b) { return a * b.mv(); }

template <class S>
Paravector<S> conj(const Paravector<S>& x) {
  Paravector<S> y = -x;
  y[0] = x[0];
  return y;
}

template <class S>
Paravector<S> inverse(const Paravector<S>& x) {
  const S n2 = x.norm2();
  if (n2 == S(0)) throw Error(Errc::ZeroParavector, "paravector has zero norm");
  return conj(x) * (S(1) / n2);
}

// Grade <= 1 part of m; callers use it where the higher grades vanish identically.
template <class S>
Paravector<S> to_paravector(const Multivector<S>& m) {
  Paravector<S> p(m[0]);
  for (int i = 1; i < 6; ++i) p[i] = m[1 << (i - 1)];
  return p;
}

// Paravectors in a common slice C_J form a commutative field, so their
// products stay paravectors; this skips the 32x32 product.
template <class S>
Paravector<S> slice_mul(const Paravector<S>& a, const Paravector<S>& b) {
  return to_paravector(a * b);
}

template <class S>
Paravector<S> power(const Paravector<S>& x, int k) {
  Paravector<S> r(S(1));
  for (int i = 0; i < k; ++i) r = slice_mul(r, x);
  return r;
}

template <class S>
struct AxisDecomposition {
  S x0;
  S r;
  std::optional<Paravector<S>> omega;
};

template <class S>
AxisDecomposition<S> axis_decompose(const Paravector<S>& x) {
  const S r = x.vec_norm();
  AxisDecomposition<S> d{x[0], r, std::nullopt};
  if (r > S(0)) d.omega = x.vec() * (S(1) / r);
  return d;
}

template <class S>
bool is_imaginary_unit(const Paravector<S>& J, S tol = S(1e-12)) {
  using std::abs;
  return abs(J[0]) <= tol && abs(J.vec_norm() - S(1)) <= tol;
}

template <class S>
Paravector<S> embed(S u, S v, const Paravector<S>& J) {
  if (!is_imaginary_unit(J)) throw Error(Errc::NotImaginaryUnit, "J must be a unit 1-vector");
  return Paravector<S>(u) + J * v;
}

// max(atol, rtol * scale) comparison used throughout.
struct Tolerance {
  double atol = 1e-12;
  double rtol = 1e-10;
  double bound(double scale) const { return std::max(atol, rtol * scale); }
};

}  // namespace fs5
