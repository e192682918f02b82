#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "fs5/clifford.hpp"

namespace fs5 {

enum class Side { Left, Right };

// Left: sum x^m a_m.  Right: sum a_m x^m.
template <class S>
struct SlicePolynomial {
  Side side = Side::Left;
  std::vector<Multivector<S>> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }

  static SlicePolynomial monomial(int m, const Multivector<S>& c = Multivector<S>(S(1)),
                                  Side side = Side::Left) {
    SlicePolynomial p;
    p.side = side;
    p.coeffs.assign(m + 1, Multivector<S>());
    p.coeffs[m] = c;
    return p;
  }
  static SlicePolynomial real(std::vector<S> c, Side side = Side::Left) {
    SlicePolynomial p;
    p.side = side;
    for (S v : c) p.coeffs.emplace_back(v);
    return p;
  }

  SlicePolynomial& operator+=(const SlicePolynomial& o) {
    if (o.coeffs.size() > coeffs.size()) coeffs.resize(o.coeffs.size());
    for (std::size_t i = 0; i < o.coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
    return *this;
  }
  friend SlicePolynomial operator+(SlicePolynomial a, const SlicePolynomial& b) { return a += b; }
};

// Product of a left polynomial f (real coefficients) with a left polynomial g.
template <class S>
SlicePolynomial<S> multiply_intrinsic(const SlicePolynomial<S>& f, const SlicePolynomial<S>& g) {
  for (const auto& c : f.coeffs)
    if (!c.is_scalar()) throw Error(Errc::NotIntrinsic, "left factor must have real coefficients");
  SlicePolynomial<S> r;
  r.side = g.side;
  if (f.coeffs.empty() || g.coeffs.empty()) return r;
  r.coeffs.assign(f.coeffs.size() + g.coeffs.size() - 1, Multivector<S>());
  for (std::size_t i = 0; i < f.coeffs.size(); ++i)
    for (std::size_t j = 0; j < g.coeffs.size(); ++j)
      r.coeffs[i + j] += f.coeffs[i].scalar() * g.coeffs[j];
  return r;
}

template <class S>
bool is_intrinsic(const SlicePolynomial<S>& p) {
  for (const auto& c : p.coeffs)
    if (!c.is_scalar()) return false;
  return true;
}

template <class S>
Multivector<S> eval_slice_poly(const SlicePolynomial<S>& p, const Paravector<S>& x) {
  if (p.coeffs.empty()) return Multivector<S>();
  const Multivector<S> xm = x.mv();
  Multivector<S> r = p.coeffs.back();
  for (int m = p.degree() - 1; m >= 0; --m)
    r = (p.side == Side::Left ? xm * r : r * xm) + p.coeffs[m];
  return r;
}

// x^a xbar^b c (Left) or c x^a xbar^b (Right).
template <class S>
struct XBarTerm {
  int a;
  int b;
  Multivector<S> c;
};

template <class S>
struct XBarPolynomial {
  Side side = Side::Left;
  std::vector<XBarTerm<S>> terms;
};

template <class S>
Multivector<S> eval_xbar(const XBarPolynomial<S>& q, const Paravector<S>& x) {
  Multivector<S> r;
  const Paravector<S> xb = conj(x);
  for (const auto& t : q.terms) {
    const Multivector<S> w = slice_mul(power(x, t.a), power(xb, t.b)).mv();
    r += q.side == Side::Left ? w * t.c : t.c * w;
  }
  return r;
}

// sum x0^a xvec^b c_{a,b}; c sits right of the monomial for Left, left of it for Right.
template <class S>
class CanonicalPoly {
 public:
  using Key = std::pair<int, int>;
  using Map = std::map<Key, Multivector<S>>;

  CanonicalPoly() = default;
  explicit CanonicalPoly(Side side) : side_(side) {}

  Side side() const { return side_; }
  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(int a, int b, const Multivector<S>& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(Key{a, b}, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Multivector<S> coeff(int a, int b) const {
    auto it = terms_.find(Key{a, b});
    return it == terms_.end() ? Multivector<S>() : it->second;
  }

  int degree() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first + k.second);
    return d;
  }

  CanonicalPoly& operator+=(const CanonicalPoly& o) {
    for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
    return *this;
  }
  CanonicalPoly& operator-=(const CanonicalPoly& o) {
    for (const auto& [k, c] : o.terms_) add(k.first, k.second, -c);
    return *this;
  }
  CanonicalPoly& operator*=(S s) {
    if (s == S(0)) { terms_.clear(); return *this; }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }
  friend CanonicalPoly operator+(CanonicalPoly a, const CanonicalPoly& b) { return a += b; }
  friend CanonicalPoly operator-(CanonicalPoly a, const CanonicalPoly& b) { return a -= b; }
  friend CanonicalPoly operator*(CanonicalPoly a, S s) { return a *= s; }
  friend bool operator==(const CanonicalPoly& a, const CanonicalPoly& b) {
    return a.side_ == b.side_ && a.terms_ == b.terms_;
  }

  template <class T>
  CanonicalPoly<T> cast() const {
    CanonicalPoly<T> r(side_);
    for (const auto& [k, c] : terms_) r.add(k.first, k.second, c.template cast<T>());
    return r;
  }

 private:
  Side side_ = Side::Left;
  Map terms_;
};

inline std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

template <class S>
CanonicalPoly<S> to_canonical(const SlicePolynomial<S>& p) {
  CanonicalPoly<S> r(p.side);
  for (int m = 0; m <= p.degree(); ++m) {
    if (p.coeffs[m].is_zero()) continue;
    for (int k = 0; k <= m; ++k) r.add(m - k, k, S(binomial(m, k)) * p.coeffs[m]);
  }
  return r;
}

// (x0 + xv)^a (x0 - xv)^b: every factor commutes, so this is a plain bivariate expansion.
template <class S>
CanonicalPoly<S> to_canonical(const XBarPolynomial<S>& q) {
  CanonicalPoly<S> r(q.side);
  for (const auto& t : q.terms)
    for (int i = 0; i <= t.a; ++i)
      for (int j = 0; j <= t.b; ++j) {
        const std::int64_t w = binomial(t.a, i) * binomial(t.b, j) * ((j & 1) ? -1 : 1);
        r.add(t.a - i + t.b - j, i + j, S(w) * t.c);
      }
  return r;
}

// xvec^b = (-1)^{b/2} r^b for even b and (-1)^{(b-1)/2} r^{b-1} xvec for odd b.
template <class S>
Multivector<S> xvec_power(const Paravector<S>& x, int b) {
  const S r2 = x.vec_norm2();
  S mag = S(1);
  for (int i = 0; i < b / 2; ++i) mag *= r2;
  if ((b / 2) & 1) mag = -mag;
  if (b % 2 == 0) return Multivector<S>(mag);
  return x.vec().mv() * mag;
}

template <class S>
Multivector<S> canonical_eval(const CanonicalPoly<S>& c, const Paravector<S>& x) {
  Multivector<S> r;
  for (const auto& [k, coef] : c.terms()) {
    S x0a = S(1);
    for (int i = 0; i < k.first; ++i) x0a *= x[0];
    const Multivector<S> w = xvec_power(x, k.second) * x0a;
    r += c.side() == Side::Left ? w * coef : coef * w;
  }
  return r;
}

template <class S>
using StemFn = std::function<Multivector<S>(S, S)>;

template <class S>
struct StemPair {
  StemFn<S> alpha;
  StemFn<S> beta;
};

template <class S>
Multivector<S> extend_stem(const StemPair<S>& st, const Paravector<S>& x, S atol = S(1e-12)) {
  const auto d = axis_decompose(x);
  if (!d.omega) {
    if (st.beta(d.x0, S(0)).norm_inf() > atol)
      throw Error(Errc::AxisSingularity, "beta(x0, 0) must vanish on the real axis");
    return st.alpha(d.x0, S(0));
  }
  return st.alpha(d.x0, d.r) + d.omega->mv() * st.beta(d.x0, d.r);
}

// Stem of an intrinsic polynomial: p(u + iv) = alpha + i beta with real alpha, beta.
template <class S>
StemPair<S> intrinsic_stem(const SlicePolynomial<S>& p) {
  std::vector<S> c;
  for (const auto& m : p.coeffs) c.push_back(m.scalar());
  auto eval = [c](S u, S v) {
    S re = S(0), im = S(0);
    for (int m = static_cast<int>(c.size()) - 1; m >= 0; --m) {
      const S nr = re * u - im * v + c[m];
      im = re * v + im * u;
      re = nr;
    }
    return std::pair<S, S>{re, im};
  };
  return {[eval](S u, S v) { return Multivector<S>(eval(u, v).first); },
          [eval](S u, S v) { return Multivector<S>(eval(u, v).second); }};
}

}  // namespace fs5
