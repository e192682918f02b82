#pragma once

#include <cmath>
#include <vector>

#include "fs5/clifford.hpp"
#include "fs5/fueter_ops.hpp"
#include "fs5/slice_poly.hpp"

namespace fs5 {

enum class PseudoVariant { Commutative, Noncommutative };
enum class CauchyForm { I, II };

// (-1)^{(n-1)/2} 2^{n-1} [((n-1)/2)!]^2
inline double gamma_constant(int n) {
  const int h = (n - 1) / 2;
  double f = 1.0;
  for (int i = 2; i <= h; ++i) f *= i;
  return ((h & 1) ? -1.0 : 1.0) * std::ldexp(1.0, n - 1) * f * f;
}
inline constexpr double kGamma5 = 64.0;

template <class S>
Paravector<S> pseudo_kernel(PseudoVariant v, const Paravector<S>& s, const Paravector<S>& x) {
  if (v == PseudoVariant::Commutative)
    return slice_mul(s, s) - s * (S(2) * x[0]) + Paravector<S>(x.norm2());
  return slice_mul(x, x) - x * (S(2) * s[0]) + Paravector<S>(s.norm2());
}

template <class S>
Paravector<S> inverse_power(const Paravector<S>& q, int k) {
  return power(inverse(q), k);
}

namespace detail {

template <class S>
void check_sphere(const Paravector<S>& q, const Paravector<S>& s, const Paravector<S>& x) {
  if (q.norm() <= S(1e-10) * (S(1) + s.norm2() + x.norm2()))
    throw Error(Errc::SpectralSphereHit, "x lies on the sphere [s]");
}

template <class S>
Paravector<S> q_inverse(const Paravector<S>& s, const Paravector<S>& x) {
  const Paravector<S> q = pseudo_kernel(PseudoVariant::Commutative, s, x);
  check_sphere(q, s, x);
  return inverse(q);
}

}  // namespace detail

template <class S>
Multivector<S> cauchy_kernel(Side side, CauchyForm form, const Paravector<S>& s, const Paravector<S>& x) {
  if (form == CauchyForm::II) {
    const Paravector<S> qi = detail::q_inverse(s, x);
    const Paravector<S> a = s - conj(x);
    return side == Side::Left ? a * qi : qi * a;
  }
  const Paravector<S> q = pseudo_kernel(PseudoVariant::Noncommutative, s, x);
  detail::check_sphere(q, s, x);
  const Paravector<S> qi = inverse(q);
  const Paravector<S> a = conj(s) - x;
  return side == Side::Left ? qi * a : a * qi;
}

template <class S>
Multivector<S> f5_kernel(Side side, const Paravector<S>& s, const Paravector<S>& x) {
  const Paravector<S> q3 = power(detail::q_inverse(s, x), 3);
  const Paravector<S> a = s - conj(x);
  return (side == Side::Left ? a * q3 : q3 * a) * S(kGamma5);
}

template <class S>
Multivector<S> fine_kernel(KernelKind kind, Side side, const Paravector<S>& s, const Paravector<S>& x) {
  const bool L = side == Side::Left;
  const Paravector<S> qi = detail::q_inverse(s, x);
  const Paravector<S> sxb = s - conj(x);
  const Paravector<S> sx0 = s - Paravector<S>(x[0]);
  switch (kind) {
    case KernelKind::Cauchy:
      return L ? sxb * qi : qi * sxb;
    case KernelKind::F5:
      return f5_kernel(side, s, x);
    case KernelKind::D:
      return qi.mv() * S(-4);
    case KernelKind::Delta: {
      const Multivector<S> sl = L ? sxb * qi : qi * sxb;
      return (L ? sl * qi : qi * sl) * S(-8);
    }
    case KernelKind::DeltaD:
      return slice_mul(qi, qi).mv() * S(16);
    case KernelKind::Dbar: {
      const Paravector<S> q2 = slice_mul(qi, qi);
      const Multivector<S> t = L ? sxb * q2 * sx0 : sx0 * q2 * sxb;
      return t * S(4) + qi.mv() * S(2);
    }
    case KernelKind::Dbar2: {
      const Paravector<S> q3 = power(qi, 3);
      const Paravector<S> a2 = slice_mul(sx0, sx0);
      return (L ? sxb * q3 * a2 : a2 * q3 * sxb) * S(32);
    }
    case KernelKind::D2: {
      // D(Q^{-1}) = 2(s - x)Q^{-2} with the Dirac factor on the acting side.
      const Paravector<S> q2 = slice_mul(qi, qi);
      const Paravector<S> sx = s - x;
      return (L ? sx * q2 : q2 * sx) * S(-8);
    }
    case KernelKind::DeltaDbar: {
      const Paravector<S> q3 = power(qi, 3);
      return (L ? sxb * q3 * sx0 : sx0 * q3 * sxb) * S(-64);
    }
  }
  return {};
}

// D^2 kernel with the sign as commonly printed, 8 S_L^{-1}(s, xbar) Q^{-1}.
template <class S>
Multivector<S> d2_kernel_as_stated(Side side, const Paravector<S>& s, const Paravector<S>& x) {
  const Paravector<S> qi = detail::q_inverse(s, x);
  const Paravector<S> sx = s - x;
  const Paravector<S> q2 = slice_mul(qi, qi);
  return (side == Side::Left ? sx * q2 : q2 * sx) * S(8);
}

// The F5 combinations: polynomial factors in x act on the opposite side from the s powers.
template <class S>
Multivector<S> fine_kernel_via_f5(KernelKind kind, Side side, const Paravector<S>& s, const Paravector<S>& x) {
  const Multivector<S> F = f5_kernel(side, s, x);
  const bool L = side == Side::Left;
  const Multivector<S> sm = s.mv();
  const Multivector<S> s2 = slice_mul(s, s).mv();
  const Multivector<S> s3 = power(s, 3).mv();
  const S x0 = x[0];
  const S n2 = x.norm2();
  const Multivector<S> xm = x.mv();
  const Multivector<S> one(S(1));
  // term(p, k): p F s^k (Left) or s^k F p (Right).
  auto term = [&](const Multivector<S>& p, const Multivector<S>& sk) {
    return L ? p * F * sk : sk * F * p;
  };
  switch (kind) {
    case KernelKind::F5:
      return F;
    case KernelKind::D:
      return (term(one, s3) - term(xm + Multivector<S>(S(2) * x0), s2) +
              term(xm * (S(2) * x0) + Multivector<S>(n2), sm) - term(xm * n2, one)) *
             S(-1.0 / 16.0);
    case KernelKind::Delta:
      return (term(one, s2) - term(Multivector<S>(S(2) * x0), sm) + term(Multivector<S>(n2), one)) *
             S(-1.0 / 8.0);
    case KernelKind::DeltaD:
      return (term(one, sm) - term(xm, one)) * S(0.25);
    case KernelKind::Dbar:
      return (term(Multivector<S>(S(3)), s3) - term(Multivector<S>(S(8) * x0) + xm, s2) +
              term(Multivector<S>(S(4) * x0 * x0 + S(3) * n2) + xm * (S(2) * x0), sm) -
              term(xm * n2 + Multivector<S>(S(2) * x0 * n2), one)) *
             S(1.0 / 32.0);
    case KernelKind::D2:
      return (term(one, s2) - term(xm * S(2), sm) + term(slice_mul(x, x).mv(), one)) * S(-1.0 / 8.0);
    case KernelKind::Dbar2:
      return (term(one, s2) - term(Multivector<S>(S(2) * x0), sm) + term(Multivector<S>(x0 * x0), one)) *
             S(0.5);
    case KernelKind::DeltaDbar:
      return -term(one, sm) + term(Multivector<S>(x0), one);
    case KernelKind::Cauchy:
      break;
  }
  throw Error(Errc::ConfigError, "no F5 combination for the Cauchy kernel");
}

// P_m(x) for the kind's series sum_m P_m(x) s^{-1-m}; each P_m is a real polynomial in x, xbar.
template <class S>
std::vector<Paravector<S>> series_terms(KernelKind kind, const Paravector<S>& x, int N) {
  std::vector<Paravector<S>> xp(N + 1), xbp(N + 1), out(N + 1);
  xp[0] = xbp[0] = Paravector<S>(S(1));
  const Paravector<S> xb = conj(x);
  for (int i = 1; i <= N; ++i) {
    xp[i] = slice_mul(xp[i - 1], x);
    xbp[i] = slice_mul(xbp[i - 1], xb);
  }
  for (int m = 0; m <= N; ++m) {
    Paravector<S> acc;
    if (kind == KernelKind::F5) {
      acc = to_paravector(canonical_eval(kind_image<S>(kind, m), x));
    } else {
      for (const auto& t : monomial_image<S>(kind, m).terms)
        acc += slice_mul(xp[t.a], xbp[t.b]) * t.c.scalar();
    }
    out[m] = acc;
  }
  return out;
}

template <class S>
Multivector<S> fine_kernel_series(KernelKind kind, Side side, const Paravector<S>& s, const Paravector<S>& x,
                                  int N) {
  if (x.norm() >= s.norm()) throw Error(Errc::OutsideConvergenceDisk, "|x| must be below |s|");
  const std::vector<Paravector<S>> P = series_terms(kind, x, N);
  const Paravector<S> si = inverse(s);
  Paravector<S> sp = si;  // s^{-1-m}
  Multivector<S> acc;
  for (int m = 0; m <= N; ++m) {
    acc += side == Side::Left ? P[m] * sp : sp * P[m];
    sp = slice_mul(sp, si);
  }
  return acc;
}

template <class S>
Multivector<S> p0_residual(const Paravector<S>& s, const Paravector<S>& x) {
  const Multivector<S> F = f5_kernel(Side::Left, s, x);
  const Paravector<S> qi = detail::q_inverse(s, x);
  return F * s - x * F - slice_mul(qi, qi).mv() * S(kGamma5);
}

}  // namespace fs5
