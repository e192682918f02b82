#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include "fs5/kernels.hpp"
#include "fs5/slice_poly.hpp"

namespace fs5 {

// Circle c + R e^{J theta} in C_J with uniform trapezoid nodes.
template <class S>
struct Contour {
  Paravector<S> J;
  S center = S(0);
  S radius = S(1);
  std::vector<S> theta;
  std::vector<Paravector<S>> nodes;
  // ds_J = ds (-J) = R e^{J theta} d theta, times the weight 2 pi / N.
  std::vector<Paravector<S>> dsJ;

  int size() const { return static_cast<int>(nodes.size()); }

  // Whether the axially symmetric ball bounded by this circle contains x (with margin).
  bool encloses(const Paravector<S>& x, S margin = S(0)) const {
    return std::hypot(x[0] - center, x.vec_norm()) < radius - margin;
  }
};

template <class S>
Contour<S> circle(S center, S radius, const Paravector<S>& J, int N) {
  if (!is_imaginary_unit(J)) throw Error(Errc::NotImaginaryUnit, "contour J must be a unit 1-vector");
  if (!(radius > S(0))) throw Error(Errc::DegenerateRadius, "contour radius must be positive");
  if (N < 16) throw Error(Errc::DegenerateRadius, "contour needs at least 16 nodes");
  Contour<S> c;
  c.J = J;
  c.center = center;
  c.radius = radius;
  const S two_pi = S(2) * std::numbers::pi_v<S>;
  const S w = two_pi / S(N);
  for (int i = 0; i < N; ++i) {
    const S t = two_pi * S(i) / S(N);
    const Paravector<S> e = Paravector<S>(std::cos(t)) + J * std::sin(t);
    c.theta.push_back(t);
    c.nodes.push_back(Paravector<S>(center) + e * radius);
    c.dsJ.push_back(e * (radius * w));
  }
  return c;
}

template <class S>
using SliceFn = std::function<Multivector<S>(const Paravector<S>&)>;

// (1/2 pi) sum K(s_i) dsJ_i f(s_i) for Left, f dsJ K for Right; summed in node order.
template <class S>
Multivector<S> slice_integral(const SliceFn<S>& K, const Contour<S>& c, const SliceFn<S>& f, Side side) {
  Multivector<S> acc;
  for (int i = 0; i < c.size(); ++i) {
    const Paravector<S>& s = c.nodes[i];
    acc += side == Side::Left ? K(s) * c.dsJ[i] * f(s) : f(s) * c.dsJ[i] * K(s);
  }
  return acc / (S(2) * std::numbers::pi_v<S>);
}

template <class S>
Multivector<S> fine_integral_eval(KernelKind kind, const SlicePolynomial<S>& P, const Paravector<S>& x,
                                  const Contour<S>& c) {
  if (!c.encloses(x, S(1e-6) * c.radius))
    throw Error(Errc::PointOutsideDomain, "x must lie strictly inside the contour");
  const Side side = P.side;
  SliceFn<S> K = [&](const Paravector<S>& s) { return fine_kernel(kind, side, s, x); };
  SliceFn<S> f = [&](const Paravector<S>& s) { return eval_slice_poly(P, s); };
  return slice_integral(K, c, f, side);
}

template <class S>
Multivector<S> cauchy_eval(const SlicePolynomial<S>& P, const Paravector<S>& x, const Contour<S>& c) {
  return fine_integral_eval(KernelKind::Cauchy, P, x, c);
}

}  // namespace fs5
