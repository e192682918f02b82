#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fs5/clifford.hpp"
#include "fs5/slice_poly.hpp"

namespace fs5 {

enum class Letter { D, Dbar, Delta };
using OpWord = std::vector<Letter>;

// Delta^delta D^d Dbar^dbar with D Dbar folded into Delta.
struct NormalWord {
  int delta = 0;
  int d = 0;
  int dbar = 0;
  int order() const { return 2 * delta + d + dbar; }
  friend bool operator==(const NormalWord&, const NormalWord&) = default;
};

NormalWord normalize(const OpWord& w);
OpWord expand(const NormalWord& n);
std::string word_name(const NormalWord& n);

enum class BasicOp { D, Dbar, Delta, Dx0, Dradial };

enum class KernelKind { Cauchy, F5, D, Delta, DeltaD, Dbar, Dbar2, D2, DeltaDbar };

inline constexpr std::array<KernelKind, 7> kTabulatedKinds = {
    KernelKind::D,    KernelKind::Delta, KernelKind::D2,       KernelKind::DeltaD,
    KernelKind::Dbar, KernelKind::Dbar2, KernelKind::DeltaDbar};
inline constexpr std::array<KernelKind, 8> kFineKinds = {
    KernelKind::D,    KernelKind::Delta, KernelKind::D2,        KernelKind::DeltaD,
    KernelKind::Dbar, KernelKind::Dbar2, KernelKind::DeltaDbar, KernelKind::F5};

OpWord word_of(KernelKind k);
const char* kind_name(KernelKind k);
// Total derivative order of the kind's operator.
int kind_degree(KernelKind k);

// ---- exact operators on CanonicalPoly ----

template <class S>
CanonicalPoly<S> apply_operator(BasicOp op, const CanonicalPoly<S>& c) {
  CanonicalPoly<S> r(c.side());
  switch (op) {
    case BasicOp::Dx0:
      for (const auto& [k, v] : c.terms())
        if (k.first > 0) r.add(k.first - 1, k.second, S(k.first) * v);
      return r;
    case BasicOp::Dradial:
      for (const auto& [k, v] : c.terms()) {
        const int b = k.second;
        if (b == 0) continue;
        const int f = (b % 2 == 0) ? -b : -(b + 4);
        r.add(k.first, b - 1, S(f) * v);
      }
      return r;
    case BasicOp::D:
      return apply_operator(BasicOp::Dx0, c) + apply_operator(BasicOp::Dradial, c);
    case BasicOp::Dbar:
      return apply_operator(BasicOp::Dx0, c) - apply_operator(BasicOp::Dradial, c);
    case BasicOp::Delta:
      return apply_operator(BasicOp::D, apply_operator(BasicOp::Dbar, c));
  }
  return r;
}

inline BasicOp basic_of(Letter l) {
  switch (l) {
    case Letter::D: return BasicOp::D;
    case Letter::Dbar: return BasicOp::Dbar;
    case Letter::Delta: return BasicOp::Delta;
  }
  return BasicOp::D;
}

template <class S>
CanonicalPoly<S> apply_word(const OpWord& w, CanonicalPoly<S> c) {
  for (Letter l : w) c = apply_operator(basic_of(l), c);
  return c;
}

template <class S>
CanonicalPoly<S> apply_word(const OpWord& w, const SlicePolynomial<S>& p) {
  return apply_word(w, to_canonical(p));
}

// Tabulated image of x^m under a fine-structure operator, as an x/xbar polynomial.
template <class S>
XBarPolynomial<S> monomial_image(KernelKind kind, int m, Side side = Side::Left) {
  XBarPolynomial<S> q;
  q.side = side;
  auto push = [&](int a, int b, long long c) {
    if (c != 0) q.terms.push_back({a, b, Multivector<S>(S(c))});
  };
  if (m < kind_degree(kind)) return q;
  switch (kind) {
    case KernelKind::Cauchy:
      push(m, 0, 1);
      break;
    case KernelKind::D:
      for (int k = 1; k <= m; ++k) push(m - k, k - 1, -4);
      break;
    case KernelKind::Delta:
      for (int k = 1; k <= m - 1; ++k) push(m - k - 1, k - 1, -8LL * (m - k));
      break;
    case KernelKind::D2:
      for (int k = 1; k <= m - 1; ++k) push(m - k - 1, k - 1, -8LL * k);
      break;
    case KernelKind::DeltaD:
      for (int k = 1; k <= m - 2; ++k) push(m - k - 2, k - 1, 16LL * (m - k - 1) * k);
      break;
    case KernelKind::Dbar:
      push(m - 1, 0, 2LL * m);
      for (int k = 1; k <= m; ++k) push(m - k, k - 1, 4);
      break;
    case KernelKind::Dbar2:
      push(m - 2, 0, 4LL * m * (m - 1));
      for (int k = 1; k <= m - 1; ++k) push(m - k - 1, k - 1, 8LL * (2 * m - k));
      break;
    case KernelKind::DeltaDbar:
      for (int k = 1; k <= m - 2; ++k) push(m - k - 2, k - 1, -16LL * (m - k - 1) * (m + k));
      break;
    case KernelKind::F5:
      throw Error(Errc::ConfigError, "no tabulated monomial image for F5; use apply_word");
  }
  return q;
}

// Image of x^m under the kind, in canonical form: tables where they exist, the engine for F5.
template <class S>
CanonicalPoly<S> kind_image(KernelKind kind, int m, Side side = Side::Left) {
  if (kind == KernelKind::F5)
    return apply_word(word_of(kind), SlicePolynomial<S>::monomial(m, Multivector<S>(S(1)), side));
  return to_canonical(monomial_image<S>(kind, m, side));
}

// ---- fine-structure spaces ----

enum class FineSpace { AM, AH, ABH, ACH1, AntiACH1, AP2, AP3, APC12, SH };
inline constexpr std::array<FineSpace, 9> kAllSpaces = {
    FineSpace::AM,  FineSpace::AH,  FineSpace::ABH,   FineSpace::ACH1, FineSpace::AntiACH1,
    FineSpace::AP2, FineSpace::AP3, FineSpace::APC12, FineSpace::SH};

const char* space_name(FineSpace f);
// SH carries the Fueter-Sce endpoint D Delta^2, which annihilates every slice polynomial.
NormalWord annihilator(FineSpace f);
std::optional<FineSpace> space_of_annihilator(const NormalWord& n);

template <class S>
std::set<FineSpace> classify_space(const CanonicalPoly<S>& c) {
  std::set<FineSpace> out;
  for (FineSpace f : kAllSpaces)
    if (apply_word(expand(annihilator(f)), c).is_zero()) out.insert(f);
  return out;
}

template <class S>
std::set<FineSpace> classify_space(const SlicePolynomial<S>& p) {
  return classify_space(to_canonical(p));
}

enum class Block { D, Dbar, Delta, D2, Dbar2 };
const char* block_name(Block b);
NormalWord block_word(Block b);

struct Factorization {
  std::vector<Block> word;
  std::vector<FineSpace> labels;
};

std::vector<Factorization> enumerate_factorizations(bool coarse);
// Label of a prefix: the space annihilated by D composed with the remainder of Delta^2.
std::optional<FineSpace> prefix_label(const NormalWord& prefix);

// ---- finite-difference oracle ----

template <class S>
using ParaFn = std::function<Multivector<S>(const Paravector<S>&)>;
template <class S>
using DomainFn = std::function<bool(const Paravector<S>&)>;

namespace detail {

using MultiIndex = std::array<int, 6>;

template <class S>
using DiffPoly = std::map<MultiIndex, Multivector<S>>;

template <class S>
DiffPoly<S> letter_poly(Letter l) {
  DiffPoly<S> p;
  MultiIndex a{};
  a[0] = 1;
  if (l == Letter::Delta) {
    for (int i = 0; i < 6; ++i) {
      MultiIndex b{};
      b[i] = 2;
      p[b] = Multivector<S>(S(1));
    }
    return p;
  }
  p[a] = Multivector<S>(S(1));
  const S sgn = l == Letter::D ? S(1) : S(-1);
  for (int i = 1; i < 6; ++i) {
    MultiIndex b{};
    b[i] = 1;
    p[b] = Multivector<S>::e(i) * sgn;
  }
  return p;
}

// Left action: outer(inner f) has coefficient outer_a * inner_b; Right mirrors the product.
template <class S>
DiffPoly<S> compose(const DiffPoly<S>& outer, const DiffPoly<S>& inner, Side side) {
  DiffPoly<S> r;
  for (const auto& [a, ca] : outer)
    for (const auto& [b, cb] : inner) {
      MultiIndex k;
      for (int i = 0; i < 6; ++i) k[i] = a[i] + b[i];
      r[k] += side == Side::Left ? ca * cb : cb * ca;
    }
  for (auto it = r.begin(); it != r.end();) it = it->second.is_zero() ? r.erase(it) : std::next(it);
  return r;
}

// Second-order central stencils (offset, weight) for derivative orders 0..4.
inline const std::vector<std::pair<int, double>>& stencil(int order) {
  static const std::vector<std::pair<int, double>> s[5] = {
      {{0, 1.0}},
      {{-1, -0.5}, {1, 0.5}},
      {{-1, 1.0}, {0, -2.0}, {1, 1.0}},
      {{-2, -0.5}, {-1, 1.0}, {1, -1.0}, {2, 0.5}},
      {{-2, 1.0}, {-1, -4.0}, {0, 6.0}, {1, -4.0}, {2, 1.0}}};
  if (order < 0 || order > 4) throw Error(Errc::StencilOutOfDomain, "stencil order above 4");
  return s[order];
}

}  // namespace detail

// Central differences of second order per coordinate, combined over the word's
// expansion into mixed partials, then one Richardson level (h, 2h): O(h^4).
template <class S>
Multivector<S> fd_apply(const OpWord& w, const ParaFn<S>& f, const Paravector<S>& x, S h,
                        Side side = Side::Left, const DomainFn<S>& domain = nullptr) {
  using detail::MultiIndex;
  detail::DiffPoly<S> op;
  op[MultiIndex{}] = Multivector<S>(S(1));
  for (Letter l : w) op = detail::compose(detail::letter_poly<S>(l), op, side);

  std::map<MultiIndex, Multivector<S>> cache;
  auto sample = [&](const MultiIndex& off) -> const Multivector<S>& {
    auto it = cache.find(off);
    if (it != cache.end()) return it->second;
    Paravector<S> y = x;
    for (int i = 0; i < 6; ++i) y[i] += S(off[i]) * h;
    if (domain && !domain(y)) throw Error(Errc::StencilOutOfDomain, "stencil point leaves the domain");
    return cache.emplace(off, f(y)).first->second;
  };

  auto partial = [&](const MultiIndex& alpha, int scale) {
    Multivector<S> acc;
    int total = 0;
    for (int a : alpha) total += a;
    // Tensor product over the six coordinates.
    std::vector<std::pair<MultiIndex, S>> pts{{MultiIndex{}, S(1)}};
    for (int i = 0; i < 6; ++i) {
      if (alpha[i] == 0) continue;
      std::vector<std::pair<MultiIndex, S>> next;
      for (const auto& [off, wt] : pts)
        for (const auto& [o, sw] : detail::stencil(alpha[i])) {
          MultiIndex n = off;
          n[i] += o * scale;
          next.emplace_back(n, wt * S(sw));
        }
      pts = std::move(next);
    }
    for (const auto& [off, wt] : pts) acc += sample(off) * wt;
    S hs = S(1);
    for (int i = 0; i < total; ++i) hs *= h * S(scale);
    return acc / hs;
  };

  Multivector<S> fine, coarse;
  for (const auto& [alpha, c] : op) {
    const Multivector<S> p1 = partial(alpha, 1);
    const Multivector<S> p2 = partial(alpha, 2);
    fine += side == Side::Left ? c * p1 : p1 * c;
    coarse += side == Side::Left ? c * p2 : p2 * c;
  }
  return (fine * S(4) - coarse) / S(3);
}

// ---- Vekua-type systems on axial functions A(x0, r) + omega B(x0, r) ----

enum class VekuaSystem { AntiCliffordian, BiHarmonic, Poly3, Cliffordian1, Harmonic, Poly2, PolyCliffordian12 };
inline constexpr std::array<VekuaSystem, 7> kAllSystems = {
    VekuaSystem::AntiCliffordian, VekuaSystem::BiHarmonic, VekuaSystem::Poly3,
    VekuaSystem::Cliffordian1,    VekuaSystem::Harmonic,   VekuaSystem::Poly2,
    VekuaSystem::PolyCliffordian12};

const char* system_name(VekuaSystem s);
FineSpace system_space(VekuaSystem s);

// Partials d0^i dr^j of A and B at a point, i + j <= 4.
template <class S>
struct AxialJet {
  S x0 = S(0);
  S r = S(0);
  std::array<std::array<Multivector<S>, 5>, 5> A{};
  std::array<std::array<Multivector<S>, 5>, 5> B{};
};

// sum x0^i r^j c_{ij}.
template <class S>
struct AxialPoly {
  std::map<std::pair<int, int>, Multivector<S>> terms;

  void add(int i, int j, const Multivector<S>& c) { terms[{i, j}] += c; }

  Multivector<S> partial(int di, int dj, S x0, S r) const {
    Multivector<S> acc;
    for (const auto& [k, c] : terms) {
      if (k.first < di || k.second < dj) continue;
      S f = S(1);
      for (int t = 0; t < di; ++t) f *= S(k.first - t);
      for (int t = 0; t < dj; ++t) f *= S(k.second - t);
      for (int t = 0; t < k.first - di; ++t) f *= x0;
      for (int t = 0; t < k.second - dj; ++t) f *= r;
      acc += c * f;
    }
    return acc;
  }
  Multivector<S> operator()(S x0, S r) const { return partial(0, 0, x0, r); }
};

// Split of a Left canonical polynomial into its axial pair: x_vec^b = (-1)^{b/2} r^b, or
// (-1)^{(b-1)/2} r^b omega for odd b.
template <class S>
std::pair<AxialPoly<S>, AxialPoly<S>> axial_form(const CanonicalPoly<S>& c) {
  if (c.side() != Side::Left) throw Error(Errc::ConfigError, "axial_form expects a Left polynomial");
  AxialPoly<S> A, B;
  for (const auto& [k, v] : c.terms()) {
    const int b = k.second;
    if (b % 2 == 0) A.add(k.first, b, ((b / 2) & 1) ? -v : v);
    else B.add(k.first, b, (((b - 1) / 2) & 1) ? -v : v);
  }
  return {A, B};
}

template <class S>
AxialJet<S> exact_jet(const AxialPoly<S>& A, const AxialPoly<S>& B, S x0, S r) {
  AxialJet<S> j;
  j.x0 = x0;
  j.r = r;
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; a + b <= 4; ++b) {
      j.A[a][b] = A.partial(a, b, x0, r);
      j.B[a][b] = B.partial(a, b, x0, r);
    }
  return j;
}

template <class S>
using AxialFn = std::function<Multivector<S>(S, S)>;

template <class S>
AxialJet<S> fd_jet(const AxialFn<S>& A, const AxialFn<S>& B, S x0, S r, S h) {
  AxialJet<S> j;
  j.x0 = x0;
  j.r = r;
  auto partial = [&](const AxialFn<S>& f, int a, int b, int scale) {
    Multivector<S> acc;
    for (const auto& [o0, w0] : detail::stencil(a))
      for (const auto& [o1, w1] : detail::stencil(b))
        acc += f(x0 + S(o0 * scale) * h, r + S(o1 * scale) * h) * S(w0 * w1);
    S hs = S(1);
    for (int t = 0; t < a + b; ++t) hs *= h * S(scale);
    return acc / hs;
  };
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; a + b <= 4; ++b) {
      j.A[a][b] = (partial(A, a, b, 1) * S(4) - partial(A, a, b, 2)) / S(3);
      j.B[a][b] = (partial(B, a, b, 1) * S(4) - partial(B, a, b, 2)) / S(3);
    }
  return j;
}

// Both displayed equations of the system, transcribed term by term.
template <class S>
std::pair<Multivector<S>, Multivector<S>> vekua_residual(VekuaSystem sys, const AxialJet<S>& j,
                                                         S r_min = S(0.1)) {
  const S r = j.r;
  if (r < r_min) throw Error(Errc::AxisTooClose, "r below r_min");
  auto a = [&](int i, int k) { return j.A[i][k]; };
  auto b = [&](int i, int k) { return j.B[i][k]; };
  const S r2 = r * r, r3 = r2 * r, r4 = r3 * r;
  // d_r(g / r) and d_r^2(g / r) for a jet entry g of the same function.
  auto dr_over_r = [&](auto g, int i) { return g(i, 1) / r - g(i, 0) / r2; };
  auto dr2_over_r = [&](auto g, int i) {
    return g(i, 2) / r - g(i, 1) * (S(2) / r2) + g(i, 0) * (S(2) / r3);
  };
  Multivector<S> e1, e2;
  switch (sys) {
    case VekuaSystem::AntiCliffordian:
      e1 = a(3, 0) + a(1, 2) + a(1, 1) * (S(4) / r) + b(2, 1) + b(0, 3) + b(0, 2) * (S(8) / r) +
           b(0, 1) * (S(8) / r2) - b(0, 0) * (S(8) / r3) + b(2, 0) * (S(4) / r);
      // The printed A_1 is read as A.
      e2 = b(3, 0) + b(1, 2) - S(4) * (b(1, 1) / r - b(1, 0) / r2) - a(2, 1) - a(0, 3) -
           S(4) * (a(0, 2) / r - a(0, 1) / r2);
      break;
    case VekuaSystem::BiHarmonic:
      e1 = a(4, 0) + S(2) * a(2, 2) + a(0, 4) - a(0, 1) * (S(8) / r3) + a(0, 2) * (S(8) / r2) +
           a(0, 3) * (S(8) / r) + a(2, 1) * (S(4) / r);
      // The printed "\frac 24{r^3}" renders as (2/4) r^3.
      e2 = b(0, 4) + b(0, 3) * (S(8) / r) - b(0, 1) * (S(2) / S(4) * r3) + b(0, 0) * (S(24) / r4) +
           S(2) * b(2, 2) - b(2, 0) * (S(8) / r2) + b(2, 1) * (S(8) / r) + b(4, 0);
      break;
    case VekuaSystem::Poly3:
      e1 = a(3, 0) + b(0, 3) - S(3) * b(2, 1) - S(3) * a(1, 2) - b(2, 0) * (S(12) / r) -
           a(1, 1) * (S(12) / r) + b(0, 2) * (S(8) / r) + b(0, 1) * (S(8) / r2) - b(0, 0) * (S(8) / r3);
      e2 = b(3, 0) - a(0, 3) + S(3) * a(2, 1) - S(3) * b(1, 2) - b(1, 1) * (S(12) / r) +
           b(1, 0) * (S(12) / r2) - a(0, 2) * (S(4) / r) + a(0, 1) * (S(4) / r2);
      break;
    case VekuaSystem::Cliffordian1:
      e1 = a(1, 0) + a(1, 2) + a(1, 1) * (S(4) / r) - b(2, 1) - b(0, 3) - b(0, 1) * (S(8) / r2) +
           b(0, 0) * (S(8) / r3) - b(2, 0) * (S(4) / r);
      e2 = b(3, 0) + b(1, 2) + S(4) * dr_over_r(b, 1) + a(2, 1) + a(0, 3) + S(4) * dr2_over_r(a, 0);
      break;
    case VekuaSystem::Harmonic:
      e1 = a(2, 0) + a(0, 2) + a(0, 1) * (S(4) / r);
      e2 = b(2, 0) + b(0, 2) + S(4) * dr_over_r(b, 0);
      break;
    case VekuaSystem::Poly2:
      e1 = a(2, 0) - S(2) * b(1, 1) - b(1, 0) * (S(8) / r) - a(0, 2) - a(0, 1) * (S(4) / r);
      e2 = b(2, 0) + S(2) * a(1, 1) - b(0, 2) - S(4) * dr_over_r(b, 0);
      break;
    case VekuaSystem::PolyCliffordian12:
      e1 = a(4, 0) - S(2) * b(3, 1) - S(2) * b(1, 3) - b(3, 0) * (S(8) / r) - b(1, 2) * (S(8) / r) -
           a(0, 4) - a(0, 3) * (S(8) / r) - a(0, 1) * (S(8) / r3) - a(0, 2) * (S(4) / r2) -
           a(0, 0) * (S(8) / r4) - b(1, 1) * (S(16) / r2);
      e2 = b(4, 0) + S(2) * a(3, 1) + S(2) * a(1, 3) + a(1, 2) * (S(8) / r) - a(1, 1) * (S(12) / r2) -
           b(1, 1) * (S(4) / r2) - b(0, 4) + a(1, 0) * (S(8) / r3) - b(0, 2) * (S(8) / r2) +
           b(0, 1) * (S(24) / r3) - b(0, 0) * (S(24) / r4) + b(2, 0) * (S(4) / r2);
      break;
  }
  return {e1, e2};
}

template <class S>
std::pair<Multivector<S>, Multivector<S>> vekua_residual(VekuaSystem sys, const AxialPoly<S>& A,
                                                         const AxialPoly<S>& B, S x0, S r,
                                                         S r_min = S(0.1)) {
  if (r < r_min) throw Error(Errc::AxisTooClose, "r below r_min");
  return vekua_residual(sys, exact_jet(A, B, x0, r), r_min);
}

template <class S>
std::pair<Multivector<S>, Multivector<S>> vekua_residual(VekuaSystem sys, const AxialFn<S>& A,
                                                         const AxialFn<S>& B, S x0, S r,
                                                         S r_min = S(0.1), S h = S(1e-3)) {
  if (r < r_min) throw Error(Errc::AxisTooClose, "r below r_min");
  return vekua_residual(sys, fd_jet(A, B, x0, r, h), r_min);
}

// Independent route: apply the system's annihilator to A + omega B in R^6 by finite
// differences, then split into scalar and omega parts using the points x0 +- r omega.
template <class S>
std::pair<Multivector<S>, Multivector<S>> annihilator_split(VekuaSystem sys, const AxialFn<S>& A,
                                                            const AxialFn<S>& B, S x0, S r,
                                                            const Paravector<S>& omega, S h = S(1e-3)) {
  ParaFn<S> f = [&](const Paravector<S>& y) {
    const auto d = axis_decompose(y);
    return A(d.x0, d.r) + d.omega->mv() * B(d.x0, d.r);
  };
  const OpWord w = expand(annihilator(system_space(sys)));
  const Multivector<S> plus = fd_apply(w, f, Paravector<S>(x0) + omega * r, h);
  const Multivector<S> minus = fd_apply(w, f, Paravector<S>(x0) - omega * r, h);
  const Multivector<S> even = (plus + minus) / S(2);
  const Multivector<S> odd = -(omega.mv() * (plus - minus)) / S(2);
  return {even, odd};
}

}  // namespace fs5
