#pragma once

// The supersingular curve E: y^2 + y = x^3 + x over GF(2), its order-4
// automorphism, the quartic twists E_{A,B} over GF(2^m)(t), the quadratic
// twist E_H, and the Mordell-Weil rank formulas.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qtwist/ascurves.hpp"
#include "qtwist/multipoly.hpp"
#include "qtwist/weierstrass.hpp"

namespace qtwist {

/// E over F: a1 = a2 = a6 = 0, a3 = a4 = 1.
inline SpecializedCurve curve_E(const FieldCtx& F) { return make_curve(F.zero(), F.one(), F.zero()); }

inline bool is_curve_E(const SpecializedCurve& C) {
  return C.a1.is_zero() && C.a2.is_zero() && C.a3.is_one() && C.a4.is_one() && C.a6.is_zero();
}

/// (x, y) -> (x + 1, y + x). Squares to negation.
inline EPoint iota(const SpecializedCurve& E, const EPoint& P) {
  require(is_curve_E(E), "iota is defined on E only");
  require_on_curve(E, P);
  if (P.infinity) return P;
  const auto& F = *P.x.ctx;
  return {P.x + F.one(), P.y + P.x};
}

/// (x, y) -> (x^2, y^2).
inline EPoint frobenius(const SpecializedCurve& E, const EPoint& P) {
  require(is_curve_E(E), "frobenius is taken on E only");
  require_on_curve(E, P);
  if (P.infinity) return P;
  return {P.x * P.x, P.y * P.y};
}

/// #E(F_{2^{2n}}) from F = [-1] + iota: 2^{2n} + 1 for odd n, (2^n - 1)^2 for
/// n = 0 mod 4, (2^n + 1)^2 for n = 2 mod 4.
inline std::uint64_t e_point_count_formula(int n) {
  require(n >= 1 && n <= 31, "n must be in [1, 31]");
  const std::uint64_t p = std::uint64_t{1} << n;
  if (n % 2 == 1) return p * p + 1;
  if (n % 4 == 0) return (p - 1) * (p - 1);
  return (p + 1) * (p + 1);
}

/// Extremality of E over F_{2^{2n}}: maximal iff n = 2 mod 4, minimal iff
/// n = 0 mod 4.
inline Extremality e_extremality(int n) {
  require(n >= 1, "n must be positive");
  if (n % 4 == 2) return Extremality::Maximal;
  if (n % 4 == 0) return Extremality::Minimal;
  return Extremality::Neither;
}

/// Exhaustive count of y^2 + y = x^3 + x over F, infinity included: tabulate
/// how many y hit each value of y^2 + y, then look up x^3 + x for every x.
inline std::uint64_t e_count_bruteforce(const FieldCtx& F) {
  std::vector<std::uint8_t> hits(F.size(), 0);
  for (std::uint64_t y = 0; y < F.size(); ++y) {
    const auto v = static_cast<std::uint32_t>(y);
    ++hits[F.sqr_raw(v) ^ v];
  }
  std::uint64_t n = 1;
  for (std::uint64_t x = 0; x < F.size(); ++x) {
    const auto v = static_cast<std::uint32_t>(x);
    n += hits[F.mul_raw(F.sqr_raw(v), v) ^ v];
  }
  return n;
}

/// E_{A,B}: y^2 + y = x^3 + A x^2 + (A + 1) x + A^2 + B over GF(2^m)(t).
class TwistCurve {
 public:
  TwistCurve(UniPoly A, UniPoly B) : A_(std::move(A)), B_(std::move(B)), model_(make_model(A_, B_)) {
    const UniPoly one = UniPoly::constant(A_.ctx().one());
    ensure(model_.discriminant() == one, "quartic twist discriminant is not 1");
    ensure(model_.c4().is_zero(), "quartic twist j-invariant is not 0");
  }

  const UniPoly& A() const { return A_; }
  const UniPoly& B() const { return B_; }
  const Weierstrass<UniPoly>& model() const { return model_; }

  /// Fiber over t = alpha.
  SpecializedCurve specialize(const FieldElt& alpha) const {
    require(alpha.ctx == &A_.ctx(), "specialization point from another field");
    return make_curve(model_.a1.eval(alpha), model_.a2.eval(alpha), model_.a3.eval(alpha),
                      model_.a4.eval(alpha), model_.a6.eval(alpha));
  }

 private:
  static Weierstrass<UniPoly> make_model(const UniPoly& A, const UniPoly& B) {
    require(&A.ctx() == &B.ctx(), "A and B over different fields");
    const UniPoly one = UniPoly::constant(A.ctx().one());
    return {UniPoly(A.ctx()), A, one, A + one, square(A) + B};
  }

  UniPoly A_, B_;
  Weierstrass<UniPoly> model_;
};

inline TwistCurve build_quartic_twist(const UniPoly& A, const UniPoly& B) { return {A, B}; }

/// Normal form of eta^2 + eta + xi^3 + A xi^2 + (A + 1) xi + A^2 + B for
/// (xi, eta) given as polynomials in x, y, r, s, modulo the tower relations.
inline MultiPoly twist_equation_residual(const UniPoly& A, const UniPoly& B, const MultiPoly& xi,
                                         const MultiPoly& eta) {
  const auto rs = RewriteSystem::tower(A, B);
  const auto& F = A.ctx();
  const auto one = UniPoly::constant(F.one());
  const auto xi2 = rs.mul(xi, xi);
  const auto lhs = rs.mul(eta, eta) + eta;
  const auto rhs = rs.mul(xi2, xi) + A * xi2 + (A + one) * xi + MultiPoly::constant(square(A) + B);
  return rs.normal_form(lhs + rhs);
}

struct IsomorphismCheck {
  bool ok = false;
  MultiPoly equation_residual;  ///< zero when the image lies on E_{A,B}
  MultiPoly inverse_x_residual; ///< inverse(forward(x, y)) - (x, y), x part
  MultiPoly inverse_y_residual;
};

/// Checks that (x, y) -> (x + r, y + r x + r + s) sends E to E_{A,B} modulo
/// y^2 + y = x^3 + x, r^2 + r = A, s^2 + s = r A + B, and that
/// (xi, eta) -> (xi + r, eta + r xi + A + s) undoes it. The forward map may be
/// overridden to run negative controls.
inline IsomorphismCheck verify_twist_isomorphism(const UniPoly& A, const UniPoly& B,
                                                 std::optional<std::pair<MultiPoly, MultiPoly>> forward = std::nullopt) {
  const auto& F = A.ctx();
  const auto x = MultiPoly::var(F, Var::X), y = MultiPoly::var(F, Var::Y);
  const auto r = MultiPoly::var(F, Var::R), s = MultiPoly::var(F, Var::S);
  if (!forward) forward = std::pair{x + r, y + r * x + r + s};
  const auto& [xi, eta] = *forward;

  IsomorphismCheck out{false, twist_equation_residual(A, B, xi, eta), MultiPoly(F), MultiPoly(F)};

  // Inverse written in slots X = xi, Y = eta, then composed with the forward map.
  const auto inv_x = x + r;
  const auto inv_y = y + r * x + MultiPoly::constant(A) + s;
  auto images = identity_images(F);
  images[static_cast<int>(Var::X)] = xi;
  images[static_cast<int>(Var::Y)] = eta;
  const auto rs = RewriteSystem::tower(A, B);
  out.inverse_x_residual = substitute(inv_x, images, rs) + x;
  out.inverse_y_residual = substitute(inv_y, images, rs) + y;
  out.ok = out.equation_residual.is_zero() && out.inverse_x_residual.is_zero() &&
           out.inverse_y_residual.is_zero();
  return out;
}

enum class RankHypothesis { BothMaximal, BothMinimal, NotSatisfied, Unverified };

inline const char* to_string(RankHypothesis h) {
  switch (h) {
    case RankHypothesis::BothMaximal: return "BothMaximal";
    case RankHypothesis::BothMinimal: return "BothMinimal";
    case RankHypothesis::NotSatisfied: return "NotSatisfied";
    case RankHypothesis::Unverified: return "Unverified";
  }
  return "?";
}

/// Largest field (as 2^k) over which C is enumerated to check extremality.
inline constexpr int kMaxVerifiedFieldDegree = 12;

struct RankReport {
  int gC = 0, gH = 0;
  int rank_arith = 0;
  RankHypothesis hypothesis = RankHypothesis::Unverified;
  std::uint64_t Q = 0;
  Extremality e_extremality = Extremality::Neither;
  std::optional<std::uint64_t> c_count;
  std::optional<Extremality> c_extremality;
};

/// rank E_{A,B}(F_Q(t)) = 2 g(C) - 2 g(H) for normalized (A, B), valid when C
/// and E are both maximal or both minimal over F_Q. Extremality of C is
/// enumerated when Q <= 2^12; otherwise the hypothesis is left Unverified.
inline RankReport rank_theorem(const UniPoly& A, const UniPoly& B, std::uint64_t Q) {
  require(Q >= 4 && (Q & (Q - 1)) == 0, "Q must be a power of 2");
  const int M = std::countr_zero(Q);
  require(M % 2 == 0, "Q must be a square");
  require(M % A.ctx().degree() == 0, "F_Q does not contain the field of definition");
  RankReport rep;
  rep.gH = genus_H(A);
  rep.gC = genus_C(A, B);
  rep.rank_arith = 2 * rep.gC - 2 * rep.gH;
  ensure(rep.rank_arith >= 0, "negative rank");
  rep.Q = Q;
  rep.e_extremality = e_extremality(M / 2);
  if (M <= kMaxVerifiedFieldDegree) {
    const FieldCtx& K = (M == A.ctx().degree()) ? A.ctx() : field(M);
    rep.c_count = count_points_tower(TowerCurve(A, B), K);
    rep.c_extremality = classify_extremal(*rep.c_count, rep.gC, Q);
    if (rep.gC == 0 && rep.e_extremality == Extremality::Minimal)
      rep.c_extremality = Extremality::Minimal;  // genus 0 is both
    if (rep.e_extremality == Extremality::Maximal && rep.c_extremality == Extremality::Maximal)
      rep.hypothesis = RankHypothesis::BothMaximal;
    else if (rep.e_extremality == Extremality::Minimal && rep.c_extremality == Extremality::Minimal)
      rep.hypothesis = RankHypothesis::BothMinimal;
    else
      rep.hypothesis = RankHypothesis::NotSatisfied;
  } else if (rep.e_extremality == Extremality::Neither) {
    rep.hypothesis = RankHypothesis::NotSatisfied;
  }
  return rep;
}

/// rank E(F_{q^2}(D)) = 4 g(D) when D and E are both maximal or both minimal.
inline int rank_constant_base(int gD) {
  require(gD >= 0, "genus must be nonnegative");
  return 4 * gD;
}

struct QuadraticTwist {
  Weierstrass<UniPoly> model;  ///< y^2 + y = x^3 + x + A
  int gH = 0;
  int rank = 0;                ///< 4 g(H) - 4 g(P^1)
  MultiPoly twist_residual;    ///< zero when (x, y) -> (x, y + r) maps E onto E_H
};

inline QuadraticTwist quadratic_twist_EH(const UniPoly& A) {
  const auto& F = A.ctx();
  QuadraticTwist out{Weierstrass<UniPoly>{UniPoly(F), UniPoly(F), UniPoly::constant(F.one()),
                                          UniPoly::constant(F.one()), A},
                     genus_H(A), 0, MultiPoly(F)};
  out.rank = rank_constant_base(out.gH) - rank_constant_base(0);
  const auto rs = RewriteSystem::tower(A, UniPoly(F));
  const auto x = MultiPoly::var(F, Var::X);
  const auto eta = MultiPoly::var(F, Var::Y) + MultiPoly::var(F, Var::R);
  out.twist_residual =
      rs.normal_form(rs.mul(eta, eta) + eta + rs.mul(rs.mul(x, x), x) + x + MultiPoly::constant(A));
  return out;
}

}  // namespace qtwist
