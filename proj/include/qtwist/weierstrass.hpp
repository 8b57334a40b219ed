#pragma once

// Long Weierstrass models y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over
// any commutative ring providing +, *, and times(value, integer). The
// standard invariants and the chord-tangent law are written out in full, with
// the integer constants kept, so nothing here assumes characteristic 2.

#include <optional>
#include <random>
#include <string>

#include "qtwist/binfield.hpp"
#include "qtwist/errors.hpp"

namespace qtwist {

template <class Ring>
struct Weierstrass {
  Ring a1, a2, a3, a4, a6;

  Ring b2() const { return a1 * a1 + times(a2, 4); }
  Ring b4() const { return times(a4, 2) + a1 * a3; }
  Ring b6() const { return a3 * a3 + times(a6, 4); }
  Ring b8() const {
    return a1 * a1 * a6 + times(a2 * a6, 4) - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  }
  Ring c4() const { return b2() * b2() - times(b4(), 24); }
  Ring discriminant() const {
    const Ring B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
    return -(B2 * B2 * B8) - times(B4 * B4 * B4, 8) - times(B6 * B6, 27) + times(B2 * B4 * B6, 9);
  }
};

/// Specialization with field-element coefficients.
using SpecializedCurve = Weierstrass<FieldElt>;

/// Affine point or the point at infinity.
struct EPoint {
  FieldElt x, y;
  bool infinity = false;

  static EPoint at_infinity() { return {{}, {}, true}; }
  friend bool operator==(const EPoint& P, const EPoint& Q) {
    if (P.infinity || Q.infinity) return P.infinity == Q.infinity;
    return P.x == Q.x && P.y == Q.y;
  }
};

inline SpecializedCurve make_curve(const FieldElt& a1, const FieldElt& a2, const FieldElt& a3,
                                   const FieldElt& a4, const FieldElt& a6) {
  for (const auto* c : {&a2, &a3, &a4, &a6}) same_field(a1, *c);
  return {a1, a2, a3, a4, a6};
}

/// y^2 + y = x^3 + a2 x^2 + a4 x + a6.
inline SpecializedCurve make_curve(const FieldElt& a2, const FieldElt& a4, const FieldElt& a6) {
  const auto& F = *a2.ctx;
  return make_curve(F.zero(), a2, F.one(), a4, a6);
}

inline bool on_curve(const SpecializedCurve& E, const EPoint& P) {
  if (P.infinity) return true;
  if (P.x.ctx != E.a1.ctx || P.y.ctx != E.a1.ctx) return false;
  const auto& x = P.x;
  const auto& y = P.y;
  return y * y + E.a1 * x * y + E.a3 * y == x * x * x + E.a2 * x * x + E.a4 * x + E.a6;
}

inline void require_on_curve(const SpecializedCurve& E, const EPoint& P) {
  if (!on_curve(E, P)) throw PreconditionError("point is not on the curve");
}

inline EPoint negate(const SpecializedCurve& E, const EPoint& P) {
  require_on_curve(E, P);
  if (P.infinity) return P;
  return {P.x, -P.y - E.a1 * P.x - E.a3};
}

inline EPoint add(const SpecializedCurve& E, const EPoint& P, const EPoint& Q) {
  require_on_curve(E, P);
  require_on_curve(E, Q);
  if (P.infinity) return Q;
  if (Q.infinity) return P;
  const auto &x1 = P.x, &y1 = P.y, &x2 = Q.x, &y2 = Q.y;
  if (x1 == x2 && (y1 + y2 + E.a1 * x2 + E.a3).is_zero()) return EPoint::at_infinity();
  FieldElt lambda, nu;
  if (x1 != x2) {
    const auto den = inv(x2 - x1);
    lambda = (y2 - y1) * den;
    nu = (y1 * x2 - y2 * x1) * den;
  } else {
    const auto den = inv(times(y1, 2) + E.a1 * x1 + E.a3);
    lambda = (times(x1 * x1, 3) + times(E.a2 * x1, 2) + E.a4 - E.a1 * y1) * den;
    nu = (-(x1 * x1 * x1) + E.a4 * x1 + times(E.a6, 2) - E.a3 * y1) * den;
  }
  const auto x3 = lambda * lambda + E.a1 * lambda - E.a2 - x1 - x2;
  const auto y3 = -(lambda + E.a1) * x3 - nu - E.a3;
  return {x3, y3};
}

inline EPoint subtract(const SpecializedCurve& E, const EPoint& P, const EPoint& Q) {
  return add(E, P, negate(E, Q));
}

/// [k]P by double-and-add; negative k uses -P.
inline EPoint scalar_mul(const SpecializedCurve& E, long long k, EPoint P) {
  require_on_curve(E, P);
  if (k < 0) {
    P = negate(E, P);
    k = -k;
  }
  EPoint R = EPoint::at_infinity();
  while (k != 0) {
    if (k & 1) R = add(E, R, P);
    P = add(E, P, P);
    k >>= 1;
  }
  return R;
}

/// Uniformly random affine point: random x until the quadratic in y splits.
/// Needs a1 = 0 and a3 = 1.
template <class Rng>
EPoint random_point(const SpecializedCurve& E, Rng& rng) {
  require(E.a1.is_zero() && E.a3.is_one(), "random_point expects y^2 + y = f(x)");
  const auto& F = *E.a1.ctx;
  std::uniform_int_distribution<std::uint64_t> pick(0, F.size() - 1);
  for (;;) {
    const auto x = F.elt(pick(rng));
    const auto rhs = x * x * x + E.a2 * x * x + E.a4 * x + E.a6;
    if (auto ys = solve_wp(rhs)) return {x, (pick(rng) & 1U) ? ys->first : ys->second};
  }
}

/// All points, infinity first. For y^2 + y = f(x) models only.
inline std::vector<EPoint> all_points(const SpecializedCurve& E) {
  require(E.a1.is_zero() && E.a3.is_one(), "all_points expects y^2 + y = f(x)");
  const auto& F = *E.a1.ctx;
  std::vector<EPoint> pts{EPoint::at_infinity()};
  for (std::uint64_t i = 0; i < F.size(); ++i) {
    const auto x = F.elt(i);
    if (auto ys = solve_wp(x * x * x + E.a2 * x * x + E.a4 * x + E.a6)) {
      pts.push_back({x, ys->first});
      pts.push_back({x, ys->second});
    }
  }
  return pts;
}

}  // namespace qtwist
