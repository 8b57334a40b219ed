#pragma once

// The elliptic surface of E_{A,B} over P^1: Euler number, the fiber at
// infinity (closed-form table and Tate's algorithm), b2, geometric
// Mordell-Weil rank, and the Shioda-Tate identity tying them together.

#include <algorithm>
#include <climits>
#include <string>

#include "qtwist/ascurves.hpp"
#include "qtwist/unipoly.hpp"
#include "qtwist/weierstrass.hpp"

namespace qtwist {

class KodairaType {
 public:
  enum class Kind { Istar, I0star, IIstar, II, Other };

  /// I*_m; m = 0 is I*_0.
  static KodairaType istar(int m) {
    require(m >= 0, "I*_m needs m >= 0");
    return m == 0 ? KodairaType(Kind::I0star, 0, "") : KodairaType(Kind::Istar, m, "");
  }
  static KodairaType i0star() { return istar(0); }
  static KodairaType iistar() { return {Kind::IIstar, 0, ""}; }
  static KodairaType ii() { return {Kind::II, 0, ""}; }
  static KodairaType other(std::string name) { return {Kind::Other, 0, std::move(name)}; }

  Kind kind() const { return kind_; }
  int m() const { return m_; }

  /// Number of irreducible components of the fiber.
  int components() const {
    switch (kind_) {
      case Kind::Istar: return m_ + 5;
      case Kind::I0star: return 5;
      case Kind::IIstar: return 9;
      case Kind::II: return 1;
      case Kind::Other: break;
    }
    throw PreconditionError("component count not tabulated for fiber type " + name());
  }

  std::string name() const {
    switch (kind_) {
      case Kind::Istar: return "I" + std::to_string(m_) + "*";
      case Kind::I0star: return "I0*";
      case Kind::IIstar: return "II*";
      case Kind::II: return "II";
      case Kind::Other: return other_;
    }
    return "?";
  }

  friend bool operator==(const KodairaType& a, const KodairaType& b) {
    return a.kind_ == b.kind_ && a.m_ == b.m_ && a.other_ == b.other_;
  }

 private:
  KodairaType(Kind k, int m, std::string other) : kind_(k), m_(m), other_(std::move(other)) {}
  Kind kind_;
  int m_;
  std::string other_;
};

inline void require_odd_degrees(int degA, int degB) {
  require(degA >= 1 && degA % 2 == 1, "deg A must be odd and positive");
  require(degB >= 1 && degB % 2 == 1, "deg B must be odd and positive");
}

/// Smallest n with deg A <= 2n and deg(A^2 + B) <= 6n.
inline int euler_n(int degA, int degB) {
  require_odd_degrees(degA, degB);
  if (degB <= 3 * degA) return (degA + 1) / 2;
  const int m = (6 - degB % 6) % 6;  // degB = -m mod 6
  return (degB + m) / 6;
}

inline KodairaType fiber_type_table(int degA, int degB) {
  require_odd_degrees(degA, degB);
  if (3 * degA >= degB) return KodairaType::istar(2 * std::min(degA, 3 * degA - degB));
  switch (degB % 6) {
    case 1: return KodairaType::iistar();
    case 3: return KodairaType::i0star();
    default: return KodairaType::ii();
  }
}

inline int b2(int degA, int degB) {
  require_odd_degrees(degA, degB);
  auto ceil_div = [](int a, int b) { return (a + b - 1) / b; };
  if (degB > 3 * degA) return 12 * ceil_div(degB, 6) - 2;
  return 12 * ceil_div(degA, 2) - 2;
}

/// Rank over the algebraic closure of the constant field.
inline int geometric_rank(int degA, int degB) {
  require_odd_degrees(degA, degB);
  if (degB > 3 * degA) return -2 + 2 * degB;
  return -2 + 6 * degA - 2 * std::min(degA, 3 * degA - degB);
}

struct FiberReport {
  KodairaType kodaira = KodairaType::ii();
  int euler_n = 0;
  int b2 = 0;
  int geometric_rank = 0;
  bool shioda_tate_ok = false;
};

/// b2 = 2 + (components - 1) + rank; throws if the formulas disagree.
inline FiberReport shioda_tate_check(int degA, int degB) {
  FiberReport rep;
  rep.kodaira = fiber_type_table(degA, degB);
  rep.euler_n = euler_n(degA, degB);
  rep.b2 = b2(degA, degB);
  rep.geometric_rank = geometric_rank(degA, degB);
  rep.shioda_tate_ok = rep.b2 == 2 + (rep.kodaira.components() - 1) + rep.geometric_rank;
  ensure(rep.shioda_tate_ok, "Shioda-Tate identity fails for degrees (" + std::to_string(degA) + ", " +
                                 std::to_string(degB) + ")");
  return rep;
}

// --------------------------------------------------------------------------
// Tate's algorithm over GF(2^m)[s] at the place s = 0.

namespace tate {

using Model = Weierstrass<UniPoly>;

inline int val(const UniPoly& f) {
  const auto v = f.valuation();
  return v ? static_cast<int>(*v) : INT_MAX;
}

/// a / s^j reduced mod s, i.e. the coefficient of s^j.
inline FieldElt residue(const UniPoly& a, int j) { return a.coeff(static_cast<std::size_t>(j)); }

/// x = x' + r, y = y' + s x' + t.
inline Model change(const Model& E, const UniPoly& r, const UniPoly& s, const UniPoly& t) {
  Model out{E.a1 + times(s, 2),
            E.a2 - s * E.a1 + times(r, 3) - s * s,
            E.a3 + r * E.a1 + times(t, 2),
            E.a4 - s * E.a3 + times(r * E.a2, 2) - (t + r * s) * E.a1 + times(r * r, 3) - times(s * t, 2),
            E.a6 + r * E.a4 + r * r * E.a2 + r * r * r - t * E.a3 - t * t - r * t * E.a1};
  return out;
}

inline UniPoly lift(const FieldElt& a, int k) { return UniPoly::monomial(a, static_cast<std::size_t>(k)); }

inline Model translate_x(const Model& E, const FieldElt& a, int k) {
  const UniPoly zero(E.a2.ctx());
  return change(E, lift(a, k), zero, zero);
}
inline Model translate_y(const Model& E, const FieldElt& a, int k) {
  const UniPoly zero(E.a2.ctx());
  return change(E, zero, zero, lift(a, k));
}

inline Model rescale(const Model& E) {
  return {E.a1.shift_down(1), E.a2.shift_down(2), E.a3.shift_down(3), E.a4.shift_down(4),
          E.a6.shift_down(6)};
}

struct Outcome {
  KodairaType type = KodairaType::ii();
  int disc_valuation = 0;
  int rescalings = 0;  ///< times the model was found non-minimal
};

/// Kodaira type of the fiber at s = 0. Residue-field computations use only
/// square roots (the residue field is perfect), which is all the double and
/// triple root cases need in characteristic 2.
inline Outcome run(Model E) {
  Outcome out;
  for (;;) {
    const int vD = val(E.discriminant());
    out.disc_valuation = vD;
    ensure(vD != INT_MAX, "singular generic fiber");
    if (vD == 0) {
      out.type = KodairaType::other("I0");
      return out;
    }
    // Multiplicative reduction iff b2 = a1^2 is a unit.
    if (val(E.a1) == 0) {
      out.type = KodairaType::other("I" + std::to_string(vD));
      return out;
    }
    // Move the singular point of the reduction to (0, 0): with a1 = 0 mod s
    // it sits at x = sqrt(a4), y = sqrt(x^3 + a2 x^2 + a4 x + a6).
    {
      ensure(val(E.a3) >= 1, "reduction is smooth although s | disc");
      const FieldElt x0 = sqrt_elt(residue(E.a4, 0));
      const FieldElt rhs = x0 * x0 * x0 + residue(E.a2, 0) * x0 * x0 + residue(E.a4, 0) * x0 + residue(E.a6, 0);
      E = change(E, lift(x0, 0), UniPoly(E.a2.ctx()), lift(sqrt_elt(rhs), 0));
      ensure(val(E.a3) >= 1 && val(E.a4) >= 1 && val(E.a6) >= 1, "singular point not at origin");
    }
    if (val(E.a6) < 2) {
      out.type = KodairaType::ii();
      return out;
    }
    if (val(E.b8()) < 3) {
      out.type = KodairaType::other("III");
      return out;
    }
    if (val(E.b6()) < 3) {
      out.type = KodairaType::other("IV");
      return out;
    }
    // Arrange s | a1, a2; s^2 | a3, a4; s^3 | a6.
    {
      const FieldElt sh = sqrt_elt(residue(E.a2, 0));
      const FieldElt th = sqrt_elt(residue(E.a6, 2));
      E = change(E, UniPoly(E.a2.ctx()), lift(sh, 0), lift(th, 1));
      ensure(val(E.a1) >= 1 && val(E.a2) >= 1 && val(E.a3) >= 2 && val(E.a4) >= 2 && val(E.a6) >= 3,
             "could not reach the I0* normal form");
    }
    // P(T) = T^3 + b T^2 + c T + d
    const FieldElt b = residue(E.a2, 1), c = residue(E.a4, 2), d = residue(E.a6, 3);
    const FieldElt disc =
        b * b * c * c - times(c * c * c, 4) - times(b * b * b * d, 4) - times(d * d, 27) + times(b * c * d, 18);
    if (!disc.is_zero()) {
      out.type = KodairaType::i0star();
      return out;
    }
    if (!(times(c, 3) - b * b).is_zero()) {
      // Simple root plus double root; the double root solves P'(T) = T^2 + c = 0.
      E = translate_x(E, sqrt_elt(c), 1);
      ensure(val(E.a4) >= 3 && val(E.a6) >= 4 && val(E.a2) == 1, "double root not moved to 0");
      int m = 1, ex = 2, ey = 2;
      for (;;) {
        ensure(m <= vD, "I*_m subprocedure did not terminate");
        // Y^2 + a3,ey Y - a6,(ex+ey)
        if (!residue(E.a3, ey).is_zero()) {
          out.type = KodairaType::istar(m);
          return out;
        }
        E = translate_y(E, sqrt_elt(residue(E.a6, ex + ey)), ey);
        ++m;
        ++ey;
        ensure(val(E.a6) >= ex + ey, "y double root not moved to 0");
        // a2,1 X^2 + a4,(ex+1) X + a6,(ex+ey)
        if (!residue(E.a4, ex + 1).is_zero()) {
          out.type = KodairaType::istar(m);
          return out;
        }
        E = translate_x(E, sqrt_elt(residue(E.a6, ex + ey) / residue(E.a2, 1)), ex);
        ++m;
        ++ex;
        ensure(val(E.a6) >= ex + ey, "x double root not moved to 0");
      }
    }
    // Triple root, T = b in characteristic 2.
    E = translate_x(E, b, 1);
    ensure(val(E.a2) >= 2 && val(E.a4) >= 3 && val(E.a6) >= 4, "triple root not moved to 0");
    if (!residue(E.a3, 2).is_zero()) {
      out.type = KodairaType::other("IV*");
      return out;
    }
    E = translate_y(E, sqrt_elt(residue(E.a6, 4)), 2);
    ensure(val(E.a3) >= 3 && val(E.a6) >= 5, "Y double root not moved to 0");
    if (val(E.a4) < 4) {
      out.type = KodairaType::other("III*");
      return out;
    }
    if (val(E.a6) < 6) {
      out.type = KodairaType::iistar();
      return out;
    }
    E = rescale(E);
    ++out.rescalings;
  }
}

}  // namespace tate

struct InfinityModel {
  int n = 0;  ///< Euler number, read off the actual polynomials
  tate::Model model;
};

/// With s = 1/t, x = xi / t^{2n}, y = eta / t^{3n}:
/// y^2 + s^{3n} y = x^3 + s^{2n} A(1/s) x^2 + s^{4n} (A(1/s) + 1) x + s^{6n} a6(1/s).
inline InfinityModel model_at_infinity(const UniPoly& A, const UniPoly& B) {
  require(&A.ctx() == &B.ctx(), "A and B over different fields");
  const auto& F = A.ctx();
  const auto one = UniPoly::constant(F.one());
  const UniPoly a4t = A + one, a6t = square(A) + B;
  const int degA = A.degree() ? static_cast<int>(*A.degree()) : 0;
  const int deg6 = a6t.degree() ? static_cast<int>(*a6t.degree()) : 0;
  int n = 0;
  while (2 * n < degA || 6 * n < deg6) ++n;
  const auto N = static_cast<std::size_t>(n);
  return {n, tate::Model{UniPoly(F), A.reversed(2 * N), UniPoly::monomial(F.one(), 3 * N),
                         a4t.reversed(4 * N), a6t.reversed(6 * N)}};
}

/// Tate's algorithm on the model at infinity. Only I*_m, I*_0, II* and II can
/// occur for odd-degree A and B; anything else is reported as an error.
inline KodairaType tate_algorithm_at_infinity(const UniPoly& A, const UniPoly& B) {
  odd_degree(A, "A");
  odd_degree(B, "B");
  const auto inf = model_at_infinity(A, B);
  const auto out = tate::run(inf.model);
  ensure(out.type.kind() != KodairaType::Kind::Other,
         "Tate's algorithm reached fiber type " + out.type.name() + " outside the expected family");
  return out.type;
}

}  // namespace qtwist
