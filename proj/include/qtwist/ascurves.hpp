#pragma once

// The Artin-Schreier tower C -> H -> P^1 given by r^2 + r = A(t) and
// s^2 + s = r A(t) + B(t): genera, point counts, extremality.

#include <cmath>
#include <cstdint>
#include <string>

#include "qtwist/binfield.hpp"
#include "qtwist/parallel.hpp"
#include "qtwist/polyalg.hpp"

namespace qtwist {

enum class Extremality { Maximal, Minimal, Neither };

inline const char* to_string(Extremality e) {
  switch (e) {
    case Extremality::Maximal: return "maximal";
    case Extremality::Minimal: return "minimal";
    case Extremality::Neither: return "neither";
  }
  return "?";
}

class TowerCurve {
 public:
  /// A must not lie in the image of z -> z^2 + z, so that the tower has
  /// degree 4 over the base.
  TowerCurve(UniPoly A, UniPoly B) : A_(std::move(A)), B_(std::move(B)) {
    require(&A_.ctx() == &B_.ctx(), "A and B over different fields");
    require(!in_wp_image(A_), "A lies in the image of z^2 + z; the tower degenerates");
  }

  const UniPoly& A() const { return A_; }
  const UniPoly& B() const { return B_; }
  const FieldCtx& ctx() const { return A_.ctx(); }

  /// Odd-degree A, and B of odd degree or constant.
  bool normalized() const {
    return !A_.is_constant() && *A_.degree() % 2 == 1 && is_normalized(B_);
  }

 private:
  UniPoly A_, B_;
};

struct CurveStats {
  int genus = 0;
  std::uint64_t count = 0;
  Extremality classification = Extremality::Neither;
};

inline int odd_degree(const UniPoly& f, const char* what) {
  if (f.is_constant() || *f.degree() % 2 == 0)
    throw PreconditionError(std::string(what) + " must have odd degree (normalize first)");
  return static_cast<int>(*f.degree());
}

inline int genus_H_from_degree(int degA) {
  require(degA >= 1 && degA % 2 == 1, "deg A must be odd");
  return (degA - 1) / 2;
}

inline int genus_H(const UniPoly& A) { return genus_H_from_degree(odd_degree(A, "A")); }

/// Genus of C for odd deg A. A constant B contributes no pole at infinity and
/// is passed as degB = 0, leaving only the r*A term.
inline int genus_C_from_degrees(int degA, int degB) {
  require(degA >= 1 && degA % 2 == 1, "deg A must be odd");
  require(degB == 0 || (degB >= 1 && degB % 2 == 1), "deg B must be odd (or B constant)");
  const int via_A = (5 * degA - 3) / 2;
  if (degB == 0) return via_A;
  return std::max(via_A, (2 * degB + degA - 3) / 2);
}

inline int genus_C(const UniPoly& A, const UniPoly& B) {
  const int degA = odd_degree(A, "A");
  if (B.is_constant()) return genus_C_from_degrees(degA, 0);
  return genus_C_from_degrees(degA, odd_degree(B, "B"));
}

namespace detail {

inline UniPoly lift(const UniPoly& f, const FieldCtx& target) {
  if (&f.ctx() == &target) return f;
  return f.map(FieldEmbedding(f.ctx(), target));
}

// Coefficients as raw bits for the hot loop.
inline std::vector<std::uint32_t> raw(const UniPoly& f) {
  std::vector<std::uint32_t> out;
  for (const auto& a : f.coeffs()) out.push_back(a.bits);
  return out;
}

inline std::uint32_t horner(const FieldCtx& F, const std::vector<std::uint32_t>& c, std::uint32_t x) {
  std::uint32_t acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = F.mul_raw(acc, x) ^ *it;
  return acc;
}

}  // namespace detail

/// Affine points of the tower over `field` (no normalization required): for
/// each t = alpha, the r-values solve r^2 + r = A(alpha), and each r carries
/// two s-values when trace(r A(alpha) + B(alpha)) = 0.
inline std::uint64_t count_affine_tower(const UniPoly& A, const UniPoly& B, const FieldCtx& field) {
  const auto a = detail::raw(detail::lift(A, field));
  const auto b = detail::raw(detail::lift(B, field));
  return parallel_sum(field.size(), [&](std::uint64_t i) -> std::uint64_t {
    const auto alpha = static_cast<std::uint32_t>(i);
    const auto Aa = detail::horner(field, a, alpha);
    const auto r0 = field.solve_wp_raw(Aa);
    if (!r0) return 0;
    const auto Ba = detail::horner(field, b, alpha);
    std::uint64_t n = 0;
    for (std::uint32_t r : {*r0, *r0 ^ 1U})
      if (field.trace_raw(field.mul_raw(r, Aa) ^ Ba) == 0) n += 2;
    return n;
  });
}

/// Projective count of a normalized tower: the place at infinity is totally
/// ramified, contributing exactly one point.
inline std::uint64_t count_points_tower(const TowerCurve& T, const FieldCtx& field) {
  require(T.normalized(), "tower must be normalized (odd deg A, odd or constant B)");
  require(field.degree() % T.ctx().degree() == 0, "count field does not extend the field of definition");
  return count_affine_tower(T.A(), T.B(), field) + 1;
}

/// Points of r^2 + r = A(t) over `field`, one point at infinity.
inline std::uint64_t count_points_H(const UniPoly& A, const FieldCtx& field) {
  odd_degree(A, "A");
  require(field.degree() % A.ctx().degree() == 0, "count field does not extend the field of definition");
  const auto a = detail::raw(detail::lift(A, field));
  return parallel_sum(field.size(), [&](std::uint64_t i) -> std::uint64_t {
    return field.trace_raw(detail::horner(field, a, static_cast<std::uint32_t>(i))) == 0 ? 2 : 0;
  }) + 1;
}

/// Integer square root of a perfect square, or -1.
inline long long exact_sqrt(unsigned long long Q) {
  auto r = static_cast<unsigned long long>(std::llround(std::sqrt(static_cast<long double>(Q))));
  while (r * r > Q) --r;
  while ((r + 1) * (r + 1) <= Q) ++r;
  return r * r == Q ? static_cast<long long>(r) : -1;
}

/// Against the Weil bounds Q + 1 +- 2 g sqrt(Q). Genus 0 is reported Maximal.
inline Extremality classify_extremal(std::uint64_t count, int genus, std::uint64_t Q) {
  const long long q = exact_sqrt(Q);
  require(q >= 0, "Q must be a perfect square");
  require(genus >= 0, "genus must be nonnegative");
  const long long base = static_cast<long long>(Q) + 1, spread = 2LL * genus * q;
  const auto n = static_cast<long long>(count);
  if (n == base + spread) return Extremality::Maximal;
  if (n == base - spread) return Extremality::Minimal;
  return Extremality::Neither;
}

inline bool weil_bound_holds(std::uint64_t count, int genus, std::uint64_t Q) {
  const long double dev = std::fabs(static_cast<long double>(count) - static_cast<long double>(Q) - 1);
  return dev <= 2.0L * genus * std::sqrt(static_cast<long double>(Q)) + 1e-9L;
}

struct TowerStats {
  UniPoly A, B;  ///< normalized
  int genus_H = 0, genus_C = 0;
  std::uint64_t count_H = 0, count_C = 0;
  int count_field_degree = 0;
  std::optional<Extremality> classification;  ///< only over fields of square order
};

/// Normalize (A, B), then genera and counts over the degree-`ext` extension.
inline TowerStats tower_stats(const UniPoly& A, const UniPoly& B, int ext = 1) {
  require(ext >= 1, "extension degree must be positive");
  const auto norm = normalize_pair(A, B);
  const TowerCurve T(norm.A, norm.B);
  require(T.normalized(), "normalization left deg B even (cannot happen) or A constant");
  const int M = A.ctx().degree() * ext;
  require(M <= kMaxFieldDegree, "count field too large");
  const FieldCtx& K = (ext == 1) ? A.ctx() : field(M);
  TowerStats st{norm.A, norm.B, 0, 0, 0, 0, 0, std::nullopt};
  st.genus_H = genus_H(norm.A);
  st.genus_C = genus_C(norm.A, norm.B);
  st.count_H = count_points_H(norm.A, K);
  st.count_C = count_points_tower(T, K);
  st.count_field_degree = M;
  if (M % 2 == 0) st.classification = classify_extremal(st.count_C, st.genus_C, K.size());
  return st;
}

}  // namespace qtwist
