#pragma once

// The three worked families: the plane quintic y^4 + y = x^5 over F_16, the
// curves y^2 + y = x^{q+1} over F_{q^2} (q = 4^n, n odd), and the trace
// towers r^2 + r = Tr(t), s^2 + s = r Tr(t). Each constructor re-derives the
// tower, checks every identity it relies on, and returns the check ledger.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qtwist/ascurves.hpp"
#include "qtwist/elliptic.hpp"
#include "qtwist/fibration.hpp"
#include "qtwist/multipoly.hpp"

namespace qtwist {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct FamilyInstance {
  std::string name;
  std::optional<UniPoly> A, B;  ///< normalized tower over the base field, when there is one
  int field_degree = 0;         ///< degree of the field of definition over GF(2)
  std::uint64_t Q = 0;          ///< rank is taken over F_Q(X)
  int genus_C = 0, genus_H = 0;
  int expected_rank = 0;
  int rank = 0;
  std::optional<std::uint64_t> count_C;  ///< over F_Q, when enumerated
  std::string hypothesis;
  std::vector<Check> checks;

  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

namespace detail {

inline void add_check(FamilyInstance& inst, std::string name, bool ok, std::string detail = {}) {
  inst.checks.push_back({std::move(name), ok, std::move(detail)});
}

inline void seal(const FamilyInstance& inst) {
  for (const auto& c : inst.checks)
    ensure(c.passed, inst.name + ": check '" + c.name + "' failed " + c.detail);
}

inline std::string num(std::uint64_t v) { return std::to_string(v); }

}  // namespace detail

// --------------------------------------------------------------------------

/// The root of c^4 + c^3 + 1 in F_16 with the smallest bit pattern.
inline FieldElt quintic_c(const FieldCtx& F16) {
  for (std::uint64_t i = 0; i < F16.size(); ++i) {
    const auto c = F16.elt(i);
    if ((pow(c, 4) + pow(c, 3) + F16.one()).is_zero()) return c;
  }
  throw ConsistencyError("c^4 + c^3 + 1 has no root in F_16");
}

/// #{(x, y) in F^2 : y^4 + y = x^5} + 1, by enumerating pairs.
inline std::uint64_t count_quintic_pairs(const FieldCtx& F) {
  std::uint64_t n = 1;
  for (std::uint64_t i = 0; i < F.size(); ++i)
    for (std::uint64_t j = 0; j < F.size(); ++j) {
      const auto x = F.elt(i), y = F.elt(j);
      if (pow(y, 4) + y == pow(x, 5)) ++n;
    }
  return n;
}

struct QuinticIdentities {
  MultiPoly sigma_residual;        ///< sigma(y)^4 + sigma(y) + sigma(x)^5
  MultiPoly sigma2_x, sigma2_y;    ///< sigma^2 applied to x and y
  MultiPoly sigma4_x, sigma4_y;
  MultiPoly invariant_residual;    ///< eta^2 + eta + xi^5 with xi = c^2 x, eta = c^5 y^2 + c^10 y
  MultiPoly xi_fixed, eta_fixed;   ///< sigma^2(xi) - xi, sigma^2(eta) - eta
  MultiPoly sigma_on_xi, sigma_on_eta;  ///< sigma(xi) - (xi + c^3), sigma(eta) - (eta + c^9 xi^2 + c^12 xi + c^10)
  MultiPoly elliptic_residual;     ///< u1^2 (w^2 + w + u1^3 + u1) on C / <sigma^2>
  MultiPoly u_fixed, v_fixed;      ///< sigma(u) - u, sigma(v) - v on C / <sigma^2>
};

/// All symbolic identities of the quintic example, over F_16. Slots X, Y hold
/// x, y on C (relation y^4 = y + x^5) or xi, eta on C / <sigma^2> (relation
/// eta^2 = eta + xi^5).
inline QuinticIdentities quintic_identities(const FieldCtx& F, const FieldElt& c) {
  const auto x = MultiPoly::var(F, Var::X), y = MultiPoly::var(F, Var::Y);
  const auto k = [&](const FieldElt& a) { return MultiPoly::constant(a); };
  const auto cp = [&](int e) { return MultiPoly::constant(pow(c, static_cast<std::uint64_t>(e))); };
  QuinticIdentities out{MultiPoly(F), MultiPoly(F), MultiPoly(F), MultiPoly(F), MultiPoly(F), MultiPoly(F),
                        MultiPoly(F), MultiPoly(F), MultiPoly(F), MultiPoly(F), MultiPoly(F), MultiPoly(F), MultiPoly(F)};

  const RewriteSystem on_C({{Var::Y, 4, y + x * x * x * x * x}});
  auto sigma = identity_images(F);
  sigma[0] = x + k(c);
  sigma[1] = y + cp(4) * x + k(c);
  const auto sx = sigma[0], sy = sigma[1];
  out.sigma_residual = on_C.normal_form(on_C.pow(sy, 4) + sy + on_C.pow(sx, 5));
  auto apply = [&](const MultiPoly& p, const std::array<MultiPoly, kNumVars>& img) { return substitute(p, img, on_C); };
  auto sigma2 = identity_images(F);
  sigma2[0] = apply(sx, sigma);
  sigma2[1] = apply(sy, sigma);
  out.sigma2_x = sigma2[0];
  out.sigma2_y = sigma2[1];
  out.sigma4_x = apply(sigma2[0], sigma2);
  out.sigma4_y = apply(sigma2[1], sigma2);

  const auto xi = cp(2) * x;
  const auto eta = cp(5) * on_C.mul(y, y) + cp(10) * y;
  out.invariant_residual = on_C.normal_form(on_C.mul(eta, eta) + eta + on_C.pow(xi, 5));
  out.xi_fixed = apply(xi, sigma2) + xi;
  out.eta_fixed = apply(eta, sigma2) + eta;
  out.sigma_on_xi = apply(xi, sigma) + xi + cp(3);
  out.sigma_on_eta = apply(eta, sigma) + eta + cp(9) * on_C.mul(xi, xi) + cp(12) * xi + cp(10);

  // On the quotient: slots X = xi, Y = eta.
  const auto& X = x;
  const auto& Y = y;
  const RewriteSystem on_H({{Var::Y, 2, Y + X * X * X * X * X}});
  auto tau = identity_images(F);
  tau[0] = X + cp(3);
  tau[1] = Y + cp(9) * X * X + cp(12) * X + cp(10);
  const auto u = on_H.normal_form(cp(4) * X * tau[0]);
  const auto v = on_H.normal_form(cp(10) * on_H.mul(Y, tau[1]));
  out.u_fixed = substitute(u, tau, on_H) + u;
  out.v_fixed = substitute(v, tau, on_H) + v;
  const auto u1 = u + F.one();
  const auto num = on_H.mul(u1, u1) + v + F.one();  // u1 * w
  // u1^2 (w^2 + w + u1^3 + u1) = num^2 + u1 num + u1^5 + u1^3
  out.elliptic_residual = on_H.normal_form(on_H.mul(num, num) + on_H.mul(u1, num) + on_H.pow(u1, 5) + on_H.pow(u1, 3));
  return out;
}

inline FamilyInstance quintic_example() {
  const FieldCtx& F = field(4);
  FamilyInstance inst;
  inst.name = "quintic";
  inst.field_degree = 4;
  inst.Q = 16;
  const auto c = quintic_c(F);
  const auto c5 = pow(c, 5);
  detail::add_check(inst, "c^5 has order 3", !c5.is_one() && pow(c5, 3).is_one() && pow(c5, 4) == c5,
                    "c = " + to_hex(c));

  const auto ids = quintic_identities(F, c);
  const auto x = MultiPoly::var(F, Var::X), y = MultiPoly::var(F, Var::Y);
  detail::add_check(inst, "sigma preserves y^4 + y = x^5", ids.sigma_residual.is_zero(), ids.sigma_residual.to_string());
  detail::add_check(inst, "sigma^2 = (x, y + c^5)",
                    ids.sigma2_x == x && ids.sigma2_y == y + MultiPoly::constant(c5));
  detail::add_check(inst, "sigma has order 4",
                    ids.sigma4_x == x && ids.sigma4_y == y && !(ids.sigma2_y == y));
  detail::add_check(inst, "eta^2 + eta = xi^5 on C", ids.invariant_residual.is_zero(),
                    ids.invariant_residual.to_string());
  detail::add_check(inst, "xi, eta fixed by sigma^2", ids.xi_fixed.is_zero() && ids.eta_fixed.is_zero());
  detail::add_check(inst, "sigma action on (xi, eta)", ids.sigma_on_xi.is_zero() && ids.sigma_on_eta.is_zero());
  detail::add_check(inst, "u, v fixed by sigma", ids.u_fixed.is_zero() && ids.v_fixed.is_zero());
  detail::add_check(inst, "w^2 + w = u1^3 + u1", ids.elliptic_residual.is_zero(), ids.elliptic_residual.to_string());

  const auto count = count_quintic_pairs(F);
  inst.count_C = count;
  // Smooth plane quintic: (d - 1)(d - 2) / 2.
  inst.genus_C = (5 - 1) * (5 - 2) / 2;
  inst.genus_H = genus_H_from_degree(5);  // eta^2 + eta = xi^5
  detail::add_check(inst, "#C(F_16) = 65, maximal",
                    count == 65 && classify_extremal(count, inst.genus_C, 16) == Extremality::Maximal,
                    "count " + detail::num(count));
  detail::add_check(inst, "E maximal over F_16", e_extremality(2) == Extremality::Maximal &&
                                                     e_count_bruteforce(F) == e_point_count_formula(2));
  inst.rank = 2 * inst.genus_C - 2 * inst.genus_H;
  inst.expected_rank = 8;
  inst.hypothesis = to_string(RankHypothesis::BothMaximal);
  detail::add_check(inst, "rank 2 g(C) - 2 g(C/<sigma^2>) = 8", inst.rank == 8, std::to_string(inst.rank));
  detail::seal(inst);
  return inst;
}

// --------------------------------------------------------------------------

struct HermitianData {
  int n = 0;
  std::uint64_t q = 0;
  const FieldCtx* field = nullptr;  ///< F_{q^2}
  std::vector<std::pair<FieldElt, FieldElt>> pairs;  ///< all valid (c, b0)
  std::uint64_t valid_c = 0;
};

/// All (c, b0) in F_{q^2} with b0^2 + b0 = c^{q+1} and Tr_{F_q/F_2}(c^{q+1}) = 1.
inline HermitianData hermitian_pairs(int n) {
  require(n >= 1 && n % 2 == 1 && 4 * n <= kMaxFieldDegree, "n must be odd with 4n <= 24");
  HermitianData h;
  h.n = n;
  h.q = std::uint64_t{1} << (2 * n);
  h.field = &field(4 * n);
  for (std::uint64_t i = 1; i < h.field->size(); ++i) {
    const auto c = h.field->elt(i);
    const auto norm = pow(c, h.q + 1);
    if (!power_sum_trace(norm, 2 * n).is_one()) continue;
    ++h.valid_c;
    const auto b0 = solve_wp(norm);
    ensure(b0.has_value(), "norm has no Artin-Schreier root");
    h.pairs.push_back({c, b0->first});
    h.pairs.push_back({c, b0->second});
  }
  return h;
}

/// D(T) = b0 + sum_{j=0}^{2n-2} T^{2^j} (b0 + 1 + b0^{2^{j+1}}).
inline UniPoly hermitian_D(int n, const FieldElt& b0) {
  const auto& F = *b0.ctx;
  UniPoly D = UniPoly::constant(b0);
  for (int j = 0; j <= 2 * n - 2; ++j)
    D += UniPoly::monomial(b0 + F.one() + frobenius(b0, j + 1), std::size_t{1} << j);
  return D;
}

/// Standard-form B(T) = T (c^{q+1} + D(T)^2), in the base coordinate T = t / c^2.
inline UniPoly hermitian_B(int n, const FieldElt& c, const FieldElt& b0) {
  const std::uint64_t q = std::uint64_t{1} << (2 * n);
  const auto& F = *c.ctx;
  return UniPoly::t(F) * (UniPoly::constant(pow(c, q + 1)) + square(hermitian_D(n, b0)));
}

/// Residual of s^2 + s + r T + B(T) with s = y + D(T) r, modulo
/// r^2 = r + T and y^2 = y + (c r)^{q+1}.
inline MultiPoly hermitian_standard_form_residual(int n, const FieldElt& c, const FieldElt& b0,
                                                  const UniPoly& B) {
  const std::uint64_t q = std::uint64_t{1} << (2 * n);
  const auto& F = *c.ctx;
  const auto r = MultiPoly::var(F, Var::R), y = MultiPoly::var(F, Var::Y);
  const auto T = MultiPoly::t(F);
  const RewriteSystem r_only({{Var::R, 2, r + T}});
  const auto cr_pow = MultiPoly::constant(pow(c, q + 1)) * r_only.pow(r, q + 1);
  const RewriteSystem rs({{Var::Y, 2, y + cr_pow}, {Var::R, 2, r + T}});
  const auto s = y + hermitian_D(n, b0) * r;
  return rs.normal_form(rs.mul(s, s) + s + rs.mul(r, T) + MultiPoly::constant(B));
}

/// phi_c(x, y) = (x + c, y + b0 + Bphi(x)) on y^2 + y = x^{q+1}, where
/// Bphi(x) = sum_{i=0}^{2n-1} (c^q x)^{2^i}. Returns (residual of the curve
/// equation, phi^2(x) - x, phi^2(y) - y - 1).
inline std::array<MultiPoly, 3> hermitian_automorphism_residuals(int n, const FieldElt& c, const FieldElt& b0) {
  const std::uint64_t q = std::uint64_t{1} << (2 * n);
  const auto& F = *c.ctx;
  const auto x = MultiPoly::var(F, Var::X), y = MultiPoly::var(F, Var::Y);
  const RewriteSystem rs({{Var::Y, 2, y + MultiPoly::var(F, Var::X, static_cast<std::uint32_t>(q + 1))}});
  UniPoly Bphi(F);
  for (int i = 0; i < 2 * n; ++i)
    Bphi += UniPoly::monomial(frobenius(pow(c, q), i), std::size_t{1} << i);
  MultiPoly Bx(F);
  for (std::size_t i = 0; i < Bphi.coeffs().size(); ++i)
    if (!Bphi.coeffs()[i].is_zero())
      Bx += MultiPoly::constant(Bphi.coeffs()[i]) * MultiPoly::var(F, Var::X, static_cast<std::uint32_t>(i));
  auto phi = identity_images(F);
  phi[0] = x + MultiPoly::constant(c);
  phi[1] = y + MultiPoly::constant(b0) + Bx;
  const auto curve = rs.normal_form(rs.mul(phi[1], phi[1]) + phi[1] + rs.pow(phi[0], q + 1));
  const auto phi2x = substitute(phi[0], phi, rs);
  const auto phi2y = substitute(phi[1], phi, rs);
  return {curve, phi2x + x, phi2y + y + F.one()};
}

/// The Hermitian family for q = 4^n, n odd, with the given (c, b0), or the
/// first valid pair (smallest c, then smaller b0). The base coordinate is
/// rescaled by t -> c^2 t, so the tower reads r^2 + r = t and
/// s^2 + s = r t + t (c^{q+1} + D(t)^2) with polynomial coefficients.
inline FamilyInstance hermitian_family(int n, std::optional<std::pair<FieldElt, FieldElt>> choice = std::nullopt,
                                       const HermitianData* cached = nullptr) {
  HermitianData local;
  if (!cached) {
    local = hermitian_pairs(n);
    cached = &local;
  }
  const HermitianData& h = *cached;
  require(h.n == n, "cached Hermitian data is for another n");
  const FieldCtx& K = *h.field;
  const std::uint64_t q = h.q;
  FamilyInstance inst;
  inst.name = "hermitian(n=" + std::to_string(n) + ")";
  inst.field_degree = 4 * n;
  inst.Q = q * q;
  inst.expected_rank = static_cast<int>(q);

  detail::add_check(inst, "valid c count = q(q+1)/2", h.valid_c == q * (q + 1) / 2,
                    detail::num(h.valid_c) + " of expected " + detail::num(q * (q + 1) / 2));
  ensure(!h.pairs.empty(), "no valid (c, b0) found");
  const auto [c, b0] = choice ? *choice : h.pairs.front();
  require(c.ctx == &K && b0.ctx == &K, "(c, b0) must lie in F_{q^2}");
  require(b0 * b0 + b0 == pow(c, q + 1), "b0^2 + b0 != c^{q+1}");
  require(power_sum_trace(pow(c, q + 1), 2 * n).is_one(), "Tr(c^{q+1}) != 1");

  detail::add_check(inst, "b0 + b0^q = 1", (b0 + pow(b0, q)).is_one());
  FieldElt Bc = K.zero();
  for (int i = 0; i < 2 * n; ++i) Bc += frobenius(pow(c, q) * c, i);
  detail::add_check(inst, "Bphi(c) = Tr(c^{q+1}) = 1", Bc.is_one());

  const auto aut = hermitian_automorphism_residuals(n, c, b0);
  detail::add_check(inst, "phi_c preserves y^2 + y = x^{q+1}", aut[0].is_zero(), aut[0].to_string());
  detail::add_check(inst, "phi_c^2 = (x, y + 1)", aut[1].is_zero() && aut[2].is_zero());

  const UniPoly A = UniPoly::t(K);
  const UniPoly B = hermitian_B(n, c, b0);
  const auto resid = hermitian_standard_form_residual(n, c, b0, B);
  detail::add_check(inst, "standard form s = y + D r", resid.is_zero(), resid.to_string());
  detail::add_check(inst, "deg B = 1 + 2^{2n-1}", B.degree() && *B.degree() == 1 + (q / 2),
                    B.degree() ? std::to_string(*B.degree()) : "zero");
  inst.A = A;
  inst.B = B;
  inst.genus_H = genus_H(A);
  inst.genus_C = genus_C(A, B);
  detail::add_check(inst, "g(C) = q/2 = g(y^2 + y = x^{q+1})",
                    inst.genus_C == static_cast<int>(q / 2) &&
                        genus_H(UniPoly::monomial(K.one(), q + 1)) == inst.genus_C);

  const auto rep = rank_theorem(A, B, inst.Q);
  inst.rank = rep.rank_arith;
  inst.count_C = rep.c_count;
  inst.hypothesis = to_string(rep.hypothesis);
  if (rep.c_count) {
    const auto direct = count_points_H(UniPoly::monomial(K.one(), q + 1), K);
    detail::add_check(inst, "#C(F_{q^2}) = 2q^2 + 1 (tower and plane model)",
                      *rep.c_count == 2 * q * q + 1 && direct == 2 * q * q + 1,
                      detail::num(*rep.c_count) + " / " + detail::num(direct));
    detail::add_check(inst, "hypotheses: both maximal", rep.hypothesis == RankHypothesis::BothMaximal);
  }
  detail::add_check(inst, "rank = q", inst.rank == static_cast<int>(q), std::to_string(inst.rank));
  detail::add_check(inst, "geometric rank attained",
                    geometric_rank(1, static_cast<int>(*B.degree())) == inst.rank);
  detail::seal(inst);
  return inst;
}

// --------------------------------------------------------------------------

/// x^{2^m} + x, the image of Tr under t = x^2 + x.
inline UniPoly frobenius_minus_x(const FieldCtx& F, int m) {
  return UniPoly::monomial(F.one(), std::size_t{1} << m) + UniPoly::t(F);
}

inline FamilyInstance trace_family(int m) {
  require(m >= 1 && m % 2 == 1 && 4 * m <= kMaxFieldDegree, "m must be odd with 4m <= 24");
  const FieldCtx& F2 = field(1);
  const std::uint64_t q = std::uint64_t{1} << m;
  FamilyInstance inst;
  inst.name = "trace(m=" + std::to_string(m) + ")";
  inst.field_degree = 1;
  inst.Q = q * q * q * q;
  inst.expected_rank = static_cast<int>(q);
  const UniPoly tr = trace_poly(F2, m);
  const UniPoly x = UniPoly::t(F2);  // the parameter of H

  // H is rational.
  const auto red = wp_reduce(tr);
  detail::add_check(inst, "Tr(t) = t mod wp", red.reduced == x, red.reduced.to_string());
  const UniPoly t_of_x = square(x) + x, r_of_x = trace_poly(F2, m);
  detail::add_check(inst, "(t, r) = (x^2 + x, Tr(x)) parametrizes H",
                    square(r_of_x) + r_of_x == tr.compose(t_of_x));

  // s^2 + s = Tr(x) (x^{2^m} + x) is equivalent to s^2 + s = x (x^{2^m} + x).
  const UniPoly lhs = r_of_x * frobenius_minus_x(F2, m);
  bool each = true;
  for (int k = 0; k < m; ++k) {
    const auto before = UniPoly::monomial(F2.one(), (std::size_t{1} << k) + (std::size_t{1} << m));
    const auto after = UniPoly::monomial(F2.one(), 1 + (std::size_t{1} << (m - k)));
    each = each && in_wp_image(before + after);
  }
  detail::add_check(inst, "x^{2^k} x^{2^m} = x x^{2^{m-k}} mod wp", each);
  const UniPoly model = x * frobenius_minus_x(F2, m);
  detail::add_check(inst, "C: s^2 + s = x (x^{2^m} + x)", in_wp_image(lhs + model));

  // Two genus routes.
  const auto model_red = wp_reduce(model).reduced;
  const int g_model = genus_H(model_red);
  const auto norm = normalize_pair(tr, UniPoly(F2));
  inst.A = norm.A;
  inst.B = norm.B;
  inst.genus_H = genus_H(norm.A);
  inst.genus_C = genus_C(norm.A, norm.B);
  detail::add_check(inst, "g(C) = q/2 by both routes",
                    g_model == static_cast<int>(q / 2) && inst.genus_C == g_model,
                    std::to_string(g_model) + " / " + std::to_string(inst.genus_C));

  const auto rep = rank_theorem(norm.A, norm.B, inst.Q);
  inst.rank = rep.rank_arith;
  inst.count_C = rep.c_count;
  inst.hypothesis = to_string(rep.hypothesis);
  if (rep.c_count) {
    const FieldCtx& K = field(4 * m);
    const auto direct = count_points_H(model_red, K);
    const std::uint64_t want = q * q * q * q + 1 + 2 * (q / 2) * q * q;
    detail::add_check(inst, "#C(F_{q^4}) = q^4 + 1 + 2 g q^2 (tower and x-model)",
                      *rep.c_count == want && direct == want,
                      detail::num(*rep.c_count) + " / " + detail::num(direct));
    detail::add_check(inst, "hypotheses: both maximal", rep.hypothesis == RankHypothesis::BothMaximal);
  }
  detail::add_check(inst, "rank = q", inst.rank == static_cast<int>(q), std::to_string(inst.rank));
  if (!norm.B.is_constant()) {
    detail::add_check(inst, "geometric rank attained",
                      geometric_rank(static_cast<int>(*norm.A.degree()), static_cast<int>(*norm.B.degree())) ==
                          inst.rank);
  }
  detail::seal(inst);
  return inst;
}

}  // namespace qtwist
