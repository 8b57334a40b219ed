#pragma once

// End-to-end acceptance criteria. Each criterion is exact (integer or
// polynomial equality) and reports its own wall time against a budget.

#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qtwist/families.hpp"

namespace qtwist {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double budget_seconds = 0;
};

/// Random polynomial of exact degree `deg` (nonzero leading coefficient).
template <class Rng>
UniPoly random_poly(const FieldCtx& F, int deg, Rng& rng, bool monic = false) {
  std::uniform_int_distribution<std::uint64_t> any(0, F.size() - 1), nonzero(1, F.size() - 1);
  std::vector<FieldElt> cs;
  for (int i = 0; i < deg; ++i) cs.push_back(F.elt(any(rng)));
  cs.push_back(monic ? F.one() : F.elt(nonzero(rng)));
  return {F, std::move(cs)};
}

namespace accept {

inline constexpr std::uint64_t kSeed = 20240611;

inline std::pair<bool, std::string> e_counts() {
  std::ostringstream os;
  bool ok = true;
  for (int n = 1; n <= 6; ++n) {
    const auto brute = e_count_bruteforce(field(2 * n));
    const auto formula = e_point_count_formula(n);
    ok = ok && brute == formula;
    os << (n > 1 ? " " : "") << "n=" << n << ":" << brute;
  }
  return {ok, os.str()};
}

inline std::pair<bool, std::string> frobenius_relation() {
  std::uint64_t points = 0;
  for (int n = 1; n <= 4; ++n) {
    const auto& F = field(2 * n);
    const auto E = curve_E(F);
    for (const auto& P : all_points(E)) {
      ++points;
      if (!(frobenius(E, P) == subtract(E, iota(E, P), P)))
        return {false, "fails over F_" + std::to_string(F.size())};
    }
  }
  return {true, std::to_string(points) + " points"};
}

inline std::pair<bool, std::string> twist_identity() {
  std::mt19937_64 rng(kSeed);
  int done = 0;
  for (int m : {1, 2, 4}) {
    const auto& F = field(m);
    std::uniform_int_distribution<int> deg(0, 7);
    for (int i = 0; i < 100; ++i) {
      const auto A = random_poly(F, deg(rng), rng), B = random_poly(F, deg(rng), rng);
      const auto chk = verify_twist_isomorphism(A, B);
      if (!chk.ok) return {false, "A=" + A.to_string() + " B=" + B.to_string()};
      ++done;
    }
  }
  return {true, std::to_string(done) + " pairs over GF(2), GF(4), GF(16)"};
}

inline std::pair<bool, std::string> hermitian_n1() {
  const auto h = hermitian_family(1);
  const bool ok = h.count_C == 33u && h.rank == 4 && h.hypothesis == "BothMaximal" && h.all_passed() &&
                  h.genus_C == 2 && h.genus_H == 0;
  return {ok, "count " + std::to_string(h.count_C.value_or(0)) + ", rank " + std::to_string(h.rank) + ", " +
                  h.hypothesis};
}

inline std::pair<bool, std::string> trace_m3() {
  const auto tr = trace_family(3);
  const auto norm = normalize_pair(trace_poly(field(1), 3), UniPoly(field(1)));
  const auto c = count_points_tower(TowerCurve(norm.A, norm.B), field(12));
  const bool ok = c == 4609 && classify_extremal(c, 4, 4096) == Extremality::Maximal && tr.genus_C == 4 &&
                  tr.rank == 8 && tr.hypothesis == "BothMaximal" && norm.A.degree() == 1u &&
                  norm.B.degree() == 5u;
  return {ok, "count " + std::to_string(c) + ", rank " + std::to_string(tr.rank) + ", degrees (" +
                  std::to_string(norm.A.degree().value_or(0)) + "," + std::to_string(norm.B.degree().value_or(0)) +
                  ")"};
}

inline std::pair<bool, std::string> quintic() {
  const auto q = quintic_example();
  const bool ok = q.all_passed() && q.count_C == 65u && q.rank == 8;
  return {ok, std::to_string(q.checks.size()) + " checks, count " + std::to_string(q.count_C.value_or(0)) +
                  ", rank " + std::to_string(q.rank)};
}

/// Visits every odd (degA, degB) with both at most `max_deg`.
inline void for_grid(int max_deg, const std::function<void(int, int)>& f) {
  for (int a = 1; a <= max_deg; a += 2)
    for (int b = 1; b <= max_deg; b += 2) f(a, b);
}

inline std::pair<bool, std::string> fiber_grid(int max_deg = 15, int draws = 10) {
  std::mt19937_64 rng(kSeed + 7);
  int runs = 0;
  std::string bad;
  for (int m : {1, 2}) {
    const auto& F = field(m);
    for_grid(max_deg, [&](int a, int b) {
      for (int k = 0; k < draws; ++k) {
        const auto A = random_poly(F, a, rng, true), B = random_poly(F, b, rng, true);
        const auto got = tate_algorithm_at_infinity(A, B);
        ++runs;
        if (!(got == fiber_type_table(a, b)) && bad.empty())
          bad = "(" + std::to_string(a) + "," + std::to_string(b) + ") gave " + got.name();
      }
    });
  }
  if (!bad.empty()) return {false, bad};
  return {true, std::to_string(runs) + " runs"};
}

inline std::pair<bool, std::string> shioda_tate_grid(int max_deg = 15) {
  int cells = 0;
  bool ok = true;
  for_grid(max_deg, [&](int a, int b) {
    const auto k = fiber_type_table(a, b);
    ok = ok && b2(a, b) == 2 + (k.components() - 1) + geometric_rank(a, b);
    ++cells;
  });
  return {ok, std::to_string(cells) + " cells"};
}

inline std::pair<bool, std::string> attainment_grid(int max_deg = 15) {
  int cells = 0;
  bool ok = true;
  for_grid(max_deg, [&](int a, int b) {
    const int closed = std::max(4 * a - 2, 2 * b - 2);
    const int arith = 2 * genus_C_from_degrees(a, b) - 2 * genus_H_from_degree(a);
    ok = ok && closed == geometric_rank(a, b) && closed == arith;
    ++cells;
  });
  return {ok, std::to_string(cells) + " cells"};
}

/// Maximal curves of genus 1 and 2 over F_4 and F_16: raw counts in,
/// (1 + q T)^{2g} out.
inline std::pair<bool, std::string> lpoly_oracle() {
  struct Case {
    std::string name;
    std::vector<long long> counts;
    int g;
    long long q;
  };
  std::vector<Case> cases;
  const auto& F2 = field(1);
  const auto x = UniPoly::t(F2);
  // E over F_16.
  cases.push_back({"E/F16", {static_cast<long long>(e_count_bruteforce(field(4)))}, 1, 16});
  // r^2 + r = t^3 over F_4.
  cases.push_back({"t^3/F4", {static_cast<long long>(count_points_H(pow(x, 3), field(2)))}, 1, 4});
  // y^2 + y = x^5 over F_16, genus 2: counts over F_16 and F_256.
  const auto x5 = pow(x, 5);
  cases.push_back({"x^5/F16",
                   {static_cast<long long>(count_points_H(x5, field(4))),
                    static_cast<long long>(count_points_H(x5, field(8)))},
                   2,
                   16});
  // Hermitian tower, n = 1, counted as a tower over F_16 and F_256.
  const auto h = hermitian_family(1);
  const TowerCurve T(*h.A, *h.B);
  cases.push_back({"hermitian tower/F16",
                   {static_cast<long long>(count_points_tower(T, field(4))),
                    static_cast<long long>(count_points_tower(T, field(8)))},
                   2,
                   16});
  std::ostringstream os;
  bool ok = true;
  for (const auto& c : cases) {
    const auto L = lpoly_from_counts(c.counts, c.g, c.q);
    const auto want = binomial_power(exact_sqrt(static_cast<unsigned long long>(c.q)), 2 * c.g);
    const bool hit = L == want;
    ok = ok && hit;
    os << (os.tellp() > 0 ? "; " : "") << c.name << (hit ? " ok" : " MISMATCH");
  }
  return {ok, os.str()};
}

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<std::pair<bool, std::string>()> run;
};

inline std::vector<Criterion> criteria() {
  return {
      {1, "E point count formula vs brute force, n = 1..6", 10, e_counts},
      {2, "Frobenius = iota - 1 on E(F_{2^{2n}}), n <= 4", 5, frobenius_relation},
      {3, "quartic twist isomorphism on random (A, B)", 30, twist_identity},
      {4, "Hermitian n = 1: count 33, rank 4, both maximal", 5, hermitian_n1},
      {5, "trace m = 3: count 4609, rank 8, degrees (1, 5)", 30, trace_m3},
      {6, "quintic: sub-checks, count 65, rank 8", 5, quintic},
      {7, "Tate's algorithm = fiber table on the degree grid", 120, [] { return fiber_grid(); }},
      {8, "Shioda-Tate identity on the degree grid", 5, [] { return shioda_tate_grid(); }},
      {9, "geometric rank attained on the degree grid", 5, [] { return attainment_grid(); }},
      {10, "L-polynomial of maximal curves is (1 + qT)^{2g}", 10, lpoly_oracle},
  };
}

/// Runs one criterion; exceptions count as failures.
inline CriterionResult run_criterion(const Criterion& c) {
  CriterionResult r{c.id, c.name, false, {}, 0, c.budget_seconds};
  const auto t0 = std::chrono::steady_clock::now();
  try {
    auto [ok, detail] = c.run();
    r.passed = ok;
    r.detail = std::move(detail);
  } catch (const std::exception& e) {
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (r.passed && r.seconds > r.budget_seconds) {
    r.passed = false;
    r.detail += " (over time budget)";
  }
  return r;
}

inline std::vector<CriterionResult> run_all() {
  std::vector<CriterionResult> out;
  for (const auto& c : criteria()) out.push_back(run_criterion(c));
  return out;
}

}  // namespace accept
}  // namespace qtwist
