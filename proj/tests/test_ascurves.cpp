#include <gtest/gtest.h>

#include <random>

#include "qtwist/acceptance.hpp"

using namespace qtwist;

namespace {

// Affine points by enumerating all (t, r, s), one point at infinity.
std::uint64_t brute_tower(const UniPoly& A, const UniPoly& B, const FieldCtx& K) {
  const FieldEmbedding emb(A.ctx(), K);
  const auto a = A.map(emb), b = B.map(emb);
  std::uint64_t n = 1;
  for (std::uint64_t i = 0; i < K.size(); ++i) {
    const auto t = K.elt(i);
    const auto At = a.eval(t), Bt = b.eval(t);
    for (std::uint64_t j = 0; j < K.size(); ++j) {
      const auto r = K.elt(j);
      if (!(r * r + r == At)) continue;
      for (std::uint64_t k = 0; k < K.size(); ++k) {
        const auto s = K.elt(k);
        if (s * s + s == r * At + Bt) ++n;
      }
    }
  }
  return n;
}

}  // namespace

TEST(Genus, Examples) {
  const auto& F = field(1);
  const auto t = UniPoly::t(F);
  EXPECT_EQ(genus_H(t), 0);
  EXPECT_EQ(genus_H(pow(t, 3)), 1);
  EXPECT_EQ(genus_H(pow(t, 17)), 8);
  EXPECT_EQ(genus_C(t, pow(t, 3)), 2);
  EXPECT_EQ(genus_C(t, t), 1);
  EXPECT_EQ(genus_C(pow(t, 3), t), 6);
  EXPECT_THROW(genus_H(t * t), PreconditionError);
  EXPECT_THROW(genus_H(UniPoly::constant(F.one())), PreconditionError);
  EXPECT_THROW(genus_C(t, t * t), PreconditionError);
  // Constant B: no pole from B, genus from A alone.
  EXPECT_EQ(genus_C(pow(t, 3), UniPoly(F)), 6);
}

TEST(Genus, GenusOneCurveFitsLPolynomial) {
  const auto t3 = pow(UniPoly::t(field(1)), 3);
  const long long n1 = static_cast<long long>(count_points_H(t3, field(4)));
  const long long n2 = static_cast<long long>(count_points_H(t3, field(8)));
  EXPECT_EQ(n1, 9);
  // Genus 1 from one count; the second count is then forced.
  const auto L = lpoly_from_counts({n1}, 1, 16);
  const long long a1 = L[1];
  EXPECT_EQ(n2, 256 + 1 - (a1 * a1 - 2 * 16));
}

TEST(Counting, Examples) {
  const auto& F2 = field(1);
  const auto x = UniPoly::t(F2);
  EXPECT_EQ(count_points_H(x, field(2)), 5u);
  for (int k = 1; k <= 10; ++k) EXPECT_EQ(count_points_H(x, field(k)), (std::uint64_t{1} << k) + 1);
  // y^2 + y = x^3 is maximal over F_4 and therefore minimal over F_16.
  EXPECT_EQ(count_points_H(pow(x, 3), field(2)), 9u);
  EXPECT_EQ(count_points_H(pow(x, 3), field(4)), 9u);
  EXPECT_EQ(classify_extremal(9, 1, 16), Extremality::Minimal);

  const auto& F64 = field(6);
  EXPECT_EQ(count_points_H(pow(UniPoly::t(F64), 9), F64), 129u);
}

TEST(Counting, TraceMethodMatchesTripleEnumeration) {
  std::mt19937_64 rng(7);
  for (int m : {1, 2}) {
    const auto& F = field(m);
    for (int i = 0; i < 8; ++i) {
      const auto A = random_poly(F, 1 + 2 * static_cast<int>(rng() % 3), rng);
      const auto B = random_poly(F, 1 + 2 * static_cast<int>(rng() % 4), rng);
      EXPECT_EQ(count_points_tower(TowerCurve(A, B), field(4)), brute_tower(A, B, field(4)));
    }
  }
}

TEST(Counting, RejectsDegenerateOrUnnormalizedInput) {
  const auto& F = field(2);
  const auto t = UniPoly::t(F);
  EXPECT_THROW(TowerCurve(t * t + t, t), PreconditionError);
  EXPECT_THROW(TowerCurve(UniPoly(F), t), PreconditionError);
  EXPECT_THROW(count_points_tower(TowerCurve(pow(t, 4) + pow(t, 3), t), F), PreconditionError);
  EXPECT_THROW(count_points_tower(TowerCurve(t, t * t), F), PreconditionError);
  EXPECT_THROW(count_points_tower(TowerCurve(t, t), field(3)), PreconditionError);
}

TEST(Counting, NormalizationPreservesCounts) {
  std::mt19937_64 rng(8);
  for (int m : {1, 2}) {
    const auto& F = field(m);
    for (int i = 0; i < 40; ++i) {
      const auto A = random_poly(F, 1 + static_cast<int>(rng() % 6), rng);
      if (in_wp_image(A)) continue;
      const auto B = random_poly(F, static_cast<int>(rng() % 8), rng);
      const auto n = normalize_pair(A, B);
      for (int M : {4, 6}) {
        if (M % m != 0) continue;
        EXPECT_EQ(count_affine_tower(A, B, field(M)), count_affine_tower(n.A, n.B, field(M)));
      }
    }
  }
}

TEST(Counting, WeilBoundOnRandomTowers) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 40; ++i) {
    const auto& F = field(2);
    const auto A = random_poly(F, 1 + 2 * static_cast<int>(rng() % 3), rng);
    const auto B = random_poly(F, 1 + 2 * static_cast<int>(rng() % 5), rng);
    const TowerCurve T(A, B);
    const int g = genus_C(A, B);
    for (int M : {2, 4, 6, 8, 10, 12})
      EXPECT_TRUE(weil_bound_holds(count_points_tower(T, field(M)), g, std::uint64_t{1} << M))
          << A.to_string() << " / " << B.to_string() << " over 2^" << M;
  }
}

TEST(Counting, ParallelSumIsPartitionIndependent) {
  const auto& F2 = field(1);
  const auto A = UniPoly::from_bits(F2, {0, 1, 1, 1, 0, 1});
  const auto B = UniPoly::from_bits(F2, {1, 1, 0, 0, 0, 0, 0, 1});
  const auto serial = count_points_tower(TowerCurve(A, B), field(16));
  for (unsigned threads : {2U, 3U, 8U}) {
    default_threads() = threads;
    EXPECT_EQ(count_points_tower(TowerCurve(A, B), field(16)), serial);
  }
  default_threads() = 1;
}

TEST(Extremality, Classification) {
  EXPECT_EQ(classify_extremal(33, 2, 16), Extremality::Maximal);
  EXPECT_EQ(classify_extremal(17, 0, 16), Extremality::Maximal);
  EXPECT_EQ(classify_extremal(25, 1, 16), Extremality::Maximal);
  EXPECT_EQ(classify_extremal(9, 1, 16), Extremality::Minimal);
  EXPECT_EQ(classify_extremal(20, 1, 16), Extremality::Neither);
  EXPECT_THROW(classify_extremal(5, 1, 8), PreconditionError);
}

TEST(Extremality, MaximalImpliesBinomialLPolynomial) {
  const auto& F2 = field(1);
  const auto t = UniPoly::t(F2);
  // Genus-1 and genus-2 towers over GF(2), checked over F_16.
  for (const auto& [A, B] : {std::pair{t, t}, std::pair{t, pow(t, 3)}, std::pair{t, pow(t, 3) + t}}) {
    const TowerCurve T(A, B);
    const int g = genus_C(A, B);
    const auto n1 = count_points_tower(T, field(4));
    if (classify_extremal(n1, g, 16) != Extremality::Maximal) continue;
    std::vector<long long> counts{static_cast<long long>(n1)};
    if (g == 2) counts.push_back(static_cast<long long>(count_points_tower(T, field(8))));
    EXPECT_EQ(lpoly_from_counts(counts, g, 16), binomial_power(4, 2 * g));
  }
}

TEST(TowerStats, ReportsNormalizedData) {
  const auto& F = field(1);
  const auto st = tower_stats(trace_poly(F, 3), UniPoly(F), 12);
  EXPECT_EQ(st.genus_C, 4);
  EXPECT_EQ(st.genus_H, 0);
  EXPECT_EQ(st.count_C, 4609u);
  EXPECT_EQ(st.count_H, 4097u);
  EXPECT_EQ(st.classification, Extremality::Maximal);
}
