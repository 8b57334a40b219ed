#include <gtest/gtest.h>

#include <set>

#include "qtwist/acceptance.hpp"

using namespace qtwist;

TEST(Quintic, AllChecksPass) {
  const auto q = quintic_example();
  EXPECT_TRUE(q.all_passed());
  EXPECT_EQ(q.count_C, 65u);
  EXPECT_EQ(q.genus_C, 6);
  EXPECT_EQ(q.genus_H, 2);
  EXPECT_EQ(q.rank, 8);
  EXPECT_EQ(rank_constant_base(q.genus_C), 24);
}

TEST(Quintic, CountByIndependentEnumeration) {
  // y^4 + y = x^5: for each x, count y via the additive map y -> y^4 + y.
  const auto& F = field(4);
  std::vector<int> hits(16, 0);
  for (std::uint64_t y = 0; y < 16; ++y) ++hits[(pow(F.elt(y), 4) + F.elt(y)).bits];
  std::uint64_t n = 1;
  for (std::uint64_t x = 0; x < 16; ++x) n += static_cast<std::uint64_t>(hits[pow(F.elt(x), 5).bits]);
  EXPECT_EQ(n, 65u);
}

TEST(Quintic, WrongConstantBreaksTheAutomorphism) {
  const auto& F = field(4);
  const auto c = quintic_c(F);
  EXPECT_TRUE(quintic_identities(F, c).sigma_residual.is_zero());
  for (std::uint64_t i = 0; i < 16; ++i) {
    const auto d = F.elt(i);
    if (d.is_zero() || (pow(d, 4) + pow(d, 3) + F.one()).is_zero()) continue;
    EXPECT_FALSE(quintic_identities(F, d).sigma_residual.is_zero()) << to_hex(d);
  }
}

TEST(Hermitian, FirstInstance) {
  const auto h = hermitian_family(1);
  EXPECT_TRUE(h.all_passed());
  EXPECT_EQ(h.rank, 4);
  EXPECT_EQ(h.genus_C, 2);
  EXPECT_EQ(h.genus_H, 0);
  EXPECT_EQ(h.count_C, 33u);
  EXPECT_EQ(h.hypothesis, "BothMaximal");
}

TEST(Hermitian, IndependentOfChoice) {
  const auto data = hermitian_pairs(1);
  EXPECT_EQ(data.valid_c, 10u);
  EXPECT_EQ(data.pairs.size(), 20u);
  std::set<std::tuple<int, int, int>> invariants;
  for (const auto& p : data.pairs) {
    const auto h = hermitian_family(1, p, &data);
    invariants.insert({h.genus_C, h.genus_H, h.rank});
  }
  EXPECT_EQ(invariants.size(), 1u);
}

TEST(Hermitian, ThirdInstance) {
  const auto h = hermitian_family(3);
  EXPECT_TRUE(h.all_passed());
  EXPECT_EQ(h.A->degree(), 1u);
  EXPECT_EQ(h.B->degree(), 33u);
  EXPECT_EQ(h.rank, 64);
  EXPECT_EQ(h.count_C, 2u * 64 * 64 + 1);
}

TEST(Hermitian, PreconditionsAndBadPairs) {
  EXPECT_THROW(hermitian_family(2), PreconditionError);
  EXPECT_THROW(hermitian_family(7), PreconditionError);
  const auto data = hermitian_pairs(1);
  const auto [c, b0] = data.pairs.front();
  EXPECT_THROW(hermitian_family(1, std::pair{c, b0 + c}, &data), PreconditionError);
}

// The standard-form B with the unscaled coefficients c^{q-1} and D^2 / c does
// not satisfy the identity: the residual is nonzero and the count is off.
TEST(Hermitian, UnscaledStandardFormFails) {
  const auto data = hermitian_pairs(1);
  const auto [c, b0] = data.pairs.front();
  const auto& K = *data.field;
  const auto D = hermitian_D(1, b0);
  const auto bad = UniPoly::t(K) * (UniPoly::constant(pow(c, 3)) + inv(c) * square(D));
  EXPECT_FALSE(hermitian_standard_form_residual(1, c, b0, bad).is_zero());
  EXPECT_NE(count_points_tower(TowerCurve(UniPoly::t(K), bad), K), 33u);
  EXPECT_TRUE(hermitian_standard_form_residual(1, c, b0, hermitian_B(1, c, b0)).is_zero());
}

TEST(Trace, SmallCases) {
  const auto t1 = trace_family(1);
  EXPECT_TRUE(t1.all_passed());
  EXPECT_EQ(t1.genus_C, 1);
  EXPECT_EQ(t1.rank, 2);
  EXPECT_EQ(t1.count_C, 25u);

  const auto t3 = trace_family(3);
  EXPECT_TRUE(t3.all_passed());
  EXPECT_EQ(t3.genus_C, 4);
  EXPECT_EQ(t3.rank, 8);
  EXPECT_EQ(t3.count_C, 4609u);
  EXPECT_EQ(t3.A->degree(), 1u);
  EXPECT_EQ(t3.B->degree(), 5u);
  EXPECT_EQ(t3.rank, geometric_rank(1, 5));
}

TEST(Trace, ModelCountByPairEnumeration) {
  // s^2 + s = x^3 + x^2 over F_16 by enumerating all 256 pairs.
  const auto& F = field(4);
  std::uint64_t n = 1;
  for (std::uint64_t i = 0; i < 16; ++i)
    for (std::uint64_t j = 0; j < 16; ++j) {
      const auto x = F.elt(i), s = F.elt(j);
      if (s * s + s == x * x * x + x * x) ++n;
    }
  EXPECT_EQ(n, 25u);
}

TEST(Trace, LargeCaseIsFormulaOnly) {
  const auto t5 = trace_family(5);
  EXPECT_TRUE(t5.all_passed());
  EXPECT_EQ(t5.rank, 32);
  EXPECT_EQ(t5.hypothesis, "Unverified");
  EXPECT_FALSE(t5.count_C.has_value());
  EXPECT_THROW(trace_family(2), PreconditionError);
}
