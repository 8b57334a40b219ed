#include <gtest/gtest.h>

#include <random>

#include "qtwist/acceptance.hpp"

using namespace qtwist;

TEST(Formulas, EulerNumber) {
  EXPECT_EQ(euler_n(1, 1), 1);
  EXPECT_EQ(euler_n(1, 7), 2);
  EXPECT_EQ(euler_n(1, 5), 1);
  EXPECT_THROW(euler_n(2, 1), PreconditionError);
  // Against the defining minimum: deg A <= 2n and deg(A^2 + B) <= 6n.
  for (int a = 1; a <= 21; a += 2)
    for (int b = 1; b <= 41; b += 2) {
      int n = 0;
      while (2 * n < a || 6 * n < std::max(2 * a, b)) ++n;
      EXPECT_EQ(euler_n(a, b), n) << a << "," << b;
    }
}

TEST(Formulas, FiberTable) {
  EXPECT_EQ(fiber_type_table(1, 1), KodairaType::istar(2));
  EXPECT_EQ(fiber_type_table(1, 7), KodairaType::iistar());
  EXPECT_EQ(fiber_type_table(1, 5), KodairaType::ii());
  EXPECT_EQ(fiber_type_table(1, 3), KodairaType::i0star());
  EXPECT_EQ(fiber_type_table(3, 1), KodairaType::istar(6));
  EXPECT_EQ(fiber_type_table(1, 9), KodairaType::i0star());
  EXPECT_EQ(KodairaType::istar(2).name(), "I2*");
  EXPECT_EQ(KodairaType::istar(0).name(), "I0*");
  EXPECT_EQ(KodairaType::istar(4).components(), 9);
  EXPECT_THROW(KodairaType::other("IV").components(), PreconditionError);
}

TEST(Formulas, BettiAndRank) {
  EXPECT_EQ(b2(1, 1), 10);
  EXPECT_EQ(b2(1, 5), 10);
  EXPECT_EQ(b2(1, 7), 22);
  EXPECT_EQ(geometric_rank(1, 5), 8);
  EXPECT_EQ(geometric_rank(1, 1), 2);
  EXPECT_EQ(geometric_rank(3, 1), 10);
  for (int a = 1; a <= 15; a += 2)
    for (int b = 1; b <= 15; b += 2) EXPECT_EQ(b2(a, b), 12 * euler_n(a, b) - 2);
}

TEST(Formulas, ShiodaTate) {
  const auto r15 = shioda_tate_check(1, 5);
  EXPECT_EQ(r15.kodaira, KodairaType::ii());
  EXPECT_EQ(r15.b2, 10);
  EXPECT_EQ(r15.geometric_rank, 8);
  const auto r11 = shioda_tate_check(1, 1);
  EXPECT_EQ(r11.kodaira.components(), 7);
  const auto r17 = shioda_tate_check(1, 7);
  EXPECT_EQ(r17.geometric_rank, 12);
  EXPECT_EQ(r17.b2, 22);
  for (int a = 1; a <= 31; a += 2)
    for (int b = 1; b <= 31; b += 2) EXPECT_TRUE(shioda_tate_check(a, b).shioda_tate_ok);
}

TEST(Tate, Examples) {
  const auto& F = field(1);
  const auto t = UniPoly::t(F);
  EXPECT_EQ(tate_algorithm_at_infinity(t, t), KodairaType::istar(2));
  EXPECT_EQ(tate_algorithm_at_infinity(pow(t, 3), t), KodairaType::istar(6));
  EXPECT_EQ(tate_algorithm_at_infinity(t, pow(t, 5) + pow(t, 2) + UniPoly::constant(F.one())), KodairaType::ii());
  EXPECT_EQ(tate_algorithm_at_infinity(t, pow(t, 7)), KodairaType::iistar());
  EXPECT_EQ(tate_algorithm_at_infinity(t, pow(t, 3)), KodairaType::i0star());
  EXPECT_THROW(tate_algorithm_at_infinity(t * t, t), PreconditionError);
}

TEST(Tate, ModelAtInfinity) {
  const auto& F = field(1);
  const auto t = UniPoly::t(F);
  const auto inf = model_at_infinity(t, pow(t, 7));
  EXPECT_EQ(inf.n, 2);
  EXPECT_EQ(inf.model.a3, pow(t, 6));
  // The model at infinity is again smooth away from s = 0: its discriminant
  // is s^{12 n}.
  EXPECT_EQ(inf.model.discriminant(), pow(t, 24));
}

TEST(Tate, RandomGridAgreesWithTable) {
  std::mt19937_64 rng(15);
  for (int m : {1, 2, 3}) {
    const auto& F = field(m);
    for (int a = 1; a <= 15; a += 2)
      for (int b = 1; b <= 15; b += 2)
        for (int k = 0; k < 4; ++k) {
          const auto A = random_poly(F, a, rng), B = random_poly(F, b, rng);
          EXPECT_EQ(tate_algorithm_at_infinity(A, B), fiber_type_table(a, b))
              << "A=" << A.to_string() << " B=" << B.to_string();
        }
  }
}

TEST(Tate, DiscriminantValuationIsTwelveN) {
  // The whole discriminant of the model at infinity sits at s = 0.
  const auto& F = field(2);
  std::mt19937_64 rng(16);
  for (int a = 1; a <= 9; a += 2)
    for (int b = 1; b <= 15; b += 2) {
      const auto A = random_poly(F, a, rng), B = random_poly(F, b, rng);
      const auto inf = model_at_infinity(A, B);
      const auto out = tate::run(inf.model);
      EXPECT_EQ(out.disc_valuation, 12 * inf.n);
      EXPECT_EQ(inf.n, euler_n(a, b));
      EXPECT_EQ(out.rescalings, 0);
    }
}

TEST(Tate, StandardReductionTypesOnKnownCurves) {
  // Non-family models: the algorithm is not hard-wired to the table.
  const auto& F = field(1);
  const auto s = UniPoly::t(F);
  const auto one = UniPoly::constant(F.one());
  const auto zero = UniPoly(F);
  using M = tate::Model;
  // Good reduction: y^2 + y = x^3.
  EXPECT_EQ(tate::run(M{zero, zero, one, zero, zero}).type.name(), "I0");
  // Multiplicative: y^2 + xy = x^3 + s.
  EXPECT_EQ(tate::run(M{one, zero, zero, zero, s}).type.name(), "I1");
  // Additive type II: y^2 + s y = x^3 + s.
  EXPECT_EQ(tate::run(M{zero, zero, s, zero, s}).type, KodairaType::ii());
}
