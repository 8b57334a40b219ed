#include <gtest/gtest.h>

#include <random>
#include <set>

#include "qtwist/binfield.hpp"

using namespace qtwist;

namespace {

// Independent polynomial arithmetic over GF(2), written out bit by bit.
std::uint64_t naive_mod(std::uint64_t a, std::uint64_t f) {
  int df = 63;
  while (!((f >> df) & 1)) --df;
  for (int i = 63; i >= df; --i)
    if ((a >> i) & 1) a ^= f << (i - df);
  return a;
}

std::uint64_t naive_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t f) {
  std::uint64_t acc = 0;
  for (int i = 0; i < 32; ++i)
    if ((b >> i) & 1) acc ^= a << i;
  return naive_mod(acc, f);
}

bool naive_irreducible(std::uint64_t f, int m) {
  for (std::uint64_t g = 2; g < (std::uint64_t{1} << (m / 2 + 1)); ++g)
    if (naive_mod(f, g) == 0) return false;
  return true;
}

}  // namespace

TEST(BinField, DefaultModuliAreSmallestIrreducible) {
  for (int m = 1; m <= 16; ++m) {
    std::uint64_t want = 0;
    for (std::uint64_t f = std::uint64_t{1} << m; f < (std::uint64_t{2} << m); ++f)
      if (naive_irreducible(f, m)) {
        want = f;
        break;
      }
    EXPECT_EQ(field(m).modulus(), want) << "m=" << m;
  }
  EXPECT_EQ(field(2).modulus(), 0x7u);
  EXPECT_EQ(field(4).modulus(), 0x13u);
  EXPECT_EQ(field(8).modulus(), 0x11bu);
}

TEST(BinField, RejectsBadModuliAndDegrees) {
  EXPECT_THROW(field(4, 0x15), PreconditionError);  // (x^2 + x + 1)^2
  EXPECT_THROW(field(25), PreconditionError);
  EXPECT_THROW(field(0), PreconditionError);
  EXPECT_THROW(parse_field_spec("4:3f"), ParseError);       // degree 5
  EXPECT_THROW(parse_field_spec("4:1e"), PreconditionError);  // divisible by x
  EXPECT_EQ(&parse_field_spec("4:1f"), &field(4, 0x1f));
  EXPECT_THROW(parse_field_spec("x"), ParseError);
  EXPECT_THROW(parse_field_spec("30"), PreconditionError);
  EXPECT_EQ(&parse_field_spec("4:19"), &field(4, 0x19));
  EXPECT_NE(&field(4, 0x19), &field(4));
}

TEST(BinField, MultiplicationMatchesSchoolbook) {
  std::mt19937_64 rng(1);
  for (int m : {3, 8, 13, 24}) {
    const auto& F = field(m);
    std::uniform_int_distribution<std::uint64_t> pick(0, F.size() - 1);
    for (int i = 0; i < 2000; ++i) {
      const auto a = pick(rng), b = pick(rng);
      EXPECT_EQ((F.elt(a) * F.elt(b)).bits, naive_mulmod(a, b, F.modulus()));
    }
  }
}

TEST(BinField, GF4Relation) {
  const auto& F = field(2);
  const auto w = F.gen();
  EXPECT_EQ(w * w, w + F.one());
  EXPECT_EQ(trace_abs(w), 1);
  EXPECT_EQ(sqrt_elt(w), w * w);
  EXPECT_FALSE(solve_wp(w).has_value());
  EXPECT_EQ(w * w * w + w, F.one() + w);
}

TEST(BinField, FermatAndInverse) {
  for (int m : {1, 4, 7, 10}) {
    const auto& F = field(m);
    for (std::uint64_t i = 1; i < F.size(); ++i) {
      const auto a = F.elt(i);
      EXPECT_TRUE((a * pow(a, F.size() - 2)).is_one());
      EXPECT_TRUE((a * inv(a)).is_one());
    }
    EXPECT_THROW(inv(F.zero()), PreconditionError);
  }
}

TEST(BinField, MixingFieldsIsAnError) {
  EXPECT_THROW(field(4).one() + field(3).one(), PreconditionError);
  EXPECT_THROW(field(4).one() * field(4, 0x19).one(), PreconditionError);
}

TEST(BinField, QuinticConstantHasOrderThreeFifthPower) {
  const auto& F = field(4);
  int roots = 0;
  for (std::uint64_t i = 0; i < 16; ++i) {
    const auto c = F.elt(i);
    if (!(pow(c, 4) + pow(c, 3) + F.one()).is_zero()) continue;
    ++roots;
    const auto c5 = pow(c, 5);
    EXPECT_FALSE(c5.is_one());
    EXPECT_TRUE(pow(c5, 3).is_one());
  }
  EXPECT_EQ(roots, 4);
}

TEST(BinField, TraceProperties) {
  for (int m = 1; m <= 12; ++m) {
    const auto& F = field(m);
    std::uint64_t zeros = 0;
    for (std::uint64_t i = 0; i < F.size(); ++i) {
      const auto a = F.elt(i);
      // Defining sum.
      auto acc = F.zero(), p = a;
      for (int k = 0; k < m; ++k) {
        acc += p;
        p = p * p;
      }
      ASSERT_TRUE(acc.bits <= 1);
      EXPECT_EQ(trace_abs(a), static_cast<int>(acc.bits));
      EXPECT_EQ(trace_abs(a * a + a), 0);
      const auto sol = solve_wp(a);
      EXPECT_EQ(sol.has_value(), trace_abs(a) == 0);
      if (sol) {
        ++zeros;
        EXPECT_EQ(sol->first * sol->first + sol->first, a);
        EXPECT_EQ(sol->first + sol->second, F.one());
      }
    }
    EXPECT_EQ(zeros, F.size() / 2) << "m=" << m;
  }
}

TEST(BinField, SolveWpExhaustiveOnF16) {
  const auto& F = field(4);
  for (std::uint64_t i = 0; i < 16; ++i) {
    std::set<std::uint32_t> roots;
    for (std::uint64_t z = 0; z < 16; ++z)
      if (F.elt(z) * F.elt(z) + F.elt(z) == F.elt(i)) roots.insert(static_cast<std::uint32_t>(z));
    const auto sol = solve_wp(F.elt(i));
    if (roots.empty()) {
      EXPECT_FALSE(sol.has_value());
    } else {
      ASSERT_TRUE(sol.has_value());
      EXPECT_EQ(roots, (std::set<std::uint32_t>{sol->first.bits, sol->second.bits}));
    }
  }
  const auto z0 = solve_wp(F.zero());
  ASSERT_TRUE(z0.has_value());
  EXPECT_EQ((std::set<std::uint32_t>{z0->first.bits, z0->second.bits}), (std::set<std::uint32_t>{0, 1}));
}

TEST(BinField, SqrtAndFrobenius) {
  std::mt19937_64 rng(2);
  for (int m : {1, 5, 12, 24}) {
    const auto& F = field(m);
    std::uniform_int_distribution<std::uint64_t> pick(0, F.size() - 1);
    EXPECT_TRUE(sqrt_elt(F.one()).is_one());
    for (int i = 0; i < 500; ++i) {
      const auto a = F.elt(pick(rng)), b = F.elt(pick(rng));
      EXPECT_EQ(sqrt_elt(a * a), a);
      EXPECT_EQ(sqrt_elt(a) * sqrt_elt(a), a);
      EXPECT_EQ(frobenius(a + b), frobenius(a) + frobenius(b));
      EXPECT_EQ(frobenius(a * b), frobenius(a) * frobenius(b));
      EXPECT_EQ(frobenius(a, m), a);
    }
  }
}

TEST(BinField, PowerSumTraceCountsHermitianConstants) {
  for (auto [n2, m] : {std::pair{2, 4}, std::pair{3, 6}}) {
    const auto& F = field(m);
    const std::uint64_t q = std::uint64_t{1} << n2;
    std::uint64_t count = 0;
    for (std::uint64_t i = 0; i < F.size(); ++i)
      if (power_sum_trace(pow(F.elt(i), q + 1), n2).is_one()) ++count;
    EXPECT_EQ(count, q * (q + 1) / 2);
  }
  EXPECT_TRUE(power_sum_trace(field(6).zero(), 3).is_zero());
}

TEST(BinField, PowerSumTraceAgreesWithNativeSubfieldTrace) {
  const auto& big = field(12);
  for (int k : {1, 2, 3, 4}) {
    const auto& small = field(k);
    const FieldEmbedding emb(small, big);
    for (std::uint64_t i = 0; i < small.size(); ++i) {
      const auto a = small.elt(i);
      EXPECT_EQ(power_sum_trace(emb(a), k).bits, static_cast<std::uint32_t>(trace_abs(a)));
    }
  }
  EXPECT_THROW(power_sum_trace(big.gen(), 4), PreconditionError);
  EXPECT_THROW(power_sum_trace(big.one(), 5), PreconditionError);
}

TEST(BinField, EmbeddingIsARingHomomorphism) {
  const auto& src = field(4);
  const auto& dst = field(12);
  const FieldEmbedding emb(src, dst);
  for (std::uint64_t i = 0; i < 16; ++i)
    for (std::uint64_t j = 0; j < 16; ++j) {
      const auto a = src.elt(i), b = src.elt(j);
      EXPECT_EQ(emb(a + b), emb(a) + emb(b));
      EXPECT_EQ(emb(a * b), emb(a) * emb(b));
    }
  EXPECT_THROW(FieldEmbedding(field(3), field(8)), PreconditionError);
}

TEST(BinField, HexRoundTrip) {
  const auto& F = field(8);
  for (std::uint64_t i = 0; i < F.size(); ++i) EXPECT_EQ(parse_elt(F, to_hex(F.elt(i))), F.elt(i));
  EXPECT_THROW(parse_elt(F, "100"), ParseError);
  EXPECT_THROW(parse_elt(F, "g"), ParseError);
}
