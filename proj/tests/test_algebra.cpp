#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"

using namespace bhfk;
using bhfk::test::mono;
using I = Idempotent;
using L = Letter;

TEST(Algebra, RoundTripThroughBProducesU1) {
  const auto r1 = mono(I::A, L::R1);
  const auto l1 = mono(r1.right, L::L1);
  EXPECT_EQ(to_string(multiply_basis(r1, l1)), "Id(A)*U1");
}

TEST(Algebra, TwoStepLeftwardPathVanishesInB21) {
  // L2 ends where L1 starts, but the composite is zero in B(2,1).
  for (auto left : summand_idempotents(1)) {
    auto l2 = monomial_from(left, L::L2, 0, 0);
    if (!l2) continue;
    auto l1 = monomial_from(l2->right, L::L1, 0, 0);
    if (!l1) continue;
    EXPECT_TRUE(multiply_basis(*l2, *l1).is_zero()) << to_string(*l2);
  }
}

TEST(Algebra, IdempotentsActAsUnits) {
  const auto r1 = mono(I::A, L::R1);
  EXPECT_EQ(multiply_basis(idempotent_monomial(I::A), r1), AlgebraElement(r1));
  EXPECT_EQ(multiply_basis(r1, idempotent_monomial(r1.right)), AlgebraElement(r1));
  EXPECT_TRUE(multiply_basis(idempotent_monomial(I::C), r1).is_zero());
}

TEST(Algebra, LeftwardTimesRightwardCollectsPowers) {
  const auto l1 = mono(I::B, L::L1, 2, 0);
  const auto r1 = mono(I::A, L::R1);
  EXPECT_EQ(to_string(multiply_basis(l1, r1)), "Id(B)*U1^3");
}

TEST(Algebra, LengthTwoPathInB22) {
  const auto r2 = mono(I::AB, L::R2);
  const auto r1 = mono(r2.right, L::R1);
  const auto p = multiply_basis(r2, r1);
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(p.begin()->letter, L::R2R1);
  EXPECT_EQ(p.begin()->left, I::AB);
  EXPECT_EQ(p.begin()->right, I::BC);
}

TEST(Algebra, U1U2VanishesAtMiddleIdempotentOfB21) {
  const auto a = mono(I::B, L::Id, 1, 0);
  const auto b = mono(I::B, L::Id, 0, 1);
  EXPECT_TRUE(multiply_basis(a, b).is_zero());
  EXPECT_TRUE(rewrite_product(a, b).is_zero());
  // At A and C a single U generates everything.
  EXPECT_FALSE(monomial_from(I::A, L::Id, 0, 1).has_value());
  EXPECT_FALSE(monomial_from(I::C, L::Id, 1, 0).has_value());
}

TEST(Algebra, BasisSizes) {
  EXPECT_EQ(enumerate_basis(1, 0).size(), 7u);
  EXPECT_EQ(enumerate_basis(2, 0).size(), 9u);
  for (const auto& m : enumerate_basis(2, 3)) EXPECT_TRUE(m.is_valid()) << to_string(m);
}

TEST(Algebra, DegreeIsLettersPlusTwiceUPowers) {
  EXPECT_EQ(intrinsic_degree(mono(I::AB, L::R2R1, 2, 1)), 8);
  EXPECT_EQ(intrinsic_degree(mono(I::B, L::Id, 0, 3)), 6);
  EXPECT_EQ(intrinsic_degree(idempotent_monomial(I::ABC)), 0);
}

TEST(Algebra, MultiplicationAgreesWithRewritingOracle) {
  const auto r = compare_with_oracle({0, 1, 2, 3}, 3);
  EXPECT_GT(r.pairs, 0u);
  EXPECT_TRUE(r.passed()) << (r.mismatches.empty() ? "" : r.mismatches.front());
}

TEST(Algebra, Associative) {
  const auto r = check_associativity({1, 2}, 2);
  EXPECT_GT(r.triples, 0u);
  EXPECT_TRUE(r.passed()) << (r.failures.empty() ? "" : r.failures.front());
}

TEST(AlgebraProperty, ProductsAreHomogeneousAndChain) {
  std::mt19937 rng(20261016);
  const auto basis = enumerate_basis(2, 3);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  for (int i = 0; i < 5000; ++i) {
    const auto& a = basis[pick(rng)];
    const auto& b = basis[pick(rng)];
    const auto p = multiply_basis(a, b);
    ASSERT_LE(p.size(), 1u);
    if (a.right != b.left) {
      EXPECT_TRUE(p.is_zero());
      continue;
    }
    for (const auto& m : p) {
      EXPECT_EQ(intrinsic_degree(m), intrinsic_degree(a) + intrinsic_degree(b));
      EXPECT_EQ(m.left, a.left);
      EXPECT_EQ(m.right, b.right);
    }
  }
}

TEST(AlgebraProperty, FactorizationsMultiplyBack) {
  for (const auto& b : enumerate_basis(2, 2))
    for (const auto& [x, y] : factorizations(b, true))
      EXPECT_EQ(multiply_basis(x, y), AlgebraElement(b)) << to_string(b);
}
