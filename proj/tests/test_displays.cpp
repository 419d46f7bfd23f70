#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace bhfk;

class DisplayTest : public ::testing::TestWithParam<ProductId> {};

TEST_P(DisplayTest, ComputedProductMatchesDisplay) {
  const auto c = compare_with_display(GetParam(), 8);
  EXPECT_TRUE(c.primary_matches);
  EXPECT_GT(c.terms, 0u);
  EXPECT_TRUE(c.passed()) << to_text(c);
}

TEST_P(DisplayTest, FittedFamiliesReproduceTheDisplay) {
  const auto product = compute_product(GetParam(), 10);
  EXPECT_TRUE(schema_equal(fit_bimodule(product), display(GetParam())));
}

TEST_P(DisplayTest, PrimaryMatrixHasFiveGenerators) {
  const auto d = display(GetParam());
  EXPECT_EQ(d.generators().size(), 5u);
  EXPECT_EQ(d.generators(), primary_product(build(factors(GetParam()).first), build(factors(GetParam()).second)));
}

INSTANTIATE_TEST_SUITE_P(AllProducts, DisplayTest, ::testing::ValuesIn(kAllProductIds),
                         [](const auto& info) {
                           std::string s(to_string(info.param));
                           std::erase(s, '*');
                           return s;
                         });

TEST(Displays, IdsRoundTrip) {
  for (ProductId id : kAllProductIds) {
    EXPECT_EQ(parse_product_id(to_string(id)), id);
    EXPECT_EQ(partner(partner(id)), id);
    EXPECT_NE(e_on_left(id), e_on_left(partner(id)));
    const auto [l, r] = factors(id);
    const auto [pl, pr] = factors(partner(id));
    EXPECT_EQ(l, pr);
    EXPECT_EQ(r, pl);
  }
  EXPECT_FALSE(parse_product_id("P*P").has_value());
}

TEST(Displays, DetectsAMissingTerm) {
  auto product = compute_product(ProductId::E1P, 6);
  auto it = product.cells.begin();
  const auto key = it->first;
  const auto term = *it->second.begin();
  product.toggle(key, term);
  const auto c = compare_with_display(ProductId::E1P, product, 6);
  EXPECT_FALSE(c.passed());
  ASSERT_EQ(c.missing.size(), 1u);
  EXPECT_EQ(c.missing[0].second, term);
  EXPECT_TRUE(c.extra.empty());
}

TEST(Displays, TypoNotesNameProductChecks) {
  for (const auto& n : display_typo_notes())
    for (const auto& a : n.affects) EXPECT_TRUE(a == "product.E1*P" || a == "product.E1*N") << a;
}
