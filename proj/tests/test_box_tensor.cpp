#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace bhfk;
using I = Idempotent;

namespace {

std::vector<std::string> cell_text(const ConcreteDABimodule& m, const std::string& row, const std::string& col) {
  std::vector<std::string> out;
  for (const auto& t : m.cell(row, col)) out.push_back(to_string(t));
  return out;
}

// Copy of m restricted to generators accepted by keep.
template <class Pred>
DABimodule restrict_to(const DABimodule& m, Pred keep) {
  DABimodule out(m.name);
  for (const auto& g : m.generators())
    if (keep(g)) out.add_generator(g);
  for (const auto& [k, schemas] : m.cells())
    if (out.has_generator(k.row) && out.has_generator(k.col))
      for (const auto& s : schemas) out.add_term(k.row, k.col, s);
  return out;
}

}  // namespace

TEST(BoxTensor, PrimaryPairsMatchingIdempotents) {
  const auto gens = primary_product(build_E1(), build_P());
  ASSERT_EQ(gens.size(), 5u);
  for (const auto& g : gens) EXPECT_EQ(g.name.front(), '(');
  EXPECT_EQ(gens.front().name, "(X1,S_A)");
  EXPECT_EQ(gens.front().left, I::Empty);
  EXPECT_EQ(gens.front().right, I::A);
}

TEST(BoxTensor, PrimaryIsXMajor) {
  const auto gens = primary_product(build_P(), build_E1());
  const auto p_module = build_P();
  const auto& p = p_module.generators();
  for (std::size_t i = 1; i < gens.size(); ++i) {
    const auto prev = gens[i - 1].name.substr(1, gens[i - 1].name.find(',') - 1);
    const auto cur = gens[i].name.substr(1, gens[i].name.find(',') - 1);
    auto pos = [&](const std::string& n) {
      return std::find_if(p.begin(), p.end(), [&](const auto& g) { return g.name == n; }) - p.begin();
    };
    EXPECT_LE(pos(prev), pos(cur));
  }
}

TEST(BoxTensor, SecondaryCellWithOneInput) {
  const auto m = secondary_product(build_E1(), build_P(), 5);
  EXPECT_EQ(cell_text(m, "(X2,E_AC)", "(X2,N_AB)"),
            (std::vector<std::string>{"Id(B)*U1 ⊗ (R2)", "Id(B)*U1^2 ⊗ (R2*U2)"}));
}

TEST(BoxTensor, SecondaryCellWithTwoInputs) {
  const auto m = secondary_product(build_E2(), build_P(), 3);
  // k = 0 and k = 1 of R1*U1^k (x) (R1, U2^(k+1)); both have output degree <= 3.
  EXPECT_EQ(cell_text(m, "(Y3,N_BC)", "(Y2,S_AC)"),
            (std::vector<std::string>{"R1 ⊗ (R1, Id(BC)*U2)", "R1*U1 ⊗ (R1, Id(BC)*U2^2)"}));
  const auto low = secondary_product(build_E2(), build_P(), 2);
  EXPECT_EQ(cell_text(low, "(Y3,N_BC)", "(Y2,S_AC)"), (std::vector<std::string>{"R1 ⊗ (R1, Id(BC)*U2)"}));
}

TEST(BoxTensor, ProductWithZeroModuleIsZero) {
  DABimodule zero("0");
  const auto a = secondary_product(zero, build_P(), 6);
  const auto b = secondary_product(build_P(), zero, 6);
  EXPECT_TRUE(a.generators.empty() && a.cells.empty());
  EXPECT_TRUE(b.generators.empty() && b.cells.empty());
}

TEST(BoxTensor, AlgebraMismatchThrows) {
  auto x = build_E1();
  x.right_algebra = "B(3)";
  EXPECT_THROW(primary_product(x, build_P()), std::domain_error);
}

TEST(BoxTensor, ProductsSatisfyRelations) {
  for (ProductId id : kAllProductIds) {
    const auto m = compute_product(id, 10);
    const auto r = check_da_relations(m, 8);
    EXPECT_TRUE(r.passed()) << to_string(id) << ": " << (r.failures.empty() ? "" : to_string(r.failures.front()));
  }
}

TEST(BoxTensor, GeneratorsThatPairWithNothingDoNotMatter) {
  const auto e1 = build_E1();
  std::set<Idempotent> rights;
  for (const auto& g : e1.generators()) rights.insert(g.right);
  const auto p = build_P();
  const auto trimmed = restrict_to(p, [&](const DAGenerator& g) { return rights.count(g.left) != 0; });
  ASSERT_LT(trimmed.generators().size(), p.generators().size());
  const auto full = secondary_product(e1, p, 8);
  const auto part = secondary_product(e1, trimmed, 8);
  EXPECT_EQ(full.generators, part.generators);
  EXPECT_EQ(full.cells, part.cells);
}

// (X1 ⊕ X2) ⊠ Y = X1 ⊠ Y ⊕ X2 ⊠ Y, with E1 split along its components.
TEST(BoxTensor, AdditiveInTheLeftFactor) {
  const auto e1 = build_E1();
  const auto p = build_P();
  const auto whole = secondary_product(e1, p, 8);
  const auto inner = restrict_to(e1, [](const DAGenerator& g) { return g.name == "X2" || g.name == "X3"; });
  const auto outer = restrict_to(e1, [](const DAGenerator& g) { return g.name == "X1" || g.name == "X4"; });
  const auto a = secondary_product(inner, p, 8);
  const auto b = secondary_product(outer, p, 8);
  EXPECT_EQ(whole.term_count(), a.term_count() + b.term_count());
  for (const auto& [k, cell] : a.cells) EXPECT_EQ(whole.cell(k.row, k.col), cell);
  for (const auto& [k, cell] : b.cells) EXPECT_EQ(whole.cell(k.row, k.col), cell);
}

TEST(BoxTensor, RaisingTheBoundOnlyAddsHigherTerms) {
  const auto lo = compute_product(ProductId::PE2, 6);
  const auto hi = compute_product(ProductId::PE2, 9);
  for (const auto& [k, cell] : hi.cells)
    for (const auto& t : cell) {
      const bool low = intrinsic_degree(t.output) <= 6;
      EXPECT_EQ(lo.cell(k.row, k.col).count(t) == 1, low) << to_string(t);
    }
}
