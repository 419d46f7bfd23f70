#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace bhfk;
using I = Idempotent;

TEST(Relations, CorpusModulesSatisfyRelations) {
  for (CorpusId id : kAllCorpusIds) {
    const auto r = check_da_relations(build(id), 8);
    EXPECT_GT(r.terms_checked, 0u);
    EXPECT_TRUE(r.passed()) << to_string(id) << ": " << (r.failures.empty() ? "" : to_string(r.failures.front()));
  }
}

namespace {

std::set<std::string> failure_text(const RelationReport& r) {
  std::set<std::string> out;
  for (const auto& f : r.failures) out.insert(to_string(f));
  return out;
}

}  // namespace

TEST(Relations, LoneTermFailsWithItsSquare) {
  DABimodule m("lone");
  m.add_generator("a", I::A, I::A);
  m.add_term("a", "a", "U1 (x) U1");
  // U1 = R1*L1 at A, so delta_3(a, R1, L1) is missing as well.
  EXPECT_EQ(failure_text(check_da_relations(m, 6)),
            (std::set<std::string>{"cell (a, a), degree 2: Id(A)*U1 ⊗ (R1, L1)",
                                   "cell (a, a), degree 4: Id(A)*U1^2 ⊗ (Id(A)*U1, Id(A)*U1)"}));
}

TEST(Relations, FullFamilyCancelsItsSquares) {
  DABimodule m("family");
  m.add_generator("a", I::A, I::A);
  m.add_term("a", "a", "U1^(k+1) (x) U1^(k+1)");
  for (const auto& f : check_da_relations(m, 8).failures) {
    ASSERT_EQ(f.term.inputs.size(), 2u);
    EXPECT_EQ(f.term.inputs[0].letter, Letter::R1) << to_string(f);
  }
}

TEST(Relations, PrintedMiddleBlockFailsFromDegreeFour) {
  for (bool p : {true, false}) {
    const auto m = p ? build_P(true) : build_N(true);
    EXPECT_TRUE(check_da_relations(m, 3).passed()) << m.name;
    const auto r = check_da_relations(m, 4);
    ASSERT_FALSE(r.passed()) << m.name;
    for (const auto& f : r.failures) EXPECT_EQ(f.degree, 4);
  }
}

// Each higher action into S_AC is needed.
TEST(Relations, DroppingAnyHigherActionBreaksP) {
  const auto full = build_P();
  const auto n = full.cell("N_AB", "S_AC").size();
  ASSERT_EQ(n, 7u);
  for (std::size_t i = 0; i < n; ++i) {
    auto m = full;
    auto& cell = m.mutable_cell("N_AB", "S_AC");
    cell.erase(cell.begin() + static_cast<std::ptrdiff_t>(i));
    const auto r = check_da_relations(m, 8);
    EXPECT_FALSE(r.passed()) << "schema " << i;
  }
}

TEST(Relations, DroppingTheLastActionFailsInColumnS_AC) {
  auto m = build_P();
  auto& cell = m.mutable_cell("N_AB", "S_AC");
  cell.erase(cell.begin() + 6);
  const auto r = check_da_relations(m, 6);
  ASSERT_FALSE(r.passed());
  EXPECT_TRUE(std::any_of(r.failures.begin(), r.failures.end(), [](const auto& f) { return f.cell.col == "S_AC"; }));
}

TEST(Relations, ConcreteAndSchemaEntryPointsAgree) {
  const auto m = build_E2();
  const auto a = check_da_relations(m, 6);
  const auto b = check_da_relations(materialize(m, 6, false), 6);
  EXPECT_EQ(a.terms_checked, b.terms_checked);
  EXPECT_EQ(a.passed(), b.passed());
}
