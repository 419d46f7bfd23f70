#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"

using namespace bhfk;
using bhfk::test::mono;
using I = Idempotent;
using L = Letter;

TEST(Bimodule, InstantiateFamilyUpToBound) {
  const auto e1 = build_E1();
  const auto terms = instantiate(e1, "X2", "X2", 4);
  // U1^(k+1) (x) U1^(k+1) and U2^(k+1) (x) U2^(k+1) for k = 0, 1.
  ASSERT_EQ(terms.size(), 4u);
  for (const auto& t : terms) {
    EXPECT_LE(intrinsic_degree(t.output), 4);
    ASSERT_EQ(t.inputs.size(), 1u);
    EXPECT_EQ(t.output.e1 + t.output.e2, t.inputs[0].e1 + t.inputs[0].e2);
  }
}

TEST(Bimodule, InstantiateCrossingEntry) {
  const auto p = build_P();
  const auto terms = instantiate(p, "N_B", "S_A", 3);
  ASSERT_EQ(terms.size(), 2u);
  EXPECT_EQ(to_string(terms[0]), "R1 ⊗ (R1, Id(B)*U2)");
  EXPECT_EQ(to_string(terms[1]), "R1*U1 ⊗ (R1, Id(B)*U2^2)");
}

TEST(Bimodule, EvaluateDelta) {
  const auto e1 = build_E1();
  const auto u1 = mono(I::AB, L::Id, 1, 0);
  const auto d2 = evaluate_delta(e1, "X2", {u1});
  ASSERT_EQ(d2.size(), 1u);
  EXPECT_EQ(d2.begin()->first, mono(I::B, L::Id, 1, 0));
  EXPECT_EQ(d2.begin()->second, "X2");

  EXPECT_TRUE(evaluate_delta(e1, "X1", {}).empty());

  // Column S_A, row N_B: delta^1_3(S_A, R1, U2) = R1 (x) N_B.
  const auto p = build_P();
  const auto r1 = mono(I::A, L::R1);
  const auto u2 = mono(I::B, L::Id, 0, 1);
  const auto d3 = evaluate_delta(p, "S_A", {r1, u2});
  ASSERT_EQ(d3.size(), 1u);
  EXPECT_EQ(d3.begin()->first, r1);
  EXPECT_EQ(d3.begin()->second, "N_B");
  // Inputs that do not start at the right idempotent give zero.
  EXPECT_TRUE(evaluate_delta(p, "N_B", {r1, u2}).empty());
}

TEST(Bimodule, StrictUnitalityIsImplicit) {
  const auto e1 = build_E1();
  for (const auto& g : e1.generators()) {
    const auto unit = evaluate_delta(e1, g.name, {idempotent_monomial(g.right)});
    ASSERT_EQ(unit.size(), 1u) << g.name;
    EXPECT_EQ(unit.begin()->first, idempotent_monomial(g.left));
    EXPECT_EQ(unit.begin()->second, g.name);
  }
  const auto closed = materialize(e1, 4, true);
  const ConcreteTerm unit{idempotent_monomial(I::Empty), {idempotent_monomial(I::A)}};
  EXPECT_TRUE(closed.cell("X1", "X1").count(unit));
  EXPECT_FALSE(materialize(e1, 4, false).cell("X1", "X1").count(unit));
}

TEST(Bimodule, IndexThatDoesNotRaiseDegreeIsRejected) {
  DABimodule m("bad");
  m.add_generator("a", I::A, I::A);
  m.add_term("a", "a", "1 (x) U1^(k+1)");
  EXPECT_THROW(instantiate(m, "a", "a", 4), SchemaError);
}

TEST(Bimodule, IdempotentMismatchIsRejected) {
  DABimodule m("bad");
  m.add_generator("a", I::A, I::A).add_generator("b", I::B, I::B);
  m.add_term("a", "b", "R1");
  EXPECT_THROW(instantiate(m, "a", "b", 4), SchemaError);
}

TEST(Bimodule, DuplicateAndUnknownGenerators) {
  DABimodule m("m");
  m.add_generator("a", I::A, I::A);
  EXPECT_THROW(m.add_generator("a", I::B, I::B), std::invalid_argument);
  EXPECT_THROW(m.add_term("a", "zz", "1"), std::out_of_range);
}

// delta evaluated by solving against the inputs agrees with filtering the
// instantiated cells.
TEST(BimoduleProperty, EvaluateDeltaMatchesInstantiation) {
  std::mt19937 rng(7);
  for (CorpusId id : kAllCorpusIds) {
    const auto m = build(id);
    const auto concrete = materialize(m, 8, false);
    std::vector<std::pair<CellKey, ConcreteTerm>> all;
    for (const auto& [k, cell] : concrete.cells)
      for (const auto& t : cell) all.push_back({k, t});
    ASSERT_FALSE(all.empty());
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int i = 0; i < 150; ++i) {
      const auto& [key, term] = all[pick(rng)];
      std::set<std::pair<BasisMonomial, std::string>> got;
      for (const auto& r : evaluate_delta(m, key.col, term.inputs))
        if (intrinsic_degree(r.first) <= 8) got.insert(r);
      std::set<std::pair<BasisMonomial, std::string>> want;
      for (const auto& g : m.generators())
        for (const auto& t : concrete.cell(g.name, key.col))
          if (t.inputs == term.inputs) want.insert({t.output, g.name});
      EXPECT_EQ(got, want) << to_string(id) << " " << key.col << " " << to_string(term);
    }
  }
}

TEST(BimoduleProperty, TermsRespectIdempotents) {
  for (CorpusId id : kAllCorpusIds) {
    const auto c = materialize(build(id), 8, false);
    for (const auto& [key, cell] : c.cells) {
      const auto& row = c.generator(key.row);
      const auto& col = c.generator(key.col);
      for (const auto& t : cell) {
        EXPECT_EQ(t.output.left, col.left);
        EXPECT_EQ(t.output.right, row.left);
        Idempotent at = col.right;
        for (const auto& b : t.inputs) {
          EXPECT_EQ(b.left, at);
          EXPECT_FALSE(b.is_idempotent());
          at = b.right;
        }
        EXPECT_EQ(at, row.right);
      }
    }
  }
}
