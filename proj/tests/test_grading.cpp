#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace bhfk;
using I = Idempotent;

TEST(Grading, CorpusModulesAreGraded) {
  for (CorpusId id : kAllCorpusIds) {
    const auto m = build(id);
    const auto g = infer_bidegrees(m);
    ASSERT_TRUE(g.consistent) << to_string(id);
    EXPECT_EQ(g.degrees.size(), m.generators().size());
    EXPECT_TRUE(scan_bidegrees(materialize(m, 12, false), g.degrees).empty()) << to_string(id);
  }
}

TEST(Grading, ComponentCounts) {
  EXPECT_EQ(infer_bidegrees(build_P()).pinned.size(), 4u);
  EXPECT_EQ(infer_bidegrees(build_N()).pinned.size(), 4u);
  EXPECT_EQ(infer_bidegrees(build_E1()).pinned.size(), 3u);
  EXPECT_EQ(infer_bidegrees(build_E2()).pinned.size(), 3u);
}

TEST(Grading, PAndNAreMirrored) {
  const auto p = infer_bidegrees(build_P());
  const auto n = infer_bidegrees(build_N());
  EXPECT_EQ(p.degrees.at("E_AC"), (Bidegree{-1, 0}));
  EXPECT_EQ(p.degrees.at("N_B"), (Bidegree{2, 1}));
  EXPECT_EQ(p.degrees.at("S_AC"), (Bidegree{-2, -1}));
  for (const auto& [name, d] : p.degrees) EXPECT_EQ(n.degrees.at(name), Bidegree{} - d) << name;
}

TEST(Grading, E1GeneratorsLinkedByL2ShareDegree) {
  const auto g = infer_bidegrees(build_E1());
  EXPECT_EQ(g.degrees.at("X2").homological, g.degrees.at("X3").homological);
  EXPECT_EQ(g.degrees.at("X2"), g.degrees.at("X3"));
}

TEST(Grading, EmptyCellsPinEveryGenerator) {
  DABimodule m("free");
  m.add_generator("a", I::A, I::A).add_generator("b", I::B, I::B).add_generator("c", I::C, I::C);
  const auto g = infer_bidegrees(m);
  EXPECT_TRUE(g.consistent);
  EXPECT_EQ(g.pinned, (std::vector<std::string>{"a", "b", "c"}));
}

TEST(Grading, InconsistentModuleGivesClosedWitness) {
  DABimodule m("twisted");
  m.add_generator("a", I::A, I::A).add_generator("b", I::A, I::A);
  m.add_term("b", "a", "1 (x) U1");
  m.add_term("a", "b", "U1");
  const auto g = infer_bidegrees(m, 4);
  ASSERT_FALSE(g.consistent);
  ASSERT_FALSE(g.witness.empty());
  Bidegree sum;
  for (std::size_t i = 0; i < g.witness.size(); ++i) {
    sum = sum + g.witness[i].offset;
    EXPECT_EQ(g.witness[i].to, g.witness[(i + 1) % g.witness.size()].from);
  }
  EXPECT_NE(sum, Bidegree{});
}

TEST(Grading, ScanFindsPlantedViolation) {
  const auto m = build_E1();
  auto g = infer_bidegrees(m).degrees;
  g["X3"] = g["X3"] + Bidegree{1, 0};
  EXPECT_FALSE(scan_bidegrees(materialize(m, 6, false), g).empty());
}

TEST(Grading, ApplyStoresDegrees) {
  auto m = build_E2();
  const auto g = infer_bidegrees(m);
  apply_bidegrees(m, g.degrees);
  for (const auto& gen : m.generators()) {
    ASSERT_TRUE(gen.bidegree.has_value());
    EXPECT_EQ(*gen.bidegree, g.degrees.at(gen.name));
  }
}
