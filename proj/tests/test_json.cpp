#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "test_util.hpp"

using namespace bhfk;
using bhfk::test::mono;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Json, MonomialFormat) {
  const auto m = mono(Idempotent::AB, Letter::R2R1, 2, 1);
  const auto j = to_json(m);
  EXPECT_EQ(j.dump(), R"({"left":"AB","right":"BC","letter":"R2R1","e1":2,"e2":1})");
  EXPECT_EQ(monomial_from_json(j), m);
}

TEST(Json, SchemaRoundTrip) {
  const auto s = parse_schema("L2*U1^t*U2^n (x) (U1^(n+1), L2*U2^t) | 0 <= n < t");
  const auto j = to_json(s);
  EXPECT_EQ(j.at("inputs").size(), 2u);
  EXPECT_EQ(j.at("output").at("e1"), "t");
  EXPECT_EQ(schema_from_json(j), s);
}

TEST(Json, CorpusRoundTrip) {
  for (CorpusId id : kAllCorpusIds) {
    const auto m = build(id);
    const auto back = bimodule_from_json(Json::parse(to_json(m).dump()));
    EXPECT_TRUE(schema_equal(m, back)) << to_string(id);
    EXPECT_EQ(to_json(back), to_json(m));
  }
}

TEST(Json, ConcreteRoundTrip) {
  const auto c = compute_product(ProductId::NE2, 6);
  const auto j = to_json(c);
  EXPECT_FALSE(is_schema_json(j));
  EXPECT_TRUE(is_schema_json(to_json(build_E2())));
  const auto back = concrete_from_json(Json::parse(j.dump()));
  EXPECT_EQ(back.generators, c.generators);
  EXPECT_EQ(back.cells, c.cells);
  EXPECT_EQ(back.bound, 6);
}

TEST(Json, BidegreesAreKept) {
  auto m = build_E1();
  apply_bidegrees(m, infer_bidegrees(m).degrees);
  const auto back = bimodule_from_json(to_json(m));
  for (const auto& g : m.generators()) EXPECT_EQ(back.generator(g.name).bidegree, g.bidegree);
}

TEST(Json, MalformedInputIsRejected) {
  EXPECT_THROW(monomial_from_json(Json::parse(R"({"left":"A","right":"B","letter":"R1","e1":0})")), JsonFormatError);
  EXPECT_THROW(monomial_from_json(Json::parse(R"({"left":"A","right":"B","letter":"Q","e1":0,"e2":0})")),
               JsonFormatError);
  EXPECT_THROW(monomial_from_json(Json::parse(R"({"left":"A","right":"C","letter":"R1","e1":0,"e2":0})")),
               JsonFormatError);
  EXPECT_THROW(monomial_from_json(Json::parse(R"({"left":"A","right":"B","letter":"R1","e1":"x","e2":0})")),
               JsonFormatError);
  EXPECT_THROW(bimodule_from_json(Json::parse(R"({"generators":[{"name":"a","left":"A","right":"A"}],
                                                  "cells":[{"row":"a","col":"b","schemas":[]}]})")),
               JsonFormatError);
  EXPECT_THROW(bimodule_from_json(Json::parse(R"({"cells":[]})")), JsonFormatError);
  EXPECT_THROW(pattern_from_json(Json::parse(R"({"letter":"R1","e1":"k+","e2":0})")), JsonFormatError);
  EXPECT_THROW(pattern_from_json(Json::parse(R"({"letter":"R1","e1":[1],"e2":0})")), JsonFormatError);
}

class GoldenTest : public ::testing::TestWithParam<CorpusId> {};

TEST_P(GoldenTest, ExportMatchesCheckedInFile) {
  const std::string path = std::string(BHFK_GOLDEN_DIR) + "/" + std::string(to_string(GetParam())) + ".json";
  const auto text = read_file(path);
  ASSERT_FALSE(text.empty()) << path;
  EXPECT_EQ(text, to_json(build(GetParam())).dump(2) + "\n");
  EXPECT_TRUE(schema_equal(bimodule_from_json(Json::parse(text)), build(GetParam())));
}

INSTANTIATE_TEST_SUITE_P(Corpus, GoldenTest, ::testing::ValuesIn(kAllCorpusIds),
                         [](const auto& info) { return std::string(to_string(info.param)); });
