#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace bhfk;
using bhfk::test::gen;
using I = Idempotent;

TEST(Fit, RecoversEveryCorpusCell) {
  for (CorpusId id : kAllCorpusIds) {
    const auto m = build(id);
    const auto c = materialize(m, 10, false);
    const auto fitted = fit_bimodule(c);
    EXPECT_EQ(materialize(fitted, 10, false).cells, c.cells) << to_string(id);
  }
}

TEST(Fit, OneParameterFamily) {
  const auto e1 = build_E1();
  const auto terms = instantiate(e1, "X2", "X3", 10);
  const auto s = fit_schemas({terms.begin(), terms.end()}, e1.generator("X2"), e1.generator("X3"), 10);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(canonical_key(s[0]), canonical_key(parse_schema("L2*U2^k (x) L2*U2^k")));
}

TEST(Fit, DiagonalFamilyWithoutUnit) {
  const auto e1 = build_E1();
  const auto terms = instantiate(e1, "X4", "X4", 8);
  const auto s = fit_schemas({terms.begin(), terms.end()}, e1.generator("X4"), e1.generator("X4"), 8);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(canonical_key(s[0]), canonical_key(e1.cell("X4", "X4")[0]));
}

TEST(Fit, IsolatedTermsStayExplicit) {
  DABimodule m("m");
  m.add_generator(gen("a", I::A, I::A));
  m.add_term("a", "a", "U1 (x) U1");
  m.add_term("a", "a", "U1^3 (x) U1^3");
  // At bound 12 the chain would need U1^5 (x) U1^5 as well.
  const auto terms = instantiate(m, "a", "a", 12);
  const auto s = fit_schemas({terms.begin(), terms.end()}, m.generator("a"), m.generator("a"), 12);
  ASSERT_EQ(s.size(), 2u);
  for (const auto& x : s) EXPECT_TRUE(x.indices.empty());
}

TEST(Latex, GeneratorNames) {
  EXPECT_EQ(latex_generator("N_AB"), "N_{AB}");
  EXPECT_EQ(latex_generator("X1"), "X_{1}");
  EXPECT_EQ(latex_generator("(X2,E_AC)"), "X_{2}E_{AC}");
  EXPECT_EQ(latex_generator("S"), "S");
}

TEST(Latex, Schema) {
  EXPECT_EQ(to_latex(parse_schema("L2*U1^t*U2^n (x) (U1^(n+1), L2*U2^t) | 0 <= n < t")),
            "L_2U_1^tU_2^n \\otimes (U_1^{n+1}, L_2U_2^t) \\quad (n \\geq 0,\\ t \\geq n+1)");
  EXPECT_EQ(to_latex(parse_schema("R2")), "R_2");
}

TEST(Latex, DocumentIsWellFormed) {
  const auto doc = to_latex(compute_product(ProductId::E2P, 8));
  EXPECT_EQ(doc.rfind("\\documentclass", 0), 0u);
  EXPECT_NE(doc.find("\\end{document}\n"), std::string::npos);
  int depth = 0;
  for (char c : doc) {
    if (c == '{') ++depth;
    if (c == '}') --depth;
    ASSERT_GE(depth, 0);
  }
  EXPECT_EQ(depth, 0);
  std::size_t begins = 0, ends = 0;
  for (auto p = doc.find("\\begin{"); p != std::string::npos; p = doc.find("\\begin{", p + 1)) ++begins;
  for (auto p = doc.find("\\end{"); p != std::string::npos; p = doc.find("\\end{", p + 1)) ++ends;
  EXPECT_EQ(begins, ends);
  EXPECT_NE(doc.find("Y_{3}N_{BC}"), std::string::npos);
}
