// One line per acceptance criterion. Exit status 0 only when all pass.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <unistd.h>

#include "bhfk/bhfk.hpp"

using namespace bhfk;

namespace {

// Pinned limits.
constexpr double kAlgebraSeconds = 10.0;
constexpr double kRelationsSeconds = 60.0;
constexpr double kProductsSeconds = 60.0;
constexpr int kRelationsBound = 12;
constexpr int kNegativeControlBound = 8;
constexpr int kProductBound = 10;
constexpr int kIsoBound = 10;
constexpr int kGradingScanBound = 10;
constexpr int kReproduceBound = 10;

struct Outcome {
  bool passed = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", s);
  return buf;
}

Outcome algebra() {
  const auto start = std::chrono::steady_clock::now();
  const auto oracle = compare_with_oracle({1, 2}, 4);
  const auto assoc = check_associativity({1, 2}, 2);
  const double t = seconds_since(start);
  return {oracle.passed() && assoc.passed() && t < kAlgebraSeconds,
          std::to_string(oracle.pairs) + " pairs, " + std::to_string(oracle.mismatches.size()) + " mismatches; " +
              std::to_string(assoc.triples) + " triples, " + std::to_string(assoc.failures.size()) +
              " failures; " + fmt_seconds(t) + " (limit " + fmt_seconds(kAlgebraSeconds) + ")"};
}

Outcome relations() {
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;
  for (CorpusId id : kAllCorpusIds) {
    const auto r = check_da_relations(build(id), kRelationsBound);
    ok = ok && r.passed();
    detail += std::string(to_string(id)) + " " + std::to_string(r.failures.size()) + " failures, ";
  }
  const double t = seconds_since(start);
  ok = ok && t < kRelationsSeconds;
  detail += fmt_seconds(t) + " (limit " + fmt_seconds(kRelationsSeconds) + ")";

  const auto p = build_P();
  const auto n = p.cell("N_AB", "S_AC").size();
  std::size_t caught = 0;
  for (std::size_t i = 0; i < n; ++i) {
    auto m = p;
    auto& cell = m.mutable_cell("N_AB", "S_AC");
    cell.erase(cell.begin() + static_cast<std::ptrdiff_t>(i));
    if (!check_da_relations(m, kNegativeControlBound).passed()) ++caught;
  }
  ok = ok && n > 0 && caught == n;
  detail += "; negative control " + std::to_string(caught) + "/" + std::to_string(n) + " deletions detected at bound " +
            std::to_string(kNegativeControlBound);
  return {ok, detail};
}

Outcome zero_squares() {
  const bool a = primary_product(build_E1(), build_E1()).empty();
  const bool b = primary_product(build_E2(), build_E2()).empty();
  return {a && b, std::string("E1*E1 ") + (a ? "empty" : "nonempty") + ", E2*E2 " + (b ? "empty" : "nonempty")};
}

Outcome products() {
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;
  std::size_t diffs = 0, terms = 0;
  for (ProductId id : kAllProductIds) {
    const auto c = compare_with_display(id, kProductBound);
    ok = ok && c.passed();
    diffs += c.missing.size() + c.extra.size() + c.primary_missing.size() + c.primary_extra.size();
    terms += c.terms;
  }
  const double t = seconds_since(start);
  return {ok && diffs == 0 && t < kProductsSeconds, "8 products at bound " + std::to_string(kProductBound) + ", " +
                                                         std::to_string(terms) + " terms, " + std::to_string(diffs) +
                                                         " diffs; " + fmt_seconds(t) + " (limit " +
                                                         fmt_seconds(kProductsSeconds) + ")"};
}

Outcome isomorphisms() {
  bool ok = true;
  std::string detail;
  for (CorpusId x : {CorpusId::P, CorpusId::N})
    for (CorpusId e : {CorpusId::E1, CorpusId::E2}) {
      const auto r = verify_one_morphism(x, e, kIsoBound);
      ok = ok && r.isomorphic && r.reverified;
      detail += std::string(to_string(x)) + "-" + std::string(to_string(e)) + " " +
                (r.isomorphic ? (r.reverified ? "found, re-verified" : "found, not re-verified") : "none") + "; ";
    }
  return {ok, detail + "bounds " + std::to_string(kIsoBound) + " and " + std::to_string(kIsoBound + 2)};
}

Outcome symmetry() {
  const auto r = check_symmetry(build_P(), build_N());
  return {r.passed(), std::to_string(r.differences.size()) + " differing cells; involution P " +
                          (r.involution_p ? "holds" : "fails") + ", N " + (r.involution_n ? "holds" : "fails")};
}

Outcome grading() {
  bool ok = true;
  std::string detail;
  for (CorpusId id : kAllCorpusIds) {
    const auto m = build(id);
    const auto g = infer_bidegrees(m);
    std::size_t bad = 0;
    if (g.consistent) bad = scan_bidegrees(materialize(m, kGradingScanBound, false), g.degrees).size();
    ok = ok && g.consistent && bad == 0;
    detail += std::string(to_string(id)) + (g.consistent ? " consistent, " : " inconsistent, ") +
              std::to_string(bad) + " violations; ";
  }
  return {ok, detail + "scan at bound " + std::to_string(kGradingScanBound)};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome determinism() {
  const auto dir = std::filesystem::temp_directory_path();
  const auto tag = std::to_string(::getpid());
  const auto a = dir / ("bhfk_acceptance_a_" + tag + ".json");
  const auto b = dir / ("bhfk_acceptance_b_" + tag + ".json");
  auto run = [&](const std::filesystem::path& out) {
    const std::string cmd = std::string(BHFK_CLI_PATH) + " reproduce --bound " + std::to_string(kReproduceBound) +
                            " --out " + out.string() + " >/dev/null 2>&1";
    return std::system(cmd.c_str());
  };
  const int sa = run(a), sb = run(b);
  const auto ja = slurp(a), jb = slurp(b);
  std::filesystem::remove(a);
  std::filesystem::remove(b);
  const bool ok = sa == 0 && sb == 0 && !ja.empty() && ja == jb;
  return {ok, "two runs of reproduce --bound " + std::to_string(kReproduceBound) + ": " + std::to_string(ja.size()) +
                  " and " + std::to_string(jb.size()) + " bytes, " + (ja == jb ? "identical" : "different") +
                  (sa == 0 && sb == 0 ? "" : ", nonzero exit")};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"algebra oracle and associativity", algebra},
      {"DA relations", relations},
      {"zero squares", zero_squares},
      {"box products against displays", products},
      {"isomorphisms", isomorphisms},
      {"symmetry", symmetry},
      {"grading", grading},
      {"determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.passed;
    std::cout << "criterion " << i + 1 << " " << (o.passed ? "PASS" : "FAIL") << " " << criteria[i].first << ": "
              << o.detail << "\n";
  }
  std::cout << criteria.size() - failures << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
