#pragma once

#include <string>
#include <vector>

#include "bhfk/displays.hpp"
#include "bhfk/grading.hpp"
#include "bhfk/isomorphism.hpp"
#include "bhfk/json_io.hpp"
#include "bhfk/relations.hpp"

// Plain-text and JSON renderings shared by the command-line tool and its
// tests.

namespace bhfk {

inline std::string to_text(const std::vector<BasisMonomial>& basis) {
  std::string out;
  for (const auto& m : basis) out += to_string(m) + "\n";
  out += std::to_string(basis.size()) + " monomials\n";
  return out;
}

inline Json basis_json(const std::vector<BasisMonomial>& basis) {
  Json out = Json::array();
  for (const auto& m : basis) out.push_back(to_json(m));
  return out;
}

inline std::string to_text(const DABimodule& m) {
  std::string out = m.name + ": " + std::to_string(m.generators().size()) + " generators\n";
  for (const auto& g : m.generators()) {
    out += "  " + g.name + " (" + std::string(to_string(g.left)) + ", " + std::string(to_string(g.right)) + ")";
    if (g.bidegree) out += " bidegree " + to_string(*g.bidegree);
    out += "\n";
  }
  for (const auto& [key, schemas] : m.cells())
    for (const auto& s : schemas) out += "  " + key.row + " <- " + key.col + ": " + to_string(s) + "\n";
  return out;
}

inline std::string to_text(const ConcreteDABimodule& m) {
  std::string out = m.name + ": " + std::to_string(m.generators.size()) + " generators, " +
                    std::to_string(m.term_count()) + " terms of output degree <= " + std::to_string(m.bound) + "\n";
  for (const auto& g : m.generators)
    out += "  " + g.name + " (" + std::string(to_string(g.left)) + ", " + std::string(to_string(g.right)) + ")\n";
  for (const auto& [key, terms] : m.cells)
    for (const auto& t : terms) out += "  " + key.row + " <- " + key.col + ": " + to_string(t) + "\n";
  return out;
}

inline std::string to_text(const RelationReport& r) {
  std::string out = r.bimodule + ": " + std::to_string(r.terms_checked) + " terms through degree " +
                    std::to_string(r.bound) + ", " + std::to_string(r.failures.size()) + " non-cancelling\n";
  for (const auto& f : r.failures) out += "  " + to_string(f) + "\n";
  out += r.passed() ? "relations hold\n" : "relations FAIL\n";
  return out;
}

inline Json to_json(const RelationReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures)
    failures.push_back(Json{{"row", f.cell.row}, {"col", f.cell.col}, {"degree", f.degree}, {"term", to_json(f.term)}});
  return Json{{"bimodule", r.bimodule},
              {"bound", r.bound},
              {"terms_checked", r.terms_checked},
              {"passed", r.passed()},
              {"failures", failures}};
}

inline std::string to_text(const GradingResult& g, const std::vector<DAGenerator>& order) {
  std::string out;
  if (!g.consistent) {
    out += "inconsistent; witness cycle:\n";
    for (const auto& e : g.witness)
      out += "  " + e.from + " -> " + e.to + " shift " + to_string(e.offset) + " from " + to_string(e.term) + "\n";
    return out;
  }
  for (const auto& gen : order) out += gen.name + " " + to_string(g.degrees.at(gen.name)) + "\n";
  out += "pinned at (0, 0):";
  for (const auto& p : g.pinned) out += " " + p;
  return out + "\n";
}

inline Json to_json(const GradingResult& g, const std::vector<DAGenerator>& order) {
  Json out{{"consistent", g.consistent}};
  if (g.consistent) {
    Json degrees = Json::object();
    for (const auto& gen : order) degrees[gen.name] = {g.degrees.at(gen.name).intrinsic, g.degrees.at(gen.name).homological};
    out["bidegrees"] = degrees;
    out["pinned"] = g.pinned;
  } else {
    Json witness = Json::array();
    for (const auto& e : g.witness)
      witness.push_back(Json{{"from", e.from},
                             {"to", e.to},
                             {"shift", {e.offset.intrinsic, e.offset.homological}},
                             {"term", to_json(e.term)}});
    out["witness"] = witness;
  }
  return out;
}

inline std::string to_text(const MorphismReport& r) {
  const std::string x(to_string(r.x)), e(to_string(r.e));
  std::string out = x + "*" + e + " vs " + e + "*" + x + " at bound " + std::to_string(r.bound) + ": ";
  out += r.verified() ? "verified\n" : "NOT verified\n";
  if (r.low_confidence)
    out += "warning: bound below " + std::to_string(kRecommendedBound) + ", low confidence\n";
  out += std::string("  ") + e + "*" + e + " = 0: " + (r.zero_square ? "yes" : "no") + "\n";
  out += "  terms compared: " + std::to_string(r.terms_compared) + "\n";
  if (r.isomorphic) {
    out += "  re-verified at bound " + std::to_string(r.bound + 2) + ": " + (r.reverified ? "yes" : "no") + "\n";
    out += std::string("  bidegrees preserved up to shift: ") + (r.bidegrees_ok ? "yes" : "no") + "\n";
    out += std::string("  positional pairing: ") + (r.positional ? "yes" : "no") + "\n";
    out += "  alpha:\n";
    for (const auto& [a, b] : r.alpha) out += "    " + a + " -> " + b + "\n";
  }
  for (const auto& d : r.differences) out += "  differs: " + d + "\n";
  return out;
}

inline Json to_json(const MorphismReport& r) {
  Json alpha = Json::object();
  for (const auto& [a, b] : r.alpha) alpha[a] = b;
  return Json{{"x", to_string(r.x)},
              {"e", to_string(r.e)},
              {"bound", r.bound},
              {"verified", r.verified()},
              {"isomorphic", r.isomorphic},
              {"zero_square", r.zero_square},
              {"reverified", r.reverified},
              {"bidegrees_preserved", r.bidegrees_ok},
              {"positional", r.positional},
              {"low_confidence", r.low_confidence},
              {"terms_compared", r.terms_compared},
              {"alpha", alpha},
              {"differences", r.differences}};
}

inline std::string to_text(const std::optional<GeneratorBijection>& f) {
  if (!f) return "no isomorphism\n";
  std::string out = "isomorphism:\n";
  for (const auto& [a, b] : *f) out += "  " + a + " -> " + b + "\n";
  return out;
}

inline Json to_json(const std::optional<GeneratorBijection>& f) {
  if (!f) return Json{{"isomorphic", false}};
  Json m = Json::object();
  for (const auto& [a, b] : *f) m[a] = b;
  return Json{{"isomorphic", true}, {"bijection", m}};
}

inline std::string to_text(const DisplayComparison& c) {
  std::string out = std::string(to_string(c.product)) + " against the printed display at bound " +
                    std::to_string(c.bound) + ": " + (c.passed() ? "equal" : "DIFFERENT") + "\n";
  for (const auto& g : c.primary_missing) out += "  generator missing: " + g + "\n";
  for (const auto& g : c.primary_extra) out += "  generator extra: " + g + "\n";
  for (const auto& [k, t] : c.missing) out += "  missing in (" + k.row + ", " + k.col + "): " + to_string(t) + "\n";
  for (const auto& [k, t] : c.extra) out += "  extra in (" + k.row + ", " + k.col + "): " + to_string(t) + "\n";
  return out;
}

inline std::string to_text(const SymmetryReport& r) {
  std::string out = "symmetry_transform(P) vs N: " +
                    (r.differences.empty() ? std::string("equal") : std::to_string(r.differences.size()) + " cells differ") +
                    "\n";
  for (const auto& k : r.differences) out += "  (" + k.row + ", " + k.col + ")\n";
  out += std::string("involution on P: ") + (r.involution_p ? "holds" : "fails") + "\n";
  out += std::string("involution on N: ") + (r.involution_n ? "holds" : "fails") + "\n";
  return out;
}

inline Json to_json(const SymmetryReport& r) {
  Json diffs = Json::array();
  for (const auto& k : r.differences) diffs.push_back(Json{{"row", k.row}, {"col", k.col}});
  return Json{{"equal", r.differences.empty()},
              {"differences", diffs},
              {"involution_P", r.involution_p},
              {"involution_N", r.involution_n}};
}

}  // namespace bhfk
