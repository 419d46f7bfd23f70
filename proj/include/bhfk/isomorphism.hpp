#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "bhfk/displays.hpp"
#include "bhfk/grading.hpp"

namespace bhfk {

/// Map from generator names of one bimodule to those of another.
using GeneratorBijection = std::map<std::string, std::string>;

inline GeneratorBijection invert(const GeneratorBijection& f) {
  GeneratorBijection out;
  for (const auto& [a, b] : f) out[b] = a;
  return out;
}

namespace detail {

inline std::set<ConcreteTerm> truncated(const std::set<ConcreteTerm>& cell, int bound) {
  std::set<ConcreteTerm> out;
  for (const auto& t : cell)
    if (intrinsic_degree(t.output) <= bound) out.insert(t);
  return out;
}

inline bool same_cell(const ConcreteDABimodule& x, const ConcreteDABimodule& y, const GeneratorBijection& f,
                      const std::string& row, const std::string& col, int bound) {
  return truncated(x.cell(row, col), bound) == truncated(y.cell(f.at(row), f.at(col)), bound);
}

}  // namespace detail

/// True when `f` is a bijection preserving idempotents under which every
/// cell of x equals the image cell of y, up to output degree `bound`.
inline bool is_isomorphism(const ConcreteDABimodule& x, const ConcreteDABimodule& y, const GeneratorBijection& f,
                           int bound) {
  if (x.generators.size() != y.generators.size() || f.size() != x.generators.size()) return false;
  std::set<std::string> image;
  for (const auto& g : x.generators) {
    auto it = f.find(g.name);
    if (it == f.end() || !y.has_generator(it->second)) return false;
    const auto& h = y.generator(it->second);
    if (g.left != h.left || g.right != h.right) return false;
    image.insert(h.name);
  }
  if (image.size() != y.generators.size()) return false;
  for (const auto& r : x.generators)
    for (const auto& c : x.generators)
      if (!detail::same_cell(x, y, f, r.name, c.name, bound)) return false;
  return true;
}

/// Backtracking search over bijections within (left, right) idempotent
/// classes. Candidates are tried in y's generator order, so the result is
/// deterministic.
inline std::optional<GeneratorBijection> find_isomorphism(const ConcreteDABimodule& x, const ConcreteDABimodule& y,
                                                          int bound) {
  if (x.generators.size() != y.generators.size()) return std::nullopt;
  GeneratorBijection f;
  std::set<std::string> used;
  std::vector<std::string> placed;

  auto extend = [&](auto&& self, std::size_t i) -> bool {
    if (i == x.generators.size()) return true;
    const auto& g = x.generators[i];
    for (const auto& h : y.generators) {
      if (used.count(h.name) || h.left != g.left || h.right != g.right) continue;
      f[g.name] = h.name;
      bool ok = detail::same_cell(x, y, f, g.name, g.name, bound);
      for (std::size_t j = 0; ok && j < placed.size(); ++j)
        ok = detail::same_cell(x, y, f, g.name, placed[j], bound) && detail::same_cell(x, y, f, placed[j], g.name, bound);
      if (ok) {
        used.insert(h.name);
        placed.push_back(g.name);
        if (self(self, i + 1)) return true;
        placed.pop_back();
        used.erase(h.name);
      }
      f.erase(g.name);
    }
    return false;
  };
  if (!extend(extend, 0)) return std::nullopt;
  return f;
}

inline std::optional<GeneratorBijection> find_isomorphism(const ConcreteDABimodule& x, const ConcreteDABimodule& y) {
  return find_isomorphism(x, y, std::min(x.bound, y.bound));
}

/// Whether inferred bidegrees differ by one shift per connected component.
inline bool preserves_bidegrees_up_to_shift(const ConcreteDABimodule& x, const ConcreteDABimodule& y,
                                            const GeneratorBijection& f) {
  const auto gx = infer_bidegrees(x);
  const auto gy = infer_bidegrees(y);
  if (!gx.consistent || !gy.consistent) return false;
  std::map<std::string, Bidegree> shift;  // keyed by component representative
  std::map<std::string, std::string> comp;
  auto find = [&](std::string v) {
    while (comp.count(v) && comp.at(v) != v) v = comp.at(v);
    return v;
  };
  for (const auto& g : x.generators) comp[g.name] = g.name;
  for (const auto& [key, cell] : x.cells)
    if (!cell.empty()) comp[find(key.row)] = find(key.col);
  for (const auto& g : x.generators) {
    const Bidegree d = gy.degrees.at(f.at(g.name)) - gx.degrees.at(g.name);
    auto [it, inserted] = shift.try_emplace(find(g.name), d);
    if (!inserted && it->second != d) return false;
  }
  return true;
}

/// Below this bound a verification compares too few terms to be
/// meaningful.
inline constexpr int kRecommendedBound = 6;

struct MorphismReport {
  CorpusId x = CorpusId::P;
  CorpusId e = CorpusId::E1;
  int bound = 0;
  bool isomorphic = false;
  bool zero_square = false;  // E ⊠ E = 0, so the tau relation holds between zero modules
  bool bidegrees_ok = false;
  bool reverified = false;  // same alpha at bound + 2
  bool positional = false;  // alpha pairs the displays position by position
  bool low_confidence = false;
  std::size_t terms_compared = 0;
  // alpha : X ⊠ E -> E ⊠ X, by generator name.
  GeneratorBijection alpha;
  // Cells that differ under the positional pairing when no bijection exists.
  std::vector<std::string> differences;

  bool verified() const { return isomorphic && zero_square && reverified; }
};

inline ProductId product_id(CorpusId left, CorpusId right) {
  for (ProductId id : kAllProductIds)
    if (factors(id) == std::make_pair(left, right)) return id;
  throw std::domain_error("no displayed product " + std::string(to_string(left)) + "*" + std::string(to_string(right)));
}

inline MorphismReport verify_one_morphism(const DABimodule& x, const DABimodule& e, CorpusId x_id, CorpusId e_id,
                                          int bound) {
  MorphismReport r;
  r.x = x_id;
  r.e = e_id;
  r.bound = bound;
  r.low_confidence = bound < kRecommendedBound;
  r.zero_square = is_zero_boxsquare(e);

  const auto xe = secondary_product(x, e, bound);
  const auto ex = secondary_product(e, x, bound);
  r.terms_compared = xe.term_count();
  const auto positional = positional_pairing(product_id(x_id, e_id));

  if (auto f = find_isomorphism(xe, ex, bound)) {
    r.isomorphic = true;
    r.alpha = *f;
    r.positional = r.alpha == positional;
    r.bidegrees_ok = preserves_bidegrees_up_to_shift(xe, ex, r.alpha);
    r.reverified =
        is_isomorphism(secondary_product(x, e, bound + 2), secondary_product(e, x, bound + 2), r.alpha, bound + 2);
    return r;
  }
  for (const auto& a : xe.generators)
    for (const auto& b : xe.generators) {
      if (!positional.count(a.name) || !positional.count(b.name)) continue;
      if (!detail::same_cell(xe, ex, positional, a.name, b.name, bound))
        r.differences.push_back("(" + a.name + ", " + b.name + ")");
    }
  return r;
}

inline MorphismReport verify_one_morphism(CorpusId x_id, CorpusId e_id, int bound) {
  if (x_id != CorpusId::P && x_id != CorpusId::N) throw std::domain_error("X must be P or N");
  if (e_id != CorpusId::E1 && e_id != CorpusId::E2) throw std::domain_error("E must be E1 or E2");
  return verify_one_morphism(build(x_id), build(e_id), x_id, e_id, bound);
}

}  // namespace bhfk
