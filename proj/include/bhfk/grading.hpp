#pragma once

#include <algorithm>
#include <map>
#include <queue>
#include <string>
#include <vector>

#include "bhfk/bimodule.hpp"

namespace bhfk {

/// Bound at which schema bimodules are sampled for bidegree inference.
inline constexpr int kGradingSampleBound = 10;

/// One constraint deg(to) = deg(from) + offset, read off a term in cell
/// (row = to, col = from).
struct GradingEdge {
  std::string from;
  std::string to;
  Bidegree offset;
  ConcreteTerm term;
};

inline Bidegree term_offset(const ConcreteTerm& t) {
  return {input_degree(t) - intrinsic_degree(t.output), static_cast<int>(t.inputs.size()) - 1};
}

struct GradingResult {
  bool consistent = true;
  std::map<std::string, Bidegree> degrees;
  std::vector<std::string> pinned;  // one per connected component
  // On inconsistency: edges of a cycle along which the offsets do not sum
  // to zero. Edges may be traversed against their direction.
  std::vector<GradingEdge> witness;
};

inline Bidegree operator+(Bidegree a, Bidegree b) { return {a.intrinsic + b.intrinsic, a.homological + b.homological}; }
inline Bidegree operator-(Bidegree a, Bidegree b) { return {a.intrinsic - b.intrinsic, a.homological - b.homological}; }

inline std::string to_string(const Bidegree& d) {
  return "(" + std::to_string(d.intrinsic) + ", " + std::to_string(d.homological) + ")";
}

/// Solves the bidegree constraints of every term of `m`. Generators are
/// visited in declaration order, and the first of each component is pinned
/// at (0, 0).
inline GradingResult infer_bidegrees(const ConcreteDABimodule& m) {
  GradingResult out;
  std::map<std::string, std::vector<GradingEdge>> adj;
  for (const auto& [key, cell] : m.cells) {
    for (const auto& t : cell) {
      const Bidegree off = term_offset(t);
      adj[key.col].push_back({key.col, key.row, off, t});
      if (key.row != key.col) adj[key.row].push_back({key.row, key.col, Bidegree{} - off, t});
    }
  }

  std::map<std::string, const GradingEdge*> parent;
  auto root_path = [&](std::string v) {
    std::vector<GradingEdge> path;  // from v up to the root
    while (parent.count(v) && parent.at(v)) {
      const auto* e = parent.at(v);
      path.push_back(*e);
      v = e->from;
    }
    return path;
  };

  for (const auto& g : m.generators) {
    if (out.degrees.count(g.name)) continue;
    out.degrees[g.name] = {};
    out.pinned.push_back(g.name);
    parent[g.name] = nullptr;
    std::queue<std::string> todo;
    todo.push(g.name);
    while (!todo.empty()) {
      const std::string u = todo.front();
      todo.pop();
      for (const auto& e : adj[u]) {
        const Bidegree want = out.degrees.at(u) + e.offset;
        auto it = out.degrees.find(e.to);
        if (it == out.degrees.end()) {
          out.degrees[e.to] = want;
          parent[e.to] = &e;
          todo.push(e.to);
          continue;
        }
        if (it->second == want) continue;
        // Tree path root -> u, then e, then tree path v -> root, with the
        // common part near the root removed.
        auto pu = root_path(u);
        auto pv = root_path(e.to);
        while (!pu.empty() && !pv.empty() && pu.back().to == pv.back().to && pu.back().from == pv.back().from) {
          pu.pop_back();
          pv.pop_back();
        }
        out.consistent = false;
        std::reverse(pu.begin(), pu.end());
        out.witness = pu;
        out.witness.push_back(e);
        for (const auto& back : pv) out.witness.push_back({back.to, back.from, Bidegree{} - back.offset, back.term});
        return out;
      }
    }
  }
  return out;
}

inline GradingResult infer_bidegrees(const DABimodule& m, int sample_bound = kGradingSampleBound) {
  return infer_bidegrees(materialize(m, sample_bound, false));
}

/// A term that is not bidegree-preserving under a given assignment.
struct GradingViolation {
  CellKey cell;
  ConcreteTerm term;
};

/// Direct scan of every term against an assignment.
inline std::vector<GradingViolation> scan_bidegrees(const ConcreteDABimodule& m,
                                                    const std::map<std::string, Bidegree>& degrees) {
  std::vector<GradingViolation> out;
  for (const auto& [key, cell] : m.cells)
    for (const auto& t : cell)
      if (degrees.at(key.row) != degrees.at(key.col) + term_offset(t)) out.push_back({key, t});
  return out;
}

/// Stores an assignment on the generators.
inline void apply_bidegrees(DABimodule& m, const std::map<std::string, Bidegree>& degrees) {
  for (const auto& [name, d] : degrees) m.generator(name).bidegree = d;
}

}  // namespace bhfk
