#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "bhfk/bimodule.hpp"

namespace bhfk {

// Recovers affine families from the instances of one cell. This is display
// only: every fit is checked by re-instantiation, and what cannot be fitted
// is listed term by term.

namespace detail {

// Exponents of a term, flattened as out.e1, out.e2, in0.e1, in0.e2, ...
using ExpVec = std::vector<int>;

struct Shape {
  Letter output;
  std::vector<Letter> inputs;
  friend auto operator<=>(const Shape&, const Shape&) = default;
};

inline Shape shape_of(const ConcreteTerm& t) {
  Shape s{t.output.letter, {}};
  for (const auto& b : t.inputs) s.inputs.push_back(b.letter);
  return s;
}

inline ExpVec exps_of(const ConcreteTerm& t) {
  ExpVec v{t.output.e1, t.output.e2};
  for (const auto& b : t.inputs) v.insert(v.end(), {b.e1, b.e2});
  return v;
}

inline int output_degree(const Shape& s, const ExpVec& v) { return letter_length(s.output) + 2 * (v[0] + v[1]); }

struct Family {
  ExpVec base;
  std::vector<ExpVec> steps;  // one per index
  bool exclude_origin = false;
  std::set<ExpVec> members;
};

inline ExpVec add(ExpVec a, const ExpVec& b, int times = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += times * b[i];
  return a;
}

// Lattice points of the family with output degree <= bound, or nothing if
// one of them is missing from `pool`.
inline std::optional<std::set<ExpVec>> lattice(const Shape& s, const ExpVec& base, const std::vector<ExpVec>& steps,
                                               bool exclude_origin, const std::set<ExpVec>& pool, int bound) {
  std::set<ExpVec> out;
  if (steps.size() == 1) {
    for (int k = 0;; ++k) {
      auto p = add(base, steps[0], k);
      if (output_degree(s, p) > bound) break;
      if (!pool.count(p)) return std::nullopt;
      out.insert(p);
    }
    return out;
  }
  for (int k = 0;; ++k) {
    auto pk = add(base, steps[0], k);
    if (output_degree(s, pk) > bound) break;
    for (int l = 0;; ++l) {
      auto p = add(pk, steps[1], l);
      if (output_degree(s, p) > bound) break;
      if (exclude_origin && k == 0 && l == 0) continue;
      if (!pool.count(p)) return std::nullopt;
      out.insert(p);
    }
  }
  return out;
}

inline bool nonnegative(const ExpVec& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; });
}

inline std::vector<Family> fit_shape(const Shape& s, std::set<ExpVec> pool, int bound) {
  std::vector<Family> out;
  const bool all_id = s.output == Letter::Id && std::all_of(s.inputs.begin(), s.inputs.end(),
                                                            [](Letter l) { return l == Letter::Id; });
  while (!pool.empty()) {
    auto lowest = std::min_element(pool.begin(), pool.end(), [&](const ExpVec& a, const ExpVec& b) {
      return std::make_pair(output_degree(s, a), a) < std::make_pair(output_degree(s, b), b);
    });
    const ExpVec t0 = *lowest;

    Family best{t0, {}, false, {t0}};
    auto consider = [&](const ExpVec& base, std::vector<ExpVec> steps, bool exclude) {
      for (const auto& st : steps)
        if (st[0] + st[1] <= 0) return;  // every index must raise the output degree
      auto members = lattice(s, base, steps, exclude, pool, bound);
      if (!members || members->size() < 2) return;
      const bool better = members->size() > best.members.size() ||
                          (members->size() == best.members.size() && steps.size() < best.steps.size());
      if (better) best = {base, std::move(steps), exclude, std::move(*members)};
    };

    std::vector<ExpVec> steps;
    for (const auto& t : pool) {
      auto d = add(t, t0, -1);
      if (t != t0 && nonnegative(d)) steps.push_back(d);
    }
    for (const auto& st : steps) consider(t0, {st}, false);
    for (std::size_t i = 0; i < steps.size(); ++i)
      for (std::size_t j = i + 1; j < steps.size(); ++j) consider(t0, {steps[i], steps[j]}, false);
    // Families such as U1^l*U2^k (x) U1^k*U2^l | (k,l) != (0,0), based at
    // an omitted unit term.
    if (all_id) {
      const ExpVec zero(t0.size(), 0);
      if (!pool.count(zero)) {
        std::vector<ExpVec> from_zero;
        for (const auto& t : pool)
          if (output_degree(s, t) == output_degree(s, t0)) from_zero.push_back(t);
        for (std::size_t i = 0; i < from_zero.size(); ++i)
          for (std::size_t j = i + 1; j < from_zero.size(); ++j)
            consider(zero, {from_zero[i], from_zero[j]}, true);
      }
    }
    for (const auto& p : best.members) pool.erase(p);
    out.push_back(std::move(best));
  }
  return out;
}

inline LinearExpr component(const Family& f, std::size_t i) {
  static const char* kNames[] = {"k", "l"};
  LinearExpr e = LinearExpr::constant_of(f.base[i]);
  for (std::size_t j = 0; j < f.steps.size(); ++j)
    if (f.steps[j][i] != 0) e += LinearExpr{0, {{kNames[j], f.steps[j][i]}}};
  return e;
}

inline TermSchema schema_of(const Shape& s, const Family& f) {
  TermSchema out;
  out.output = {s.output, component(f, 0), component(f, 1)};
  for (std::size_t j = 0; j < s.inputs.size(); ++j)
    out.inputs.push_back({s.inputs[j], component(f, 2 + 2 * j), component(f, 3 + 2 * j)});
  if (f.steps.size() >= 1) out.indices.push_back("k");
  if (f.steps.size() >= 2) out.indices.push_back("l");
  if (f.exclude_origin) out.constraints.push_back(ExcludedTuple{{"k", "l"}, {0, 0}});
  return out;
}

}  // namespace detail

/// Schemas whose instantiation at `bound` between `row` and `col` gives
/// back exactly `terms`. Terms that fit no family become index-free
/// schemas.
inline std::vector<TermSchema> fit_schemas(const std::set<ConcreteTerm>& terms, const DAGenerator& row,
                                           const DAGenerator& col, int bound) {
  std::map<detail::Shape, std::set<detail::ExpVec>> groups;
  for (const auto& t : terms) groups[detail::shape_of(t)].insert(detail::exps_of(t));
  std::vector<TermSchema> fitted;
  for (const auto& [shape, pool] : groups)
    for (const auto& f : detail::fit_shape(shape, pool, bound)) fitted.push_back(detail::schema_of(shape, f));

  // Check by re-instantiation; fall back to the explicit list on any
  // disagreement.
  DABimodule probe;
  probe.add_generator(row);
  if (col.name != row.name) probe.add_generator(col);
  for (const auto& s : fitted) probe.add_term(row.name, col.name, s);
  const auto back = instantiate(probe, row.name, col.name, bound);
  if (std::set<ConcreteTerm>(back.begin(), back.end()) == terms) return fitted;

  std::vector<TermSchema> explicit_terms;
  for (const auto& t : terms) {
    detail::Family single{detail::exps_of(t), {}, false, {}};
    explicit_terms.push_back(detail::schema_of(detail::shape_of(t), single));
  }
  return explicit_terms;
}

/// Fits every cell of a concrete bimodule.
inline DABimodule fit_bimodule(const ConcreteDABimodule& m) {
  DABimodule out(m.name);
  for (const auto& g : m.generators) out.add_generator(g);
  for (const auto& [key, terms] : m.cells)
    for (auto& s : fit_schemas(terms, m.generator(key.row), m.generator(key.col), m.bound))
      out.add_term(key.row, key.col, std::move(s));
  return out;
}

}  // namespace bhfk
