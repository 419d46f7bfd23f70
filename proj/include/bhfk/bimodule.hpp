#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bhfk/algebra.hpp"
#include "bhfk/pattern.hpp"

namespace bhfk {

struct Bidegree {
  int intrinsic = 0;
  int homological = 0;
  friend bool operator==(const Bidegree&, const Bidegree&) = default;
};

/// One primary-matrix entry.
struct DAGenerator {
  std::string name;
  Idempotent left = Idempotent::Empty;
  Idempotent right = Idempotent::Empty;
  std::optional<Bidegree> bidegree;

  friend bool operator==(const DAGenerator& a, const DAGenerator& b) {
    return a.name == b.name && a.left == b.left && a.right == b.right;
  }
};

/// Row and column generator names of a secondary-matrix entry.
struct CellKey {
  std::string row;
  std::string col;
  friend auto operator<=>(const CellKey&, const CellKey&) = default;
};

/// A secondary-matrix term with no free indices: output (x) (inputs...).
struct ConcreteTerm {
  BasisMonomial output;
  std::vector<BasisMonomial> inputs;

  friend bool operator==(const ConcreteTerm&, const ConcreteTerm&) = default;
  friend auto operator<=>(const ConcreteTerm&, const ConcreteTerm&) = default;
};

inline std::string to_string(const ConcreteTerm& t) {
  std::string out = to_string(t.output);
  if (t.inputs.empty()) return out;
  out += " ⊗ (";
  for (std::size_t i = 0; i < t.inputs.size(); ++i) out += (i ? ", " : "") + to_string(t.inputs[i]);
  return out + ")";
}

inline int input_degree(const ConcreteTerm& t) {
  int d = 0;
  for (const auto& b : t.inputs) d += intrinsic_degree(b);
  return d;
}

namespace detail {
template <class Gen>
const Gen& find_generator(const std::vector<Gen>& gens, const std::string& name) {
  for (const auto& g : gens)
    if (g.name == name) return g;
  throw std::out_of_range("no generator named '" + name + "'");
}
}  // namespace detail

/// DA bimodule over (B(2), B(2)) in matrix notation. Cells map (row, column)
/// to formal sums of term schemas; the strict-unitality terms Id (x) (Id)
/// on the diagonal are implicit.
class DABimodule {
 public:
  std::string name;
  std::string left_algebra = "B(2)";
  std::string right_algebra = "B(2)";
  bool strictly_unital = true;

  DABimodule() = default;
  explicit DABimodule(std::string n) : name(std::move(n)) {}

  const std::vector<DAGenerator>& generators() const { return generators_; }
  const std::map<CellKey, std::vector<TermSchema>>& cells() const { return cells_; }

  DABimodule& add_generator(DAGenerator g) {
    if (has_generator(g.name)) throw std::invalid_argument("duplicate generator '" + g.name + "'");
    generators_.push_back(std::move(g));
    return *this;
  }
  DABimodule& add_generator(const std::string& n, Idempotent left, Idempotent right) {
    return add_generator(DAGenerator{n, left, right, std::nullopt});
  }

  bool has_generator(const std::string& n) const {
    return std::any_of(generators_.begin(), generators_.end(), [&](const auto& g) { return g.name == n; });
  }
  const DAGenerator& generator(const std::string& n) const { return detail::find_generator(generators_, n); }
  DAGenerator& generator(const std::string& n) {
    return const_cast<DAGenerator&>(detail::find_generator(generators_, n));
  }

  DABimodule& add_term(const std::string& row, const std::string& col, TermSchema schema) {
    generator(row);
    generator(col);
    cells_[{row, col}].push_back(std::move(schema));
    return *this;
  }
  /// Convenience overload taking the text form accepted by parse_schema.
  DABimodule& add_term(const std::string& row, const std::string& col, std::string_view schema) {
    return add_term(row, col, parse_schema(schema));
  }

  const std::vector<TermSchema>& cell(const std::string& row, const std::string& col) const {
    static const std::vector<TermSchema> empty;
    auto it = cells_.find({row, col});
    return it == cells_.end() ? empty : it->second;
  }
  std::vector<TermSchema>& mutable_cell(const std::string& row, const std::string& col) {
    return cells_[{row, col}];
  }
  void erase_cell(const std::string& row, const std::string& col) { cells_.erase({row, col}); }

 private:
  std::vector<DAGenerator> generators_;
  std::map<CellKey, std::vector<TermSchema>> cells_;
};

/// Instantiated (index-free) bimodule. Exact for every term whose output
/// has intrinsic degree <= bound.
struct ConcreteDABimodule {
  std::string name;
  std::vector<DAGenerator> generators;
  std::map<CellKey, std::set<ConcreteTerm>> cells;
  int bound = 0;

  const DAGenerator& generator(const std::string& n) const { return detail::find_generator(generators, n); }
  bool has_generator(const std::string& n) const {
    return std::any_of(generators.begin(), generators.end(), [&](const auto& g) { return g.name == n; });
  }

  /// F2 addition of one term into a cell.
  void toggle(const CellKey& key, const ConcreteTerm& t) {
    auto& cell = cells[key];
    if (auto it = cell.find(t); it != cell.end())
      cell.erase(it);
    else
      cell.insert(t);
    if (cell.empty()) cells.erase(key);
  }

  const std::set<ConcreteTerm>& cell(const std::string& row, const std::string& col) const {
    static const std::set<ConcreteTerm> empty;
    auto it = cells.find({row, col});
    return it == cells.end() ? empty : it->second;
  }

  std::size_t term_count() const {
    std::size_t n = 0;
    for (const auto& [k, c] : cells) n += c.size();
    return n;
  }
};

/// Instantiates one schema at one index assignment between the column
/// generator (source) and the row generator (target). Throws SchemaError
/// when the instance is not a well-formed, strictly unital term.
inline ConcreteTerm instantiate_term(const TermSchema& s, const DAGenerator& row, const DAGenerator& col,
                                     const Assignment& a) {
  auto build = [&](const MonomialPattern& p, Idempotent start, const char* role) {
    const int e1 = p.e1.evaluate(a), e2 = p.e2.evaluate(a);
    if (e1 < 0 || e2 < 0)
      throw SchemaError(std::string(role) + " exponent is negative in " + to_string(s) + " (" + row.name + ", " +
                        col.name + ")");
    auto m = monomial_from(start, p.letter, e1, e2);
    if (!m)
      throw SchemaError(std::string(role) + " " + to_string(p) + " is not a basis element at " +
                        std::string(to_string(start)) + " in cell (" + row.name + ", " + col.name + ")");
    return *m;
  };
  ConcreteTerm t;
  t.output = build(s.output, col.left, "output");
  if (t.output.right != row.left)
    throw SchemaError("output of " + to_string(s) + " does not end at the left idempotent of " + row.name);
  Idempotent at = col.right;
  for (const auto& p : s.inputs) {
    auto b = build(p, at, "input");
    if (b.is_idempotent())
      throw SchemaError("input of " + to_string(s) + " instantiates to an idempotent in cell (" + row.name + ", " +
                        col.name + ")");
    t.inputs.push_back(b);
    at = b.right;
  }
  if (at != row.right)
    throw SchemaError("inputs of " + to_string(s) + " do not end at the right idempotent of " + row.name);
  return t;
}

/// Every index must raise the output degree, otherwise a degree slice
/// would contain infinitely many terms.
inline void require_degree_growth(const TermSchema& s) {
  for (const auto& v : s.indices)
    if (s.output.e1.coefficient(v) <= 0 && s.output.e2.coefficient(v) <= 0)
      throw SchemaError("index '" + v + "' does not raise the output degree in " + to_string(s));
}

/// All instances of a cell's schemas with output degree <= degree_bound,
/// summed over F2. The implicit unit term is added only on request.
inline std::vector<ConcreteTerm> instantiate(const DABimodule& m, const std::string& row, const std::string& col,
                                             int degree_bound, bool unital_closure = false) {
  std::set<ConcreteTerm> acc;
  auto toggle = [&](const ConcreteTerm& t) {
    if (auto it = acc.find(t); it != acc.end())
      acc.erase(it);
    else
      acc.insert(t);
  };
  const auto& rg = m.generator(row);
  const auto& cg = m.generator(col);
  for (const auto& s : m.cell(row, col)) {
    require_degree_growth(s);
    for_each_assignment(s, std::max(0, degree_bound / 2), [&](const Assignment& a) {
      const int e1 = s.output.e1.evaluate(a), e2 = s.output.e2.evaluate(a);
      if (letter_length(s.output.letter) + 2 * (e1 + e2) > degree_bound) return;
      toggle(instantiate_term(s, rg, cg, a));
    });
  }
  if (unital_closure && row == col && degree_bound >= 0)
    toggle({idempotent_monomial(cg.left), {idempotent_monomial(cg.right)}});
  return {acc.begin(), acc.end()};
}

/// All cells instantiated at the bound.
inline ConcreteDABimodule materialize(const DABimodule& m, int degree_bound, bool unital_closure = false) {
  ConcreteDABimodule out{m.name, m.generators(), {}, degree_bound};
  auto add_cell = [&](const std::string& row, const std::string& col) {
    for (const auto& t : instantiate(m, row, col, degree_bound, unital_closure)) out.toggle({row, col}, t);
  };
  for (const auto& [key, schemas] : m.cells()) add_cell(key.row, key.col);
  if (unital_closure)
    for (const auto& g : m.generators())
      if (!m.cells().count({g.name, g.name})) add_cell(g.name, g.name);
  return out;
}

/// Output of delta^1_{1+|inputs|} on x (x) inputs: pairs (a, y) meaning the
/// term a (x) y. Found by solving each schema against the inputs directly.
inline std::set<std::pair<BasisMonomial, std::string>> evaluate_delta(const DABimodule& m, const std::string& x,
                                                                      const std::vector<BasisMonomial>& inputs) {
  std::set<std::pair<BasisMonomial, std::string>> out;
  auto toggle = [&](const std::pair<BasisMonomial, std::string>& p) {
    if (auto it = out.find(p); it != out.end())
      out.erase(it);
    else
      out.insert(p);
  };
  const auto& xg = m.generator(x);
  Idempotent at = xg.right;
  for (const auto& b : inputs) {
    if (b.left != at) return out;
    at = b.right;
  }
  if (m.strictly_unital) {
    if (inputs.size() == 1 && inputs[0] == idempotent_monomial(xg.right)) {
      out.insert({idempotent_monomial(xg.left), x});
      return out;
    }
    if (std::any_of(inputs.begin(), inputs.end(), [](const auto& b) { return b.is_idempotent(); })) return out;
  }
  int exponent_total = 0;
  for (const auto& b : inputs) exponent_total += b.e1 + b.e2;

  for (const auto& [key, schemas] : m.cells()) {
    if (key.col != x) continue;
    const auto& rg = m.generator(key.row);
    if (rg.right != at) continue;
    for (const auto& s : schemas) {
      if (s.inputs.size() != inputs.size()) continue;
      int slack = 0;
      for (const auto& p : s.inputs) {
        slack = std::max({slack, std::abs(p.e1.constant), std::abs(p.e2.constant)});
      }
      for (const auto& v : s.indices) {
        bool bounded = false;
        for (const auto& p : s.inputs) bounded = bounded || p.e1.coefficient(v) > 0 || p.e2.coefficient(v) > 0;
        if (!bounded)
          throw SchemaError("index '" + v + "' of " + to_string(s) +
                            " is not determined by the inputs; infinitely many terms per input sequence");
      }
      for_each_assignment(s, exponent_total + slack + 1, [&](const Assignment& a) {
        for (std::size_t j = 0; j < inputs.size(); ++j) {
          const auto& p = s.inputs[j];
          if (p.letter != inputs[j].letter || p.e1.evaluate(a) != inputs[j].e1 || p.e2.evaluate(a) != inputs[j].e2)
            return;
        }
        auto t = instantiate_term(s, rg, xg, a);
        toggle({t.output, key.row});
      });
    }
  }
  return out;
}

}  // namespace bhfk
