#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "bhfk/bimodule.hpp"

namespace bhfk {

/// A term of the relation sum that did not cancel.
struct RelationFailure {
  CellKey cell;
  int degree = 0;
  ConcreteTerm term;
};

struct RelationReport {
  std::string bimodule;
  int bound = 0;
  std::size_t terms_checked = 0;
  std::vector<RelationFailure> failures;

  bool passed() const { return failures.empty(); }
};

inline std::string to_string(const RelationFailure& f) {
  return "cell (" + f.cell.row + ", " + f.cell.col + "), degree " + std::to_string(f.degree) + ": " +
         to_string(f.term);
}

/// Checks the DA relations degree by degree up to `degree_bound` on a
/// concrete bimodule whose cells are complete up to that output degree.
/// The implicit unit terms are added here, together with splittings of an
/// input into an idempotent and itself; those cancel among themselves.
inline RelationReport check_da_relations(const ConcreteDABimodule& m, int degree_bound) {
  RelationReport report{m.name, degree_bound, 0, {}};
  std::map<CellKey, std::vector<ConcreteTerm>> terms;
  for (const auto& [key, cell] : m.cells)
    for (const auto& t : cell)
      if (intrinsic_degree(t.output) <= degree_bound) terms[key].push_back(t);
  for (const auto& g : m.generators) {
    ConcreteTerm unit{idempotent_monomial(g.left), {idempotent_monomial(g.right)}};
    auto& cell = terms[{g.name, g.name}];
    if (std::find(cell.begin(), cell.end(), unit) == cell.end()) cell.push_back(unit);
  }

  // Outgoing terms per source generator: (target, term).
  std::map<std::string, std::vector<std::pair<std::string, const ConcreteTerm*>>> from;
  for (const auto& [key, cell] : terms)
    for (const auto& t : cell) from[key.col].push_back({key.row, &t});

  std::map<std::tuple<std::string, std::string, ConcreteTerm>, bool> sum;
  auto toggle = [&](const std::string& row, const std::string& col, ConcreteTerm t) {
    ++report.terms_checked;
    auto key = std::make_tuple(row, col, std::move(t));
    auto [it, inserted] = sum.try_emplace(std::move(key), true);
    if (!inserted) sum.erase(it);
  };

  // Two successive operations, outputs multiplied in path order.
  for (const auto& [x, outgoing] : from) {
    for (const auto& [y, t1] : outgoing) {
      auto it = from.find(y);
      if (it == from.end()) continue;
      for (const auto& [z, t2] : it->second) {
        if (intrinsic_degree(t1->output) + intrinsic_degree(t2->output) > degree_bound) continue;
        for (const auto& c : multiply_basis(t1->output, t2->output)) {
          ConcreteTerm t{c, t1->inputs};
          t.inputs.insert(t.inputs.end(), t2->inputs.begin(), t2->inputs.end());
          toggle(z, x, std::move(t));
        }
      }
    }
  }

  // One operation with an input split into a product of two.
  FactorizationCache factor(true);
  for (const auto& [key, cell] : terms) {
    for (const auto& t : cell) {
      for (std::size_t j = 0; j < t.inputs.size(); ++j) {
        for (const auto& [first, second] : factor(t.inputs[j])) {
          ConcreteTerm split{t.output, {}};
          split.inputs.reserve(t.inputs.size() + 1);
          split.inputs.insert(split.inputs.end(), t.inputs.begin(), t.inputs.begin() + static_cast<long>(j));
          split.inputs.push_back(first);
          split.inputs.push_back(second);
          split.inputs.insert(split.inputs.end(), t.inputs.begin() + static_cast<long>(j) + 1, t.inputs.end());
          toggle(key.row, key.col, std::move(split));
        }
      }
    }
  }

  for (const auto& [key, present] : sum) {
    const auto& [row, col, t] = key;
    report.failures.push_back({{row, col}, intrinsic_degree(t.output), t});
  }
  return report;
}

inline RelationReport check_da_relations(const DABimodule& m, int degree_bound) {
  auto report = check_da_relations(materialize(m, degree_bound, false), degree_bound);
  report.bimodule = m.name;
  return report;
}

}  // namespace bhfk
