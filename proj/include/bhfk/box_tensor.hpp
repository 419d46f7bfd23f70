#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bhfk/bimodule.hpp"

namespace bhfk {

inline std::string pair_name(const std::string& x, const std::string& y) { return "(" + x + "," + y + ")"; }

/// Generators of X ⊠ Y: pairs (x, y) with right(x) = left(y), in X-major order.
inline std::vector<DAGenerator> primary_product(const DABimodule& x, const DABimodule& y) {
  if (x.right_algebra != y.left_algebra)
    throw std::domain_error("cannot tensor: right algebra " + x.right_algebra + " of " + x.name +
                            " differs from left algebra " + y.left_algebra + " of " + y.name);
  std::vector<DAGenerator> out;
  for (const auto& gx : x.generators())
    for (const auto& gy : y.generators())
      if (gx.right == gy.left) out.push_back({pair_name(gx.name, gy.name), gx.left, gy.right, std::nullopt});
  return out;
}

namespace detail {

// Y-terms indexed by (source generator, output monomial).
class ChainIndex {
 public:
  struct Step {
    const std::string* target;
    const std::vector<BasisMonomial>* inputs;
  };

  explicit ChainIndex(const ConcreteDABimodule& y) {
    for (const auto& [key, terms] : y.cells)
      for (const auto& t : terms) index_[{key.col, t.output}].push_back({&key.row, &t.inputs});
  }

  const std::vector<Step>& steps(const std::string& from, const BasisMonomial& output) const {
    static const std::vector<Step> none;
    auto it = index_.find({from, output});
    return it == index_.end() ? none : it->second;
  }

 private:
  std::map<std::pair<std::string, BasisMonomial>, std::vector<Step>> index_;
};

}  // namespace detail

/// Secondary matrix of X ⊠ Y, complete for every term whose output has
/// intrinsic degree <= degree_bound.
inline ConcreteDABimodule secondary_product(const DABimodule& x, const DABimodule& y, int degree_bound) {
  ConcreteDABimodule out;
  out.name = x.name + "*" + y.name;
  out.generators = primary_product(x, y);
  out.bound = degree_bound;
  if (out.generators.empty() || degree_bound < 0) return out;

  // X's implicit unit terms Id ⊗ (Id) chain through Y-terms whose output is
  // an idempotent, so they are materialized here. Y's unit terms are not:
  // paired with X's unit they would only reproduce the product's own unit.
  const ConcreteDABimodule xs = materialize(x, degree_bound, true);
  int input_bound = 0;
  for (const auto& [key, terms] : xs.cells)
    for (const auto& t : terms)
      for (const auto& b : t.inputs) input_bound = std::max(input_bound, intrinsic_degree(b));
  const ConcreteDABimodule ys = materialize(y, input_bound, false);
  const detail::ChainIndex index(ys);

  for (const auto& [xkey, terms] : xs.cells) {
    const auto& col_x = xs.generator(xkey.col);
    const auto& row_x = xs.generator(xkey.row);
    for (const auto& gy : y.generators()) {
      if (gy.left != col_x.right) continue;
      for (const auto& t : terms) {
        if (t.inputs.empty()) {
          out.toggle({pair_name(row_x.name, gy.name), pair_name(col_x.name, gy.name)}, t);
          continue;
        }
        std::vector<BasisMonomial> collected;
        // Depth-first search over y_1 = gy, ..., y_{n+1}.
        auto walk = [&](auto&& self, std::size_t j, const std::string& at) -> void {
          if (j == t.inputs.size()) {
            out.toggle({pair_name(row_x.name, at), pair_name(col_x.name, gy.name)}, {t.output, collected});
            return;
          }
          for (const auto& step : index.steps(at, t.inputs[j])) {
            const std::size_t mark = collected.size();
            collected.insert(collected.end(), step.inputs->begin(), step.inputs->end());
            self(self, j + 1, *step.target);
            collected.resize(mark);
          }
        };
        walk(walk, 0, gy.name);
      }
    }
  }
  return out;
}

}  // namespace bhfk
