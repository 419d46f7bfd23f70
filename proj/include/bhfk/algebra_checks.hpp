#pragma once

#include <string>
#include <vector>

#include "bhfk/algebra.hpp"
#include "bhfk/rewrite.hpp"

namespace bhfk {

struct OracleReport {
  std::size_t pairs = 0;
  std::vector<std::string> mismatches;

  bool passed() const { return mismatches.empty(); }
};

/// multiply_basis against rewrite_product on every pair of basis monomials
/// of the given summands with exponents <= max_exp.
inline OracleReport compare_with_oracle(const std::vector<int>& summands, int max_exp) {
  OracleReport r;
  for (int k : summands) {
    const auto basis = enumerate_basis(k, max_exp);
    for (const auto& a : basis)
      for (const auto& b : basis) {
        ++r.pairs;
        const auto fast = multiply_basis(a, b);
        const auto slow = rewrite_product(a, b);
        if (fast != slow)
          r.mismatches.push_back(to_string(a) + " * " + to_string(b) + ": table " + to_string(fast) + ", oracle " +
                                 to_string(slow));
      }
  }
  return r;
}

struct AssociativityReport {
  std::size_t triples = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

inline AssociativityReport check_associativity(const std::vector<int>& summands, int max_exp) {
  AssociativityReport r;
  for (int k : summands) {
    const auto basis = enumerate_basis(k, max_exp);
    for (const auto& a : basis)
      for (const auto& b : basis) {
        const auto ab = multiply_basis(a, b);
        for (const auto& c : basis) {
          ++r.triples;
          const auto left = multiply(ab, AlgebraElement(c));
          const auto right = multiply(AlgebraElement(a), multiply_basis(b, c));
          if (left != right)
            r.failures.push_back("(" + to_string(a) + ", " + to_string(b) + ", " + to_string(c) + ")");
        }
      }
  }
  return r;
}

}  // namespace bhfk
