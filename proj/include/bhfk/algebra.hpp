#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bhfk/monomial.hpp"

namespace bhfk {

/// Finite F2-linear combination of basis monomials. Addition is symmetric
/// difference, so a term present twice cancels.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  explicit AlgebraElement(const BasisMonomial& m) { terms_.insert(m); }
  AlgebraElement(std::initializer_list<BasisMonomial> ms) {
    for (const auto& m : ms) add(m);
  }

  void add(const BasisMonomial& m) {
    auto [it, inserted] = terms_.insert(m);
    if (!inserted) terms_.erase(it);
  }
  AlgebraElement& operator+=(const AlgebraElement& other) {
    for (const auto& m : other.terms_) add(m);
    return *this;
  }
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool contains(const BasisMonomial& m) const { return terms_.count(m) != 0; }
  const std::set<BasisMonomial>& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  std::set<BasisMonomial> terms_;
};

inline std::string to_string(const AlgebraElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& m : x) {
    if (!out.empty()) out += " + ";
    out += to_string(m);
  }
  return out;
}

/// Product a*b in path order (a first). Zero when the idempotents do not
/// chain. Every nonzero product of basis monomials is a single monomial.
inline AlgebraElement multiply_basis(const BasisMonomial& a, const BasisMonomial& b) {
  if (a.right != b.left) return {};
  const int w = a.summand();
  BasisMonomial out{a.left, b.right, Letter::Id, a.e1 + b.e1, a.e2 + b.e2};
  if (w == 1 || w == 2) {
    const int x = node_position(a.left), y = node_position(a.right), z = node_position(b.right);
    auto crosses = [](int from, int to, int edge) {
      return std::min(from, to) <= edge && edge < std::max(from, to) ? 1 : 0;
    };
    // An edge walked out and back again contributes its U-variable.
    for (int edge = 0; edge < 2; ++edge) {
      if (crosses(x, y, edge) + crosses(y, z, edge) == 2) {
        (edge_label(w, edge) == 1 ? out.e1 : out.e2) += 1;
      }
    }
    auto letter = letter_between(w, x, z);
    if (!letter) return {};
    out.letter = *letter;
  }
  if (!out.is_valid()) return {};
  return AlgebraElement(out);
}

inline AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement out;
  for (const auto& ma : a)
    for (const auto& mb : b) out += multiply_basis(ma, mb);
  return out;
}

inline std::vector<Idempotent> summand_idempotents(int summand) {
  std::vector<Idempotent> out;
  for (Idempotent i : kAllIdempotents)
    if (weight(i) == summand) out.push_back(i);
  return out;
}

/// All basis monomials of B(2,summand) with both exponents <= max_exp,
/// sorted canonically.
inline std::vector<BasisMonomial> enumerate_basis(int summand, int max_exp) {
  if (summand < 0 || summand > 3) throw std::domain_error("summand must be in 0..3, got " + std::to_string(summand));
  if (max_exp < 0) throw std::domain_error("max_exp must be nonnegative");
  std::set<BasisMonomial> out;
  for (Idempotent left : summand_idempotents(summand))
    for (Idempotent right : summand_idempotents(summand))
      for (Letter letter : kAllLetters)
        for (int e1 = 0; e1 <= max_exp; ++e1)
          for (int e2 = 0; e2 <= max_exp; ++e2) {
            BasisMonomial m{left, right, letter, e1, e2};
            if (m.is_valid()) out.insert(m);
          }
  return {out.begin(), out.end()};
}

/// Basis monomials starting at `left` of intrinsic degree at most `max_degree`.
inline std::vector<BasisMonomial> basis_from(Idempotent left, int max_degree) {
  std::vector<BasisMonomial> out;
  for (const auto& m : enumerate_basis(weight(left), std::max(0, max_degree / 2)))
    if (m.left == left && intrinsic_degree(m) <= max_degree) out.push_back(m);
  return out;
}

/// Pairs (b', b'') with b'*b'' = b. Idempotent factors are included only
/// when requested.
inline std::vector<std::pair<BasisMonomial, BasisMonomial>> factorizations(const BasisMonomial& b,
                                                                           bool include_idempotents) {
  std::vector<std::pair<BasisMonomial, BasisMonomial>> out;
  const int d = intrinsic_degree(b);
  for (const auto& first : basis_from(b.left, d)) {
    if (!include_idempotents && first.is_idempotent()) continue;
    for (const auto& second : basis_from(first.right, d - intrinsic_degree(first))) {
      if (!include_idempotents && second.is_idempotent()) continue;
      if (second.right != b.right || intrinsic_degree(first) + intrinsic_degree(second) != d) continue;
      if (multiply_basis(first, second).contains(b)) out.emplace_back(first, second);
    }
  }
  return out;
}

/// Memoized factorizations; one table per caller.
class FactorizationCache {
 public:
  explicit FactorizationCache(bool include_idempotents) : include_idempotents_(include_idempotents) {}

  const std::vector<std::pair<BasisMonomial, BasisMonomial>>& operator()(const BasisMonomial& b) {
    auto it = cache_.find(b);
    if (it == cache_.end()) it = cache_.emplace(b, factorizations(b, include_idempotents_)).first;
    return it->second;
  }

 private:
  bool include_idempotents_;
  std::map<BasisMonomial, std::vector<std::pair<BasisMonomial, BasisMonomial>>> cache_;
};

}  // namespace bhfk
