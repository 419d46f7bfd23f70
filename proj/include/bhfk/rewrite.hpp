#pragma once

// Word-rewriting oracle for B(2). It works from the quiver presentation
// (arrows, U-loops and defining relations) and shares no code with
// multiply_basis, so the two can be checked against each other.

#include <optional>
#include <stdexcept>
#include <vector>

#include "bhfk/algebra.hpp"

namespace bhfk {

enum class Symbol : std::uint8_t { R1, L1, R2, L2, U1, U2 };

struct PathWord {
  Idempotent start = Idempotent::Empty;
  std::vector<Symbol> symbols;
};

namespace detail {

struct Arrow {
  Symbol symbol;
  int from;
  int to;
};

// Quivers as drawn: B(2,1) has nodes A-B-C, B(2,2) has nodes AB-AC-BC.
inline std::optional<Arrow> quiver_arrow(int summand, Symbol s) {
  if (summand == 1) {
    switch (s) {
      case Symbol::R1: return Arrow{s, 0, 1};
      case Symbol::L1: return Arrow{s, 1, 0};
      case Symbol::R2: return Arrow{s, 1, 2};
      case Symbol::L2: return Arrow{s, 2, 1};
      default: return std::nullopt;
    }
  }
  if (summand == 2) {
    switch (s) {
      case Symbol::R2: return Arrow{s, 0, 1};
      case Symbol::L2: return Arrow{s, 1, 0};
      case Symbol::R1: return Arrow{s, 1, 2};
      case Symbol::L1: return Arrow{s, 2, 1};
      default: return std::nullopt;
    }
  }
  return std::nullopt;
}

inline bool is_u(Symbol s) { return s == Symbol::U1 || s == Symbol::U2; }

inline std::optional<Symbol> inverse_arrow(Symbol s) {
  switch (s) {
    case Symbol::R1: return Symbol::L1;
    case Symbol::L1: return Symbol::R1;
    case Symbol::R2: return Symbol::L2;
    case Symbol::L2: return Symbol::R2;
    default: return std::nullopt;
  }
}

inline int u_index(Symbol arrow) { return (arrow == Symbol::R1 || arrow == Symbol::L1) ? 1 : 2; }

// In B(2,1) every U is a two-cycle: U1 = R1L1 at A, L1R1 at B, 0 at C;
// U2 = 0 at A, R2L2 at B, L2R2 at C.
inline std::optional<std::vector<Symbol>> expand_u_b21(Symbol u, int node) {
  if (u == Symbol::U1) {
    if (node == 0) return std::vector{Symbol::R1, Symbol::L1};
    if (node == 1) return std::vector{Symbol::L1, Symbol::R1};
    return std::nullopt;
  }
  if (node == 0) return std::nullopt;
  if (node == 1) return std::vector{Symbol::R2, Symbol::L2};
  return std::vector{Symbol::L2, Symbol::R2};
}

inline std::optional<Letter> letter_of_reduced(const std::vector<Symbol>& w) {
  if (w.empty()) return Letter::Id;
  if (w.size() == 1) {
    switch (w[0]) {
      case Symbol::R1: return Letter::R1;
      case Symbol::L1: return Letter::L1;
      case Symbol::R2: return Letter::R2;
      case Symbol::L2: return Letter::L2;
      default: return std::nullopt;
    }
  }
  if (w.size() == 2 && w[0] == Symbol::R2 && w[1] == Symbol::R1) return Letter::R2R1;
  if (w.size() == 2 && w[0] == Symbol::L1 && w[1] == Symbol::L2) return Letter::L1L2;
  return std::nullopt;
}

}  // namespace detail

/// Spells a basis monomial as a word: its letter's arrows, then U-symbols.
inline PathWord word_of(const BasisMonomial& m) {
  PathWord w{m.left, {}};
  switch (m.letter) {
    case Letter::Id: break;
    case Letter::R1: w.symbols = {Symbol::R1}; break;
    case Letter::L1: w.symbols = {Symbol::L1}; break;
    case Letter::R2: w.symbols = {Symbol::R2}; break;
    case Letter::L2: w.symbols = {Symbol::L2}; break;
    case Letter::R2R1: w.symbols = {Symbol::R2, Symbol::R1}; break;
    case Letter::L1L2: w.symbols = {Symbol::L1, Symbol::L2}; break;
  }
  w.symbols.insert(w.symbols.end(), static_cast<std::size_t>(m.e1), Symbol::U1);
  w.symbols.insert(w.symbols.end(), static_cast<std::size_t>(m.e2), Symbol::U2);
  return w;
}

/// Reduces a word in the quiver of B(2,summand) to its basis expansion by
/// exhaustive application of the defining relations. Words that do not
/// follow the quiver reduce to 0.
inline AlgebraElement rewrite_path(const PathWord& word, int summand) {
  using detail::Arrow;
  if (summand < 0 || summand > 3) throw std::domain_error("summand must be in 0..3");
  if (weight(word.start) != summand) return {};

  if (summand == 0 || summand == 3) {
    int u1 = 0, u2 = 0;
    for (Symbol s : word.symbols) {
      if (!detail::is_u(s) || summand == 0) return {};
      (s == Symbol::U1 ? u1 : u2) += 1;
    }
    return AlgebraElement(BasisMonomial{word.start, word.start, Letter::Id, u1, u2});
  }

  // Walk the word, checking composability and separating the U-loops.
  int node = node_position(word.start);
  std::vector<Symbol> arrows;
  int u1 = 0, u2 = 0;
  for (Symbol s : word.symbols) {
    if (detail::is_u(s)) {
      if (summand == 2) {
        // [R_i, U_j] = [L_i, U_j] = 0: U's slide to the end of the word.
        (s == Symbol::U1 ? u1 : u2) += 1;
      } else {
        auto cycle = detail::expand_u_b21(s, node);
        if (!cycle) return {};
        arrows.insert(arrows.end(), cycle->begin(), cycle->end());
      }
      continue;
    }
    auto arrow = detail::quiver_arrow(summand, s);
    if (!arrow || arrow->from != node) return {};
    arrows.push_back(s);
    node = arrow->to;
  }

  // B(2,1) monomial relations R1R2 = 0, L2L1 = 0.
  if (summand == 1) {
    for (std::size_t i = 0; i + 1 < arrows.size(); ++i) {
      if (arrows[i] == Symbol::R1 && arrows[i + 1] == Symbol::R2) return {};
      if (arrows[i] == Symbol::L2 && arrows[i + 1] == Symbol::L1) return {};
    }
  }

  // R_i L_i = U_i, L_i R_i = U_i, applied until no backtrack remains.
  std::vector<Symbol> reduced;
  for (Symbol s : arrows) {
    if (!reduced.empty() && detail::inverse_arrow(reduced.back()) == s) {
      (detail::u_index(s) == 1 ? u1 : u2) += 1;
      reduced.pop_back();
    } else {
      reduced.push_back(s);
    }
  }

  auto letter = detail::letter_of_reduced(reduced);
  if (!letter) return {};
  BasisMonomial m{word.start, node_at(summand, node), *letter, u1, u2};
  if (!m.is_valid()) throw std::logic_error("rewrite_path: reduced word " + to_string(m) + " is not a basis monomial");
  return AlgebraElement(m);
}

/// Oracle product: the concatenated word of a and b, reduced. A word made of
/// U-symbols alone does not record its node, so idempotent mismatch is
/// checked here.
inline AlgebraElement rewrite_product(const BasisMonomial& a, const BasisMonomial& b) {
  if (a.right != b.left) return {};
  PathWord w = word_of(a);
  const PathWord wb = word_of(b);
  w.symbols.insert(w.symbols.end(), wb.symbols.begin(), wb.symbols.end());
  return rewrite_path(w, a.summand());
}

}  // namespace bhfk
