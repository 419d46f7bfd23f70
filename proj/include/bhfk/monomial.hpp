#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>

#include "bhfk/idempotent.hpp"

namespace bhfk {

/// Path part of a basis monomial. R2R1 and L1L2 only occur in B(2,2).
enum class Letter : std::uint8_t { Id, R1, L1, R2, L2, R2R1, L1L2 };

inline constexpr std::array<Letter, 7> kAllLetters = {Letter::Id, Letter::R1,   Letter::L1,  Letter::R2,
                                                      Letter::L2, Letter::R2R1, Letter::L1L2};

constexpr int letter_length(Letter l) {
  switch (l) {
    case Letter::Id: return 0;
    case Letter::R2R1:
    case Letter::L1L2: return 2;
    default: return 1;
  }
}

inline std::string_view to_string(Letter l) {
  switch (l) {
    case Letter::Id: return "Id";
    case Letter::R1: return "R1";
    case Letter::L1: return "L1";
    case Letter::R2: return "R2";
    case Letter::L2: return "L2";
    case Letter::R2R1: return "R2R1";
    case Letter::L1L2: return "L1L2";
  }
  return "?";
}

inline std::optional<Letter> parse_letter(std::string_view s) {
  if (s == "1") return Letter::Id;
  for (Letter l : kAllLetters)
    if (to_string(l) == s) return l;
  return std::nullopt;
}

/// Label (1 or 2) of the U-variable carried by the quiver edge between
/// positions `edge` and `edge + 1`.
constexpr int edge_label(int summand, int edge) { return summand == 1 ? edge + 1 : 2 - edge; }

/// Shortest-path letter from one node position to another, or nullopt when
/// the summand has no such letter (A to C in B(2,1), where R1R2 = 0).
constexpr std::optional<Letter> letter_between(int summand, int from, int to) {
  if (from == to) return Letter::Id;
  if (summand != 1 && summand != 2) return std::nullopt;
  const bool rightward = to > from;
  if ((rightward ? to - from : from - to) == 2) {
    if (summand == 1) return std::nullopt;
    return rightward ? Letter::R2R1 : Letter::L1L2;
  }
  const int label = edge_label(summand, rightward ? from : to);
  if (label == 1) return rightward ? Letter::R1 : Letter::L1;
  return rightward ? Letter::R2 : Letter::L2;
}

/// Endpoint positions of a non-identity letter, or nullopt if the summand
/// does not contain it.
constexpr std::optional<std::pair<int, int>> letter_span(int summand, Letter l) {
  for (int from = 0; from < 3; ++from)
    for (int to = 0; to < 3; ++to)
      if (from != to && letter_between(summand, from, to) == l) return std::pair{from, to};
  return std::nullopt;
}

/// One F2-basis element of B(2): letter * U1^e1 * U2^e2 between two
/// distinguished idempotents.
struct BasisMonomial {
  Idempotent left = Idempotent::Empty;
  Idempotent right = Idempotent::Empty;
  Letter letter = Letter::Id;
  int e1 = 0;
  int e2 = 0;

  int summand() const { return weight(left); }
  bool is_idempotent() const { return letter == Letter::Id && e1 == 0 && e2 == 0; }

  bool is_valid() const;

  friend bool operator==(const BasisMonomial&, const BasisMonomial&) = default;
  friend std::strong_ordering operator<=>(const BasisMonomial& a, const BasisMonomial& b) {
    return std::tie(a.letter, a.left, a.right, a.e1, a.e2) <=>
           std::tie(b.letter, b.left, b.right, b.e1, b.e2);
  }
};

inline BasisMonomial idempotent_monomial(Idempotent i) { return {i, i, Letter::Id, 0, 0}; }

inline bool BasisMonomial::is_valid() const {
  if (e1 < 0 || e2 < 0) return false;
  const int w = weight(left);
  if (w != weight(right)) return false;
  if (w == 0) return letter == Letter::Id && e1 == 0 && e2 == 0;
  if (w == 3) return letter == Letter::Id;
  if (letter_between(w, node_position(left), node_position(right)) != letter) return false;
  if (w == 2) return true;
  switch (letter) {
    case Letter::Id:
      if (left == Idempotent::A) return e2 == 0;
      if (left == Idempotent::C) return e1 == 0;
      return e1 == 0 || e2 == 0;
    case Letter::R1:
    case Letter::L1: return e2 == 0;
    case Letter::R2:
    case Letter::L2: return e1 == 0;
    default: return false;
  }
}

/// Builds a monomial from a letter and the node it starts at.
inline std::optional<BasisMonomial> monomial_from(Idempotent left, Letter letter, int e1, int e2) {
  BasisMonomial m{left, left, letter, e1, e2};
  if (letter != Letter::Id) {
    auto span = letter_span(weight(left), letter);
    if (!span || span->first != node_position(left)) return std::nullopt;
    m.right = node_at(weight(left), span->second);
  }
  if (!m.is_valid()) return std::nullopt;
  return m;
}

/// Intrinsic degree: deg R_i = deg L_i = 1, deg U_i = 2.
inline int intrinsic_degree(const BasisMonomial& m) { return letter_length(m.letter) + 2 * (m.e1 + m.e2); }

namespace detail {
inline void append_power(std::string& out, std::string_view var, int e) {
  if (e == 0) return;
  if (!out.empty()) out += '*';
  out += var;
  if (e != 1) out += "^" + std::to_string(e);
}
}  // namespace detail

/// Canonical text, e.g. "R2R1*U1^2*U2" or "Id(B)*U2^3".
inline std::string to_string(const BasisMonomial& m) {
  std::string out;
  if (m.letter == Letter::Id)
    out = "Id(" + std::string(to_string(m.left)) + ")";
  else
    out = std::string(to_string(m.letter));
  detail::append_power(out, "U1", m.e1);
  detail::append_power(out, "U2", m.e2);
  return out;
}

}  // namespace bhfk

template <>
struct std::hash<bhfk::BasisMonomial> {
  std::size_t operator()(const bhfk::BasisMonomial& m) const noexcept {
    std::size_t h = static_cast<std::size_t>(m.left);
    h = h * 8 + static_cast<std::size_t>(m.right);
    h = h * 8 + static_cast<std::size_t>(m.letter);
    h = h * 1000003u + static_cast<std::size_t>(m.e1);
    h = h * 1000003u + static_cast<std::size_t>(m.e2);
    return h;
  }
};
