#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bhfk {

/// Distinguished idempotents of B(2) = B(2,0) + B(2,1) + B(2,2) + B(2,3).
enum class Idempotent : std::uint8_t { Empty, A, B, C, AB, AC, BC, ABC };

inline constexpr std::array<Idempotent, 8> kAllIdempotents = {
    Idempotent::Empty, Idempotent::A,  Idempotent::B,  Idempotent::C,
    Idempotent::AB,    Idempotent::AC, Idempotent::BC, Idempotent::ABC};

/// Number of occupied positions; selects the summand B(2, weight).
constexpr int weight(Idempotent i) {
  switch (i) {
    case Idempotent::Empty: return 0;
    case Idempotent::A:
    case Idempotent::B:
    case Idempotent::C: return 1;
    case Idempotent::AB:
    case Idempotent::AC:
    case Idempotent::BC: return 2;
    case Idempotent::ABC: return 3;
  }
  return -1;
}

/// Position of a node along the three-node quiver of B(2,1) or B(2,2).
/// B(2,1): A, B, C.  B(2,2): AB, AC, BC.  Other summands have one node.
constexpr int node_position(Idempotent i) {
  switch (i) {
    case Idempotent::A:
    case Idempotent::AB: return 0;
    case Idempotent::B:
    case Idempotent::AC: return 1;
    case Idempotent::C:
    case Idempotent::BC: return 2;
    default: return 0;
  }
}

constexpr Idempotent node_at(int summand, int position) {
  if (summand == 1) {
    constexpr std::array<Idempotent, 3> nodes = {Idempotent::A, Idempotent::B, Idempotent::C};
    return nodes.at(static_cast<std::size_t>(position));
  }
  if (summand == 2) {
    constexpr std::array<Idempotent, 3> nodes = {Idempotent::AB, Idempotent::AC, Idempotent::BC};
    return nodes.at(static_cast<std::size_t>(position));
  }
  return summand == 0 ? Idempotent::Empty : Idempotent::ABC;
}

inline std::string_view to_string(Idempotent i) {
  switch (i) {
    case Idempotent::Empty: return "0";
    case Idempotent::A: return "A";
    case Idempotent::B: return "B";
    case Idempotent::C: return "C";
    case Idempotent::AB: return "AB";
    case Idempotent::AC: return "AC";
    case Idempotent::BC: return "BC";
    case Idempotent::ABC: return "ABC";
  }
  return "?";
}

/// Accepts "0", "empty" and the empty-set sign for the weight-zero idempotent.
inline std::optional<Idempotent> parse_idempotent(std::string_view s) {
  if (s == "0" || s == "empty" || s == "∅") return Idempotent::Empty;
  for (Idempotent i : kAllIdempotents)
    if (to_string(i) == s) return i;
  return std::nullopt;
}

inline Idempotent idempotent_from_string(std::string_view s) {
  auto i = parse_idempotent(s);
  if (!i) throw std::invalid_argument("unknown idempotent '" + std::string(s) + "'");
  return *i;
}

}  // namespace bhfk
