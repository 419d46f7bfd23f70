#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bhfk/bimodule.hpp"
#include "bhfk/box_tensor.hpp"

namespace bhfk {

enum class CorpusId { P, N, E1, E2 };

inline constexpr std::array<CorpusId, 4> kAllCorpusIds = {CorpusId::P, CorpusId::N, CorpusId::E1, CorpusId::E2};

inline std::string_view to_string(CorpusId id) {
  switch (id) {
    case CorpusId::P: return "P";
    case CorpusId::N: return "N";
    case CorpusId::E1: return "E1";
    case CorpusId::E2: return "E2";
  }
  return "?";
}

inline std::optional<CorpusId> parse_corpus_id(std::string_view s) {
  for (CorpusId id : kAllCorpusIds)
    if (to_string(id) == s) return id;
  return std::nullopt;
}

/// A place where the built-in data departs from the printed source.
struct TypoNote {
  std::string location;
  std::string printed;
  std::string used;
  std::string reason;
  std::vector<std::string> affects;  // reproduction check keys
};

namespace detail {

// Primary matrix shared by P and N.
inline void add_crossing_generators(DABimodule& m) {
  using I = Idempotent;
  m.add_generator("S", I::Empty, I::Empty)
      .add_generator("S_A", I::A, I::A)
      .add_generator("W_A", I::B, I::A)
      .add_generator("N_B", I::B, I::B)
      .add_generator("E_C", I::B, I::C)
      .add_generator("S_C", I::C, I::C)
      .add_generator("N_AB", I::AB, I::AB)
      .add_generator("E_AC", I::AB, I::AC)
      .add_generator("S_AC", I::AC, I::AC)
      .add_generator("W_AC", I::BC, I::AC)
      .add_generator("N_BC", I::BC, I::BC)
      .add_generator("N_ABC", I::ABC, I::ABC);
}

inline constexpr std::string_view kUnitExcluded = " | (k,l) != (0,0)";

inline void add_diagonal_family(DABimodule& m, const std::string& g) {
  m.add_term(g, g, "U1^l*U2^k (x) U1^k*U2^l" + std::string(kUnitExcluded));
}

// True when some shift of the indices multiplies the output and input j by
// U1U2 and leaves the other inputs alone.
inline bool has_u1u2_shift(const TermSchema& s, std::size_t j) {
  const std::size_t n = s.indices.size();
  std::vector<int> delta(n, -2);
  auto moves = [&](const LinearExpr& e) {
    int d = 0;
    for (std::size_t i = 0; i < n; ++i) d += e.coefficient(s.indices[i]) * delta[i];
    return d;
  };
  while (true) {
    bool ok = moves(s.output.e1) == 1 && moves(s.output.e2) == 1;
    for (std::size_t i = 0; ok && i < s.inputs.size(); ++i) {
      const int want = i == j ? 1 : 0;
      ok = moves(s.inputs[i].e1) == want && moves(s.inputs[i].e2) == want;
    }
    if (ok) return true;
    std::size_t i = 0;
    for (; i < n; ++i) {
      if (delta[i] < 2) {
        ++delta[i];
        break;
      }
      delta[i] = -2;
    }
    if (i == n) return false;
  }
}

// Widens a family to its orbit under the central element U1U2, acting on
// the output together with any one input.
inline TermSchema u1u2_orbit(TermSchema s) {
  static constexpr std::array<std::string_view, 4> kFresh = {"m", "p", "q", "r"};
  std::size_t next = 0;
  for (std::size_t j = 0; j < s.inputs.size(); ++j) {
    if (has_u1u2_shift(s, j)) continue;
    std::string v;
    do v = std::string(kFresh.at(next++));
    while (std::find(s.indices.begin(), s.indices.end(), v) != s.indices.end());
    for (auto* e : {&s.output.e1, &s.output.e2, &s.inputs[j].e1, &s.inputs[j].e2}) e->coeffs[v] += 1;
    s.indices.push_back(v);
  }
  return s;
}

// The printed B(2,2) blocks of P and N list one representative per
// U1U2-orbit, and omit the orbit of the unit term on the diagonal.
inline void close_middle_block(DABimodule& m) {
  auto middle = [&](const std::string& g) { return weight(m.generator(g).left) == 2; };
  for (const auto& [key, schemas] : std::map(m.cells())) {
    if (!middle(key.row) || !middle(key.col)) continue;
    auto& cell = m.mutable_cell(key.row, key.col);
    for (auto& s : cell)
      if (!s.inputs.empty()) s = u1u2_orbit(std::move(s));
  }
  for (const auto& g : m.generators()) {
    if (!middle(g.name)) continue;
    const ConcreteTerm u1u2{*monomial_from(g.left, Letter::Id, 1, 1), {*monomial_from(g.right, Letter::Id, 1, 1)}};
    const auto present = instantiate(m, g.name, g.name, 4);
    if (std::find(present.begin(), present.end(), u1u2) == present.end())
      m.add_term(g.name, g.name, "U1^(m+1)*U2^(m+1) (x) U1^(m+1)*U2^(m+1)");
  }
}

}  // namespace detail

/// `as_printed` skips the U1U2 completion of the B(2,2) block; the printed
/// form fails the DA relations from degree 4 on.
inline DABimodule build_P(bool as_printed = false) {
  DABimodule m("P");
  detail::add_crossing_generators(m);

  // Block B(2,1).
  m.add_term("S_A", "W_A", "L1");
  m.add_term("W_A", "W_A", "U2^(k+1) (x) U1^(k+1)");
  m.add_term("W_A", "N_B", "U2^(k+1) (x) L1*U1^k");
  m.add_term("W_A", "S_C", "L2*U2^k (x) (L2, L1*U1^k)");
  m.add_term("N_B", "S_A", "R1*U1^k (x) (R1, U2^(k+1))");
  m.add_term("N_B", "W_A", "U2^k (x) R1*U1^k");
  m.add_term("N_B", "N_B", "U2^(k+1) (x) U1^(k+1)");
  m.add_term("N_B", "N_B", "U1^(k+1) (x) U2^(k+1)");
  m.add_term("N_B", "E_C", "U1^k (x) L2*U2^k");
  m.add_term("N_B", "S_C", "L2*U2^k (x) (L2, U1^(k+1))");
  m.add_term("E_C", "S_A", "R1*U1^k (x) (R1, R2*U2^k)");
  m.add_term("E_C", "N_B", "U1^(k+1) (x) R2*U2^k");
  m.add_term("E_C", "E_C", "U1^(k+1) (x) U2^(k+1)");
  m.add_term("S_C", "E_C", "R2");

  // Block B(2,2).
  detail::add_diagonal_family(m, "N_AB");
  m.add_term("N_AB", "E_AC", "U1^k (x) L2*U2^k");
  m.add_term("N_AB", "W_AC", "L1L2*U2^k (x) L2*U1^(k+1)");
  m.add_term("N_AB", "N_BC", "L1L2*U1^l*U2^k (x) L1L2*U1^k*U2^l");
  m.add_term("E_AC", "N_AB", "U1^(l+1)*U2^k (x) R2*U1^k*U2^l");
  m.add_term("E_AC", "E_AC", "U1^(k+1) (x) U2^(k+1)");
  m.add_term("E_AC", "W_AC", "L1L2*U2^k (x) U1^(k+1)");
  m.add_term("E_AC", "N_BC", "L1L2*U1^l*U2^k (x) L1*U1^k*U2^l");
  m.add_term("S_AC", "E_AC", "R2");
  m.add_term("S_AC", "W_AC", "L1");
  m.add_term("W_AC", "N_AB", "R2R1*U1^l*U2^k (x) R2*U1^k*U2^l");
  m.add_term("W_AC", "E_AC", "R2R1*U1^k (x) U2^(k+1)");
  m.add_term("W_AC", "W_AC", "U2^(k+1) (x) U1^(k+1)");
  m.add_term("W_AC", "N_BC", "U1^l*U2^(k+1) (x) L1*U1^k*U2^l");
  m.add_term("N_BC", "N_AB", "R2R1*U1^l*U2^k (x) R2R1*U1^k*U2^l");
  m.add_term("N_BC", "E_AC", "R2R1*U1^k (x) R1*U2^(k+1)");
  m.add_term("N_BC", "W_AC", "U2^k (x) R1*U1^k");
  detail::add_diagonal_family(m, "N_BC");

  // Higher actions into S_AC.
  for (auto s : {"L2*U1^t*U2^n (x) (U1^(n+1), L2*U2^t) | 0 <= n < t",
                 "L2*U1^t*U2^n (x) (R1*U1^n, L1L2*U2^t) | 0 <= n < t",
                 "L2*U1^t*U2^n (x) (L2*U1^(n+1), U2^t) | 0 <= n < t",
                 "L2*U1^t*U2^n (x) (L2*U2^t, U1^(n+1)) | 1 <= t <= n",
                 "L2*U1^t*U2^n (x) (U2^t, L2*U1^(n+1)) | 1 <= t <= n",
                 "L2*U1^t*U2^n (x) (R1*U2^t, L1L2*U1^n) | 1 <= t <= n",
                 "L2*U2^n (x) (L2, U1^(n+1))"})
    m.add_term("N_AB", "S_AC", s);
  for (auto s : {"L2*U1^t*U2^n (x) (U1^(n+1), U2^t) | 0 <= n < t",
                 "L2*U1^t*U2^n (x) (R1*U1^n, L1*U2^t) | 0 <= n < t",
                 "L2*U1^t*U2^n (x) (L2*U1^(n+1), R2*U2^(t-1)) | 0 <= n < t",
                 "L2*U1^t*U2^n (x) (U2^t, U1^(n+1)) | 1 <= t <= n",
                 "L2*U1^t*U2^n (x) (R1*U2^t, L1*U1^n) | 1 <= t <= n",
                 "L2*U1^t*U2^n (x) (L2*U2^(t-1), R2*U1^(n+1)) | 1 <= t <= n"})
    m.add_term("E_AC", "S_AC", s);
  for (auto s : {"R1*U1^t*U2^n (x) (U2^(t+1), U1^n) | 0 <= t < n",
                 "R1*U1^t*U2^n (x) (L2*U2^t, R2*U1^n) | 0 <= t < n",
                 "R1*U1^t*U2^n (x) (R1*U2^(t+1), L1*U1^(n-1)) | 0 <= t < n",
                 "R1*U1^t*U2^n (x) (U1^n, U2^(t+1)) | 1 <= n <= t",
                 "R1*U1^t*U2^n (x) (L2*U1^n, R2*U2^t) | 1 <= n <= t",
                 "R1*U1^t*U2^n (x) (R1*U1^(n-1), L1*U2^(t+1)) | 1 <= n <= t"})
    m.add_term("W_AC", "S_AC", s);
  for (auto s : {"R1*U1^t*U2^n (x) (U2^(t+1), R1*U1^n) | 0 <= t < n",
                 "R1*U1^t*U2^n (x) (L2*U2^t, R2R1*U1^n) | 0 <= t < n",
                 "R1*U1^t*U2^n (x) (R1*U2^(t+1), U1^n) | 0 <= t < n",
                 "R1*U1^t*U2^n (x) (R1*U1^n, U2^(t+1)) | 1 <= n <= t",
                 "R1*U1^t*U2^n (x) (U1^n, R1*U2^(t+1)) | 1 <= n <= t",
                 "R1*U1^t*U2^n (x) (L2*U1^n, R2R1*U2^t) | 1 <= n <= t",
                 "R1*U1^t (x) (R1, U2^(t+1))"})
    m.add_term("N_BC", "S_AC", s);

  detail::add_diagonal_family(m, "N_ABC");
  if (!as_printed) detail::close_middle_block(m);
  return m;
}

inline DABimodule build_N(bool as_printed = false) {
  DABimodule m("N");
  detail::add_crossing_generators(m);

  m.add_term("S_A", "N_B", "L1*U1^k (x) (U2^(k+1), L1)");
  m.add_term("S_A", "E_C", "L1*U1^k (x) (L2*U2^k, L1)");
  m.add_term("W_A", "S_A", "R1");
  m.add_term("W_A", "W_A", "U2^(k+1) (x) U1^(k+1)");
  m.add_term("W_A", "N_B", "U2^k (x) L1*U1^k");
  m.add_term("N_B", "W_A", "U2^(k+1) (x) R1*U1^k");
  m.add_term("N_B", "N_B", "U2^(k+1) (x) U1^(k+1)");
  m.add_term("N_B", "N_B", "U1^(k+1) (x) U2^(k+1)");
  m.add_term("N_B", "E_C", "U1^(k+1) (x) L2*U2^k");
  m.add_term("E_C", "N_B", "U1^k (x) R2*U2^k");
  m.add_term("E_C", "E_C", "U1^(k+1) (x) U2^(k+1)");
  m.add_term("E_C", "S_C", "L2");
  m.add_term("S_C", "W_A", "R2*U2^k (x) (R1*U1^k, R2)");
  m.add_term("S_C", "N_B", "R2*U2^k (x) (U1^(k+1), R2)");

  detail::add_diagonal_family(m, "N_AB");
  m.add_term("N_AB", "E_AC", "U1^(l+1)*U2^k (x) L2*U1^k*U2^l");
  m.add_term("N_AB", "W_AC", "L1L2*U1^l*U2^k (x) L2*U1^k*U2^l");
  m.add_term("N_AB", "N_BC", "L1L2*U1^l*U2^k (x) L1L2*U1^k*U2^l");
  m.add_term("E_AC", "N_AB", "U1^k (x) R2*U2^k");
  m.add_term("E_AC", "E_AC", "U1^(k+1) (x) U2^(k+1)");
  m.add_term("E_AC", "S_AC", "L2");
  m.add_term("E_AC", "W_AC", "L1L2*U1^k (x) U2^(k+1)");
  m.add_term("E_AC", "N_BC", "L1L2*U1^k (x) L1*U2^(k+1)");
  m.add_term("W_AC", "N_AB", "R2R1*U2^k (x) R2*U1^(k+1)");
  m.add_term("W_AC", "E_AC", "R2R1*U2^k (x) U1^(k+1)");
  m.add_term("W_AC", "S_AC", "R1");
  m.add_term("W_AC", "W_AC", "U2^(k+1) (x) U1^(k+1)");
  m.add_term("W_AC", "N_BC", "U2^k (x) L1*U1^k");
  m.add_term("N_BC", "N_AB", "R2R1*U1^l*U2^k (x) R2R1*U1^k*U2^l");
  m.add_term("N_BC", "E_AC", "R2R1*U1^l*U2^k (x) R1*U1^k*U2^l");
  m.add_term("N_BC", "W_AC", "U1^l*U2^(k+1) (x) R1*U1^k*U2^l");
  detail::add_diagonal_family(m, "N_BC");

  for (auto s : {"R2*U1^t*U2^n (x) (R2*U2^t, U1^(n+1)) | 0 <= n < t",
                 "R2*U1^t*U2^n (x) (R2R1*U2^t, L1*U1^n) | 0 <= n < t",
                 "R2*U1^t*U2^n (x) (U2^t, R2*U1^(n+1)) | 0 <= n < t",
                 "R2*U1^t*U2^n (x) (U1^(n+1), R2*U2^t) | 1 <= t <= n",
                 "R2*U1^t*U2^n (x) (R2*U1^(n+1), U2^t) | 1 <= t <= n",
                 "R2*U1^t*U2^n (x) (R2R1*U1^n, L1*U2^t) | 1 <= t <= n",
                 "R2*U2^n (x) (U1^(n+1), R2)"})
    m.add_term("S_AC", "N_AB", s);
  for (auto s : {"R2*U1^t*U2^n (x) (U2^t, U1^(n+1)) | 0 <= n < t",
                 "R2*U1^t*U2^n (x) (R1*U2^t, L1*U1^n) | 0 <= n < t",
                 "R2*U1^t*U2^n (x) (L2*U2^(t-1), R2*U1^(n+1)) | 0 <= n < t",
                 "R2*U1^t*U2^n (x) (U1^(n+1), U2^t) | 1 <= t <= n",
                 "R2*U1^t*U2^n (x) (R1*U1^n, L1*U2^t) | 1 <= t <= n",
                 "R2*U1^t*U2^n (x) (L2*U1^(n+1), R2*U2^(t-1)) | 1 <= t <= n"})
    m.add_term("S_AC", "E_AC", s);
  for (auto s : {"L1*U1^t*U2^n (x) (U1^n, U2^(t+1)) | 0 <= t < n",
                 "L1*U1^t*U2^n (x) (L2*U1^n, R2*U2^t) | 0 <= t < n",
                 "L1*U1^t*U2^n (x) (R1*U1^(n-1), L1*U2^(t+1)) | 0 <= t < n",
                 "L1*U1^t*U2^n (x) (U2^(t+1), U1^n) | 1 <= n <= t",
                 "L1*U1^t*U2^n (x) (L2*U2^t, R2*U1^n) | 1 <= n <= t",
                 "L1*U1^t*U2^n (x) (R1*U2^(t+1), L1*U1^(n-1)) | 1 <= n <= t"})
    m.add_term("S_AC", "W_AC", s);
  for (auto s : {"L1*U1^t*U2^n (x) (L1*U1^n, U2^(t+1)) | 0 <= t < n",
                 "L1*U1^t*U2^n (x) (L1L2*U1^n, R2*U2^t) | 0 <= t < n",
                 "L1*U1^t*U2^n (x) (U1^n, L1*U2^(t+1)) | 0 <= t < n",
                 "L1*U1^t*U2^n (x) (U2^(t+1), L1*U1^n) | 1 <= n <= t",
                 "L1*U1^t*U2^n (x) (L1*U2^(t+1), U1^n) | 1 <= n <= t",
                 "L1*U1^t*U2^n (x) (L1L2*U2^t, R2*U1^n) | 1 <= n <= t",
                 "L1*U1^t (x) (U2^(t+1), L1)"})
    m.add_term("S_AC", "N_BC", s);

  detail::add_diagonal_family(m, "N_ABC");
  if (!as_printed) detail::close_middle_block(m);
  return m;
}

inline DABimodule build_E1() {
  using I = Idempotent;
  DABimodule m("E1");
  m.add_generator("X1", I::Empty, I::A)
      .add_generator("X2", I::B, I::AB)
      .add_generator("X3", I::C, I::AC)
      .add_generator("X4", I::BC, I::ABC);
  m.add_term("X2", "X2", "U1^(k+1) (x) U1^(k+1)");
  m.add_term("X2", "X2", "U2^(k+1) (x) U2^(k+1)");
  m.add_term("X2", "X3", "L2*U2^k (x) L2*U2^k");
  m.add_term("X3", "X2", "R2*U2^k (x) R2*U2^k");
  m.add_term("X3", "X3", "U2^(k+1) (x) U2^(k+1)");
  m.add_term("X4", "X4", "U1^k*U2^l (x) U1^k*U2^l" + std::string(detail::kUnitExcluded));
  return m;
}

inline DABimodule build_E2() {
  using I = Idempotent;
  DABimodule m("E2");
  m.add_generator("Y1", I::Empty, I::C)
      .add_generator("Y2", I::A, I::AC)
      .add_generator("Y3", I::B, I::BC)
      .add_generator("Y4", I::AB, I::ABC);
  m.add_term("Y2", "Y2", "U1^(k+1) (x) U1^(k+1)");
  m.add_term("Y2", "Y3", "L1*U1^k (x) L1*U1^k");
  m.add_term("Y3", "Y2", "R1*U1^k (x) R1*U1^k");
  m.add_term("Y3", "Y3", "U1^(k+1) (x) U1^(k+1)");
  m.add_term("Y3", "Y3", "U2^(k+1) (x) U2^(k+1)");
  // Printed with a bare U1 on the input side; see corpus_typo_notes().
  m.add_term("Y4", "Y4", "U1^k*U2^l (x) U1^k*U2^l" + std::string(detail::kUnitExcluded));
  return m;
}

inline DABimodule build(CorpusId id) {
  switch (id) {
    case CorpusId::P: return build_P();
    case CorpusId::N: return build_N();
    case CorpusId::E1: return build_E1();
    case CorpusId::E2: return build_E2();
  }
  throw std::domain_error("unknown corpus id");
}

/// R_i <-> L_i with the order of composite paths reversed.
constexpr Letter mirror_letter(Letter l) {
  switch (l) {
    case Letter::R1: return Letter::L1;
    case Letter::L1: return Letter::R1;
    case Letter::R2: return Letter::L2;
    case Letter::L2: return Letter::R2;
    case Letter::R2R1: return Letter::L1L2;
    case Letter::L1L2: return Letter::R2R1;
    case Letter::Id: return Letter::Id;
  }
  return l;
}

/// Transposes the secondary matrix, mirrors every letter and reverses every
/// input sequence. The primary matrix is kept as is.
inline DABimodule symmetry_transform(const DABimodule& m) {
  DABimodule out(m.name + "^sym");
  out.left_algebra = m.left_algebra;
  out.right_algebra = m.right_algebra;
  out.strictly_unital = m.strictly_unital;
  for (const auto& g : m.generators()) out.add_generator(g);
  for (const auto& [key, schemas] : m.cells()) {
    for (auto s : schemas) {
      s.output.letter = mirror_letter(s.output.letter);
      for (auto& in : s.inputs) in.letter = mirror_letter(in.letter);
      std::reverse(s.inputs.begin(), s.inputs.end());
      out.add_term(key.col, key.row, std::move(s));
    }
  }
  return out;
}

/// True when every cell holds the same family of schemas, up to index
/// renaming and restated constraints.
inline bool schema_equal(const DABimodule& a, const DABimodule& b) {
  if (a.generators() != b.generators()) return false;
  auto keys = [](const DABimodule& m) {
    std::map<CellKey, std::multiset<std::string>> out;
    for (const auto& [key, schemas] : m.cells())
      for (const auto& s : schemas) out[key].insert(canonical_key(s));
    std::erase_if(out, [](const auto& kv) { return kv.second.empty(); });
    return out;
  };
  return keys(a) == keys(b);
}

/// Cells on which two bimodules differ at schema level.
inline std::vector<CellKey> schema_differences(const DABimodule& a, const DABimodule& b) {
  std::set<CellKey> all;
  for (const auto& [key, s] : a.cells()) all.insert(key);
  for (const auto& [key, s] : b.cells()) all.insert(key);
  std::vector<CellKey> out;
  for (const auto& key : all) {
    std::multiset<std::string> ka, kb;
    for (const auto& s : a.cell(key.row, key.col)) ka.insert(canonical_key(s));
    for (const auto& s : b.cell(key.row, key.col)) kb.insert(canonical_key(s));
    if (ka != kb) out.push_back(key);
  }
  return out;
}

/// Symmetry between P and N.
struct SymmetryReport {
  std::vector<CellKey> differences;
  bool involution_p = false;
  bool involution_n = false;

  bool passed() const { return differences.empty() && involution_p && involution_n; }
};

inline SymmetryReport check_symmetry(const DABimodule& p, const DABimodule& n) {
  return {schema_differences(symmetry_transform(p), n), schema_equal(symmetry_transform(symmetry_transform(p)), p),
          schema_equal(symmetry_transform(symmetry_transform(n)), n)};
}

/// E ⊠ E has no generators at all.
inline bool is_zero_boxsquare(const DABimodule& e) { return primary_product(e, e).empty(); }

/// The answer does not depend on the bound: vanishing is already decided
/// by the primary matrix.
inline bool is_zero_boxsquare(CorpusId id, int /*bound*/ = 0) { return is_zero_boxsquare(build(id)); }

inline std::vector<TypoNote> corpus_typo_notes() {
  return {
      {"E2 secondary matrix, cell (Y4, Y4)", "U_1^kU_2^l \\otimes U_1U_2^l", "U1^k*U2^l (x) U1^k*U2^l",
       "the printed input drops the exponent k; the E1 analogue and the relation check both require it",
       {"da.E2"}},
      {"P and N secondary matrices, B(2,2) block",
       "one-parameter entries such as U_1^{k+1} \\otimes U_2^{k+1}, the starred entries, and no U_1U_2 terms on the "
       "diagonals of E_AC, S_AC, W_AC",
       "every family closed under multiplication by the central element U1U2 (output together with one input), "
       "plus the U1U2-orbit of the unit term on those diagonals",
       "as printed, (S_AC, S_AC) at U1U2 (x) (U1, U2) has a single contribution and the relations fail from degree 4; "
       "the closure is the unique degree-by-degree completion and passes through degree 12",
       {"da.P", "da.N"}},
      {"N secondary matrix, entries *'_2 to *'_4", "summands printed without '+' separators",
       "each printed line is one summand", "forced by the symmetry with P's *_2 to *_4", {"symmetry"}},
      {"N secondary matrix, entry *'_3, second line", "(L_2 U_1^n R_2 U_2^t)", "(L2*U1^n, R2*U2^t)",
       "missing comma; the mirror image of the matching line of *_3", {"symmetry"}},
  };
}

}  // namespace bhfk
