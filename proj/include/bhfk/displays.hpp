#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bhfk/box_tensor.hpp"
#include "bhfk/corpus.hpp"

namespace bhfk {

/// The eight products whose secondary matrices are displayed.
enum class ProductId { E1P, PE1, E2P, PE2, E1N, NE1, E2N, NE2 };

inline constexpr std::array<ProductId, 8> kAllProductIds = {ProductId::E1P, ProductId::PE1, ProductId::E2P,
                                                            ProductId::PE2, ProductId::E1N, ProductId::NE1,
                                                            ProductId::E2N, ProductId::NE2};

inline std::string_view to_string(ProductId id) {
  switch (id) {
    case ProductId::E1P: return "E1*P";
    case ProductId::PE1: return "P*E1";
    case ProductId::E2P: return "E2*P";
    case ProductId::PE2: return "P*E2";
    case ProductId::E1N: return "E1*N";
    case ProductId::NE1: return "N*E1";
    case ProductId::E2N: return "E2*N";
    case ProductId::NE2: return "N*E2";
  }
  return "?";
}

inline std::optional<ProductId> parse_product_id(std::string_view s) {
  for (ProductId id : kAllProductIds)
    if (to_string(id) == s) return id;
  return std::nullopt;
}

/// Left and right factors of a product.
inline std::pair<CorpusId, CorpusId> factors(ProductId id) {
  switch (id) {
    case ProductId::E1P: return {CorpusId::E1, CorpusId::P};
    case ProductId::PE1: return {CorpusId::P, CorpusId::E1};
    case ProductId::E2P: return {CorpusId::E2, CorpusId::P};
    case ProductId::PE2: return {CorpusId::P, CorpusId::E2};
    case ProductId::E1N: return {CorpusId::E1, CorpusId::N};
    case ProductId::NE1: return {CorpusId::N, CorpusId::E1};
    case ProductId::E2N: return {CorpusId::E2, CorpusId::N};
    case ProductId::NE2: return {CorpusId::N, CorpusId::E2};
  }
  throw std::domain_error("unknown product id");
}

/// The same two factors in the other order (E ⊠ X <-> X ⊠ E).
inline ProductId partner(ProductId id) {
  switch (id) {
    case ProductId::E1P: return ProductId::PE1;
    case ProductId::PE1: return ProductId::E1P;
    case ProductId::E2P: return ProductId::PE2;
    case ProductId::PE2: return ProductId::E2P;
    case ProductId::E1N: return ProductId::NE1;
    case ProductId::NE1: return ProductId::E1N;
    case ProductId::E2N: return ProductId::NE2;
    case ProductId::NE2: return ProductId::E2N;
  }
  throw std::domain_error("unknown product id");
}

inline bool e_on_left(ProductId id) {
  auto [l, r] = factors(id);
  return l == CorpusId::E1 || l == CorpusId::E2;
}

namespace detail {

// Five generators per product, in display order: the weight-0 one, the
// three of the middle block, and the top one.
struct RoleNames {
  std::array<std::string, 5> names;
};

inline RoleNames role_names(ProductId id) {
  switch (id) {
    case ProductId::E1P:
    case ProductId::E1N:
      return {{"(X1,S_A)", "(X2,N_AB)", "(X2,E_AC)", "(X3,S_AC)", "(X4,N_ABC)"}};
    case ProductId::PE1:
    case ProductId::NE1:
      return {{"(S,X1)", "(N_B,X2)", "(E_C,X3)", "(S_C,X3)", "(N_BC,X4)"}};
    case ProductId::E2P:
    case ProductId::E2N:
      return {{"(Y1,S_C)", "(Y2,S_AC)", "(Y3,W_AC)", "(Y3,N_BC)", "(Y4,N_ABC)"}};
    case ProductId::PE2:
    case ProductId::NE2:
      return {{"(S,Y1)", "(S_A,Y2)", "(W_A,Y2)", "(N_B,Y3)", "(N_AB,Y4)"}};
  }
  throw std::domain_error("unknown product id");
}

inline std::array<std::pair<Idempotent, Idempotent>, 5> role_idempotents(ProductId id) {
  using I = Idempotent;
  auto [l, r] = factors(id);
  const bool uses_e1 = l == CorpusId::E1 || r == CorpusId::E1;
  if (uses_e1) return {{{I::Empty, I::A}, {I::B, I::AB}, {I::B, I::AC}, {I::C, I::AC}, {I::BC, I::ABC}}};
  return {{{I::Empty, I::C}, {I::A, I::AC}, {I::B, I::AC}, {I::B, I::BC}, {I::AB, I::ABC}}};
}

struct RoleTerm {
  int row;
  int col;
  const char* schema;
};

// Middle-block templates by role index (1..3), top block by 4.
inline std::vector<RoleTerm> role_terms(ProductId id) {
  switch (id) {
    case ProductId::E1P:
    case ProductId::PE1:
      return {{1, 1, "U2^(k+1) (x) U1^(k+1)"},
              {1, 1, "U1^(k+1) (x) U2^(k+1)"},
              {1, 2, "U1^k (x) L2*U2^k"},
              {1, 3, "L2*U2^k (x) (L2, U1^(k+1))"},
              {2, 1, "U1^(k+1) (x) R2*U2^k"},
              {2, 2, "U1^(k+1) (x) U2^(k+1)"},
              {3, 2, "R2"},
              {4, 4, "U1^l*U2^k (x) U1^k*U2^l | (k,l) != (0,0)"}};
    case ProductId::E1N:
    case ProductId::NE1:
      return {{1, 1, "U2^(k+1) (x) U1^(k+1)"},
              {1, 1, "U1^(k+1) (x) U2^(k+1)"},
              {1, 2, "U1^(k+1) (x) L2*U2^k"},
              {2, 1, "U1^k (x) R2*U2^k"},
              {2, 2, "U1^(k+1) (x) U2^(k+1)"},
              {2, 3, "L2"},
              {3, 1, "R2*U2^k (x) (U1^(k+1), R2)"},
              {4, 4, "U1^l*U2^k (x) U1^k*U2^l | (k,l) != (0,0)"}};
    case ProductId::E2P:
    case ProductId::PE2:
      return {{1, 2, "L1"},
              {2, 2, "U2^(k+1) (x) U1^(k+1)"},
              {2, 3, "U2^(k+1) (x) L1*U1^k"},
              {3, 1, "R1*U1^k (x) (R1, U2^(k+1))"},
              {3, 2, "U2^k (x) R1*U1^k"},
              {3, 3, "U1^(k+1) (x) U2^(k+1)"},
              {3, 3, "U2^(k+1) (x) U1^(k+1)"},
              {4, 4, "U1^k*U2^l (x) U1^l*U2^k | (k,l) != (0,0)"}};
    case ProductId::E2N:
    case ProductId::NE2:
      return {{1, 3, "L1*U1^k (x) (U2^(k+1), L1)"},
              {2, 1, "R1"},
              {2, 2, "U2^(k+1) (x) U1^(k+1)"},
              {2, 3, "U2^k (x) L1*U1^k"},
              {3, 2, "U2^(k+1) (x) R1*U1^k"},
              {3, 3, "U1^(k+1) (x) U2^(k+1)"},
              {3, 3, "U2^(k+1) (x) U1^(k+1)"},
              {4, 4, "U1^k*U2^l (x) U1^l*U2^k | (k,l) != (0,0)"}};
  }
  throw std::domain_error("unknown product id");
}

}  // namespace detail

/// The displayed primary and secondary matrices of a product, as a schema
/// bimodule with pair-named generators.
inline DABimodule display(ProductId id) {
  DABimodule m{std::string(to_string(id))};
  const auto names = detail::role_names(id).names;
  const auto idem = detail::role_idempotents(id);
  for (std::size_t i = 0; i < names.size(); ++i) m.add_generator(names[i], idem[i].first, idem[i].second);
  for (const auto& t : detail::role_terms(id))
    m.add_term(names[static_cast<std::size_t>(t.row)], names[static_cast<std::size_t>(t.col)], t.schema);
  return m;
}

/// Generators of X ⊠ E and E ⊠ X paired by display
/// position.
inline std::map<std::string, std::string> positional_pairing(ProductId from) {
  const auto a = detail::role_names(from).names;
  const auto b = detail::role_names(partner(from)).names;
  std::map<std::string, std::string> out;
  for (std::size_t i = 0; i < a.size(); ++i) out[a[i]] = b[i];
  return out;
}

inline std::vector<TypoNote> display_typo_notes() {
  return {
      {"E1*P primary matrix, block (0; A, B, C)", "X_1 S_C in column A", "(X1,S_A)",
       "X1 has right idempotent A and only S_A has left idempotent A", {"product.E1*P"}},
      {"E1*P primary matrix, block (A, B, C; AB, AC, BC)", "X_3 X", "(X3,S_AC)",
       "the only generator of P with left idempotent AC is S_AC; the secondary matrix labels it X_3 S", {"product.E1*P"}},
      {"E1*N primary matrix, block (0; A, B, C)", "X_1 S_C in column C", "(X1,S_A) in column A",
       "X1 has right idempotent A, so the product sits in column A", {"product.E1*N"}},
      {"E1*N primary matrix, block (A, B, C; AB, AC, BC)", "X_3 X", "(X3,S_AC)",
       "as for E1*P", {"product.E1*N"}},
  };
}

/// Term-level difference between the computed product and the display,
/// both instantiated at one bound.
struct DisplayComparison {
  ProductId product = ProductId::E1P;
  int bound = 0;
  bool primary_matches = false;
  std::vector<std::string> primary_missing;  // in the display, not computed
  std::vector<std::string> primary_extra;    // computed, not in the display
  std::vector<std::pair<CellKey, ConcreteTerm>> missing;
  std::vector<std::pair<CellKey, ConcreteTerm>> extra;
  std::size_t terms = 0;

  bool passed() const { return primary_matches && missing.empty() && extra.empty(); }
};

inline DisplayComparison compare_with_display(ProductId id, const ConcreteDABimodule& computed, int bound) {
  DisplayComparison out;
  out.product = id;
  out.bound = bound;
  const auto shown = materialize(display(id), bound, false);

  std::set<std::tuple<std::string, Idempotent, Idempotent>> a, b;
  for (const auto& g : computed.generators) a.insert({g.name, g.left, g.right});
  for (const auto& g : shown.generators) b.insert({g.name, g.left, g.right});
  for (const auto& g : b)
    if (!a.count(g)) out.primary_missing.push_back(std::get<0>(g));
  for (const auto& g : a)
    if (!b.count(g)) out.primary_extra.push_back(std::get<0>(g));
  out.primary_matches = out.primary_missing.empty() && out.primary_extra.empty();

  std::set<CellKey> keys;
  for (const auto& [k, c] : computed.cells) keys.insert(k);
  for (const auto& [k, c] : shown.cells) keys.insert(k);
  for (const auto& key : keys) {
    const auto& have = computed.cell(key.row, key.col);
    const auto& want = shown.cell(key.row, key.col);
    out.terms += have.size();
    for (const auto& t : want)
      if (!have.count(t)) out.missing.push_back({key, t});
    for (const auto& t : have)
      if (!want.count(t)) out.extra.push_back({key, t});
  }
  return out;
}

inline ConcreteDABimodule compute_product(ProductId id, int bound) {
  auto [l, r] = factors(id);
  return secondary_product(build(l), build(r), bound);
}

inline DisplayComparison compare_with_display(ProductId id, int bound) {
  return compare_with_display(id, compute_product(id, bound), bound);
}

}  // namespace bhfk
