#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "bhfk/bimodule.hpp"

namespace bhfk {

using Json = nlohmann::ordered_json;

class JsonFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw JsonFormatError(std::string("missing field '") + key + "'");
  return j.at(key);
}

inline std::string require_string(const Json& j, const char* key) {
  const auto& v = require(j, key);
  if (!v.is_string()) throw JsonFormatError(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

inline Idempotent require_idempotent(const Json& j, const char* key) {
  const auto s = require_string(j, key);
  auto i = parse_idempotent(s);
  if (!i) throw JsonFormatError("unknown idempotent '" + s + "'");
  return *i;
}

inline Letter require_letter(const Json& j) {
  const auto s = require_string(j, "letter");
  auto l = parse_letter(s);
  if (!l) throw JsonFormatError("unknown letter '" + s + "'");
  return *l;
}

inline LinearExpr require_exponent(const Json& j, const char* key) {
  const auto& v = require(j, key);
  if (v.is_number_integer()) return LinearExpr::constant_of(v.get<int>());
  if (!v.is_string()) throw JsonFormatError(std::string("exponent '") + key + "' must be a string or integer");
  try {
    return parse_linear_expr(v.get<std::string>());
  } catch (const SchemaError& e) {
    throw JsonFormatError(std::string("exponent '") + key + "': " + e.what());
  }
}

}  // namespace detail

// Monomials.

inline Json to_json(const BasisMonomial& m) {
  return Json{{"left", to_string(m.left)},
              {"right", to_string(m.right)},
              {"letter", to_string(m.letter)},
              {"e1", m.e1},
              {"e2", m.e2}};
}

inline BasisMonomial monomial_from_json(const Json& j) {
  BasisMonomial m{detail::require_idempotent(j, "left"), detail::require_idempotent(j, "right"),
                  detail::require_letter(j), 0, 0};
  for (auto [key, slot] : {std::pair{"e1", &m.e1}, std::pair{"e2", &m.e2}}) {
    const auto& v = detail::require(j, key);
    if (!v.is_number_integer()) throw JsonFormatError(std::string("field '") + key + "' must be an integer");
    *slot = v.get<int>();
  }
  if (!m.is_valid()) throw JsonFormatError("not a basis monomial: " + to_string(m));
  return m;
}

// Schema bimodules.

inline Json to_json(const MonomialPattern& p) {
  return Json{{"letter", to_string(p.letter)}, {"e1", to_string(p.e1)}, {"e2", to_string(p.e2)}};
}

inline MonomialPattern pattern_from_json(const Json& j) {
  return {detail::require_letter(j), detail::require_exponent(j, "e1"), detail::require_exponent(j, "e2")};
}

inline Json to_json(const TermSchema& s) {
  Json inputs = Json::array();
  for (const auto& p : s.inputs) inputs.push_back(to_json(p));
  Json constraints = Json::array();
  for (const auto& c : s.constraints) constraints.push_back(to_string(c));
  return Json{{"output", to_json(s.output)}, {"inputs", inputs}, {"indices", s.indices}, {"constraints", constraints}};
}

inline TermSchema schema_from_json(const Json& j) {
  TermSchema s;
  s.output = pattern_from_json(detail::require(j, "output"));
  if (j.contains("inputs"))
    for (const auto& p : j.at("inputs")) s.inputs.push_back(pattern_from_json(p));
  if (j.contains("indices"))
    for (const auto& v : j.at("indices")) s.indices.push_back(v.get<std::string>());
  if (j.contains("constraints"))
    for (const auto& c : j.at("constraints"))
      for (auto& parsed : parse_constraint(c.get<std::string>())) s.constraints.push_back(std::move(parsed));
  normalize_indices(s);
  return s;
}

inline Json generator_json(const DAGenerator& g) {
  Json j{{"name", g.name}, {"left", to_string(g.left)}, {"right", to_string(g.right)}};
  if (g.bidegree) j["bidegree"] = {g.bidegree->intrinsic, g.bidegree->homological};
  return j;
}

inline DAGenerator generator_from_json(const Json& j) {
  DAGenerator g{detail::require_string(j, "name"), detail::require_idempotent(j, "left"),
                detail::require_idempotent(j, "right"), std::nullopt};
  if (j.contains("bidegree")) {
    const auto& d = j.at("bidegree");
    if (!d.is_array() || d.size() != 2) throw JsonFormatError("bidegree must be [intrinsic, homological]");
    g.bidegree = Bidegree{d[0].get<int>(), d[1].get<int>()};
  }
  return g;
}

inline Json to_json(const DABimodule& m) {
  Json gens = Json::array();
  for (const auto& g : m.generators()) gens.push_back(generator_json(g));
  Json cells = Json::array();
  for (const auto& [key, schemas] : m.cells()) {
    if (schemas.empty()) continue;
    Json js = Json::array();
    for (const auto& s : schemas) js.push_back(to_json(s));
    cells.push_back(Json{{"row", key.row}, {"col", key.col}, {"schemas", js}});
  }
  return Json{{"name", m.name},
              {"left_algebra", m.left_algebra},
              {"right_algebra", m.right_algebra},
              {"strictly_unital", m.strictly_unital},
              {"generators", gens},
              {"cells", cells}};
}

inline DABimodule bimodule_from_json(const Json& j) {
  DABimodule m(j.value("name", std::string("M")));
  m.left_algebra = j.value("left_algebra", std::string("B(2)"));
  m.right_algebra = j.value("right_algebra", std::string("B(2)"));
  m.strictly_unital = j.value("strictly_unital", true);
  for (const auto& g : detail::require(j, "generators")) m.add_generator(generator_from_json(g));
  for (const auto& c : detail::require(j, "cells")) {
    const auto row = detail::require_string(c, "row"), col = detail::require_string(c, "col");
    if (!m.has_generator(row) || !m.has_generator(col))
      throw JsonFormatError("cell (" + row + ", " + col + ") names an unknown generator");
    for (const auto& s : detail::require(c, "schemas")) m.add_term(row, col, schema_from_json(s));
  }
  return m;
}

// Concrete bimodules.

inline Json to_json(const ConcreteTerm& t) {
  Json inputs = Json::array();
  for (const auto& b : t.inputs) inputs.push_back(to_json(b));
  return Json{{"output", to_json(t.output)}, {"inputs", inputs}};
}

inline ConcreteTerm term_from_json(const Json& j) {
  ConcreteTerm t{monomial_from_json(detail::require(j, "output")), {}};
  if (j.contains("inputs"))
    for (const auto& b : j.at("inputs")) t.inputs.push_back(monomial_from_json(b));
  return t;
}

inline Json to_json(const ConcreteDABimodule& m) {
  Json gens = Json::array();
  for (const auto& g : m.generators) gens.push_back(generator_json(g));
  Json cells = Json::array();
  for (const auto& [key, terms] : m.cells) {
    Json jt = Json::array();
    for (const auto& t : terms) jt.push_back(to_json(t));
    cells.push_back(Json{{"row", key.row}, {"col", key.col}, {"terms", jt}});
  }
  return Json{{"name", m.name}, {"bound", m.bound}, {"generators", gens}, {"cells", cells}};
}

inline ConcreteDABimodule concrete_from_json(const Json& j) {
  ConcreteDABimodule m;
  m.name = j.value("name", std::string("M"));
  m.bound = detail::require(j, "bound").get<int>();
  for (const auto& g : detail::require(j, "generators")) m.generators.push_back(generator_from_json(g));
  for (const auto& c : detail::require(j, "cells")) {
    const auto row = detail::require_string(c, "row"), col = detail::require_string(c, "col");
    if (!m.has_generator(row) || !m.has_generator(col))
      throw JsonFormatError("cell (" + row + ", " + col + ") names an unknown generator");
    for (const auto& t : detail::require(c, "terms")) m.toggle({row, col}, term_from_json(t));
  }
  return m;
}

/// Either kind of bimodule file; schema files have "schemas" in their cells.
inline bool is_schema_json(const Json& j) {
  if (!j.contains("cells")) return true;
  for (const auto& c : j.at("cells"))
    if (c.contains("terms")) return false;
  return true;
}

}  // namespace bhfk
