#pragma once

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bhfk/monomial.hpp"

namespace bhfk {

/// Raised for schema text or structure that cannot describe a valid family
/// of terms.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Assignment = std::map<std::string, int>;

/// c0 + sum c_v * v over index variables.
struct LinearExpr {
  int constant = 0;
  std::map<std::string, int> coeffs;

  static LinearExpr constant_of(int c) { return {c, {}}; }
  static LinearExpr variable(const std::string& v) { return {0, {{v, 1}}}; }

  bool is_constant() const { return coeffs.empty(); }
  int coefficient(const std::string& v) const {
    auto it = coeffs.find(v);
    return it == coeffs.end() ? 0 : it->second;
  }

  int evaluate(const Assignment& a) const {
    int value = constant;
    for (const auto& [v, c] : coeffs) {
      auto it = a.find(v);
      if (it == a.end()) throw SchemaError("unbound index '" + v + "'");
      value += c * it->second;
    }
    return value;
  }

  LinearExpr renamed(const std::map<std::string, std::string>& names) const {
    LinearExpr out{constant, {}};
    for (const auto& [v, c] : coeffs) out.coeffs[names.at(v)] += c;
    return out;
  }

  LinearExpr& operator+=(const LinearExpr& o) {
    constant += o.constant;
    for (const auto& [v, c] : o.coeffs) {
      if ((coeffs[v] += c) == 0) coeffs.erase(v);
    }
    return *this;
  }
  LinearExpr operator-() const {
    LinearExpr out{-constant, {}};
    for (const auto& [v, c] : coeffs) out.coeffs[v] = -c;
    return out;
  }
  friend LinearExpr operator+(LinearExpr a, const LinearExpr& b) { return a += b; }
  friend LinearExpr operator-(LinearExpr a, const LinearExpr& b) { return a += -b; }

  friend bool operator==(const LinearExpr&, const LinearExpr&) = default;
  friend auto operator<=>(const LinearExpr&, const LinearExpr&) = default;
};

inline std::string to_string(const LinearExpr& e) {
  std::string out;
  for (const auto& [v, c] : e.coeffs) {
    if (c < 0)
      out += "-";
    else if (!out.empty())
      out += "+";
    if (std::abs(c) != 1) out += std::to_string(std::abs(c));
    out += v;
  }
  if (e.constant != 0 || out.empty()) {
    if (e.constant >= 0 && !out.empty()) out += "+";
    out += std::to_string(e.constant);
  }
  return out;
}

namespace detail {

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_space();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool consume(std::string_view token) {
    skip_space();
    if (s_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }
  void expect(std::string_view token) {
    if (!consume(token)) fail("expected '" + std::string(token) + "'");
  }
  std::optional<int> integer() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) return std::nullopt;
    return std::stoi(std::string(s_.substr(start, pos_ - start)));
  }
  std::optional<std::string> identifier() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' ||
                                (pos_ > start && std::isdigit(static_cast<unsigned char>(s_[pos_])))))
      ++pos_;
    if (start == pos_) return std::nullopt;
    return std::string(s_.substr(start, pos_ - start));
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw SchemaError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }
  std::size_t position() const { return pos_; }
  void reset(std::size_t p) { pos_ = p; }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

// term := [int] ident | int ; expr := ['-'] term (('+'|'-') term)*
inline LinearExpr parse_linear(Lexer& lx) {
  LinearExpr out;
  bool first = true;
  while (true) {
    int sign = 1;
    if (lx.consume("-"))
      sign = -1;
    else if (!first && !lx.consume("+"))
      break;
    auto n = lx.integer();
    auto v = lx.identifier();
    if (!n && !v) lx.fail("expected a number or index");
    if (v)
      out += LinearExpr{0, {{*v, sign * n.value_or(1)}}};
    else
      out += LinearExpr::constant_of(sign * *n);
    first = false;
  }
  return out;
}

}  // namespace detail

inline LinearExpr parse_linear_expr(std::string_view s) {
  detail::Lexer lx(s);
  auto e = detail::parse_linear(lx);
  if (!lx.done()) lx.fail("trailing input");
  return e;
}

/// `expr >= 0` or `expr == 0`.
struct LinearConstraint {
  LinearExpr expr;
  bool equality = false;

  bool holds(const Assignment& a) const {
    const int v = expr.evaluate(a);
    return equality ? v == 0 : v >= 0;
  }
  friend bool operator==(const LinearConstraint&, const LinearConstraint&) = default;
};

/// The index tuple must differ from the given values, e.g. (k,l) != (0,0).
struct ExcludedTuple {
  std::vector<std::string> indices;
  std::vector<int> values;

  bool holds(const Assignment& a) const {
    for (std::size_t i = 0; i < indices.size(); ++i)
      if (a.at(indices[i]) != values[i]) return true;
    return false;
  }
  friend bool operator==(const ExcludedTuple&, const ExcludedTuple&) = default;
};

using Constraint = std::variant<LinearConstraint, ExcludedTuple>;

inline bool holds(const Constraint& c, const Assignment& a) {
  return std::visit([&](const auto& x) { return x.holds(a); }, c);
}

inline std::string to_string(const Constraint& c) {
  if (const auto* ex = std::get_if<ExcludedTuple>(&c)) {
    std::string lhs = "(", rhs = "(";
    for (std::size_t i = 0; i < ex->indices.size(); ++i) {
      if (i) lhs += ",", rhs += ",";
      lhs += ex->indices[i];
      rhs += std::to_string(ex->values[i]);
    }
    return lhs + ") != " + rhs + ")";
  }
  const auto& lc = std::get<LinearConstraint>(c);
  // Render as "positive part >= negative part" so "t-n-1 >= 0" reads "t >= n+1".
  LinearExpr pos, neg;
  for (const auto& [v, k] : lc.expr.coeffs) (k > 0 ? pos : neg) += LinearExpr{0, {{v, k > 0 ? k : -k}}};
  (lc.expr.constant > 0 ? pos : neg) += LinearExpr::constant_of(std::abs(lc.expr.constant));
  return to_string(pos) + (lc.equality ? " = " : " >= ") + to_string(neg);
}

/// Parses "0 <= n < t", "1 <= t <= n", "k = l" or "(k,l) != (0,0)".
inline std::vector<Constraint> parse_constraint(std::string_view s) {
  detail::Lexer lx(s);
  std::vector<Constraint> out;
  if (lx.peek() == '(') {
    lx.expect("(");
    ExcludedTuple ex;
    do {
      auto v = lx.identifier();
      if (!v) lx.fail("expected index");
      ex.indices.push_back(*v);
    } while (lx.consume(","));
    lx.expect(")");
    if (!lx.consume("!=") && !lx.consume("≠")) lx.fail("expected '!='");
    lx.expect("(");
    do {
      auto n = lx.integer();
      if (!n) lx.fail("expected integer");
      ex.values.push_back(*n);
    } while (lx.consume(","));
    lx.expect(")");
    if (ex.values.size() != ex.indices.size()) lx.fail("tuple arity mismatch");
    if (!lx.done()) lx.fail("trailing input");
    out.emplace_back(std::move(ex));
    return out;
  }
  LinearExpr lhs = detail::parse_linear(lx);
  while (!lx.done()) {
    enum { Lt, Le, Gt, Ge, Eq } op;
    if (lx.consume("<=") || lx.consume("≤"))
      op = Le;
    else if (lx.consume(">=") || lx.consume("≥"))
      op = Ge;
    else if (lx.consume("<"))
      op = Lt;
    else if (lx.consume(">"))
      op = Gt;
    else if (lx.consume("==") || lx.consume("="))
      op = Eq;
    else
      lx.fail("expected comparison");
    LinearExpr rhs = detail::parse_linear(lx);
    switch (op) {
      case Lt: out.emplace_back(LinearConstraint{rhs - lhs - LinearExpr::constant_of(1), false}); break;
      case Le: out.emplace_back(LinearConstraint{rhs - lhs, false}); break;
      case Gt: out.emplace_back(LinearConstraint{lhs - rhs - LinearExpr::constant_of(1), false}); break;
      case Ge: out.emplace_back(LinearConstraint{lhs - rhs, false}); break;
      case Eq: out.emplace_back(LinearConstraint{lhs - rhs, true}); break;
    }
    lhs = rhs;
  }
  if (out.empty()) lx.fail("expected a comparison");
  return out;
}

/// letter * U1^e1 * U2^e2 with exponents affine in the schema's indices.
/// The idempotents come from the generators the term connects.
struct MonomialPattern {
  Letter letter = Letter::Id;
  LinearExpr e1;
  LinearExpr e2;

  friend bool operator==(const MonomialPattern&, const MonomialPattern&) = default;
};

namespace detail {
inline std::string render_power(std::string_view var, const LinearExpr& e) {
  if (e.is_constant() && e.constant == 1) return std::string(var);
  std::string body = to_string(e);
  const bool simple = e.is_constant() || (e.constant == 0 && e.coeffs.size() == 1 && e.coeffs.begin()->second == 1);
  return std::string(var) + "^" + (simple ? body : "(" + body + ")");
}
}  // namespace detail

/// "R2R1*U1^k*U2^(l+1)"; "1" for the bare identity.
inline std::string to_string(const MonomialPattern& p) {
  std::string out;
  if (p.letter != Letter::Id) out = std::string(to_string(p.letter));
  for (auto [var, e] : {std::pair{"U1", &p.e1}, std::pair{"U2", &p.e2}}) {
    if (e->is_constant() && e->constant == 0) continue;
    if (!out.empty()) out += "*";
    out += detail::render_power(var, *e);
  }
  return out.empty() ? "1" : out;
}

namespace detail {
inline MonomialPattern parse_pattern(Lexer& lx) {
  MonomialPattern p;
  bool seen_letter = false, seen_u1 = false, seen_u2 = false;
  do {
    const std::size_t mark = lx.position();
    if (lx.consume("1") || lx.consume("Id")) {
      if (seen_letter) lx.fail("duplicate letter");
      seen_letter = true;
      continue;
    }
    auto id = lx.identifier();
    if (!id) lx.fail("expected a monomial factor");
    if (*id == "U1" || *id == "U2") {
      bool& seen = *id == "U1" ? seen_u1 : seen_u2;
      if (seen) lx.fail("repeated " + *id);
      seen = true;
      LinearExpr e = LinearExpr::constant_of(1);
      if (lx.consume("^")) {
        if (lx.consume("(")) {
          e = parse_linear(lx);
          lx.expect(")");
        } else if (lx.consume("{")) {
          e = parse_linear(lx);
          lx.expect("}");
        } else {
          auto n = lx.integer();
          if (n) {
            e = LinearExpr::constant_of(*n);
          } else {
            auto v = lx.identifier();
            if (!v) lx.fail("expected exponent");
            e = LinearExpr::variable(*v);
          }
        }
      }
      (*id == "U1" ? p.e1 : p.e2) = e;
      continue;
    }
    auto letter = parse_letter(*id);
    if (!letter || seen_letter) {
      lx.reset(mark);
      lx.fail("unexpected factor '" + *id + "'");
    }
    seen_letter = true;
    p.letter = *letter;
  } while (lx.consume("*"));
  return p;
}
}  // namespace detail

inline MonomialPattern parse_pattern(std::string_view s) {
  detail::Lexer lx(s);
  auto p = detail::parse_pattern(lx);
  if (!lx.done()) lx.fail("trailing input");
  return p;
}

/// One parameterized family `output (x) (inputs...)` of secondary-matrix
/// terms. Indices range over the nonnegative integers subject to the
/// constraints.
struct TermSchema {
  MonomialPattern output;
  std::vector<MonomialPattern> inputs;
  std::vector<std::string> indices;
  std::vector<Constraint> constraints;

  bool admissible(const Assignment& a) const {
    for (const auto& c : constraints)
      if (!holds(c, a)) return false;
    return true;
  }
};

inline bool operator==(const TermSchema& a, const TermSchema& b) {
  return a.output == b.output && a.inputs == b.inputs && a.indices == b.indices && a.constraints == b.constraints;
}

namespace detail {
inline void collect_vars(const LinearExpr& e, std::vector<std::string>& out) {
  for (const auto& [v, c] : e.coeffs)
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
}
}  // namespace detail

/// Index variables in order of first appearance (output, then inputs).
inline std::vector<std::string> used_indices(const TermSchema& s) {
  std::vector<std::string> out;
  detail::collect_vars(s.output.e1, out);
  detail::collect_vars(s.output.e2, out);
  for (const auto& in : s.inputs) {
    detail::collect_vars(in.e1, out);
    detail::collect_vars(in.e2, out);
  }
  return out;
}

/// Checks that every variable is declared, and fills `indices` when empty.
inline void normalize_indices(TermSchema& s) {
  auto used = used_indices(s);
  if (s.indices.empty()) s.indices = used;
  auto declared = [&](const std::string& v) {
    return std::find(s.indices.begin(), s.indices.end(), v) != s.indices.end();
  };
  for (const auto& v : used)
    if (!declared(v)) throw SchemaError("index '" + v + "' is not declared");
  for (const auto& c : s.constraints) {
    if (const auto* lc = std::get_if<LinearConstraint>(&c)) {
      for (const auto& [v, k] : lc->expr.coeffs)
        if (!declared(v)) throw SchemaError("constraint uses undeclared index '" + v + "'");
    } else {
      for (const auto& v : std::get<ExcludedTuple>(c).indices)
        if (!declared(v)) throw SchemaError("constraint uses undeclared index '" + v + "'");
    }
  }
}

/// Builds a schema from pattern strings and constraint strings.
inline TermSchema make_schema(std::string_view output, std::vector<std::string_view> inputs = {},
                              std::vector<std::string_view> constraints = {}) {
  TermSchema s;
  s.output = parse_pattern(output);
  for (auto in : inputs) s.inputs.push_back(parse_pattern(in));
  for (auto c : constraints)
    for (auto& parsed : parse_constraint(c)) s.constraints.push_back(std::move(parsed));
  normalize_indices(s);
  return s;
}

/// Parses "OUTPUT", "OUTPUT (x) IN" or "OUTPUT (x) (IN1, IN2) | c1; c2".
/// The tensor sign may also be written as U+2297.
inline TermSchema parse_schema(std::string_view text) {
  std::string_view body = text, cons;
  if (auto bar = text.find('|'); bar != std::string_view::npos) {
    body = text.substr(0, bar);
    cons = text.substr(bar + 1);
  }
  TermSchema s;
  detail::Lexer lx(body);
  s.output = detail::parse_pattern(lx);
  if (lx.consume("(x)") || lx.consume("⊗")) {
    if (lx.consume("(")) {
      do s.inputs.push_back(detail::parse_pattern(lx));
      while (lx.consume(","));
      lx.expect(")");
    } else {
      s.inputs.push_back(detail::parse_pattern(lx));
    }
  }
  if (!lx.done()) lx.fail("trailing input");
  while (!cons.empty()) {
    auto semi = cons.find(';');
    auto piece = cons.substr(0, semi);
    if (piece.find_first_not_of(" \t") != std::string_view::npos)
      for (auto& c : parse_constraint(piece)) s.constraints.push_back(std::move(c));
    if (semi == std::string_view::npos) break;
    cons = cons.substr(semi + 1);
  }
  normalize_indices(s);
  return s;
}

inline std::string to_string(const TermSchema& s) {
  std::string out = to_string(s.output);
  if (!s.inputs.empty()) {
    out += " ⊗ (";
    for (std::size_t i = 0; i < s.inputs.size(); ++i) out += (i ? ", " : "") + to_string(s.inputs[i]);
    out += ")";
  }
  if (!s.constraints.empty()) {
    out += " |";
    for (std::size_t i = 0; i < s.constraints.size(); ++i) out += (i ? "; " : " ") + to_string(s.constraints[i]);
  }
  return out;
}

/// Calls `f` for every admissible assignment with each index <= max_value.
inline void for_each_assignment(const TermSchema& s, int max_value, const std::function<void(const Assignment&)>& f) {
  Assignment a;
  for (const auto& v : s.indices) a[v] = 0;
  if (max_value < 0) return;
  while (true) {
    if (s.admissible(a)) f(a);
    std::size_t i = 0;
    for (; i < s.indices.size(); ++i) {
      int& x = a[s.indices[i]];
      if (x < max_value) {
        ++x;
        break;
      }
      x = 0;
    }
    if (i == s.indices.size()) return;
  }
}

namespace detail {
inline LinearConstraint canonical_linear(LinearConstraint c) {
  if (c.equality && !c.expr.coeffs.empty() && c.expr.coeffs.begin()->second < 0) c.expr = -c.expr;
  return c;
}
inline bool trivially_true(const Constraint& c) {
  const auto* lc = std::get_if<LinearConstraint>(&c);
  if (!lc || lc->equality || lc->expr.constant < 0) return false;
  return std::all_of(lc->expr.coeffs.begin(), lc->expr.coeffs.end(), [](const auto& kv) { return kv.second >= 0; });
}
}  // namespace detail

/// Rendering of a schema that is invariant under renaming of its indices
/// and under reordering or restating of its constraints. Two schemas
/// describe the same family exactly when their keys agree.
inline std::string canonical_key(const TermSchema& s) {
  std::vector<std::string> order = s.indices;
  std::sort(order.begin(), order.end());
  std::optional<std::string> best;
  do {
    std::map<std::string, std::string> names;
    for (std::size_t i = 0; i < order.size(); ++i) names[order[i]] = "i" + std::to_string(i);
    auto rename = [&](const MonomialPattern& p) {
      return MonomialPattern{p.letter, p.e1.renamed(names), p.e2.renamed(names)};
    };
    std::string key = to_string(rename(s.output)) + " <-";
    for (const auto& in : s.inputs) key += " " + to_string(rename(in));
    std::set<std::string> cons;
    for (const auto& c : s.constraints) {
      if (detail::trivially_true(c)) continue;
      if (const auto* lc = std::get_if<LinearConstraint>(&c)) {
        cons.insert(to_string(Constraint{detail::canonical_linear({lc->expr.renamed(names), lc->equality})}));
      } else {
        const auto& ex = std::get<ExcludedTuple>(c);
        std::vector<std::pair<std::string, int>> pairs;
        for (std::size_t i = 0; i < ex.indices.size(); ++i) pairs.emplace_back(names.at(ex.indices[i]), ex.values[i]);
        std::sort(pairs.begin(), pairs.end());
        ExcludedTuple renamed;
        for (auto& [v, x] : pairs) renamed.indices.push_back(v), renamed.values.push_back(x);
        cons.insert(to_string(Constraint{renamed}));
      }
    }
    for (const auto& c : cons) key += " | " + c;
    if (!best || key < *best) best = key;
  } while (std::next_permutation(order.begin(), order.end()));
  return *best;
}

}  // namespace bhfk
