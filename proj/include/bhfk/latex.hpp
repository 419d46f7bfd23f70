#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "bhfk/bimodule.hpp"
#include "bhfk/fit.hpp"

namespace bhfk {

namespace detail {

inline std::string latex_power(std::string_view var, const LinearExpr& e) {
  if (e.is_constant() && e.constant == 0) return "";
  if (e.is_constant() && e.constant == 1) return std::string(var);
  const std::string body = to_string(e);
  return std::string(var) + (body.size() == 1 ? "^" + body : "^{" + body + "}");
}

inline std::string latex_letter(Letter l) {
  switch (l) {
    case Letter::Id: return "";
    case Letter::R1: return "R_1";
    case Letter::L1: return "L_1";
    case Letter::R2: return "R_2";
    case Letter::L2: return "L_2";
    case Letter::R2R1: return "R_2R_1";
    case Letter::L1L2: return "L_1L_2";
  }
  return "";
}

inline std::string latex_constraint(const Constraint& c) {
  std::string s = to_string(c);
  for (auto [from, to] : {std::pair{std::string(">="), std::string("\\geq")}, {std::string("!="), std::string("\\neq")}}) {
    for (auto pos = s.find(from); pos != std::string::npos; pos = s.find(from, pos + to.size()))
      s.replace(pos, from.size(), to);
  }
  return s;
}

}  // namespace detail

inline std::string to_latex(const MonomialPattern& p) {
  std::string out = detail::latex_letter(p.letter) + detail::latex_power("U_1", p.e1) + detail::latex_power("U_2", p.e2);
  return out.empty() ? "1" : out;
}

inline std::string to_latex(const TermSchema& s) {
  std::string out = to_latex(s.output);
  if (s.inputs.size() == 1) out += " \\otimes " + to_latex(s.inputs[0]);
  if (s.inputs.size() > 1) {
    out += " \\otimes (";
    for (std::size_t i = 0; i < s.inputs.size(); ++i) out += (i ? ", " : "") + to_latex(s.inputs[i]);
    out += ")";
  }
  if (!s.constraints.empty()) {
    out += " \\quad (";
    for (std::size_t i = 0; i < s.constraints.size(); ++i) out += (i ? ",\\ " : "") + detail::latex_constraint(s.constraints[i]);
    out += ")";
  }
  return out;
}

/// "N_AB" -> "N_{AB}", "X1" -> "X_{1}", "(X2,E_AC)" -> "X_{2}E_{AC}".
inline std::string latex_generator(const std::string& name) {
  std::string out;
  std::string part;
  auto flush = [&] {
    if (part.empty()) return;
    std::size_t cut = part.find('_');
    if (cut == std::string::npos) {
      cut = part.size();
      while (cut > 0 && std::isdigit(static_cast<unsigned char>(part[cut - 1]))) --cut;
      if (cut == part.size() || cut == 0) {
        out += part;
      } else {
        out += part.substr(0, cut) + "_{" + part.substr(cut) + "}";
      }
    } else {
      out += part.substr(0, cut) + "_{" + part.substr(cut + 1) + "}";
    }
    part.clear();
  };
  for (char c : name) {
    if (c == '(' || c == ')' || c == ',') {
      flush();
      continue;
    }
    part += c;
  }
  flush();
  return out;
}

/// Primary matrix (rows: left idempotents, columns: right idempotents) and
/// secondary matrix (rows: targets, columns: sources) as a standalone
/// amsmath document. Families are refitted from the instances.
inline std::string to_latex(const ConcreteDABimodule& m) {
  const DABimodule fitted = fit_bimodule(m);
  std::string doc =
      "\\documentclass{article}\n"
      "\\usepackage{amsmath}\n"
      "\\usepackage[landscape,margin=1cm]{geometry}\n"
      "\\begin{document}\n";
  doc += "\\section*{" + m.name + ", terms of output degree at most " + std::to_string(m.bound) + "}\n";

  std::vector<Idempotent> lefts, rights;
  for (const auto& g : m.generators) {
    if (std::find(lefts.begin(), lefts.end(), g.left) == lefts.end()) lefts.push_back(g.left);
    if (std::find(rights.begin(), rights.end(), g.right) == rights.end()) rights.push_back(g.right);
  }
  std::sort(lefts.begin(), lefts.end());
  std::sort(rights.begin(), rights.end());
  auto idem = [](Idempotent i) { return i == Idempotent::Empty ? std::string("\\varnothing") : std::string(to_string(i)); };

  doc += "\\[\n\\begin{array}{c|" + std::string(rights.size(), 'c') + "}\n";
  for (auto r : rights) doc += " & " + idem(r);
  doc += " \\\\\n\\hline\n";
  for (auto l : lefts) {
    doc += idem(l);
    for (auto r : rights) {
      std::string entry;
      for (const auto& g : m.generators)
        if (g.left == l && g.right == r) entry += (entry.empty() ? "" : ", ") + latex_generator(g.name);
      doc += " & " + (entry.empty() ? std::string("\\cdot") : entry);
    }
    doc += " \\\\\n";
  }
  doc += "\\end{array}\n\\]\n";

  doc += "{\\small\n\\[\n\\begin{array}{c|" + std::string(m.generators.size(), 'c') + "}\n";
  for (const auto& g : m.generators) doc += " & " + latex_generator(g.name);
  doc += " \\\\\n\\hline\n";
  for (const auto& row : m.generators) {
    doc += latex_generator(row.name);
    for (const auto& col : m.generators) {
      const auto& cell = fitted.cell(row.name, col.name);
      std::string entry;
      for (const auto& s : cell) entry += (entry.empty() ? "" : " \\\\ + ") + to_latex(s);
      if (cell.size() > 1) entry = "\\begin{array}{c}" + entry + "\\end{array}";
      doc += " & " + (entry.empty() ? std::string("0") : entry);
    }
    doc += " \\\\\n";
  }
  doc += "\\end{array}\n\\]\n}\n\\end{document}\n";
  return doc;
}

}  // namespace bhfk
