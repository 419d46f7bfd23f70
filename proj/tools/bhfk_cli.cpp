// Command-line front end. Every verb calls one library operation and prints
// its rendering from bhfk/render.hpp or bhfk/reproduce.hpp.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "bhfk/bhfk.hpp"

namespace {

using namespace bhfk;

// Usage and domain errors both exit with 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError("'" + path + "' is not valid JSON: " + e.what());
  }
}

DABimodule load_module(const std::string& arg, bool as_printed) {
  if (auto id = parse_corpus_id(arg)) {
    if (*id == CorpusId::P) return build_P(as_printed);
    if (*id == CorpusId::N) return build_N(as_printed);
    return build(*id);
  }
  if (arg.size() > 5 && arg.ends_with(".json")) {
    auto j = read_json_file(arg);
    if (!is_schema_json(j)) throw UsageError("'" + arg + "' holds a concrete bimodule; a schema bimodule is needed");
    return bimodule_from_json(j);
  }
  throw UsageError("unknown bimodule '" + arg + "' (expected P, N, E1, E2 or a .json file)");
}

ConcreteDABimodule load_concrete(const std::string& arg, int bound) {
  if (auto id = parse_product_id(arg)) return compute_product(*id, bound);
  if (arg.size() > 5 && arg.ends_with(".json")) {
    auto j = read_json_file(arg);
    if (is_schema_json(j)) return materialize(bimodule_from_json(j), bound, false);
    return concrete_from_json(j);
  }
  if (parse_corpus_id(arg)) return materialize(build(*parse_corpus_id(arg)), bound, false);
  throw UsageError("unknown bimodule '" + arg + "' (expected a product such as E1*P, a corpus id or a .json file)");
}

std::pair<int, int> parse_summand(const std::string& s) {
  // "2,1" names B(2,1); a bare "1" is accepted as well.
  auto comma = s.find(',');
  try {
    if (comma == std::string::npos) return {2, std::stoi(s)};
    return {std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
  } catch (const std::exception&) {
    throw UsageError("bad --summand '" + s + "'");
  }
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw UsageError("cannot write '" + out_path + "'");
  out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bordered DA bimodules over B(2): relation checks, box tensor products and isomorphisms"};
  app.require_subcommand(1);

  int bound = 10;
  std::string format = "text";
  std::string out_path;
  bool strict_typos = false;
  bool as_printed = false;
  bool timings = false;
  auto add_common = [&](CLI::App* sub, bool with_bound) {
    if (with_bound) sub->add_option("--bound", bound, "intrinsic-degree truncation")->check(CLI::NonNegativeNumber);
    sub->add_option("--emit", format, "output format")->check(CLI::IsMember({"text", "json", "latex"}));
    sub->add_option("--out", out_path, "write the output to a file");
  };

  auto* basis = app.add_subcommand("basis", "list basis monomials of one summand B(2,k)");
  std::string summand = "2,1";
  int max_exp = 2;
  basis->add_option("--summand", summand, "summand, e.g. 2,1 for B(2,1)");
  basis->add_option("--max-exp", max_exp, "largest U exponent")->check(CLI::NonNegativeNumber);
  add_common(basis, false);

  std::string module_a, module_b;
  auto* check = app.add_subcommand("check", "check the DA bimodule relations degree by degree");
  check->add_option("module", module_a, "P, N, E1, E2 or a schema .json file")->required();
  check->add_flag("--as-printed", as_printed, "P and N without the U1U2 completion");
  add_common(check, true);

  auto* exp = app.add_subcommand("export", "write a bimodule in the JSON bimodule format");
  exp->add_option("module", module_a, "P, N, E1, E2 or a schema .json file")->required();
  exp->add_flag("--as-printed", as_printed, "P and N without the U1U2 completion");
  add_common(exp, false);

  auto* tensor = app.add_subcommand("tensor", "box tensor product X * Y");
  tensor->add_option("left", module_a, "left factor")->required();
  tensor->add_option("right", module_b, "right factor")->required();
  tensor->add_flag("--strict-typos", strict_typos, "fail when the printed display needed typo corrections");
  add_common(tensor, true);

  auto* iso = app.add_subcommand("iso", "isomorphism X*E -> E*X, or between two concrete bimodules");
  iso->add_option("first", module_a, "P or N, a product such as E1*P, or a .json file")->required();
  iso->add_option("second", module_b, "E1 or E2, a product, or a .json file")->required();
  add_common(iso, true);

  auto* symmetry = app.add_subcommand("symmetry", "compare symmetry_transform(P) with N");
  add_common(symmetry, false);

  auto* grade = app.add_subcommand("grade", "infer generator bidegrees");
  grade->add_option("module", module_a, "P, N, E1, E2 or a schema .json file")->required();
  grade->add_flag("--as-printed", as_printed, "P and N without the U1U2 completion");
  add_common(grade, true);

  auto* reproduce = app.add_subcommand("reproduce", "run every check and write a report");
  reproduce->add_flag("--strict-typos", strict_typos, "fail when any printed entry needed a correction");
  reproduce->add_flag("--timings", timings, "include per-check timings (output is then not reproducible)");
  add_common(reproduce, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const bool json = format == "json";
    if (format == "latex" && !tensor->parsed()) throw UsageError("--emit latex is only available for tensor");

    if (basis->parsed()) {
      auto [n, k] = parse_summand(summand);
      if (n != 2) throw UsageError("only B(2,k) is implemented");
      const auto b = enumerate_basis(k, max_exp);
      emit(json ? dump(basis_json(b)) : to_text(b), out_path);
      return 0;
    }
    if (check->parsed()) {
      const auto r = check_da_relations(load_module(module_a, as_printed), bound);
      emit(json ? dump(to_json(r)) : to_text(r), out_path);
      return r.passed() ? 0 : 1;
    }
    if (exp->parsed()) {
      const auto m = load_module(module_a, as_printed);
      emit(dump(to_json(m)), out_path);
      return 0;
    }
    if (tensor->parsed()) {
      const auto x = load_module(module_a, false);
      const auto y = load_module(module_b, false);
      const auto product = secondary_product(x, y, bound);
      if (format == "latex")
        emit(to_latex(product), out_path);
      else
        emit(json ? dump(to_json(product)) : to_text(product), out_path);

      // Displayed products are compared against the printed matrices.
      auto id = parse_product_id(module_a + "*" + module_b);
      if (!id || !parse_corpus_id(module_a) || !parse_corpus_id(module_b)) return 0;
      const auto cmp = compare_with_display(*id, product, bound);
      std::cerr << to_text(cmp);
      bool typos = false;
      for (const auto& n : display_typo_notes())
        for (const auto& a : n.affects)
          if (a == "product." + std::string(to_string(*id))) {
            std::cerr << (strict_typos ? "error: " : "warning: ") << "printed display corrected at " << n.location
                      << ": " << n.printed << " -> " << n.used << "\n";
            typos = true;
          }
      if (!cmp.passed()) return 1;
      return strict_typos && typos ? 1 : 0;
    }
    if (iso->parsed()) {
      auto x = parse_corpus_id(module_a), e = parse_corpus_id(module_b);
      if (x && e) {
        const auto r = verify_one_morphism(*x, *e, bound);
        emit(json ? dump(to_json(r)) : to_text(r), out_path);
        return r.verified() ? 0 : 1;
      }
      const auto a = load_concrete(module_a, bound);
      const auto b = load_concrete(module_b, bound);
      const auto f = find_isomorphism(a, b, bound);
      emit(json ? dump(to_json(f)) : to_text(f), out_path);
      return f ? 0 : 1;
    }
    if (symmetry->parsed()) {
      const auto r = check_symmetry(build(CorpusId::P), build(CorpusId::N));
      emit(json ? dump(to_json(r)) : to_text(r), out_path);
      return r.passed() ? 0 : 1;
    }
    if (grade->parsed()) {
      const auto m = load_module(module_a, as_printed);
      const auto g = infer_bidegrees(m, bound);
      emit(json ? dump(to_json(g, m.generators())) : to_text(g, m.generators()), out_path);
      return g.consistent ? 0 : 1;
    }
    if (reproduce->parsed()) {
      const auto r = run_reproduction(bound);
      const bool ok = r.passed() && !(strict_typos && !r.deviations.empty());
      if (!out_path.empty()) {
        emit(dump(to_json(r, timings)), out_path);
        std::cout << to_text(r, timings);
      } else {
        std::cout << (json ? dump(to_json(r, timings)) : to_text(r, timings));
      }
      if (strict_typos && !r.deviations.empty())
        std::cerr << "error: " << r.deviations.size() << " printed entries needed corrections (--strict-typos)\n";
      return ok ? 0 : 1;
    }
  } catch (const std::exception& e) {
    // Bad files, malformed schemas and unknown names.
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
