#pragma once

#include <chrono>
#include <cstdio>
#include <functional>
#include <future>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "bhfk/algebra_checks.hpp"
#include "bhfk/displays.hpp"
#include "bhfk/grading.hpp"
#include "bhfk/isomorphism.hpp"
#include "bhfk/json_io.hpp"
#include "bhfk/relations.hpp"

namespace bhfk {

/// The four bimodules the pipeline runs on. Replace an entry to run the
/// pipeline on a modified corpus.
struct Corpus {
  std::map<CorpusId, DABimodule> modules;

  static Corpus standard() {
    Corpus c;
    for (CorpusId id : kAllCorpusIds) c.modules.emplace(id, build(id));
    return c;
  }
  const DABimodule& at(CorpusId id) const { return modules.at(id); }
};

struct CheckResult {
  bool passed = false;
  std::string summary;
  std::vector<std::string> details;  // capped at kMaxDetails
  double seconds = 0;
};

inline constexpr std::size_t kMaxDetails = 20;

struct ReproductionReport {
  int bound = 0;
  std::map<std::string, CheckResult> checks;
  std::vector<std::string> warnings;
  std::vector<TypoNote> deviations;
  std::map<std::string, GeneratorBijection> bijections;           // "P-E1": alpha
  std::map<std::string, std::map<std::string, Bidegree>> gradings;  // per corpus id

  bool passed() const {
    for (const auto& [key, c] : checks)
      if (!c.passed) return false;
    return true;
  }
  std::vector<std::string> failed() const {
    std::vector<std::string> out;
    for (const auto& [key, c] : checks)
      if (!c.passed) out.push_back(key);
    return out;
  }
};

namespace detail {

inline void add_detail(CheckResult& r, std::string line) {
  if (r.details.size() < kMaxDetails) r.details.push_back(std::move(line));
}

inline std::string morphism_key(CorpusId x, CorpusId e) {
  return std::string(to_string(x)) + "-" + std::string(to_string(e));
}

}  // namespace detail

/// Runs every check of the pipeline, concurrently. Results are keyed, so
/// the report does not depend on completion order.
inline ReproductionReport run_reproduction(int bound, const Corpus& corpus = Corpus::standard()) {
  if (bound < 0) throw std::domain_error("bound must be nonnegative");
  ReproductionReport report;
  report.bound = bound;
  if (bound < kRecommendedBound)
    report.warnings.push_back("bound " + std::to_string(bound) + " is below " + std::to_string(kRecommendedBound) +
                              ": each family is compared on very few instances");
  report.deviations = corpus_typo_notes();
  for (auto& n : display_typo_notes()) report.deviations.push_back(std::move(n));

  using Task = std::function<CheckResult()>;
  std::map<std::string, Task> tasks;

  tasks["algebra.oracle"] = [] {
    CheckResult r;
    const auto o = compare_with_oracle({1, 2}, 4);
    r.passed = o.passed();
    r.summary = std::to_string(o.pairs) + " pairs in B(2,1), B(2,2) with exponents <= 4, " +
                std::to_string(o.mismatches.size()) + " mismatches against the rewriting oracle";
    for (const auto& m : o.mismatches) detail::add_detail(r, m);
    return r;
  };
  tasks["algebra.associativity"] = [] {
    CheckResult r;
    const auto a = check_associativity({0, 1, 2, 3}, 2);
    r.passed = a.passed();
    r.summary = std::to_string(a.triples) + " triples with exponents <= 2, " + std::to_string(a.failures.size()) +
                " failures";
    for (const auto& f : a.failures) detail::add_detail(r, f);
    return r;
  };

  for (CorpusId id : kAllCorpusIds) {
    tasks["da." + std::string(to_string(id))] = [&corpus, id, bound] {
      CheckResult r;
      const auto rel = check_da_relations(corpus.at(id), bound);
      r.passed = rel.passed();
      r.summary = std::to_string(rel.terms_checked) + " terms through degree " + std::to_string(bound) + ", " +
                  std::to_string(rel.failures.size()) + " non-cancelling";
      for (const auto& f : rel.failures) detail::add_detail(r, to_string(f));
      return r;
    };
  }

  for (CorpusId id : {CorpusId::E1, CorpusId::E2}) {
    tasks["zero_square." + std::string(to_string(id))] = [&corpus, id] {
      CheckResult r;
      const auto gens = primary_product(corpus.at(id), corpus.at(id));
      r.passed = gens.empty();
      r.summary = std::to_string(gens.size()) + " generators in the primary product";
      for (const auto& g : gens) detail::add_detail(r, g.name);
      return r;
    };
  }

  for (ProductId id : kAllProductIds) {
    tasks["product." + std::string(to_string(id))] = [&corpus, id, bound] {
      CheckResult r;
      auto [l, rt] = factors(id);
      const auto computed = secondary_product(corpus.at(l), corpus.at(rt), bound);
      const auto cmp = compare_with_display(id, computed, bound);
      r.passed = cmp.passed();
      r.summary = std::to_string(cmp.terms) + " terms, " + std::to_string(cmp.missing.size()) + " missing, " +
                  std::to_string(cmp.extra.size()) + " extra";
      if (!cmp.primary_matches) r.summary += ", primary matrix differs";
      for (const auto& g : cmp.primary_missing) detail::add_detail(r, "generator missing: " + g);
      for (const auto& g : cmp.primary_extra) detail::add_detail(r, "generator extra: " + g);
      for (const auto& [key, t] : cmp.missing)
        detail::add_detail(r, "missing in (" + key.row + ", " + key.col + "): " + to_string(t));
      for (const auto& [key, t] : cmp.extra)
        detail::add_detail(r, "extra in (" + key.row + ", " + key.col + "): " + to_string(t));
      return r;
    };
  }

  std::map<std::string, MorphismReport> morphisms;
  std::mutex morphisms_mutex;
  for (CorpusId x : {CorpusId::P, CorpusId::N}) {
    for (CorpusId e : {CorpusId::E1, CorpusId::E2}) {
      const std::string key = detail::morphism_key(x, e);
      tasks["iso." + key] = [&, x, e, key] {
        CheckResult r;
        auto m = verify_one_morphism(corpus.at(x), corpus.at(e), x, e, bound);
        r.passed = m.verified() && m.bidegrees_ok;
        if (m.isomorphic) {
          r.summary = "alpha: " + std::string(to_string(x)) + "*" + std::string(to_string(e)) + " -> " +
                      std::string(to_string(e)) + "*" + std::string(to_string(x)) + " on " +
                      std::to_string(m.terms_compared) + " terms";
          r.summary += (m.reverified ? ", re-verified" : ", fails") + std::string(" at bound ") + std::to_string(bound + 2);
          r.summary += m.positional ? ", positional pairing" : ", not the positional pairing";
          if (!m.bidegrees_ok) r.summary += ", bidegree shift not uniform";
        } else {
          r.summary = "no bijection within idempotent classes";
          for (const auto& d : m.differences) detail::add_detail(r, "differs under positional pairing: " + d);
        }
        if (!m.zero_square) r.summary += ", E*E is not zero";
        std::lock_guard lock(morphisms_mutex);
        morphisms.emplace(key, std::move(m));
        return r;
      };
    }
  }

  tasks["symmetry"] = [&corpus] {
    CheckResult r;
    const auto s = check_symmetry(corpus.at(CorpusId::P), corpus.at(CorpusId::N));
    r.passed = s.passed();
    r.summary = "sym(P) vs N: " + std::to_string(s.differences.size()) + " differing cells; involution on P " +
                (s.involution_p ? "holds" : "fails") + ", on N " + (s.involution_n ? "holds" : "fails");
    for (const auto& k : s.differences) detail::add_detail(r, "(" + k.row + ", " + k.col + ")");
    return r;
  };

  std::map<std::string, GradingResult> gradings;
  std::mutex gradings_mutex;
  for (CorpusId id : kAllCorpusIds) {
    const std::string name(to_string(id));
    tasks["grading." + name] = [&, id, name] {
      CheckResult r;
      const auto sample = materialize(corpus.at(id), std::max(bound, kGradingSampleBound), false);
      auto g = infer_bidegrees(sample);
      if (!g.consistent) {
        r.summary = "inconsistent; witness cycle of " + std::to_string(g.witness.size()) + " terms";
        for (const auto& e : g.witness)
          detail::add_detail(r, e.from + " -> " + e.to + " " + to_string(e.offset) + ": " + to_string(e.term));
      } else {
        const auto viol = scan_bidegrees(materialize(corpus.at(id), bound, false), g.degrees);
        r.passed = viol.empty();
        r.summary = std::to_string(g.pinned.size()) + " components, " + std::to_string(viol.size()) +
                    " terms violating the assignment at bound " + std::to_string(bound);
        for (const auto& v : viol)
          detail::add_detail(r, "(" + v.cell.row + ", " + v.cell.col + "): " + to_string(v.term));
      }
      std::lock_guard lock(gradings_mutex);
      gradings.emplace(name, std::move(g));
      return r;
    };
  }

  std::map<std::string, std::future<CheckResult>> running;
  for (auto& [key, task] : tasks) {
    running.emplace(key, std::async(std::launch::async, [t = task] {
                      const auto start = std::chrono::steady_clock::now();
                      CheckResult r;
                      try {
                        r = t();
                      } catch (const std::exception& e) {
                        r.passed = false;
                        r.summary = std::string("error: ") + e.what();
                      }
                      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
                      return r;
                    }));
  }
  for (auto& [key, f] : running) report.checks.emplace(key, f.get());

  for (auto& [key, m] : morphisms)
    if (m.isomorphic) report.bijections.emplace(key, m.alpha);
  for (auto& [name, g] : gradings)
    if (g.consistent) report.gradings.emplace(name, g.degrees);
  return report;
}

inline Json to_json(const TypoNote& n) {
  return Json{{"location", n.location},
              {"printed", n.printed},
              {"used", n.used},
              {"reason", n.reason},
              {"affects", n.affects}};
}

/// Timings are left out unless asked for, so that two runs give identical
/// output.
inline Json to_json(const ReproductionReport& r, bool with_timings = false) {
  Json checks = Json::object();
  for (const auto& [key, c] : r.checks) {
    Json j{{"passed", c.passed}, {"summary", c.summary}, {"details", c.details}};
    if (with_timings) j["seconds"] = c.seconds;
    checks[key] = j;
  }
  Json bijections = Json::object();
  for (const auto& [key, f] : r.bijections) {
    Json m = Json::object();
    for (const auto& [a, b] : f) m[a] = b;
    bijections[key] = m;
  }
  Json gradings = Json::object();
  for (const auto& [id, degrees] : r.gradings) {
    Json m = Json::object();
    for (const auto& [g, d] : degrees) m[g] = {d.intrinsic, d.homological};
    gradings[id] = m;
  }
  Json deviations = Json::array();
  for (const auto& n : r.deviations) deviations.push_back(to_json(n));
  return Json{{"bound", r.bound},          {"passed", r.passed()},   {"failed", r.failed()},
              {"warnings", r.warnings},    {"checks", checks},       {"bijections", bijections},
              {"bidegrees", gradings},     {"deviations", deviations}};
}

inline std::string to_text(const ReproductionReport& r, bool with_timings = false) {
  std::string out = "reproduction at bound " + std::to_string(r.bound) + "\n";
  for (const auto& w : r.warnings) out += "warning: " + w + "\n";
  for (const auto& [key, c] : r.checks) {
    out += std::string(c.passed ? "PASS " : "FAIL ") + key + ": " + c.summary;
    if (with_timings) {
      char buf[32];
      std::snprintf(buf, sizeof buf, " [%.3f s]", c.seconds);
      out += buf;
    }
    out += "\n";
    for (const auto& d : c.details) out += "    " + d + "\n";
  }
  for (const auto& [key, f] : r.bijections) {
    out += "alpha " + key + ":";
    for (const auto& [a, b] : f) out += " " + a + "->" + b;
    out += "\n";
  }
  out += std::to_string(r.deviations.size()) + " deviations from the printed source:\n";
  for (const auto& n : r.deviations) out += "  " + n.location + ": " + n.printed + " -> " + n.used + "\n";
  std::size_t passed = 0;
  for (const auto& [key, c] : r.checks) passed += c.passed;
  out += std::to_string(passed) + "/" + std::to_string(r.checks.size()) + " checks passed\n";
  return out;
}

}  // namespace bhfk
