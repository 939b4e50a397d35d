// Acceptance gate: one PASS/FAIL line per primary criterion. Exit status is
// non-zero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "kedl/km.hpp"
#include "kedl/oracle.hpp"
#include "kedl/parser.hpp"
#include "kedl/semantics.hpp"
#include "kedl/suite.hpp"
#include "kedl/tableau.hpp"
#include "support/random_concepts.hpp"

using namespace kedl;

namespace {

// Time limits per criterion, in seconds.
constexpr double kAxiomLimit = 5.0;
constexpr double kPropertyLimit = 30.0;
constexpr double kDifferentialLimit = 120.0;
constexpr double kCorpusLimit = 1.0;

constexpr int kDifferentialConcepts = 500;
constexpr int kDifferentialDepth = 3;
constexpr std::uint32_t kDifferentialSeed = 20240501;
constexpr int kNnfExpressions = 200;
constexpr int kNnfDepth = 3;
constexpr std::uint32_t kNnfSeed = 4242;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(KEDL_SOURCE_DIR) + "/" + name);
  if (!in) throw std::runtime_error("cannot read " + name);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string seconds_text(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", s);
  return buf;
}

Outcome axiom_suite() {
  SuiteOptions opts;
  opts.run_oracle = false;
  const auto start = std::chrono::steady_clock::now();
  std::vector<SuiteResult> results;
  for (int n = 1; n <= 21; ++n) {
    opts.only = "axiom" + std::to_string(n);
    for (auto& r : verify_suite(opts)) results.push_back(std::move(r));
  }
  const double t = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::map<std::string, bool> group_ok;
  std::map<std::string, std::set<std::string>> sorts;
  for (const auto& r : results) {
    group_ok.try_emplace(r.group, true);
    group_ok[r.group] = group_ok[r.group] && r.tableau_valid;
    if (r.id.find("-object") != std::string::npos) sorts[r.group].insert("object");
    if (r.id.find("-attribute") != std::string::npos) sorts[r.group].insert("attribute");
  }
  int passed = 0;
  for (const auto& [g, ok] : group_ok) passed += ok;
  bool both = true;
  for (int n : {1, 2, 3, 18, 19, 20, 21}) both = both && sorts["axiom" + std::to_string(n)].size() == 2;
  const bool pass = group_ok.size() == 21 && passed == 21 && both && t < kAxiomLimit;
  return {pass, std::to_string(passed) + "/21 axioms valid by tableau (" + std::to_string(results.size()) +
                    " items, sort-ambiguous schemas in both sorts: " + (both ? "yes" : "no") + ") in " +
                    seconds_text(t)};
}

Outcome property_suite() {
  SuiteOptions opts;
  opts.bounds = Bounds{2, 2};
  const auto start = std::chrono::steady_clock::now();
  std::vector<SuiteResult> results;
  for (int n = 1; n <= 12; ++n) {
    opts.only = "property" + std::to_string(n);
    for (auto& r : verify_suite(opts)) results.push_back(std::move(r));
  }
  const double t = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::size_t tableau = 0, oracle = 0, countermodels = 0;
  std::set<std::string> groups;
  for (const auto& r : results) {
    groups.insert(r.group);
    tableau += r.tableau_valid;
    oracle += r.oracle_valid.value_or(false);
    countermodels += r.countermodel.has_value();
  }
  const bool pass = groups.size() == 12 && results.size() >= 19 && tableau == results.size() &&
                    oracle == results.size() && countermodels == 0 && t < kPropertyLimit;
  return {pass, std::to_string(results.size()) + " checks over Properties 1-12: tableau " + std::to_string(tableau) +
                    " valid, oracle (2,2) " + std::to_string(oracle) + " valid, " + std::to_string(countermodels) +
                    " countermodels, " + seconds_text(t)};
}

Outcome differential() {
  const KnowledgeBase kb = parse_kb(gen::kRandomSignature);
  gen::ConceptGenerator gen(kDifferentialSeed, false);
  std::vector<Concept> concepts;
  for (int k = 0; k < kDifferentialConcepts; ++k) concepts.push_back(gen(gen.any_sort(), kDifferentialDepth));

  const auto start = std::chrono::steady_clock::now();
  int violations = 0, sat = 0, unsat = 0, beyond_bounds = 0;
  for (const auto mode : {Functionality::AtMostOne, Functionality::ExactlyOne}) {
    TableauOptions o;
    o.mode = mode;
    const Bounds b{3, 3, mode};
    for (const auto& e : concepts) {
      if (!is_nnf(e)) ++violations;
      const bool tableau = is_sat(is_satisfiable(e, kb, o));
      const bool model = std::holds_alternative<Model>(find_model(e, kb.sig, b));
      // oracle Model => tableau Satisfiable; tableau Unsatisfiable => no model
      // up to (3,3).
      if (model && !tableau) ++violations;
      tableau ? ++sat : ++unsat;
      if (tableau && !model) ++beyond_bounds;
    }
  }
  const double t = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool pass = violations == 0 && t < kDifferentialLimit;
  return {pass, std::to_string(violations) + " violations over " + std::to_string(concepts.size()) +
                    " concepts x 2 modes (" + std::to_string(sat) + " sat, " + std::to_string(unsat) + " unsat, " +
                    std::to_string(beyond_bounds) + " sat without a model up to (3,3)) in " + seconds_text(t)};
}

Outcome gas_corpus() {
  const auto start = std::chrono::steady_clock::now();
  const auto elements = parse_km(slurp("data/gas.km"));
  const std::string emitted = emit_kedl(elements);
  const bool golden = emitted == slurp("tests/data/gas.kedl.golden");
  const KnowledgeBase kb = parse_kb(emitted);

  // The four reference definitions, each role.filler pair under its own existential.
  const std::map<std::string, std::string> reference = {
      {"Gas",
       "some has-composite GasComposition and some has-fire-spot FirePoint and some has-temperature Temperature"
       " and some has-gas-density GasConcentration and some has-gas-amount GasVolume"},
      {"Fire-source",
       "some has-location Location and some has-fire-kind FireSourceCategory"
       " and some has-fire-temperature SourceTemperature"},
      {"Gas-explosion",
       "some has-time Time and some has-location Location and some has-gas-density GasConcentration"
       " and some has-fire-kind FireSourceCategory and some has-blast-impact-power ExplosiveImpact"
       " and some has-blast-energy ExplosiveEnergy"},
      {"Tunnel",
       "some has-location Location and some has-length Length and some has-width Width and some has-height Height"
       " and some has-disblast-impact-power AntiExplosiveImpact and some has-blast-impact-power ExplosiveImpact"}};
  int matching = 0;
  for (const auto& d : kb.definitions) {
    auto it = reference.find(d.atom);
    matching += it != reference.end() && d.body == parse_concept(it->second, kb.sig);
  }
  const bool definitions = matching == 4 && kb.definitions.size() == 4;
  const bool consistent = is_sat(is_consistent(kb));
  const bool subsumption =
      subsumes(kb, parse_concept("Gas-explosion", kb.sig), parse_concept("some has-location Location", kb.sig));
  const bool tunnel =
      is_sat(is_satisfiable(parse_concept("Tunnel and some has-length (some more-than Meters1200)", kb.sig), kb));
  const double t = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool pass = golden && definitions && consistent && subsumption && tunnel && t < kCorpusLimit;
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  return {pass, std::string("golden ") + yn(golden) + ", reference definitions " + std::to_string(matching) +
                    "/4, consistent " + yn(consistent) + ", Gas-explosion <= some has-location Location " +
                    yn(subsumption) + ", constrained tunnel satisfiable " + yn(tunnel) + ", " + seconds_text(t)};
}

Outcome functionality() {
  const KnowledgeBase abox = parse_kb(
      "aconcept A; xrole has-r; oindividual c1; aindividual u1, u2;"
      "has-r(c1,u1); has-r(c1,u2); A(u1); (not A)(u2);");
  TableauOptions at_most;
  const bool abox_inconsistent = !is_sat(is_consistent(abox, at_most));
  const bool abox_no_model = std::holds_alternative<NoModelUpToBound>(find_model(abox, Bounds{3, 3}));

  const KnowledgeBase empty = parse_kb("aconcept A; xrole r;");
  const Concept c = parse_concept("some r A and some r (not A)", empty.sig);
  const bool tableau_unsat = !is_sat(is_satisfiable(c, empty, at_most));
  const bool oracle_unsat = std::holds_alternative<NoModelUpToBound>(find_model(c, empty.sig, Bounds{3, 3}));
  const bool unrestricted_sat = std::holds_alternative<Model>(
      find_model(c, empty.sig, Bounds{3, 3, Functionality::Unrestricted}));
  const bool pass = abox_inconsistent && abox_no_model && tableau_unsat && oracle_unsat && unrestricted_sat;
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  return {pass, std::string("ABox inconsistent (tableau ") + yn(abox_inconsistent) + ", no oracle model (3,3) " +
                    yn(abox_no_model) + "); some r A and some r (not A): tableau unsat " + yn(tableau_unsat) +
                    ", oracle no model " + yn(oracle_unsat) + ", oracle model without functionality " +
                    yn(unrestricted_sat)};
}

Outcome nnf_soundness() {
  const Signature sig = parse_kb(gen::kRandomSignature).sig;
  gen::ConceptGenerator gen(kNnfSeed, true);
  int failures = 0;
  std::uint64_t interpretations = 0;
  for (int k = 0; k < kNnfExpressions; ++k) {
    const Concept e = gen(gen.any_sort(), kNnfDepth);
    const Concept n = to_nnf(desugar(e));
    // Extensions depend only on the names that occur, so enumerate over those.
    const Vocabulary v = vocabulary_of(e);
    const Signature local =
        sig.restricted_to([&](const Signature::Entry& x) { return v.atoms.count(x.name) || v.roles.count(x.name); });
    bool ok = is_nnf(n);
    enumerate_interpretations(local, Bounds{2, 2}, [&](const Interpretation& i) {
      ++interpretations;
      ok = ok && extension(e, i) == extension(n, i);
      return ok;
    });
    failures += !ok;
  }
  return {failures == 0, std::to_string(failures) + " failures over " + std::to_string(kNnfExpressions) +
                             " expressions (" + std::to_string(interpretations) + " interpretations at (2,2))"};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"axiom-suite", axiom_suite},         {"property-suite", property_suite},
      {"differential", differential},       {"gas-corpus", gas_corpus},
      {"functionality", functionality},     {"nnf-soundness", nnf_soundness}};
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
