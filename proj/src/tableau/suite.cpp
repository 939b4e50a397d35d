#include "kedl/suite.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <regex>
#include <thread>

#include "kedl/parser.hpp"
#include "kedl/tableau.hpp"

namespace kedl {

namespace {

const char* const kSignature =
    "oconcept C, D, E; aconcept A, B, F; orole p; arole q; xrole r;";

struct Schema {
  const char* number;
  const char* text;  // in phi/psi/gamma for sort-generic schemas
};

// Arrow forms of the axioms.
constexpr Schema kGenericAxioms[] = {
    {"1", "phi => (psi => phi)"},
    {"2", "(phi => (psi => gamma)) => ((phi => psi) => (phi => gamma))"},
    {"3", "(not phi => not psi) => (psi => phi)"},
};

constexpr Schema kRoleAxioms[] = {
    {"4", "(some p C or some p D) => some p (C or D)"},
    {"5", "some p (C and D) => (some p C and some p D)"},
    {"6", "(some p C and all p D) => some p (C and D)"},
    {"7", "(some q A or some q B) => some q (A or B)"},
    {"8", "some q (A and B) => (some q A and some q B)"},
    {"9", "(some q A and all q B) => some q (A and B)"},
    {"10", "(some r A or some r B) => some r (A or B)"},
    {"11", "some r (A and B) => (some r A and some r B)"},
    {"12", "(some r A and all r B) => some r (A and B)"},
    {"13", "(some inv(r) C or some inv(r) D) => some inv(r) (C or D)"},
    {"14", "some inv(r) (C and D) => (some inv(r) C and some inv(r) D)"},
    {"15", "(some inv(r) C and all inv(r) D) => some inv(r) (C and D)"},
    {"16", "some inv(r) (all r A) => A"},
    {"17", "some r (all inv(r) C) => C"},
};

// Rule axioms as single concepts; their premise/conclusion forms are
// built separately below.
constexpr Schema kRuleAxioms[] = {
    {"18", "(phi and (phi => psi)) => psi"},
    {"19", "((phi => psi) and (psi => phi)) => (phi <=> psi)"},
    {"20", "((phi => psi) and (psi => gamma)) => (phi => gamma)"},
    {"21", "(phi => (psi and gamma)) <=> ((phi => psi) and (phi => gamma))"},
};

struct PropertySchema {
  const char* number;  // "1.1", "7"
  const char* left;
  const char* right;
};

constexpr PropertySchema kProperties[] = {
    {"1.1", "phi and phi", "phi"},
    {"1.2", "phi or phi", "phi"},
    {"2.1", "phi and psi", "psi and phi"},
    {"2.2", "phi or psi", "psi or phi"},
    {"3.1", "(phi and psi) and gamma", "phi and (psi and gamma)"},
    {"3.2", "(phi or psi) or gamma", "phi or (psi or gamma)"},
    {"4.1", "phi or (psi and gamma)", "(phi or psi) and (phi or gamma)"},
    {"4.2", "phi and (psi or gamma)", "(phi and psi) or (phi and gamma)"},
    {"5.1", "phi or bot", "phi"},
    {"5.2", "phi and top", "phi"},
    {"6.1", "phi or top", "top"},
    {"6.2", "phi and bot", "bot"},
    {"7", "not phi or phi", "top"},
    {"8", "phi and not phi", "bot"},
    {"9.1", "phi or (phi and psi)", "phi"},
    {"9.2", "phi and (phi or psi)", "phi"},
    {"10.1", "not (phi and psi)", "not phi or not psi"},
    {"10.2", "not (phi or psi)", "not phi and not psi"},
    {"11.1", "not bot", "top"},
    {"11.2", "not top", "bot"},
    {"12", "not not phi", "phi"},
};

std::string instantiate(const std::string& schema, Sort s) {
  static const std::regex phi("\\bphi\\b"), psi("\\bpsi\\b"), gamma("\\bgamma\\b");
  const bool obj = s == Sort::Object;
  std::string out = std::regex_replace(schema, phi, obj ? "C" : "A");
  out = std::regex_replace(out, psi, obj ? "D" : "B");
  return std::regex_replace(out, gamma, obj ? "E" : "F");
}

std::string suffix(Sort s) { return s == Sort::Object ? "object" : "attribute"; }

Formula valid_concept(const Concept& c) { return Inclusion{Concept::top(c.sort()), c}; }

SuiteItem concept_item(const std::string& id, const std::string& group, const std::string& text,
                       const KnowledgeBase& base, std::optional<Sort> sort = std::nullopt) {
  SuiteItem item{id, group, text, base, {}};
  item.claims.push_back(valid_concept(parse_concept(text, base.sig, sort)));
  return item;
}

// Premises as a knowledge base, conclusions as claims.
SuiteItem rule_item(const std::string& id, const std::string& group, const std::string& premises,
                    const std::vector<std::string>& conclusions, Sort s) {
  std::string decl = kSignature;
  decl += s == Sort::Object ? " oindividual c;" : " aindividual c;";
  SuiteItem item{id, group, "", parse_kb(decl + instantiate(premises, s)), {}};
  item.statement = "{" + instantiate(premises, s) + "} entails ";
  for (std::size_t k = 0; k < conclusions.size(); ++k) {
    const std::string text = instantiate(conclusions[k], s);
    item.statement += (k ? "; " : "") + text;
    // "X(c)", "X <= Y" or "X == Y"
    if (auto eq = text.find(" == "); eq != std::string::npos) {
      item.claims.push_back(Equivalence{parse_concept(text.substr(0, eq), item.kb.sig),
                                        parse_concept(text.substr(eq + 4), item.kb.sig)});
    } else if (auto le = text.find(" <= "); le != std::string::npos) {
      item.claims.push_back(Inclusion{parse_concept(text.substr(0, le), item.kb.sig),
                                      parse_concept(text.substr(le + 4), item.kb.sig)});
    } else {
      const std::string name = text.substr(0, text.find('('));
      item.claims.push_back(Assertion{ConceptAssertion{parse_concept(name, item.kb.sig), "c"}});
    }
  }
  return item;
}

bool tableau_holds(const KnowledgeBase& kb, const Formula& f, const TableauOptions& opts) {
  if (const auto* inc = std::get_if<Inclusion>(&f)) return subsumes(kb, inc->sub, inc->sup, opts);
  if (const auto* eq = std::get_if<Equivalence>(&f))
    return subsumes(kb, eq->left, eq->right, opts) && subsumes(kb, eq->right, eq->left, opts);
  const auto& a = std::get<Assertion>(f);
  const auto& ca = std::get<ConceptAssertion>(a);
  return instance_of(kb, ca.individual, ca.expr, opts);
}

SuiteResult run_item(const SuiteItem& item, const SuiteOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  SuiteResult res;
  res.id = item.id;
  res.group = item.group;
  res.statement = item.statement;
  TableauOptions topts;
  topts.mode = opts.bounds.mode;
  res.tableau_valid = true;
  for (const auto& f : item.claims) res.tableau_valid = res.tableau_valid && tableau_holds(item.kb, f, topts);
  if (opts.run_oracle) {
    res.oracle_valid = true;
    for (const auto& f : item.claims) {
      auto v = check_validity_bounded(f, item.kb, opts.bounds);
      if (auto* c = std::get_if<Countermodel>(&v)) {
        res.oracle_valid = false;
        res.countermodel = std::move(c->interpretation);
        break;
      }
    }
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

}  // namespace

std::vector<SuiteItem> suite_items() {
  const KnowledgeBase base = parse_kb(kSignature);
  std::vector<SuiteItem> items;
  for (const auto& a : kGenericAxioms) {
    const std::string group = std::string("axiom") + a.number;
    for (Sort s : {Sort::Object, Sort::Attribute})
      items.push_back(concept_item(group + "-" + suffix(s), group, instantiate(a.text, s), base, s));
  }
  for (const auto& a : kRoleAxioms) {
    const std::string group = std::string("axiom") + a.number;
    items.push_back(concept_item(group, group, a.text, base));
  }
  for (const auto& a : kRuleAxioms) {
    const std::string group = std::string("axiom") + a.number;
    for (Sort s : {Sort::Object, Sort::Attribute}) {
      const std::string id = group + "-" + suffix(s);
      items.push_back(concept_item(id, group, instantiate(a.text, s), base, s));
      if (group == "axiom18") {
        items.push_back(rule_item(id + "-rule", group, "phi(c); phi <= psi;", {"psi(c)"}, s));
      } else if (group == "axiom19") {
        items.push_back(rule_item(id + "-rule", group, "phi <= psi; psi <= phi;", {"phi == psi"}, s));
      } else if (group == "axiom20") {
        items.push_back(rule_item(id + "-rule", group, "phi <= psi; psi <= gamma;", {"phi <= gamma"}, s));
      } else {
        items.push_back(rule_item(id + "-rule-split", group, "phi <= psi and gamma;",
                                  {"phi <= psi", "phi <= gamma"}, s));
        items.push_back(rule_item(id + "-rule-join", group, "phi <= psi; phi <= gamma;",
                                  {"phi <= psi and gamma"}, s));
      }
    }
  }
  for (const auto& p : kProperties) {
    const std::string number = p.number;
    const std::string group = "property" + number.substr(0, number.find('.'));
    for (Sort s : {Sort::Object, Sort::Attribute}) {
      const Concept l = parse_concept(instantiate(p.left, s), base.sig, s);
      const Concept r = parse_concept(instantiate(p.right, s), base.sig, s);
      for (bool forward : {true, false}) {
        const Concept& from = forward ? l : r;
        const Concept& to = forward ? r : l;
        SuiteItem item{"property" + number + "-" + suffix(s) + (forward ? "-lr" : "-rl"), group,
                       from.to_string() + " => " + to.to_string(), base, {Inclusion{from, to}}};
        items.push_back(std::move(item));
      }
    }
  }
  return items;
}

bool suite_filter_matches(const std::string& filter, const std::string& id) {
  if (filter == id) return true;
  if (id.size() <= filter.size() || id.compare(0, filter.size(), filter) != 0) return false;
  const char next = id[filter.size()];
  return next == '-' || next == '.';
}

std::vector<SuiteResult> verify_suite(const SuiteOptions& opts) {
  std::vector<SuiteItem> items;
  for (auto& item : suite_items())
    if (!opts.only || suite_filter_matches(*opts.only, item.id)) items.push_back(std::move(item));

  std::vector<SuiteResult> results(items.size());
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(items.size());
  auto worker = [&] {
    for (std::size_t k = next++; k < items.size(); k = next++) {
      try {
        results[k] = run_item(items[k], opts);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(items.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

}  // namespace kedl
