// The axiom and property suite: every schema instantiated with atomic
// placeholders, checked by the tableau and by the bounded oracle.

#ifndef KEDL_SUITE_HPP
#define KEDL_SUITE_HPP

#include <optional>
#include <string>
#include <vector>

#include "kedl/kb.hpp"
#include "kedl/oracle.hpp"
#include "kedl/semantics.hpp"

namespace kedl {

struct SuiteItem {
  std::string id;         // e.g. "axiom16", "axiom1-object", "property10.1-attribute-rl"
  std::string group;      // "axiom16", "property10"
  std::string statement;  // human-readable form of what is checked
  KnowledgeBase kb;       // placeholder signature plus premises
  std::vector<Formula> claims;  // all must hold in every model of kb
};

// Placeholders: object concepts C, D, E; attribute concepts A, B, F; roles
// p (object), q (attribute), r (cross).
std::vector<SuiteItem> suite_items();

// True for an exact id match or when filter names a group or sub-group of
// item id ("axiom18", "property10", "property10.1").
bool suite_filter_matches(const std::string& filter, const std::string& id);

struct SuiteOptions {
  Bounds bounds;                      // oracle bounds and functionality mode
  std::optional<std::string> only;   // see suite_filter_matches
  bool run_oracle = true;
  unsigned threads = 0;               // 0: hardware concurrency
};

struct SuiteResult {
  std::string id;
  std::string group;
  std::string statement;
  bool tableau_valid = false;
  std::optional<bool> oracle_valid;   // unset when the oracle did not run
  std::optional<Interpretation> countermodel;
  double seconds = 0;

  bool passed() const { return tableau_valid && oracle_valid.value_or(true); }
};

// Results in suite order, independent of scheduling.
std::vector<SuiteResult> verify_suite(const SuiteOptions& opts = {});

}  // namespace kedl

#endif  // KEDL_SUITE_HPP
