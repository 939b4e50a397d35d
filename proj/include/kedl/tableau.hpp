// Tableau reasoning: concept satisfiability, knowledge-base consistency,
// subsumption, instance checking and classification.

#ifndef KEDL_TABLEAU_HPP
#define KEDL_TABLEAU_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "kedl/concept.hpp"
#include "kedl/errors.hpp"
#include "kedl/interpretation.hpp"
#include "kedl/kb.hpp"

namespace kedl {

// The completion graph outgrew TableauOptions::node_budget.
class ResourceError : public Error {
 public:
  using Error::Error;
};

struct TableauOptions {
  Functionality mode = Functionality::AtMostOne;
  std::size_t node_budget = 50000;
  std::size_t trace_limit = 4000;
};

// One rule application: rule name, completion-graph node, concept.
struct TraceStep {
  std::string rule;
  int node = 0;
  std::string concept_text;
  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct Satisfiable {
  Interpretation witness;
  // ABox individuals identified through a shared functional cross role.
  std::vector<std::pair<std::string, std::string>> merges;
};

struct Unsatisfiable {
  // Every rule application in order, across all branches, ending with the
  // last clash. Truncated to TableauOptions::trace_limit steps plus that
  // clash.
  std::vector<TraceStep> trace;
};

using SatResult = std::variant<Satisfiable, Unsatisfiable>;

inline bool is_sat(const SatResult& r) { return std::holds_alternative<Satisfiable>(r); }

// Is there a model of kb in which e is non-empty? Throws SortError if e is
// not well-sorted over kb.sig.
SatResult is_satisfiable(const Concept& e, const KnowledgeBase& kb, const TableauOptions& opts = {});

SatResult is_consistent(const KnowledgeBase& kb, const TableauOptions& opts = {});

// Throws SortError when sub and sup differ in sort.
bool subsumes(const KnowledgeBase& kb, const Concept& sub, const Concept& sup, const TableauOptions& opts = {});

// Throws SortError for an undeclared individual or a sort mismatch.
bool instance_of(const KnowledgeBase& kb, const std::string& individual, const Concept& e,
                 const TableauOptions& opts = {});

// Subsumption order over the named atoms of one sort, with mutually
// subsuming atoms collapsed into cells.
struct Hierarchy {
  std::vector<std::vector<std::string>> cells;  // declaration order
  std::vector<std::vector<int>> parents;        // direct super-cells per cell
  std::vector<std::vector<bool>> below;         // below[i][j]: cell i under cell j (reflexive)
};

struct Classification {
  Hierarchy object;
  Hierarchy attribute;
};

// Throws KbError if kb is inconsistent.
Classification classify(const KnowledgeBase& kb, const TableauOptions& opts = {});

// "rule node concept" per line.
std::string format_trace(const std::vector<TraceStep>& trace);

}  // namespace kedl

#endif  // KEDL_TABLEAU_HPP
