// Exhaustive model search over partial interpretations with three-valued
// (must / may) evaluation. Equivalent to enumerating every interpretation of
// the given sizes, but prunes as soon as a constraint is decided.

#ifndef KEDL_SRC_ORACLE_SEARCH_HPP
#define KEDL_SRC_ORACLE_SEARCH_HPP

#include <optional>
#include <vector>

#include "kedl/interpretation.hpp"
#include "kedl/kb.hpp"

namespace kedl::detail {

struct SearchProblem {
  KnowledgeBase kb;                   // signature plus every constraint
  std::optional<Concept> goal;        // must have a non-empty extension
  std::vector<RoleAssertion> absent;  // pairs that must not be in the role
};

// A model of the problem with exactly these domain sizes, if any.
std::optional<Interpretation> search_model(const SearchProblem& p, std::size_t delta, std::size_t sigma,
                                           Functionality mode);

}  // namespace kedl::detail

#endif  // KEDL_SRC_ORACLE_SEARCH_HPP
