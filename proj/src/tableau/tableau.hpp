#ifndef KEDL_SRC_TABLEAU_TABLEAU_HPP
#define KEDL_SRC_TABLEAU_TABLEAU_HPP

#include <optional>

#include "kedl/tableau.hpp"

namespace kedl::detail {

// Completion-graph expansion for kb, optionally with a fresh root node
// carrying query. Satisfiable results carry a re-checked witness.
SatResult run_tableau(const KnowledgeBase& kb, const std::optional<Concept>& query, const TableauOptions& opts);

}  // namespace kedl::detail

#endif  // KEDL_SRC_TABLEAU_TABLEAU_HPP
