// Extensions of concepts and satisfaction of assertions, formulas and
// knowledge bases in a finite interpretation.

#ifndef KEDL_SEMANTICS_HPP
#define KEDL_SEMANTICS_HPP

#include <variant>

#include "kedl/concept.hpp"
#include "kedl/interpretation.hpp"
#include "kedl/kb.hpp"

namespace kedl {

// Throws KbError if e mentions a name the interpretation does not declare.
ElementSet extension(const Concept& e, const Interpretation& i);

// Throws KbError for an unmapped individual.
bool satisfies_assertion(const Interpretation& i, const Assertion& a);

// Universal: l <= r holds iff ext(l) is a subset of ext(r).
// Existential: holds iff some element x satisfies "x in l implies x in r"
// (for an equivalence, "x in l iff x in r").
enum class Reading { Universal, Existential };

bool satisfies_formula(const Interpretation& i, const Formula& f,
                       Reading reading = Reading::Universal);

// Definitions as equivalences, inclusions and assertions, all under the
// universal reading.
bool satisfies_kb(const Interpretation& i, const KnowledgeBase& kb);

}  // namespace kedl

#endif  // KEDL_SEMANTICS_HPP
