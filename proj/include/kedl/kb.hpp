// Knowledge bases: signature, definitions, general inclusions and assertions.

#ifndef KEDL_KB_HPP
#define KEDL_KB_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "kedl/concept.hpp"
#include "kedl/signature.hpp"

namespace kedl {

// atom := body (an equivalence; definitions must be acyclic).
struct Definition {
  std::string atom;
  Concept body;
  friend bool operator==(const Definition&, const Definition&) = default;
};

// sub <= sup, both of one sort.
struct Inclusion {
  Concept sub;
  Concept sup;
  friend bool operator==(const Inclusion&, const Inclusion&) = default;
};

struct Equivalence {
  Concept left;
  Concept right;
  friend bool operator==(const Equivalence&, const Equivalence&) = default;
};

struct ConceptAssertion {
  Concept expr;
  std::string individual;
  friend bool operator==(const ConceptAssertion&, const ConceptAssertion&) = default;
};

// Role assertions name a declared role (never an inverse).
struct RoleAssertion {
  std::string role;
  std::string subject;
  std::string object;
  friend bool operator==(const RoleAssertion&, const RoleAssertion&) = default;
};

using Assertion = std::variant<ConceptAssertion, RoleAssertion>;

using Formula = std::variant<Inclusion, Equivalence, Assertion>;

struct KnowledgeBase {
  Signature sig;
  std::vector<Definition> definitions;
  std::vector<Inclusion> inclusions;
  std::vector<Assertion> abox;

  const Definition* definition_of(const std::string& atom) const;
  bool empty() const;
  friend bool operator==(const KnowledgeBase&, const KnowledgeBase&) = default;
};

// Sort of c under sig; throws SortError on undeclared names, mixed-sort
// connectives, or a role whose kind does not fit its filler.
Sort check_sort(const Concept& c, const Signature& sig);

// Checks every statement of kb against kb.sig: sorts, declared individuals,
// role assertion signatures, at most one definition per atom, acyclic
// definitions. Throws SortError or KbError.
void check_kb(const KnowledgeBase& kb);

// Defined atoms ordered so that every atom comes after the defined atoms its
// body mentions. Throws KbError on a cycle.
std::vector<std::string> definition_order(const KnowledgeBase& kb);

}  // namespace kedl

#endif  // KEDL_KB_HPP
