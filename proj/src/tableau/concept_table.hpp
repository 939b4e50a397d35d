// Interned NNF concepts. Every concept a completion graph can ever hold is
// added before expansion starts, so labels are fixed-width bitsets.

#ifndef KEDL_SRC_TABLEAU_CONCEPT_TABLE_HPP
#define KEDL_SRC_TABLEAU_CONCEPT_TABLE_HPP

#include <string>
#include <unordered_map>
#include <vector>

#include "kedl/concept.hpp"
#include "kedl/kb.hpp"

namespace kedl::detail {

struct TableEntry {
  Concept concept_;
  Concept::Kind kind = Concept::Kind::Top;
  Sort sort = Sort::Object;
  bool negated = false;  // for literals: "not A"
  std::string atom;      // literal's atom
  RoleRef role;          // quantifiers
  int a = -1;            // operand / left
  int b = -1;            // right
  int complement = -1;   // literal of opposite polarity, if interned
  int unfolding = -1;    // nnf of the definition (or of its negation) for defined literals
};

class ConceptTable {
 public:
  explicit ConceptTable(const KnowledgeBase& kb) : kb_(kb) {}

  // Interns nnf (which must be in NNF) with all its subconcepts and the
  // unfoldings of every defined literal reachable from it.
  int intern(const Concept& nnf);

  const TableEntry& operator[](int id) const { return entries_[id]; }
  std::size_t size() const { return entries_.size(); }
  int top(Sort s) { return intern(Concept::top(s)); }

 private:
  int intern_one(const Concept& c);

  const KnowledgeBase& kb_;
  std::vector<TableEntry> entries_;
  std::unordered_map<Concept, int> ids_;
};

}  // namespace kedl::detail

#endif  // KEDL_SRC_TABLEAU_CONCEPT_TABLE_HPP
