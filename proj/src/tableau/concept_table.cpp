#include "concept_table.hpp"

namespace kedl::detail {

int ConceptTable::intern(const Concept& nnf) {
  const int id = intern_one(nnf);
  // Unfoldings can introduce further defined literals; close under them.
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (entries_[k].kind != Concept::Kind::Atom && entries_[k].kind != Concept::Kind::Not) continue;
    if (entries_[k].unfolding >= 0) continue;
    const Definition* d = kb_.definition_of(entries_[k].atom);
    if (!d) continue;
    const Concept body = entries_[k].negated ? to_nnf(Concept::negation(d->body)) : to_nnf(d->body);
    const int u = intern_one(body);
    entries_[k].unfolding = u;
  }
  return id;
}

int ConceptTable::intern_one(const Concept& c) {
  if (auto it = ids_.find(c); it != ids_.end()) return it->second;
  using K = Concept::Kind;
  TableEntry e;
  e.concept_ = c;
  e.kind = c.kind();
  e.sort = c.sort();
  switch (c.kind()) {
    case K::Top:
    case K::Bot:
      break;
    case K::Atom:
      e.atom = c.name();
      break;
    case K::Not:
      e.negated = true;
      e.atom = c.operand().name();
      break;
    case K::And:
    case K::Or:
      e.a = intern_one(c.left());
      e.b = intern_one(c.right());
      break;
    case K::Exists:
    case K::Forall:
      e.role = c.role();
      e.a = intern_one(c.operand());
      break;
    default:
      throw std::invalid_argument("concept table: '" + c.to_string() + "' is not in negation normal form");
  }
  const int id = static_cast<int>(entries_.size());
  entries_.push_back(std::move(e));
  ids_.emplace(c, id);
  if (c.is(K::Atom) || c.is(K::Not)) {
    const Concept other = c.is(K::Atom) ? Concept::negation(c) : c.operand();
    if (auto it = ids_.find(other); it != ids_.end()) {
      entries_[id].complement = it->second;
      entries_[it->second].complement = id;
    }
  }
  return id;
}

}  // namespace kedl::detail
