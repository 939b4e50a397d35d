// Immutable concept expressions.
//
// A Concept is a cheap-to-copy handle on a shared, immutable expression tree.
// Atoms carry their sort; top and bottom are sorted as well, so every node's
// sort is determined structurally. Ill-sorted trees can be built (for example a
// conjunction of an object atom and an attribute atom); check_sort rejects them.

#ifndef KEDL_CONCEPT_HPP
#define KEDL_CONCEPT_HPP

#include <cstddef>
#include <functional>
#include <memory>
#include <set>
#include <string>

#include "kedl/sort.hpp"

namespace kedl {

class Concept {
 public:
  enum class Kind { Top, Bot, Atom, Not, And, Or, Exists, Forall, Implies, Iff };

  // Object-sort top.
  Concept();

  static Concept top(Sort sort = Sort::Object);
  static Concept bot(Sort sort = Sort::Object);
  static Concept atom(std::string name, Sort sort);
  static Concept negation(Concept operand);
  static Concept conjunction(Concept left, Concept right);
  static Concept disjunction(Concept left, Concept right);
  static Concept implication(Concept left, Concept right);
  static Concept equivalence(Concept left, Concept right);
  static Concept exists(RoleRef role, Concept filler);
  static Concept forall(RoleRef role, Concept filler);

  Kind kind() const;
  // Nominal sort: for quantifiers the source sort of the role, for
  // connectives the sort of the (first) operand.
  Sort sort() const;

  // Atom only.
  const std::string& name() const;
  // Exists / Forall only.
  const RoleRef& role() const;
  // Not / Exists / Forall.
  const Concept& operand() const;
  // And / Or / Implies / Iff.
  const Concept& left() const;
  const Concept& right() const;

  bool is(Kind k) const { return kind() == k; }
  bool is_binary() const;
  bool is_quantifier() const;

  std::size_t hash() const;
  std::size_t size() const;   // number of nodes
  std::size_t depth() const;  // constructor nesting depth, atoms have depth 0

  friend bool operator==(const Concept& a, const Concept& b);
  friend bool operator!=(const Concept& a, const Concept& b) { return !(a == b); }
  // Structural total order, used for deterministic containers.
  friend bool operator<(const Concept& a, const Concept& b);

  // Surface syntax with minimal parentheses; parse_concept(c.to_string(), sig,
  // c.sort()) reproduces c.
  std::string to_string() const;

  struct Node;

 private:
  explicit Concept(std::shared_ptr<const Node> node);
  static Concept binary(Kind kind, Concept left, Concept right);
  static Concept quantifier(Kind kind, RoleRef role, Concept filler);
  std::shared_ptr<const Node> node_;
};

// Like to_string, but every top/bot carries a ":object"/":attribute" suffix.
std::string to_string_sorted(const Concept& c);

// Replaces => and <=> by their negation/disjunction encodings.
Concept desugar(const Concept& c);

// Pushes negation down to atoms. Arrows are desugared on the way.
Concept to_nnf(const Concept& c);

bool is_nnf(const Concept& c);
bool is_arrow_free(const Concept& c);

struct Vocabulary {
  std::set<std::string> atoms;
  std::set<std::string> roles;  // role names, inverse occurrences included by name
};

// Atom and role names occurring in c (added to `into`).
void collect_vocabulary(const Concept& c, Vocabulary& into);
Vocabulary vocabulary_of(const Concept& c);

}  // namespace kedl

template <>
struct std::hash<kedl::Concept> {
  std::size_t operator()(const kedl::Concept& c) const noexcept { return c.hash(); }
};

#endif  // KEDL_CONCEPT_HPP
