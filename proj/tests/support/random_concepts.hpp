// Seeded generator of well-sorted concepts over a small fixed signature.

#ifndef KEDL_TESTS_RANDOM_CONCEPTS_HPP
#define KEDL_TESTS_RANDOM_CONCEPTS_HPP

#include <random>

#include "kedl/concept.hpp"
#include "kedl/parser.hpp"

namespace kedl::gen {

// Two atoms of each sort and one role of each family.
inline const char* kRandomSignature = "oconcept C, D; aconcept A, B; orole p; arole q; xrole r;";

class ConceptGenerator {
 public:
  // With arrows, => and <=> and negations of compound concepts are produced
  // too; without, every concept is already in negation normal form.
  ConceptGenerator(std::uint32_t seed, bool arrows) : rng_(seed), arrows_(arrows) {}

  Concept operator()(Sort sort, int depth) {
    if (depth == 0 || pick(4) == 0) return leaf(sort);
    const int choices = arrows_ ? 7 : 4;
    switch (pick(choices)) {
      case 0: return Concept::conjunction((*this)(sort, depth - 1), (*this)(sort, depth - 1));
      case 1: return Concept::disjunction((*this)(sort, depth - 1), (*this)(sort, depth - 1));
      case 2:
      case 3: {
        const RoleRef role = pick_role(sort);
        const Concept filler = (*this)(target_sort(role.kind), depth - 1);
        return pick(2) ? Concept::exists(role, filler) : Concept::forall(role, filler);
      }
      case 4: return Concept::negation((*this)(sort, depth - 1));
      case 5: return Concept::implication((*this)(sort, depth - 1), (*this)(sort, depth - 1));
      default: return Concept::equivalence((*this)(sort, depth - 1), (*this)(sort, depth - 1));
    }
  }

  Sort any_sort() { return pick(2) ? Sort::Attribute : Sort::Object; }

 private:
  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

  Concept leaf(Sort sort) {
    const int k = pick(10);
    if (k == 0) return Concept::top(sort);
    if (k == 1) return Concept::bot(sort);
    const char* name = sort == Sort::Object ? (pick(2) ? "C" : "D") : (pick(2) ? "A" : "B");
    Concept a = Concept::atom(name, sort);
    return k < 6 ? a : Concept::negation(a);
  }

  RoleRef pick_role(Sort sort) {
    if (sort == Sort::Object) return pick(2) ? RoleRef{"p", RoleKind::ObjObj} : RoleRef{"r", RoleKind::Cross};
    return pick(2) ? RoleRef{"q", RoleKind::AttrAttr} : RoleRef{"r", RoleKind::CrossInverse};
  }

  std::mt19937 rng_;
  bool arrows_;
};

}  // namespace kedl::gen

#endif  // KEDL_TESTS_RANDOM_CONCEPTS_HPP
