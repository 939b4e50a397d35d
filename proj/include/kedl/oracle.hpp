// Bounded model finding over small finite interpretations. Verdicts are
// always relative to the domain-size bounds.

#ifndef KEDL_ORACLE_HPP
#define KEDL_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "kedl/interpretation.hpp"
#include "kedl/kb.hpp"
#include "kedl/semantics.hpp"

namespace kedl {

struct Bounds {
  std::size_t max_delta = 2;
  std::size_t max_sigma = 2;
  Functionality mode = Functionality::AtMostOne;
  friend bool operator==(const Bounds&, const Bounds&) = default;
};

// Domain sizes are capped so that element sets fit a machine word.
inline constexpr std::size_t kMaxDomainSize = 16;

// "d,s" with both at least 1.
std::optional<Bounds> parse_bounds(std::string_view text, Functionality mode = Functionality::AtMostOne);

// Domain size pairs within b in the order they are tried: by d+s, then d.
std::vector<std::pair<std::size_t, std::size_t>> size_order(const Bounds& b);

struct Model {
  Interpretation interpretation;
};
struct NoModelUpToBound {
  Bounds bounds;
};
using ModelVerdict = std::variant<Model, NoModelUpToBound>;

struct Countermodel {
  Interpretation interpretation;
};
struct NoCountermodelUpToBound {
  Bounds bounds;
};
using ValidityVerdict = std::variant<Countermodel, NoCountermodelUpToBound>;

// Walks every interpretation of sig within b: domain sizes in size_order,
// then an odometer over atom bits, role pairs (or functional cross-role
// rows) and individual mappings. Nothing is deduplicated.
class InterpretationEnumerator {
 public:
  InterpretationEnumerator(Signature sig, Bounds b);
  ~InterpretationEnumerator();
  InterpretationEnumerator(InterpretationEnumerator&&) noexcept;
  InterpretationEnumerator& operator=(InterpretationEnumerator&&) noexcept;

  // Advances to the next interpretation; false once all are visited.
  bool next();
  const Interpretation& current() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Calls visit on each interpretation until it returns false.
void enumerate_interpretations(const Signature& sig, const Bounds& b,
                               const std::function<bool(const Interpretation&)>& visit);

// Interpretations (full enumeration) where e has a non-empty extension.
std::uint64_t count_models(const Concept& e, const Signature& sig, const Bounds& b);

// A model with a non-empty extension of goal. The search is exhaustive
// within b; every model returned has been re-checked by the evaluator.
ModelVerdict find_model(const Concept& goal, const Signature& sig, const Bounds& b);
// A model of every definition, inclusion and assertion of kb.
ModelVerdict find_model(const KnowledgeBase& kb, const Bounds& b);
// A model of kb in which goal is non-empty.
ModelVerdict find_model(const KnowledgeBase& kb, const Concept& goal, const Bounds& b);

// An interpretation falsifying f under the universal reading. The second
// overload restricts to models of kb.
ValidityVerdict check_validity_bounded(const Formula& f, const Signature& sig, const Bounds& b);
ValidityVerdict check_validity_bounded(const Formula& f, const KnowledgeBase& kb, const Bounds& b);

// Same question as find_model, answered by plain enumeration; slow, kept to
// cross-check the search.
ModelVerdict find_model_by_enumeration(const KnowledgeBase& kb, const std::optional<Concept>& goal,
                                       const Bounds& b);

}  // namespace kedl

#endif  // KEDL_ORACLE_HPP
