#include "kedl/oracle.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "search.hpp"

namespace kedl {

std::optional<Bounds> parse_bounds(std::string_view text, Functionality mode) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) return std::nullopt;
  auto number = [](std::string_view s) -> std::optional<std::size_t> {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || v == 0 || v > kMaxDomainSize) return std::nullopt;
    return v;
  };
  auto d = number(text.substr(0, comma));
  auto s = number(text.substr(comma + 1));
  if (!d || !s) return std::nullopt;
  return Bounds{*d, *s, mode};
}

std::vector<std::pair<std::size_t, std::size_t>> size_order(const Bounds& b) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t d = 1; d <= b.max_delta; ++d)
    for (std::size_t s = 1; s <= b.max_sigma; ++s) out.emplace_back(d, s);
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& c) { return a.first + a.second < c.first + c.second; });
  return out;
}

namespace {

void check_bounds(const Bounds& b) {
  if (b.max_delta == 0 || b.max_sigma == 0 || b.max_delta > kMaxDomainSize || b.max_sigma > kMaxDomainSize)
    throw std::invalid_argument("bounds must lie between 1 and " + std::to_string(kMaxDomainSize));
}

bool is_model(const Interpretation& i, const detail::SearchProblem& p) {
  if (!validate_interpretation(i).empty()) return false;
  if (!satisfies_kb(i, p.kb)) return false;
  if (p.goal && !extension(*p.goal, i).any()) return false;
  for (const auto& ra : p.absent)
    if (satisfies_assertion(i, ra)) return false;
  return true;
}

ModelVerdict solve(const detail::SearchProblem& p, const Bounds& b) {
  check_bounds(b);
  for (auto [d, s] : size_order(b)) {
    if (auto i = detail::search_model(p, d, s, b.mode)) {
      if (!is_model(*i, p)) throw std::logic_error("model search returned an interpretation that is not a model");
      return Model{std::move(*i)};
    }
  }
  return NoModelUpToBound{b};
}

ValidityVerdict negate(ModelVerdict v, const Bounds& b) {
  if (auto* m = std::get_if<Model>(&v)) return Countermodel{std::move(m->interpretation)};
  return NoCountermodelUpToBound{b};
}

}  // namespace

ModelVerdict find_model(const Concept& goal, const Signature& sig, const Bounds& b) {
  detail::SearchProblem p;
  p.kb.sig = sig;
  p.goal = goal;
  return solve(p, b);
}

ModelVerdict find_model(const KnowledgeBase& kb, const Bounds& b) {
  detail::SearchProblem p;
  p.kb = kb;
  return solve(p, b);
}

ModelVerdict find_model(const KnowledgeBase& kb, const Concept& goal, const Bounds& b) {
  detail::SearchProblem p;
  p.kb = kb;
  p.goal = goal;
  return solve(p, b);
}

ValidityVerdict check_validity_bounded(const Formula& f, const KnowledgeBase& kb, const Bounds& b) {
  detail::SearchProblem p;
  p.kb = kb;
  if (const auto* inc = std::get_if<Inclusion>(&f)) {
    p.goal = Concept::conjunction(inc->sub, Concept::negation(inc->sup));
  } else if (const auto* eq = std::get_if<Equivalence>(&f)) {
    p.goal = Concept::disjunction(Concept::conjunction(eq->left, Concept::negation(eq->right)),
                                  Concept::conjunction(eq->right, Concept::negation(eq->left)));
  } else {
    const auto& a = std::get<Assertion>(f);
    if (const auto* ca = std::get_if<ConceptAssertion>(&a))
      p.kb.abox.emplace_back(ConceptAssertion{Concept::negation(ca->expr), ca->individual});
    else
      p.absent.push_back(std::get<RoleAssertion>(a));
  }
  return negate(solve(p, b), b);
}

ValidityVerdict check_validity_bounded(const Formula& f, const Signature& sig, const Bounds& b) {
  KnowledgeBase kb;
  kb.sig = sig;
  return check_validity_bounded(f, kb, b);
}

ModelVerdict find_model_by_enumeration(const KnowledgeBase& kb, const std::optional<Concept>& goal,
                                       const Bounds& b) {
  detail::SearchProblem p;
  p.kb = kb;
  p.goal = goal;
  std::optional<Interpretation> found;
  enumerate_interpretations(kb.sig, b, [&](const Interpretation& i) {
    if (!is_model(i, p)) return true;
    found = i;
    return false;
  });
  if (found) return Model{std::move(*found)};
  return NoModelUpToBound{b};
}

}  // namespace kedl
