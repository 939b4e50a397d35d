#include "kedl/semantics.hpp"

#include "kedl/errors.hpp"

namespace kedl {

namespace {

// Elements with at least one successor (or, for inverse roles, predecessor)
// in filler.
ElementSet some_successor_in(const RoleRef& role, const ElementSet& filler, const Interpretation& i) {
  const RoleExtension& ext = i.role(role.name);
  if (role.kind == RoleKind::CrossInverse) {
    // u has an r^- successor in filler iff some x in filler has (x,u) in r.
    ElementSet out = i.empty_set(Sort::Attribute);
    for (auto x = filler.find_first(); x != ElementSet::npos; x = filler.find_next(x)) out |= ext.rows[x];
    return out;
  }
  ElementSet out = i.empty_set(source_sort(role.kind));
  for (std::size_t x = 0; x < ext.rows.size(); ++x)
    if (ext.rows[x].intersects(filler)) out.set(x);
  return out;
}

}  // namespace

ElementSet extension(const Concept& e, const Interpretation& i) {
  using K = Concept::Kind;
  switch (e.kind()) {
    case K::Top:
      return i.full_set(e.sort());
    case K::Bot:
      return i.empty_set(e.sort());
    case K::Atom:
      return i.atom(e.name());
    case K::Not:
      return ~extension(e.operand(), i);
    case K::And:
      return extension(e.left(), i) & extension(e.right(), i);
    case K::Or:
      return extension(e.left(), i) | extension(e.right(), i);
    case K::Implies:
      return ~extension(e.left(), i) | extension(e.right(), i);
    case K::Iff:
      return ~(extension(e.left(), i) ^ extension(e.right(), i));
    case K::Exists:
      return some_successor_in(e.role(), extension(e.operand(), i), i);
    case K::Forall:
      // all R.C = not some R.(not C)
      return ~some_successor_in(e.role(), ~extension(e.operand(), i), i);
  }
  throw std::logic_error("extension: unknown concept kind");
}

bool satisfies_assertion(const Interpretation& i, const Assertion& a) {
  auto resolve = [&](const std::string& name) {
    auto el = i.individual(name);
    if (!el) throw KbError("individual '" + name + "' is not mapped");
    return *el;
  };
  if (const auto* ca = std::get_if<ConceptAssertion>(&a)) {
    Element el = resolve(ca->individual);
    if (el.sort != ca->expr.sort()) return false;
    return extension(ca->expr, i).test(el.index);
  }
  const auto& ra = std::get<RoleAssertion>(a);
  Element s = resolve(ra.subject);
  Element o = resolve(ra.object);
  return i.role(ra.role).contains(s.index, o.index);
}

bool satisfies_formula(const Interpretation& i, const Formula& f, Reading reading) {
  if (const auto* a = std::get_if<Assertion>(&f)) return satisfies_assertion(i, *a);
  ElementSet l, r;
  if (const auto* inc = std::get_if<Inclusion>(&f)) {
    l = extension(inc->sub, i);
    r = extension(inc->sup, i);
    if (reading == Reading::Universal) return l.is_subset_of(r);
    return (~l | r).any();
  }
  const auto& eq = std::get<Equivalence>(f);
  l = extension(eq.left, i);
  r = extension(eq.right, i);
  if (reading == Reading::Universal) return l == r;
  return (~(l ^ r)).any();
}

bool satisfies_kb(const Interpretation& i, const KnowledgeBase& kb) {
  for (const auto& d : kb.definitions) {
    if (i.atom(d.atom) != extension(d.body, i)) return false;
  }
  for (const auto& inc : kb.inclusions)
    if (!extension(inc.sub, i).is_subset_of(extension(inc.sup, i))) return false;
  for (const auto& a : kb.abox)
    if (!satisfies_assertion(i, a)) return false;
  return true;
}

}  // namespace kedl
