#include "kedl/kb.hpp"

#include <functional>
#include <map>
#include <set>

#include "kedl/errors.hpp"

namespace kedl {

const Definition* KnowledgeBase::definition_of(const std::string& atom) const {
  for (const auto& d : definitions)
    if (d.atom == atom) return &d;
  return nullptr;
}

bool KnowledgeBase::empty() const {
  return sig.empty() && definitions.empty() && inclusions.empty() && abox.empty();
}

namespace {

[[noreturn]] void sort_mismatch(const Concept& at, Sort expected, Sort found) {
  throw SortError(std::nullopt, std::string(to_string(expected)), std::string(to_string(found)),
                  "expected " + std::string(to_string(expected)) + " concept, found " +
                      std::string(to_string(found)) + " concept in '" + at.to_string() + "'");
}

}  // namespace

Sort check_sort(const Concept& c, const Signature& sig) {
  using K = Concept::Kind;
  switch (c.kind()) {
    case K::Top:
    case K::Bot:
      return c.sort();
    case K::Atom: {
      auto declared = sig.atom_sort(c.name());
      if (!declared)
        throw SortError(std::nullopt, "declared concept", "undeclared name",
                        "undeclared concept name '" + c.name() + "'");
      if (*declared != c.sort()) sort_mismatch(c, *declared, c.sort());
      return *declared;
    }
    case K::Not:
      return check_sort(c.operand(), sig);
    case K::And:
    case K::Or:
    case K::Implies:
    case K::Iff: {
      Sort l = check_sort(c.left(), sig);
      Sort r = check_sort(c.right(), sig);
      if (l != r) sort_mismatch(c, l, r);
      return l;
    }
    case K::Exists:
    case K::Forall: {
      const RoleRef& role = c.role();
      auto declared = sig.role_kind(role.name);
      if (!declared)
        throw SortError(std::nullopt, "declared role", "undeclared name",
                        "undeclared role name '" + role.name + "'");
      const bool fits = *declared == role.kind ||
                        (role.kind == RoleKind::CrossInverse && *declared == RoleKind::Cross);
      if (!fits)
        throw SortError(std::nullopt, std::string(to_string(*declared)),
                        std::string(to_string(role.kind)),
                        "role '" + role.name + "' is declared as " + std::string(to_string(*declared)) +
                            " but used as " + std::string(to_string(role.kind)));
      Sort filler = check_sort(c.operand(), sig);
      if (filler != target_sort(role.kind)) sort_mismatch(c.operand(), target_sort(role.kind), filler);
      return source_sort(role.kind);
    }
  }
  throw std::logic_error("check_sort: unknown kind");
}

std::vector<std::string> definition_order(const KnowledgeBase& kb) {
  std::map<std::string, const Definition*> defs;
  for (const auto& d : kb.definitions) defs.emplace(d.atom, &d);

  std::vector<std::string> order;
  std::map<std::string, int> state;  // 1 = on stack, 2 = done
  std::function<void(const std::string&)> visit = [&](const std::string& atom) {
    int& s = state[atom];
    if (s == 2) return;
    if (s == 1) throw KbError("cyclic definition involving '" + atom + "'");
    s = 1;
    for (const auto& dep : vocabulary_of(defs.at(atom)->body).atoms)
      if (defs.count(dep)) visit(dep);
    state[atom] = 2;
    order.push_back(atom);
  };
  for (const auto& d : kb.definitions) visit(d.atom);
  return order;
}

void check_kb(const KnowledgeBase& kb) {
  std::set<std::string> defined;
  for (const auto& d : kb.definitions) {
    auto sort = kb.sig.atom_sort(d.atom);
    if (!sort) throw KbError("definition of undeclared concept '" + d.atom + "'");
    if (!defined.insert(d.atom).second) throw KbError("concept '" + d.atom + "' is defined twice");
    Sort body = check_sort(d.body, kb.sig);
    if (body != *sort)
      throw SortError(std::nullopt, std::string(to_string(*sort)), std::string(to_string(body)),
                      "definition of " + std::string(to_string(*sort)) + " concept '" + d.atom +
                          "' has a " + std::string(to_string(body)) + " body");
  }
  definition_order(kb);

  for (const auto& inc : kb.inclusions) {
    Sort l = check_sort(inc.sub, kb.sig);
    Sort r = check_sort(inc.sup, kb.sig);
    if (l != r)
      throw SortError(std::nullopt, std::string(to_string(l)), std::string(to_string(r)),
                      "inclusion between concepts of different sorts: '" + inc.sub.to_string() +
                          "' <= '" + inc.sup.to_string() + "'");
  }

  auto individual = [&](const std::string& name) {
    auto s = kb.sig.individual_sort(name);
    if (!s)
      throw SortError(std::nullopt, "declared individual", "undeclared name",
                      "undeclared individual '" + name + "'");
    return *s;
  };

  for (const auto& a : kb.abox) {
    if (const auto* ca = std::get_if<ConceptAssertion>(&a)) {
      Sort c = check_sort(ca->expr, kb.sig);
      Sort i = individual(ca->individual);
      if (c != i)
        throw SortError(std::nullopt, std::string(to_string(c)), std::string(to_string(i)),
                        std::string(to_string(i)) + " individual '" + ca->individual +
                            "' asserted into " + std::string(to_string(c)) + " concept '" +
                            ca->expr.to_string() + "'");
    } else {
      const auto& ra = std::get<RoleAssertion>(a);
      auto kind = kb.sig.role_kind(ra.role);
      if (!kind)
        throw SortError(std::nullopt, "declared role", "undeclared name",
                        "undeclared role '" + ra.role + "'");
      Sort s = individual(ra.subject);
      Sort o = individual(ra.object);
      if (s != source_sort(*kind) || o != target_sort(*kind))
        throw SortError(std::nullopt,
                        std::string(to_string(source_sort(*kind))) + "," +
                            std::string(to_string(target_sort(*kind))),
                        std::string(to_string(s)) + "," + std::string(to_string(o)),
                        "role assertion " + ra.role + "(" + ra.subject + ", " + ra.object +
                            ") does not match the signature of " + std::string(to_string(*kind)) +
                            " '" + ra.role + "'");
    }
  }
}

}  // namespace kedl
