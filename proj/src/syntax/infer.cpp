#include <cctype>
#include <set>

#include "kedl/parser.hpp"
#include "lexer.hpp"

namespace kedl {

Formula parse_formula(std::string_view text, const Signature& sig) {
  KnowledgeBase decls;
  decls.sig = sig;
  std::string source(text);
  while (!source.empty() && std::isspace(static_cast<unsigned char>(source.back()))) source.pop_back();
  if (source.empty() || source.back() != ';') source += ';';
  // Declarations go after the statement so that error positions refer to it.
  const KnowledgeBase kb = parse_kb(source + "\n" + print_kb(decls));
  const std::size_t count = kb.definitions.size() + kb.inclusions.size() + kb.abox.size();
  if (count != 1)
    throw ParseError({1, 1}, "expected exactly one inclusion or assertion, found " + std::to_string(count));
  if (!kb.inclusions.empty()) return kb.inclusions.front();
  if (!kb.abox.empty()) return kb.abox.front();
  const Definition& d = kb.definitions.front();
  return Equivalence{Concept::atom(d.atom, *sig.atom_sort(d.atom)), d.body};
}

Signature infer_signature(std::string_view text, const Signature& sig) {
  const std::vector<detail::Token> tokens = detail::tokenize(text);
  std::vector<std::string> roles, atoms;
  std::set<std::string> seen;
  bool inclusion = false;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const auto& t = tokens[i];
    if (t.is_symbol("<=")) inclusion = true;
    if (t.kind != detail::Token::Kind::Ident || is_reserved_word(t.text) || sig.declares(t.text)) continue;
    if (i > 0 && tokens[i - 1].is_symbol(":")) continue;  // top:attribute
    if (!seen.insert(t.text).second) continue;
    const bool role = i > 0 && (tokens[i - 1].is_word("some") || tokens[i - 1].is_word("all") ||
                                (i > 1 && tokens[i - 1].is_symbol("(") && tokens[i - 2].is_word("inv")));
    (role ? roles : atoms).push_back(t.text);
  }

  static constexpr RoleKind kRoleOrder[] = {RoleKind::Cross, RoleKind::ObjObj, RoleKind::AttrAttr};
  static constexpr Sort kAtomOrder[] = {Sort::Object, Sort::Attribute};
  const std::size_t names = roles.size() + atoms.size();
  double combinations = 1;
  for (std::size_t i = 0; i < roles.size(); ++i) combinations *= 3;
  for (std::size_t i = 0; i < atoms.size(); ++i) combinations *= 2;
  if (combinations > 65536)
    throw SortError(std::nullopt, "declarations", std::to_string(names) + " undeclared names",
                    "too many undeclared names to infer their sorts; declare them");

  std::vector<int> choice(names, 0);
  auto advance = [&] {
    for (std::size_t k = names; k-- > 0;) {
      if (++choice[k] < (k < roles.size() ? 3 : 2)) return true;
      choice[k] = 0;
    }
    return false;
  };
  std::optional<SortError> last;
  do {
    Signature candidate = sig;
    for (std::size_t i = 0; i < roles.size(); ++i) candidate.add_role(roles[i], kRoleOrder[choice[i]]);
    for (std::size_t i = 0; i < atoms.size(); ++i)
      candidate.add_atom(atoms[i], kAtomOrder[choice[roles.size() + i]]);
    try {
      if (inclusion)
        parse_formula(text, candidate);
      else
        parse_concept(text, candidate);
      return candidate;
    } catch (const SortError& e) {
      last = e;
    }
  } while (advance());
  throw *last;
}

}  // namespace kedl
