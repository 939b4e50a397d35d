#include "kedl/interpretation.hpp"

#include <algorithm>
#include <sstream>

#include "kedl/errors.hpp"
#include "lexer.hpp"

namespace kedl {

std::string_view to_string(Functionality mode) {
  switch (mode) {
    case Functionality::AtMostOne:
      return "at-most-one";
    case Functionality::ExactlyOne:
      return "exactly-one";
    case Functionality::Unrestricted:
      return "unrestricted";
  }
  return "?";
}

std::optional<Functionality> parse_functionality(std::string_view text) {
  for (auto m : {Functionality::AtMostOne, Functionality::ExactlyOne, Functionality::Unrestricted})
    if (to_string(m) == text) return m;
  return std::nullopt;
}

namespace {

std::vector<std::string> default_names(char prefix, std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) names.push_back(prefix + std::to_string(k));
  return names;
}

}  // namespace

Interpretation::Interpretation(Signature sig, std::size_t delta, std::size_t sigma, Functionality mode)
    : sig_(std::move(sig)),
      delta_(delta),
      sigma_(sigma),
      mode_(mode),
      delta_names_(default_names('x', delta)),
      sigma_names_(default_names('u', sigma)) {
  for (const auto& e : sig_.entries()) {
    if (e.category == Signature::Category::Atom) {
      atoms_.emplace(e.name, ElementSet(domain_size(e.sort)));
    } else if (e.category == Signature::Category::Role) {
      RoleExtension ext;
      ext.rows.assign(domain_size(source_sort(e.kind)), ElementSet(domain_size(target_sort(e.kind))));
      roles_.emplace(e.name, std::move(ext));
    }
  }
}

const std::string& Interpretation::element_name(Sort s, std::size_t index) const {
  return s == Sort::Object ? delta_names_.at(index) : sigma_names_.at(index);
}

void Interpretation::set_element_names(Sort s, std::vector<std::string> names) {
  if (names.size() != domain_size(s)) throw std::invalid_argument("element name count differs from domain size");
  (s == Sort::Object ? delta_names_ : sigma_names_) = std::move(names);
}

const ElementSet& Interpretation::atom(std::string_view name) const {
  auto it = atoms_.find(name);
  if (it == atoms_.end()) throw KbError("undeclared concept name '" + std::string(name) + "'");
  return it->second;
}

ElementSet& Interpretation::atom(std::string_view name) {
  return const_cast<ElementSet&>(std::as_const(*this).atom(name));
}

const RoleExtension& Interpretation::role(std::string_view name) const {
  auto it = roles_.find(name);
  if (it == roles_.end()) throw KbError("undeclared role name '" + std::string(name) + "'");
  return it->second;
}

RoleExtension& Interpretation::role(std::string_view name) {
  return const_cast<RoleExtension&>(std::as_const(*this).role(name));
}

std::optional<Element> Interpretation::individual(std::string_view name) const {
  auto it = individuals_.find(name);
  if (it == individuals_.end()) return std::nullopt;
  return it->second;
}

void Interpretation::set_individual(const std::string& name, Element e) { individuals_[name] = e; }

std::vector<Violation> validate_interpretation(const Interpretation& i) {
  std::vector<Violation> out;
  if (i.domain_size(Sort::Object) == 0) out.push_back({"delta", "non-empty domain required"});
  if (i.domain_size(Sort::Attribute) == 0) out.push_back({"sigma", "non-empty domain required"});
  const Signature& sig = i.signature();
  for (const auto& e : sig.entries()) {
    switch (e.category) {
      case Signature::Category::Atom:
        if (i.atom(e.name).size() != i.domain_size(e.sort))
          out.push_back({e.name, "extension outside the " + std::string(to_string(e.sort)) + " domain"});
        break;
      case Signature::Category::Role: {
        const RoleExtension& ext = i.role(e.name);
        const Sort from = source_sort(e.kind);
        const Sort to = target_sort(e.kind);
        if (ext.rows.size() != i.domain_size(from)) {
          out.push_back({e.name, "role rows do not match the source domain"});
          break;
        }
        for (std::size_t x = 0; x < ext.rows.size(); ++x) {
          if (ext.rows[x].size() != i.domain_size(to)) {
            out.push_back({e.name, "role targets outside the " + std::string(to_string(to)) + " domain"});
            break;
          }
          if (e.kind != RoleKind::Cross) continue;
          const std::size_t n = ext.rows[x].count();
          const std::string at = "(" + e.name + ", " + i.element_name(Sort::Object, x) + ")";
          if (i.mode() == Functionality::AtMostOne && n > 1)
            out.push_back({at, "cross role has " + std::to_string(n) + " successors, at most one allowed"});
          if (i.mode() == Functionality::ExactlyOne && n != 1)
            out.push_back({at, "cross role has " + std::to_string(n) + " successors, exactly one required"});
        }
        break;
      }
      case Signature::Category::Individual: {
        auto el = i.individual(e.name);
        if (!el)
          out.push_back({e.name, "individual is not mapped"});
        else if (el->sort != e.sort || el->index >= i.domain_size(e.sort))
          out.push_back({e.name, "individual mapped outside the " + std::string(to_string(e.sort)) + " domain"});
        break;
      }
    }
  }
  return out;
}

namespace {

std::vector<const Signature::Entry*> sorted_entries(const Signature& sig, Signature::Category cat) {
  std::vector<const Signature::Entry*> out;
  for (const auto& e : sig.entries())
    if (e.category == cat) out.push_back(&e);
  std::sort(out.begin(), out.end(), [](auto* a, auto* b) { return a->name < b->name; });
  return out;
}

}  // namespace

std::string serialize_interpretation(const Interpretation& i) {
  std::ostringstream out;
  for (Sort s : {Sort::Object, Sort::Attribute}) {
    out << (s == Sort::Object ? "delta:" : "sigma:");
    for (std::size_t k = 0; k < i.domain_size(s); ++k) out << ' ' << i.element_name(s, k);
    out << ";\n";
  }
  const Signature& sig = i.signature();
  for (const auto* e : sorted_entries(sig, Signature::Category::Atom)) {
    out << e->name << " = {";
    const ElementSet& ext = i.atom(e->name);
    bool first = true;
    for (auto k = ext.find_first(); k != ElementSet::npos; k = ext.find_next(k)) {
      out << (first ? "" : ", ") << i.element_name(e->sort, k);
      first = false;
    }
    out << "};\n";
  }
  for (const auto* e : sorted_entries(sig, Signature::Category::Role)) {
    out << e->name << " = {";
    const RoleExtension& ext = i.role(e->name);
    bool first = true;
    for (std::size_t x = 0; x < ext.rows.size(); ++x) {
      for (auto y = ext.rows[x].find_first(); y != ElementSet::npos; y = ext.rows[x].find_next(y)) {
        out << (first ? "" : ", ") << '(' << i.element_name(source_sort(e->kind), x) << ','
            << i.element_name(target_sort(e->kind), y) << ')';
        first = false;
      }
    }
    out << "};\n";
  }
  for (const auto* e : sorted_entries(sig, Signature::Category::Individual)) {
    if (auto el = i.individual(e->name))
      out << "ind " << e->name << " = " << i.element_name(el->sort, el->index) << ";\n";
  }
  return out.str();
}

Interpretation parse_interpretation(std::string_view text, const Signature& sig, Functionality mode) {
  using detail::Token;
  detail::TokenStream ts(detail::tokenize(text));
  std::vector<std::string> names[2];
  for (Sort s : {Sort::Object, Sort::Attribute}) {
    const char* head = s == Sort::Object ? "delta" : "sigma";
    if (!ts.accept_word(head)) ts.fail(ts.peek(), std::string("expected '") + head + ":'");
    ts.expect_symbol(":");
    auto& list = names[s == Sort::Object ? 0 : 1];
    while (!ts.peek().is_symbol(";")) list.push_back(ts.expect_ident("an element name").text);
    ts.expect_symbol(";");
  }
  Interpretation i(sig, names[0].size(), names[1].size(), mode);
  auto lookup = [&](Sort s, const Token& t) {
    const auto& list = names[s == Sort::Object ? 0 : 1];
    auto it = std::find(list.begin(), list.end(), t.text);
    if (it == list.end())
      ts.fail(t, "'" + t.text + "' is not an element of the " + std::string(to_string(s)) + " domain");
    return static_cast<std::size_t>(it - list.begin());
  };
  i.set_element_names(Sort::Object, names[0]);
  i.set_element_names(Sort::Attribute, names[1]);

  while (!ts.at_end()) {
    if (ts.accept_word("ind")) {
      const Token& name = ts.expect_ident("an individual name");
      auto s = sig.individual_sort(name.text);
      if (!s) ts.fail(name, "undeclared individual '" + name.text + "'");
      ts.expect_symbol("=");
      const Token& el = ts.expect_ident("an element name");
      i.set_individual(name.text, {*s, lookup(*s, el)});
      ts.expect_symbol(";");
      continue;
    }
    const Token& name = ts.expect_ident("a concept or role name");
    ts.expect_symbol("=");
    ts.expect_symbol("{");
    if (auto s = sig.atom_sort(name.text)) {
      ElementSet& ext = i.atom(name.text);
      if (!ts.peek().is_symbol("}")) {
        do {
          ext.set(lookup(*s, ts.expect_ident("an element name")));
        } while (ts.accept_symbol(","));
      }
    } else if (auto k = sig.role_kind(name.text)) {
      RoleExtension& ext = i.role(name.text);
      if (!ts.peek().is_symbol("}")) {
        do {
          ts.expect_symbol("(");
          std::size_t x = lookup(source_sort(*k), ts.expect_ident("an element name"));
          ts.expect_symbol(",");
          std::size_t y = lookup(target_sort(*k), ts.expect_ident("an element name"));
          ts.expect_symbol(")");
          ext.insert(x, y);
        } while (ts.accept_symbol(","));
      }
    } else {
      ts.fail(name, "'" + name.text + "' is not a declared concept or role");
    }
    ts.expect_symbol("}");
    ts.expect_symbol(";");
  }
  return i;
}

}  // namespace kedl
