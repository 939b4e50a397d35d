#include "kedl/parser.hpp"

#include <array>
#include <memory>
#include <set>
#include <sstream>

#include "kedl/errors.hpp"
#include "lexer.hpp"

namespace kedl {

using detail::Token;
using detail::TokenStream;

namespace {

constexpr std::array<std::string_view, 15> kReserved{
    "and",     "or",    "not",   "some",        "all",         "top",  "bot", "inv",
    "oconcept", "aconcept", "orole", "arole", "xrole", "oindividual", "aindividual"};

// Parsed but not yet sort-checked concept.
struct Raw {
  enum class K { Top, Bot, Name, Not, And, Or, Exists, Forall, Implies, Iff };
  K k;
  std::string name;  // atom or role name
  bool inverse = false;
  std::optional<Sort> annotated;  // top:attribute
  SourceLocation at;
  std::unique_ptr<Raw> a;
  std::unique_ptr<Raw> b;
};
using RawPtr = std::unique_ptr<Raw>;

RawPtr make_raw(Raw::K k, SourceLocation at, RawPtr a = nullptr, RawPtr b = nullptr) {
  auto r = std::make_unique<Raw>();
  r->k = k;
  r->at = at;
  r->a = std::move(a);
  r->b = std::move(b);
  return r;
}

class ConceptParser {
 public:
  explicit ConceptParser(TokenStream& ts) : ts_(ts) {}

  RawPtr arrow() {
    RawPtr left = disjunction();
    const Token& t = ts_.peek();
    if (t.is_symbol("=>") || t.is_symbol("<=>")) {
      const bool iff = t.is_symbol("<=>");
      const SourceLocation at = ts_.next().where;
      RawPtr right = arrow();
      return make_raw(iff ? Raw::K::Iff : Raw::K::Implies, at, std::move(left), std::move(right));
    }
    return left;
  }

  RawPtr unary() {
    const Token& t = ts_.peek();
    if (t.is_word("not")) {
      const SourceLocation at = ts_.next().where;
      return make_raw(Raw::K::Not, at, unary());
    }
    if (t.is_word("some") || t.is_word("all")) {
      const bool ex = t.is_word("some");
      const SourceLocation at = ts_.next().where;
      auto q = make_raw(ex ? Raw::K::Exists : Raw::K::Forall, at);
      if (ts_.accept_word("inv")) {
        ts_.expect_symbol("(");
        q->name = role_name();
        ts_.expect_symbol(")");
        q->inverse = true;
      } else {
        q->name = role_name();
        if (ts_.accept_symbol("^-")) q->inverse = true;
      }
      ts_.accept_symbol(".");
      q->a = unary();
      return q;
    }
    return primary();
  }

 private:
  RawPtr disjunction() {
    RawPtr left = conjunction();
    while (ts_.peek().is_word("or")) {
      const SourceLocation at = ts_.next().where;
      left = make_raw(Raw::K::Or, at, std::move(left), conjunction());
    }
    return left;
  }

  RawPtr conjunction() {
    RawPtr left = unary();
    while (ts_.peek().is_word("and")) {
      const SourceLocation at = ts_.next().where;
      left = make_raw(Raw::K::And, at, std::move(left), unary());
    }
    return left;
  }

  RawPtr primary() {
    const Token& t = ts_.peek();
    if (t.is_word("top") || t.is_word("bot")) {
      auto r = make_raw(t.is_word("top") ? Raw::K::Top : Raw::K::Bot, t.where);
      ts_.next();
      if (ts_.peek().is_symbol(":") &&
          (ts_.peek(1).is_word("object") || ts_.peek(1).is_word("attribute"))) {
        ts_.next();
        r->annotated = ts_.next().text == "object" ? Sort::Object : Sort::Attribute;
      }
      return r;
    }
    if (t.is_symbol("(")) {
      ts_.next();
      RawPtr inner = arrow();
      ts_.expect_symbol(")");
      return inner;
    }
    if (t.kind == Token::Kind::Ident && !is_reserved_word(t.text)) {
      auto r = make_raw(Raw::K::Name, t.where);
      r->name = t.text;
      ts_.next();
      return r;
    }
    ts_.fail(t, "expected a concept, found " + detail::describe(t));
  }

  std::string role_name() {
    const Token& t = ts_.peek();
    if (t.kind != Token::Kind::Ident || is_reserved_word(t.text))
      ts_.fail(t, "expected a role name, found " + detail::describe(t));
    return ts_.next().text;
  }

  TokenStream& ts_;
};

// Sort inference and checking of raw concepts against a signature.
class Elaborator {
 public:
  explicit Elaborator(const Signature& sig) : sig_(sig) {}

  Concept elaborate(const Raw& r, std::optional<Sort> expected) {
    std::optional<Sort> s = infer(r);
    if (expected && s && *s != *expected) mismatch(r.at, *expected, *s, "concept");
    return build(r, s ? *s : expected.value_or(Sort::Object));
  }

  std::optional<Sort> infer(const Raw& r) {
    switch (r.k) {
      case Raw::K::Top:
      case Raw::K::Bot:
        return r.annotated;
      case Raw::K::Name:
        return atom_sort(r);
      case Raw::K::Not:
        return infer(*r.a);
      case Raw::K::And:
      case Raw::K::Or:
      case Raw::K::Implies:
      case Raw::K::Iff: {
        auto a = infer(*r.a);
        auto b = infer(*r.b);
        if (a && b && *a != *b) mismatch(r.at, *a, *b, connective(r.k));
        return a ? a : b;
      }
      case Raw::K::Exists:
      case Raw::K::Forall: {
        RoleKind kind = role_kind(r);
        auto f = infer(*r.a);
        if (f && *f != target_sort(kind)) mismatch(r.a->at, target_sort(kind), *f, "role filler");
        return source_sort(kind);
      }
    }
    return std::nullopt;
  }

 private:
  Concept build(const Raw& r, Sort target) {
    switch (r.k) {
      case Raw::K::Top:
      case Raw::K::Bot:
        if (r.annotated && *r.annotated != target) mismatch(r.at, target, *r.annotated, "concept");
        return r.k == Raw::K::Top ? Concept::top(target) : Concept::bot(target);
      case Raw::K::Name: {
        Sort s = atom_sort(r);
        if (s != target) mismatch(r.at, target, s, "concept '" + r.name + "'");
        return Concept::atom(r.name, s);
      }
      case Raw::K::Not:
        return Concept::negation(build(*r.a, target));
      case Raw::K::And:
        return Concept::conjunction(build(*r.a, target), build(*r.b, target));
      case Raw::K::Or:
        return Concept::disjunction(build(*r.a, target), build(*r.b, target));
      case Raw::K::Implies:
        return Concept::implication(build(*r.a, target), build(*r.b, target));
      case Raw::K::Iff:
        return Concept::equivalence(build(*r.a, target), build(*r.b, target));
      case Raw::K::Exists:
      case Raw::K::Forall: {
        RoleKind kind = role_kind(r);
        if (source_sort(kind) != target) mismatch(r.at, target, source_sort(kind), "quantified concept");
        RoleRef role{r.name, kind};
        Concept filler = build(*r.a, target_sort(kind));
        return r.k == Raw::K::Exists ? Concept::exists(role, filler) : Concept::forall(role, filler);
      }
    }
    throw std::logic_error("elaborate: unknown raw kind");
  }

  Sort atom_sort(const Raw& r) const {
    if (auto s = sig_.atom_sort(r.name)) return *s;
    if (sig_.declares(r.name))
      throw SortError(r.at, "concept name", "other name",
                      "'" + r.name + "' is not a concept name");
    throw SortError(r.at, "declared concept", "undeclared name",
                    "undeclared concept name '" + r.name + "'");
  }

  RoleKind role_kind(const Raw& r) const {
    auto kind = sig_.role_kind(r.name);
    if (!kind) {
      if (sig_.declares(r.name))
        throw SortError(r.at, "role name", "other name", "'" + r.name + "' is not a role name");
      throw SortError(r.at, "declared role", "undeclared name",
                      "undeclared role name '" + r.name + "'");
    }
    if (!r.inverse) return *kind;
    if (*kind != RoleKind::Cross)
      throw SortError(r.at, std::string(to_string(RoleKind::Cross)), std::string(to_string(*kind)),
                      "only cross roles have inverses; '" + r.name + "' is an " +
                          std::string(to_string(*kind)));
    return RoleKind::CrossInverse;
  }

  static std::string connective(Raw::K k) {
    switch (k) {
      case Raw::K::And:
        return "conjunction";
      case Raw::K::Or:
        return "disjunction";
      case Raw::K::Implies:
        return "implication";
      default:
        return "equivalence";
    }
  }

  [[noreturn]] static void mismatch(SourceLocation at, Sort expected, Sort found, const std::string& what) {
    throw SortError(at, std::string(to_string(expected)), std::string(to_string(found)),
                    "sort mismatch in " + what + ": expected " + std::string(to_string(expected)) +
                        ", found " + std::string(to_string(found)));
  }

  const Signature& sig_;
};

// Knowledge-base statements collected in the first pass.
struct RawDefinition {
  std::string atom;
  SourceLocation at;
  RawPtr body;
};
struct RawInclusion {
  RawPtr sub;
  RawPtr sup;
};
struct RawConceptAssertion {
  RawPtr expr;
  std::string individual;
  SourceLocation at;
};
struct RawRoleAssertion {
  std::string role;
  std::string subject;
  std::string object;
  SourceLocation at;
};

}  // namespace

bool is_reserved_word(std::string_view word) {
  for (auto r : kReserved)
    if (r == word) return true;
  return false;
}

Concept parse_concept(std::string_view text, const Signature& sig, std::optional<Sort> expected) {
  TokenStream ts(detail::tokenize(text));
  ConceptParser parser(ts);
  RawPtr raw = parser.arrow();
  if (!ts.at_end()) ts.fail(ts.peek(), "unexpected " + detail::describe(ts.peek()) + " after concept");
  return Elaborator(sig).elaborate(*raw, expected);
}

KnowledgeBase parse_kb(std::string_view text) {
  TokenStream ts(detail::tokenize(text));
  ConceptParser cp(ts);
  KnowledgeBase kb;
  std::vector<RawDefinition> defs;
  std::vector<RawInclusion> incs;
  // Assertions keep their relative order.
  std::vector<std::variant<RawConceptAssertion, RawRoleAssertion>> abox;

  auto declare = [&](const Token& at, auto&& fn) {
    do {
      const Token& name = ts.expect_ident("a name");
      if (is_reserved_word(name.text)) ts.fail(name, "reserved word '" + name.text + "' used as a name");
      try {
        fn(name.text);
      } catch (const KbError& e) {
        throw KbError(to_string(name.where) + ": " + e.what());
      }
    } while (ts.accept_symbol(","));
    (void)at;
    ts.expect_symbol(";");
  };

  auto individual_args = [&](std::vector<std::string>& args) {
    ts.expect_symbol("(");
    do {
      args.push_back(ts.expect_ident("an individual name").text);
    } while (ts.accept_symbol(","));
    ts.expect_symbol(")");
  };

  while (!ts.at_end()) {
    const Token& t = ts.peek();
    if (t.is_word("oconcept") || t.is_word("aconcept")) {
      Sort s = t.is_word("oconcept") ? Sort::Object : Sort::Attribute;
      declare(ts.next(), [&](const std::string& n) { kb.sig.add_atom(n, s); });
      continue;
    }
    if (t.is_word("orole") || t.is_word("arole") || t.is_word("xrole")) {
      RoleKind k = t.is_word("orole") ? RoleKind::ObjObj
                   : t.is_word("arole") ? RoleKind::AttrAttr
                                        : RoleKind::Cross;
      declare(ts.next(), [&](const std::string& n) { kb.sig.add_role(n, k); });
      continue;
    }
    if (t.is_word("oindividual") || t.is_word("aindividual")) {
      Sort s = t.is_word("oindividual") ? Sort::Object : Sort::Attribute;
      declare(ts.next(), [&](const std::string& n) { kb.sig.add_individual(n, s); });
      continue;
    }

    const bool name_start = t.kind == Token::Kind::Ident && !is_reserved_word(t.text);
    if (name_start && ts.peek(1).is_symbol(":=")) {
      RawDefinition d{t.text, t.where, nullptr};
      ts.next();
      ts.next();
      d.body = cp.arrow();
      ts.expect_symbol(";");
      defs.push_back(std::move(d));
      continue;
    }
    if (name_start && ts.peek(1).is_symbol("(")) {
      const Token head = ts.next();
      std::vector<std::string> args;
      individual_args(args);
      ts.expect_symbol(";");
      if (args.size() == 1) {
        auto c = make_raw(Raw::K::Name, head.where);
        c->name = head.text;
        abox.emplace_back(RawConceptAssertion{std::move(c), args[0], head.where});
      } else if (args.size() == 2) {
        abox.emplace_back(RawRoleAssertion{head.text, args[0], args[1], head.where});
      } else {
        ts.fail(head, "assertions take one or two individuals");
      }
      continue;
    }
    if (t.is_symbol("(")) {
      // "(concept)(ind);" or an inclusion whose left side starts with "(".
      const std::size_t start = ts.position();
      const SourceLocation at = t.where;
      ts.next();
      RawPtr inner = cp.arrow();
      ts.expect_symbol(")");
      if (ts.peek().is_symbol("(")) {
        std::vector<std::string> args;
        individual_args(args);
        ts.expect_symbol(";");
        if (args.size() != 1) ts.fail(ts.peek(), "concept assertions take one individual");
        abox.emplace_back(RawConceptAssertion{std::move(inner), args[0], at});
        continue;
      }
      ts.reset(start);
    }
    RawInclusion inc;
    inc.sub = cp.arrow();
    ts.expect_symbol("<=");
    inc.sup = cp.arrow();
    ts.expect_symbol(";");
    incs.push_back(std::move(inc));
  }

  Elaborator el(kb.sig);
  for (auto& d : defs) {
    auto s = kb.sig.atom_sort(d.atom);
    if (!s) throw KbError(to_string(d.at) + ": definition of undeclared concept '" + d.atom + "'");
    if (kb.definition_of(d.atom))
      throw KbError(to_string(d.at) + ": concept '" + d.atom + "' is defined twice");
    kb.definitions.push_back({d.atom, el.elaborate(*d.body, *s)});
  }
  for (auto& inc : incs) {
    auto a = el.infer(*inc.sub);
    auto b = el.infer(*inc.sup);
    if (a && b && *a != *b)
      throw SortError(inc.sub->at, std::string(to_string(*a)), std::string(to_string(*b)),
                      "inclusion between concepts of different sorts");
    std::optional<Sort> s = a ? a : b;
    kb.inclusions.push_back({el.elaborate(*inc.sub, s), el.elaborate(*inc.sup, s)});
  }
  for (auto& entry : abox) {
    if (auto* ca = std::get_if<RawConceptAssertion>(&entry)) {
      auto s = kb.sig.individual_sort(ca->individual);
      if (!s)
        throw SortError(ca->at, "declared individual", "undeclared name",
                        "undeclared individual '" + ca->individual + "'");
      if (ca->expr->k == Raw::K::Name && kb.sig.role_kind(ca->expr->name))
        throw SortError(ca->at, "two individuals", "one individual",
                        "role assertion '" + ca->expr->name + "' needs two individuals");
      auto cs = el.infer(*ca->expr);
      if (cs && *cs != *s)
        throw SortError(ca->at, std::string(to_string(*cs)), std::string(to_string(*s)),
                        std::string(to_string(*s)) + " individual '" + ca->individual +
                            "' asserted into " + std::string(to_string(*cs)) + " concept");
      kb.abox.emplace_back(ConceptAssertion{el.elaborate(*ca->expr, *s), ca->individual});
    } else {
      auto& ra = std::get<RawRoleAssertion>(entry);
      if (!kb.sig.role_kind(ra.role))
        throw SortError(ra.at, "declared role", "undeclared name", "undeclared role '" + ra.role + "'");
      kb.abox.emplace_back(RoleAssertion{ra.role, ra.subject, ra.object});
    }
  }
  check_kb(kb);
  return kb;
}

namespace {

bool sort_is_fixed(const Concept& c) {
  using K = Concept::Kind;
  switch (c.kind()) {
    case K::Top:
    case K::Bot:
      return false;
    case K::Atom:
    case K::Exists:
    case K::Forall:
      return true;
    case K::Not:
      return sort_is_fixed(c.operand());
    default:
      return sort_is_fixed(c.left()) || sort_is_fixed(c.right());
  }
}

}  // namespace

std::string print_kb(const KnowledgeBase& kb) {
  std::ostringstream out;
  for (const auto& e : kb.sig.entries()) {
    switch (e.category) {
      case Signature::Category::Atom:
        out << (e.sort == Sort::Object ? "oconcept " : "aconcept ");
        break;
      case Signature::Category::Role:
        out << (e.kind == RoleKind::ObjObj ? "orole " : e.kind == RoleKind::AttrAttr ? "arole " : "xrole ");
        break;
      case Signature::Category::Individual:
        out << (e.sort == Sort::Object ? "oindividual " : "aindividual ");
        break;
    }
    out << e.name << ";\n";
  }
  for (const auto& d : kb.definitions) out << d.atom << " := " << d.body.to_string() << ";\n";
  for (const auto& inc : kb.inclusions) {
    const bool fixed = sort_is_fixed(inc.sub) || sort_is_fixed(inc.sup);
    if (fixed)
      out << inc.sub.to_string() << " <= " << inc.sup.to_string() << ";\n";
    else
      out << to_string_sorted(inc.sub) << " <= " << to_string_sorted(inc.sup) << ";\n";
  }
  for (const auto& a : kb.abox) {
    if (const auto* ca = std::get_if<ConceptAssertion>(&a)) {
      if (ca->expr.is(Concept::Kind::Atom))
        out << ca->expr.name() << "(" << ca->individual << ");\n";
      else
        out << "(" << ca->expr.to_string() << ")(" << ca->individual << ");\n";
    } else {
      const auto& ra = std::get<RoleAssertion>(a);
      out << ra.role << "(" << ra.subject << ", " << ra.object << ");\n";
    }
  }
  return out.str();
}

}  // namespace kedl
