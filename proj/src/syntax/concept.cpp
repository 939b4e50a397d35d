#include "kedl/concept.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <tuple>

namespace kedl {

struct Concept::Node {
  Kind kind;
  Sort sort;
  std::string name;
  RoleRef role;
  std::optional<Concept> left;  // operand for unary nodes
  std::optional<Concept> right;
  std::size_t hash = 0;
  std::size_t size = 1;
  std::size_t depth = 0;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::shared_ptr<Concept::Node> make_node(Concept::Kind kind, Sort sort) {
  auto n = std::make_shared<Concept::Node>();
  n->kind = kind;
  n->sort = sort;
  n->hash = mix(static_cast<std::size_t>(kind) * 31 + 7, static_cast<std::size_t>(sort));
  return n;
}

}  // namespace

Concept::Concept(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Concept::Concept() {
  static const Concept object_top = top(Sort::Object);
  node_ = object_top.node_;
}

Concept Concept::top(Sort sort) { return Concept(make_node(Kind::Top, sort)); }
Concept Concept::bot(Sort sort) { return Concept(make_node(Kind::Bot, sort)); }

Concept Concept::atom(std::string name, Sort sort) {
  auto n = make_node(Kind::Atom, sort);
  n->hash = mix(n->hash, std::hash<std::string>{}(name));
  n->name = std::move(name);
  return Concept(std::move(n));
}

Concept Concept::negation(Concept operand) {
  auto n = make_node(Kind::Not, operand.sort());
  n->hash = mix(n->hash, operand.hash());
  n->size = operand.size() + 1;
  n->depth = operand.depth() + 1;
  n->left = std::move(operand);
  return Concept(std::move(n));
}

Concept Concept::binary(Kind kind, Concept left, Concept right) {
  auto n = make_node(kind, left.sort());
  n->hash = mix(mix(n->hash, left.hash()), right.hash());
  n->size = left.size() + right.size() + 1;
  n->depth = std::max(left.depth(), right.depth()) + 1;
  n->left = std::move(left);
  n->right = std::move(right);
  return Concept(std::move(n));
}

Concept Concept::quantifier(Kind kind, RoleRef role, Concept filler) {
  auto n = make_node(kind, source_sort(role.kind));
  n->hash = mix(mix(mix(n->hash, std::hash<std::string>{}(role.name)),
                    static_cast<std::size_t>(role.kind)),
                filler.hash());
  n->size = filler.size() + 1;
  n->depth = filler.depth() + 1;
  n->role = std::move(role);
  n->left = std::move(filler);
  return Concept(std::move(n));
}

Concept Concept::conjunction(Concept l, Concept r) { return binary(Kind::And, std::move(l), std::move(r)); }
Concept Concept::disjunction(Concept l, Concept r) { return binary(Kind::Or, std::move(l), std::move(r)); }
Concept Concept::implication(Concept l, Concept r) {
  return binary(Kind::Implies, std::move(l), std::move(r));
}
Concept Concept::equivalence(Concept l, Concept r) { return binary(Kind::Iff, std::move(l), std::move(r)); }
Concept Concept::exists(RoleRef role, Concept filler) {
  return quantifier(Kind::Exists, std::move(role), std::move(filler));
}
Concept Concept::forall(RoleRef role, Concept filler) {
  return quantifier(Kind::Forall, std::move(role), std::move(filler));
}

Concept::Kind Concept::kind() const { return node_->kind; }
Sort Concept::sort() const { return node_->sort; }

const std::string& Concept::name() const {
  if (node_->kind != Kind::Atom) throw std::logic_error("Concept::name on non-atom");
  return node_->name;
}

const RoleRef& Concept::role() const {
  if (!is_quantifier()) throw std::logic_error("Concept::role on non-quantifier");
  return node_->role;
}

const Concept& Concept::operand() const {
  if (node_->kind != Kind::Not && !is_quantifier()) throw std::logic_error("Concept::operand");
  return *node_->left;
}

const Concept& Concept::left() const {
  if (!is_binary()) throw std::logic_error("Concept::left on non-binary");
  return *node_->left;
}

const Concept& Concept::right() const {
  if (!is_binary()) throw std::logic_error("Concept::right on non-binary");
  return *node_->right;
}

bool Concept::is_binary() const {
  auto k = node_->kind;
  return k == Kind::And || k == Kind::Or || k == Kind::Implies || k == Kind::Iff;
}

bool Concept::is_quantifier() const { return node_->kind == Kind::Exists || node_->kind == Kind::Forall; }

std::size_t Concept::hash() const { return node_->hash; }
std::size_t Concept::size() const { return node_->size; }
std::size_t Concept::depth() const { return node_->depth; }

bool operator==(const Concept& a, const Concept& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.hash != y.hash || x.kind != y.kind || x.sort != y.sort || x.size != y.size) return false;
  switch (x.kind) {
    case Concept::Kind::Top:
    case Concept::Kind::Bot:
      return true;
    case Concept::Kind::Atom:
      return x.name == y.name;
    case Concept::Kind::Not:
      return *x.left == *y.left;
    case Concept::Kind::Exists:
    case Concept::Kind::Forall:
      return x.role == y.role && *x.left == *y.left;
    default:
      return *x.left == *y.left && *x.right == *y.right;
  }
}

bool operator<(const Concept& a, const Concept& b) {
  if (a.node_ == b.node_) return false;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (std::tie(x.kind, x.sort) != std::tie(y.kind, y.sort))
    return std::tie(x.kind, x.sort) < std::tie(y.kind, y.sort);
  switch (x.kind) {
    case Concept::Kind::Top:
    case Concept::Kind::Bot:
      return false;
    case Concept::Kind::Atom:
      return x.name < y.name;
    case Concept::Kind::Not:
      return *x.left < *y.left;
    case Concept::Kind::Exists:
    case Concept::Kind::Forall:
      if (x.role != y.role) return x.role < y.role;
      return *x.left < *y.left;
    default:
      if (*x.left != *y.left) return *x.left < *y.left;
      return *x.right < *y.right;
  }
}

// Printing. Precedence levels: 1 arrows (right associative), 2 or, 3 and,
// 4 not and quantifiers, 5 primaries.
namespace {

int precedence(Concept::Kind k) {
  using K = Concept::Kind;
  switch (k) {
    case K::Implies:
    case K::Iff:
      return 1;
    case K::Or:
      return 2;
    case K::And:
      return 3;
    case K::Not:
    case K::Exists:
    case K::Forall:
      return 4;
    default:
      return 5;
  }
}

void print(const Concept& c, int min_prec, std::string& out, bool sorted) {
  using K = Concept::Kind;
  const int prec = precedence(c.kind());
  const bool parens = prec < min_prec;
  if (parens) out += '(';
  switch (c.kind()) {
    case K::Top:
      out += "top";
      if (sorted) out += c.sort() == Sort::Object ? ":object" : ":attribute";
      break;
    case K::Bot:
      out += "bot";
      if (sorted) out += c.sort() == Sort::Object ? ":object" : ":attribute";
      break;
    case K::Atom:
      out += c.name();
      break;
    case K::Not:
      out += "not ";
      print(c.operand(), 4, out, sorted);
      break;
    case K::Exists:
    case K::Forall:
      out += c.is(K::Exists) ? "some " : "all ";
      if (c.role().kind == RoleKind::CrossInverse)
        out += "inv(" + c.role().name + ")";
      else
        out += c.role().name;
      out += ' ';
      print(c.operand(), 4, out, sorted);
      break;
    case K::And:
      print(c.left(), 3, out, sorted);
      out += " and ";
      print(c.right(), 4, out, sorted);
      break;
    case K::Or:
      print(c.left(), 2, out, sorted);
      out += " or ";
      print(c.right(), 3, out, sorted);
      break;
    case K::Implies:
    case K::Iff:
      print(c.left(), 2, out, sorted);
      out += c.is(K::Implies) ? " => " : " <=> ";
      print(c.right(), 1, out, sorted);
      break;
  }
  if (parens) out += ')';
}

}  // namespace

std::string Concept::to_string() const {
  std::string out;
  print(*this, 0, out, false);
  return out;
}

std::string to_string_sorted(const Concept& c) {
  std::string out;
  print(c, 0, out, true);
  return out;
}

Concept desugar(const Concept& c) {
  using K = Concept::Kind;
  switch (c.kind()) {
    case K::Top:
    case K::Bot:
    case K::Atom:
      return c;
    case K::Not: {
      Concept inner = desugar(c.operand());
      return inner == c.operand() ? c : Concept::negation(inner);
    }
    case K::Exists:
    case K::Forall: {
      Concept inner = desugar(c.operand());
      if (inner == c.operand()) return c;
      return c.is(K::Exists) ? Concept::exists(c.role(), inner) : Concept::forall(c.role(), inner);
    }
    case K::And:
    case K::Or: {
      Concept l = desugar(c.left());
      Concept r = desugar(c.right());
      if (l == c.left() && r == c.right()) return c;
      return c.is(K::And) ? Concept::conjunction(l, r) : Concept::disjunction(l, r);
    }
    case K::Implies:
      return Concept::disjunction(Concept::negation(desugar(c.left())), desugar(c.right()));
    case K::Iff: {
      Concept l = desugar(c.left());
      Concept r = desugar(c.right());
      return Concept::conjunction(Concept::disjunction(Concept::negation(l), r),
                                  Concept::disjunction(Concept::negation(r), l));
    }
  }
  throw std::logic_error("desugar: unknown kind");
}

namespace {

Concept nnf(const Concept& c, bool negated) {
  using K = Concept::Kind;
  switch (c.kind()) {
    case K::Top:
      return negated ? Concept::bot(c.sort()) : c;
    case K::Bot:
      return negated ? Concept::top(c.sort()) : c;
    case K::Atom:
      return negated ? Concept::negation(c) : c;
    case K::Not:
      return nnf(c.operand(), !negated);
    case K::And:
    case K::Or: {
      Concept l = nnf(c.left(), negated);
      Concept r = nnf(c.right(), negated);
      const bool conj = c.is(K::And) != negated;
      return conj ? Concept::conjunction(l, r) : Concept::disjunction(l, r);
    }
    case K::Exists:
    case K::Forall: {
      Concept f = nnf(c.operand(), negated);
      const bool ex = c.is(K::Exists) != negated;
      return ex ? Concept::exists(c.role(), f) : Concept::forall(c.role(), f);
    }
    case K::Implies:
    case K::Iff:
      return nnf(desugar(c), negated);
  }
  throw std::logic_error("nnf: unknown kind");
}

}  // namespace

Concept to_nnf(const Concept& c) { return nnf(c, false); }

bool is_nnf(const Concept& c) {
  using K = Concept::Kind;
  switch (c.kind()) {
    case K::Top:
    case K::Bot:
    case K::Atom:
      return true;
    case K::Not:
      return c.operand().is(K::Atom);
    case K::And:
    case K::Or:
      return is_nnf(c.left()) && is_nnf(c.right());
    case K::Exists:
    case K::Forall:
      return is_nnf(c.operand());
    case K::Implies:
    case K::Iff:
      return false;
  }
  return false;
}

bool is_arrow_free(const Concept& c) {
  using K = Concept::Kind;
  switch (c.kind()) {
    case K::Top:
    case K::Bot:
    case K::Atom:
      return true;
    case K::Not:
    case K::Exists:
    case K::Forall:
      return is_arrow_free(c.operand());
    case K::And:
    case K::Or:
      return is_arrow_free(c.left()) && is_arrow_free(c.right());
    case K::Implies:
    case K::Iff:
      return false;
  }
  return false;
}

void collect_vocabulary(const Concept& c, Vocabulary& into) {
  using K = Concept::Kind;
  switch (c.kind()) {
    case K::Top:
    case K::Bot:
      return;
    case K::Atom:
      into.atoms.insert(c.name());
      return;
    case K::Not:
      collect_vocabulary(c.operand(), into);
      return;
    case K::Exists:
    case K::Forall:
      into.roles.insert(c.role().name);
      collect_vocabulary(c.operand(), into);
      return;
    default:
      collect_vocabulary(c.left(), into);
      collect_vocabulary(c.right(), into);
      return;
  }
}

Vocabulary vocabulary_of(const Concept& c) {
  Vocabulary v;
  collect_vocabulary(c, v);
  return v;
}

}  // namespace kedl
