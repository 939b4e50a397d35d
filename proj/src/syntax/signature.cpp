#include "kedl/signature.hpp"

#include <stdexcept>

#include "kedl/errors.hpp"

namespace kedl {

namespace {

std::string_view category_name(Signature::Category c) {
  switch (c) {
    case Signature::Category::Atom:
      return "concept";
    case Signature::Category::Role:
      return "role";
    case Signature::Category::Individual:
      return "individual";
  }
  return "?";
}

}  // namespace

void Signature::add(Entry e) {
  if (e.name.empty()) throw KbError("empty name in declaration");
  if (const Entry* prev = find(e.name)) {
    throw KbError("name '" + e.name + "' already declared as " +
                  std::string(category_name(prev->category)));
  }
  index_.emplace(e.name, entries_.size());
  entries_.push_back(std::move(e));
}

void Signature::add_atom(const std::string& name, Sort sort) {
  add({name, Category::Atom, sort, RoleKind::ObjObj});
}

void Signature::add_role(const std::string& name, RoleKind kind) {
  if (kind == RoleKind::CrossInverse)
    throw std::invalid_argument("inverse roles are implicit and cannot be declared");
  add({name, Category::Role, Sort::Object, kind});
}

void Signature::add_individual(const std::string& name, Sort sort) {
  add({name, Category::Individual, sort, RoleKind::ObjObj});
}

const Signature::Entry* Signature::find(std::string_view name) const {
  auto it = index_.find(name);
  return it == index_.end() ? nullptr : &entries_[it->second];
}

std::optional<Sort> Signature::atom_sort(std::string_view name) const {
  const Entry* e = find(name);
  if (!e || e->category != Category::Atom) return std::nullopt;
  return e->sort;
}

std::optional<RoleKind> Signature::role_kind(std::string_view name) const {
  const Entry* e = find(name);
  if (!e || e->category != Category::Role) return std::nullopt;
  return e->kind;
}

std::optional<Sort> Signature::individual_sort(std::string_view name) const {
  const Entry* e = find(name);
  if (!e || e->category != Category::Individual) return std::nullopt;
  return e->sort;
}

bool Signature::declares(std::string_view name) const { return find(name) != nullptr; }

std::vector<std::string> Signature::atoms(Sort sort) const {
  std::vector<std::string> out;
  for (const auto& e : entries_)
    if (e.category == Category::Atom && e.sort == sort) out.push_back(e.name);
  return out;
}

std::vector<std::string> Signature::roles(RoleKind kind) const {
  std::vector<std::string> out;
  for (const auto& e : entries_)
    if (e.category == Category::Role && e.kind == kind) out.push_back(e.name);
  return out;
}

std::vector<std::string> Signature::individuals(Sort sort) const {
  std::vector<std::string> out;
  for (const auto& e : entries_)
    if (e.category == Category::Individual && e.sort == sort) out.push_back(e.name);
  return out;
}

Signature Signature::restricted_to(const std::function<bool(const Entry&)>& keep) const {
  Signature out;
  for (const auto& e : entries_)
    if (keep(e)) out.add(e);
  return out;
}

void Signature::merge(const Signature& other) {
  for (const auto& e : other.entries_) {
    if (const Entry* mine = find(e.name)) {
      if (!(*mine == e)) throw KbError("conflicting declarations of '" + e.name + "'");
      continue;
    }
    add(e);
  }
}

}  // namespace kedl
