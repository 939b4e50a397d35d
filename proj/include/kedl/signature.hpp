#ifndef KEDL_SIGNATURE_HPP
#define KEDL_SIGNATURE_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kedl/sort.hpp"

namespace kedl {

// Declared vocabulary: sorted atoms, roles and individuals. All names live in
// one namespace; redeclaring a name (in any category) throws KbError.
// Declaration order is kept for printing.
class Signature {
 public:
  enum class Category { Atom, Role, Individual };

  struct Entry {
    std::string name;
    Category category;
    Sort sort = Sort::Object;          // atoms and individuals
    RoleKind kind = RoleKind::ObjObj;  // roles
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  void add_atom(const std::string& name, Sort sort);
  // kind must be ObjObj, AttrAttr or Cross; the inverse of a Cross role is
  // available implicitly.
  void add_role(const std::string& name, RoleKind kind);
  void add_individual(const std::string& name, Sort sort);

  std::optional<Sort> atom_sort(std::string_view name) const;
  std::optional<RoleKind> role_kind(std::string_view name) const;
  std::optional<Sort> individual_sort(std::string_view name) const;
  bool declares(std::string_view name) const;

  std::vector<std::string> atoms(Sort sort) const;
  std::vector<std::string> roles(RoleKind kind) const;
  std::vector<std::string> individuals(Sort sort) const;
  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  // Sub-signature keeping only the named atoms/roles/individuals, in
  // declaration order. Unknown names are ignored.
  Signature restricted_to(const std::function<bool(const Entry&)>& keep) const;

  // Adds every entry of other that is not declared here; throws KbError on a
  // conflicting redeclaration.
  void merge(const Signature& other);

  friend bool operator==(const Signature& a, const Signature& b) { return a.entries_ == b.entries_; }

 private:
  const Entry* find(std::string_view name) const;
  void add(Entry e);

  std::vector<Entry> entries_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

}  // namespace kedl

#endif  // KEDL_SIGNATURE_HPP
