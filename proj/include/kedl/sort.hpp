// Sorts and role references of the two-sorted concept language.

#ifndef KEDL_SORT_HPP
#define KEDL_SORT_HPP

#include <compare>
#include <string>
#include <string_view>

namespace kedl {

// Object concepts are interpreted over the object domain, attribute concepts
// over the attribute domain.
enum class Sort { Object, Attribute };

// ObjObj roles relate objects, AttrAttr roles relate attribute values, Cross
// roles lead from objects to attribute values. CrossInverse is the converse of
// a Cross role and is never declared on its own.
enum class RoleKind { ObjObj, AttrAttr, Cross, CrossInverse };

struct RoleRef {
  std::string name;
  RoleKind kind = RoleKind::ObjObj;

  friend bool operator==(const RoleRef&, const RoleRef&) = default;
  friend auto operator<=>(const RoleRef&, const RoleRef&) = default;
};

// Sort of the element a role edge starts from.
Sort source_sort(RoleKind kind);
// Sort of the element a role edge points to.
Sort target_sort(RoleKind kind);

// Cross <-> CrossInverse. Throws std::invalid_argument for ObjObj and
// AttrAttr roles, which have no converse in the language.
RoleRef invert_role(const RoleRef& role);

std::string_view to_string(Sort sort);
std::string_view to_string(RoleKind kind);
Sort other_sort(Sort sort);

}  // namespace kedl

#endif  // KEDL_SORT_HPP
