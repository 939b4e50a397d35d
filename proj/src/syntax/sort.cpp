#include "kedl/sort.hpp"

#include <stdexcept>

#include "kedl/errors.hpp"

namespace kedl {

Sort source_sort(RoleKind kind) {
  switch (kind) {
    case RoleKind::ObjObj:
    case RoleKind::Cross:
      return Sort::Object;
    case RoleKind::AttrAttr:
    case RoleKind::CrossInverse:
      return Sort::Attribute;
  }
  throw std::logic_error("unknown role kind");
}

Sort target_sort(RoleKind kind) {
  switch (kind) {
    case RoleKind::ObjObj:
    case RoleKind::CrossInverse:
      return Sort::Object;
    case RoleKind::AttrAttr:
    case RoleKind::Cross:
      return Sort::Attribute;
  }
  throw std::logic_error("unknown role kind");
}

RoleRef invert_role(const RoleRef& role) {
  switch (role.kind) {
    case RoleKind::Cross:
      return {role.name, RoleKind::CrossInverse};
    case RoleKind::CrossInverse:
      return {role.name, RoleKind::Cross};
    default:
      throw std::invalid_argument("role '" + role.name + "' of kind " +
                                  std::string(to_string(role.kind)) + " has no inverse");
  }
}

std::string_view to_string(Sort sort) { return sort == Sort::Object ? "object" : "attribute"; }

std::string_view to_string(RoleKind kind) {
  switch (kind) {
    case RoleKind::ObjObj:
      return "object-role";
    case RoleKind::AttrAttr:
      return "attribute-role";
    case RoleKind::Cross:
      return "cross-role";
    case RoleKind::CrossInverse:
      return "inverse-cross-role";
  }
  return "?";
}

Sort other_sort(Sort sort) { return sort == Sort::Object ? Sort::Attribute : Sort::Object; }

std::string to_string(const SourceLocation& where) {
  return std::to_string(where.line) + ":" + std::to_string(where.column);
}

ParseError::ParseError(SourceLocation where, const std::string& message)
    : Error(to_string(where) + ": " + message), where_(where), message_(message) {}

namespace {
std::string sort_error_text(const std::optional<SourceLocation>& where, const std::string& message) {
  return where ? to_string(*where) + ": " + message : message;
}
}  // namespace

SortError::SortError(std::optional<SourceLocation> where, std::string expected, std::string found,
                     const std::string& message)
    : Error(sort_error_text(where, message)),
      where_(where),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

}  // namespace kedl
