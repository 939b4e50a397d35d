// Knowledge-element records (object, attribute, relational) and their
// translation into KEDL knowledge bases.
//
// File syntax:
//   object NAME ["gloss"] { attributes: A, ...; relations: R, ...; constraints: A cmp V, ...; }
//   attribute NAME { measurability: 0..4; dimension: "unit" | none; function: NAME | none;
//                    role: NAME; gloss: "text"; }
//   relation NAME { mapping: TAG; inputs: A, ...; outputs: A, ...; function: NAME; }
//   value NAME { attribute: A; gloss: "text"; }
//   comparison NAME;
//
// "relations" and "constraints" are optional. An attribute's cross role
// defaults to has-NAME. A constraint "A cmp V" requires some A-value related
// by cmp to a V-value.

#ifndef KEDL_KM_HPP
#define KEDL_KM_HPP

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "kedl/errors.hpp"
#include "kedl/kb.hpp"

namespace kedl {

struct Constraint {
  std::string attribute;
  std::string comparison;
  std::string value;
  friend bool operator==(const Constraint&, const Constraint&) = default;
};

struct ObjectElement {
  std::string name;
  std::string gloss;
  std::vector<std::string> attributes;
  std::vector<std::string> relations;
  std::vector<Constraint> constraints;
  friend bool operator==(const ObjectElement&, const ObjectElement&) = default;
};

struct AttributeElement {
  std::string name;
  int measurability = 0;  // 0 non-descriptive .. 4 fuzzy measurable
  std::optional<std::string> dimension;
  std::optional<std::string> function;
  std::optional<std::string> role;
  std::string gloss;
  friend bool operator==(const AttributeElement&, const AttributeElement&) = default;
};

struct RelationElement {
  std::string name;
  std::string mapping;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  std::optional<std::string> function;
  friend bool operator==(const RelationElement&, const RelationElement&) = default;
};

// A named set of attribute values, e.g. {1200 meters}.
struct ValueElement {
  std::string name;
  std::string attribute;
  std::string gloss;
  friend bool operator==(const ValueElement&, const ValueElement&) = default;
};

// A relation between attribute values such as more-than.
struct ComparisonElement {
  std::string name;
  friend bool operator==(const ComparisonElement&, const ComparisonElement&) = default;
};

using KnowledgeElement =
    std::variant<ObjectElement, AttributeElement, RelationElement, ValueElement, ComparisonElement>;

const std::string& element_name(const KnowledgeElement& e);

struct KmViolation {
  std::string element;
  std::string field;
  std::string message;
  friend bool operator==(const KmViolation&, const KmViolation&) = default;
};

std::string to_string(const KmViolation& v);

class KmError : public Error {
 public:
  explicit KmError(std::vector<KmViolation> violations);
  const std::vector<KmViolation>& violations() const { return violations_; }

 private:
  std::vector<KmViolation> violations_;
};

// Throws ParseError on syntax errors and KmError when a record breaks its own
// invariants (empty attribute list, missing dimension for measurable
// attributes, empty relation inputs or outputs, missing map function).
// References between records are checked by validate_km.
std::vector<KnowledgeElement> parse_km(std::string_view text);

// Every record invariant plus cross references: declared attributes,
// relations and values; relation attributes within the object's list;
// unique names.
std::vector<KmViolation> validate_km(const std::vector<KnowledgeElement>& elements);

// Cross role of an attribute.
std::string attribute_role(const AttributeElement& a);

// Throws KmError if validate_km reports anything and KbError on a name
// collision among generated atoms and roles.
KnowledgeBase translate_to_kb(const std::vector<KnowledgeElement>& elements);

// translate_to_kb as .kedl text, with element metadata as comments.
std::string emit_kedl(const std::vector<KnowledgeElement>& elements);

}  // namespace kedl

#endif  // KEDL_KM_HPP
