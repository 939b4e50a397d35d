// Finite two-sorted interpretations (object domain and attribute domain).

#ifndef KEDL_INTERPRETATION_HPP
#define KEDL_INTERPRETATION_HPP

#include <boost/dynamic_bitset.hpp>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kedl/signature.hpp"
#include "kedl/sort.hpp"

namespace kedl {

using ElementSet = boost::dynamic_bitset<>;

// How cross roles are constrained: at most one successor per object, exactly
// one, or no constraint at all (only used to contrast the other two).
enum class Functionality { AtMostOne, ExactlyOne, Unrestricted };

std::string_view to_string(Functionality mode);
std::optional<Functionality> parse_functionality(std::string_view text);

struct Element {
  Sort sort = Sort::Object;
  std::size_t index = 0;
  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element&, const Element&) = default;
};

// One successor set per source element.
struct RoleExtension {
  std::vector<ElementSet> rows;

  bool contains(std::size_t from, std::size_t to) const { return rows[from].test(to); }
  void insert(std::size_t from, std::size_t to) { rows[from].set(to); }
  friend bool operator==(const RoleExtension&, const RoleExtension&) = default;
};

struct Violation {
  std::string where;  // element, atom, role or individual at fault
  std::string message;
  friend bool operator==(const Violation&, const Violation&) = default;
};

class Interpretation {
 public:
  Interpretation() = default;
  // Empty extensions for every atom and role of sig; individuals unmapped.
  Interpretation(Signature sig, std::size_t delta, std::size_t sigma,
                 Functionality mode = Functionality::AtMostOne);

  const Signature& signature() const { return sig_; }
  Functionality mode() const { return mode_; }
  void set_mode(Functionality mode) { mode_ = mode; }

  std::size_t domain_size(Sort s) const { return s == Sort::Object ? delta_ : sigma_; }
  ElementSet empty_set(Sort s) const { return ElementSet(domain_size(s)); }
  ElementSet full_set(Sort s) const { return ~empty_set(s); }

  // x1.. for objects, u1.. for attribute values unless renamed.
  const std::string& element_name(Sort s, std::size_t index) const;
  void set_element_names(Sort s, std::vector<std::string> names);

  // Extension storage. Throws KbError for names sig does not declare.
  const ElementSet& atom(std::string_view name) const;
  ElementSet& atom(std::string_view name);
  // Stored extension of a declared role (never an inverse).
  const RoleExtension& role(std::string_view name) const;
  RoleExtension& role(std::string_view name);

  std::optional<Element> individual(std::string_view name) const;
  void set_individual(const std::string& name, Element e);

  friend bool operator==(const Interpretation&, const Interpretation&) = default;

 private:
  Signature sig_;
  std::size_t delta_ = 0;
  std::size_t sigma_ = 0;
  Functionality mode_ = Functionality::AtMostOne;
  std::vector<std::string> delta_names_;
  std::vector<std::string> sigma_names_;
  std::map<std::string, ElementSet, std::less<>> atoms_;
  std::map<std::string, RoleExtension, std::less<>> roles_;
  std::map<std::string, Element, std::less<>> individuals_;
};

// Non-empty domains, extensions within their sort's domain, cross-role
// functionality per i.mode(), individuals mapped into the right domain.
std::vector<Violation> validate_interpretation(const Interpretation& i);

// Line-oriented text form, one statement per line, names sorted:
//   delta: x1 x2;
//   sigma: u1;
//   C = {x1};
//   r = {(x1,u1)};
//   ind gas1 = x1;
std::string serialize_interpretation(const Interpretation& i);

// Inverse of serialize_interpretation over a given signature. Atoms, roles
// and individuals not mentioned are empty / unmapped. Throws ParseError.
Interpretation parse_interpretation(std::string_view text, const Signature& sig,
                                    Functionality mode = Functionality::AtMostOne);

}  // namespace kedl

#endif  // KEDL_INTERPRETATION_HPP
