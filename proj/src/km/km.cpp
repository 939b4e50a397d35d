#include "kedl/km.hpp"

#include <map>
#include <set>
#include <sstream>

#include "records.hpp"

namespace kedl {

const std::string& element_name(const KnowledgeElement& e) {
  return std::visit([](const auto& x) -> const std::string& { return x.name; }, e);
}

std::string to_string(const KmViolation& v) {
  return v.element + (v.field.empty() ? "" : "." + v.field) + ": " + v.message;
}

namespace {

std::string joined(const std::vector<KmViolation>& vs) {
  std::string out;
  for (const auto& v : vs) out += (out.empty() ? "" : "; ") + to_string(v);
  return out;
}

}  // namespace

KmError::KmError(std::vector<KmViolation> violations)
    : Error("invalid knowledge elements: " + joined(violations)), violations_(std::move(violations)) {}

std::string attribute_role(const AttributeElement& a) { return a.role.value_or("has-" + a.name); }

namespace detail {

std::vector<KmViolation> record_violations(const KnowledgeElement& e) {
  std::vector<KmViolation> out;
  if (element_name(e).empty()) out.push_back({"", "name", "name must not be empty"});
  if (const auto* o = std::get_if<ObjectElement>(&e)) {
    if (o->attributes.empty()) out.push_back({o->name, "attributes", "an object needs at least one attribute"});
  } else if (const auto* a = std::get_if<AttributeElement>(&e)) {
    if (a->measurability < 0 || a->measurability > 4)
      out.push_back({a->name, "measurability", "must be between 0 and 4, got " + std::to_string(a->measurability)});
    if (a->measurability > 0 && !a->dimension)
      out.push_back({a->name, "dimension", "a measurable attribute (measurability > 0) needs a dimension"});
  } else if (const auto* r = std::get_if<RelationElement>(&e)) {
    if (r->mapping.empty()) out.push_back({r->name, "mapping", "a relation needs a mapping kind"});
    if (r->inputs.empty()) out.push_back({r->name, "inputs", "a relation needs at least one input attribute"});
    if (r->outputs.empty()) out.push_back({r->name, "outputs", "a relation needs at least one output attribute"});
    if (!r->function) out.push_back({r->name, "function", "a relation needs a map function"});
  } else if (const auto* v = std::get_if<ValueElement>(&e)) {
    if (v->attribute.empty()) out.push_back({v->name, "attribute", "a value names the attribute it belongs to"});
  }
  return out;
}

}  // namespace detail

std::vector<KmViolation> validate_km(const std::vector<KnowledgeElement>& elements) {
  std::vector<KmViolation> out;
  std::map<std::string, const KnowledgeElement*> by_name;
  for (const auto& e : elements) {
    for (auto& v : detail::record_violations(e)) out.push_back(std::move(v));
    if (!by_name.emplace(element_name(e), &e).second)
      out.push_back({element_name(e), "name", "declared more than once"});
  }
  auto lookup = [&](const std::string& name) -> const KnowledgeElement* {
    auto it = by_name.find(name);
    return it == by_name.end() ? nullptr : it->second;
  };
  auto is_attribute = [&](const std::string& name) {
    const auto* e = lookup(name);
    return e && std::holds_alternative<AttributeElement>(*e);
  };
  for (const auto& e : elements) {
    if (const auto* o = std::get_if<ObjectElement>(&e)) {
      std::set<std::string> own(o->attributes.begin(), o->attributes.end());
      if (own.size() != o->attributes.size())
        out.push_back({o->name, "attributes", "an attribute is listed twice"});
      for (const auto& a : o->attributes)
        if (!is_attribute(a)) out.push_back({o->name, "attributes", "'" + a + "' is not a declared attribute"});
      for (const auto& r : o->relations) {
        const auto* re = lookup(r);
        const auto* rel = re ? std::get_if<RelationElement>(re) : nullptr;
        if (!rel) {
          out.push_back({o->name, "relations", "'" + r + "' is not a declared relation"});
          continue;
        }
        for (const auto* side : {&rel->inputs, &rel->outputs})
          for (const auto& a : *side)
            if (!own.count(a))
              out.push_back({o->name, "relations",
                             "relation '" + r + "' uses '" + a + "', which is not among the object's attributes"});
      }
      for (const auto& c : o->constraints) {
        if (!own.count(c.attribute))
          out.push_back({o->name, "constraints", "'" + c.attribute + "' is not among the object's attributes"});
        const auto* cmp = lookup(c.comparison);
        if (!cmp || !std::holds_alternative<ComparisonElement>(*cmp))
          out.push_back({o->name, "constraints", "'" + c.comparison + "' is not a declared comparison"});
        const auto* val = lookup(c.value);
        const auto* value = val ? std::get_if<ValueElement>(val) : nullptr;
        if (!value)
          out.push_back({o->name, "constraints", "'" + c.value + "' is not a declared value"});
        else if (value->attribute != c.attribute)
          out.push_back({o->name, "constraints",
                         "value '" + c.value + "' belongs to '" + value->attribute + "', not '" + c.attribute + "'"});
      }
    } else if (const auto* r = std::get_if<RelationElement>(&e)) {
      for (const auto* side : {&r->inputs, &r->outputs})
        for (const auto& a : *side)
          if (!is_attribute(a)) out.push_back({r->name, side == &r->inputs ? "inputs" : "outputs",
                                               "'" + a + "' is not a declared attribute"});
    } else if (const auto* v = std::get_if<ValueElement>(&e)) {
      if (!v->attribute.empty() && !is_attribute(v->attribute))
        out.push_back({v->name, "attribute", "'" + v->attribute + "' is not a declared attribute"});
    }
  }
  return out;
}

namespace {

std::string relation_role(const RelationElement& r) { return "q_" + r.name; }

template <typename T>
std::vector<const T*> all_of(const std::vector<KnowledgeElement>& elements) {
  std::vector<const T*> out;
  for (const auto& e : elements)
    if (const auto* x = std::get_if<T>(&e)) out.push_back(x);
  return out;
}

// Metadata comment per element, keyed by the name it declares.
std::map<std::string, std::string> annotations(const std::vector<KnowledgeElement>& elements) {
  std::map<std::string, std::string> out;
  auto quoted = [](const std::string& s) { return "\"" + s + "\""; };
  for (const auto* o : all_of<ObjectElement>(elements)) {
    std::string text = "object " + o->name;
    if (!o->gloss.empty()) text += " " + quoted(o->gloss);
    out[o->name] = text;
  }
  for (const auto* a : all_of<AttributeElement>(elements)) {
    std::string text = "attribute " + a->name;
    if (!a->gloss.empty()) text += " " + quoted(a->gloss);
    text += ": measurability " + std::to_string(a->measurability) + ", dimension " +
            (a->dimension ? quoted(*a->dimension) : "none") + ", function " + a->function.value_or("none");
    out[a->name] = text;
  }
  for (const auto* v : all_of<ValueElement>(elements)) {
    std::string text = "value " + v->name + " of " + v->attribute;
    if (!v->gloss.empty()) text += " " + quoted(v->gloss);
    out[v->name] = text;
  }
  for (const auto* r : all_of<RelationElement>(elements)) {
    std::string text = "relation " + r->name + ": mapping " + r->mapping + ", function " +
                       r->function.value_or("none") + ", inputs";
    for (const auto& a : r->inputs) text += " " + a;
    text += ", outputs";
    for (const auto& a : r->outputs) text += " " + a;
    out[relation_role(*r)] = text;
  }
  for (const auto* c : all_of<ComparisonElement>(elements)) out[c->name] = "comparison " + c->name;
  return out;
}

}  // namespace

KnowledgeBase translate_to_kb(const std::vector<KnowledgeElement>& elements) {
  if (auto v = validate_km(elements); !v.empty()) throw KmError(std::move(v));
  KnowledgeBase kb;
  std::map<std::string, const AttributeElement*> attrs;
  for (const auto* a : all_of<AttributeElement>(elements)) attrs[a->name] = a;

  for (const auto* o : all_of<ObjectElement>(elements)) kb.sig.add_atom(o->name, Sort::Object);
  for (const auto* a : all_of<AttributeElement>(elements)) kb.sig.add_atom(a->name, Sort::Attribute);
  for (const auto* v : all_of<ValueElement>(elements)) kb.sig.add_atom(v->name, Sort::Attribute);
  for (const auto* a : all_of<AttributeElement>(elements)) kb.sig.add_role(attribute_role(*a), RoleKind::Cross);
  for (const auto* c : all_of<ComparisonElement>(elements)) kb.sig.add_role(c->name, RoleKind::AttrAttr);
  for (const auto* r : all_of<RelationElement>(elements)) kb.sig.add_role(relation_role(*r), RoleKind::AttrAttr);

  for (const auto* o : all_of<ObjectElement>(elements)) {
    std::optional<Concept> body;
    auto conjoin = [&](Concept c) { body = body ? Concept::conjunction(*body, c) : c; };
    for (const auto& a : o->attributes) {
      const RoleRef role{attribute_role(*attrs.at(a)), RoleKind::Cross};
      conjoin(Concept::exists(role, Concept::atom(a, Sort::Attribute)));
    }
    for (const auto& c : o->constraints) {
      const RoleRef role{attribute_role(*attrs.at(c.attribute)), RoleKind::Cross};
      const RoleRef cmp{c.comparison, RoleKind::AttrAttr};
      conjoin(Concept::exists(role, Concept::exists(cmp, Concept::atom(c.value, Sort::Attribute))));
    }
    kb.definitions.push_back({o->name, *body});
  }
  for (const auto* r : all_of<RelationElement>(elements)) {
    const RoleRef q{relation_role(*r), RoleKind::AttrAttr};
    for (const auto& in : r->inputs)
      for (const auto& out : r->outputs)
        kb.inclusions.push_back(
            {Concept::atom(in, Sort::Attribute), Concept::exists(q, Concept::atom(out, Sort::Attribute))});
  }
  check_kb(kb);
  return kb;
}

std::string emit_kedl(const std::vector<KnowledgeElement>& elements) {
  const KnowledgeBase kb = translate_to_kb(elements);
  const auto notes = annotations(elements);
  std::ostringstream out;
  for (const auto& e : kb.sig.entries()) {
    if (auto it = notes.find(e.name); it != notes.end()) out << "# " << it->second << '\n';
    if (e.category == Signature::Category::Atom)
      out << (e.sort == Sort::Object ? "oconcept " : "aconcept ");
    else
      out << (e.kind == RoleKind::Cross ? "xrole " : "arole ");
    out << e.name << ";\n";
  }
  if (!kb.definitions.empty()) out << '\n';
  for (const auto& d : kb.definitions) out << d.atom << " := " << d.body.to_string() << ";\n";
  if (!kb.inclusions.empty()) out << '\n';
  for (const auto& inc : kb.inclusions) out << inc.sub.to_string() << " <= " << inc.sup.to_string() << ";\n";
  return out.str();
}

}  // namespace kedl
