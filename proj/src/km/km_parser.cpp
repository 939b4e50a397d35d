#include <set>

#include "kedl/km.hpp"
#include "lexer.hpp"
#include "records.hpp"

namespace kedl {

using detail::Token;
using detail::TokenStream;

namespace {

class KmParser {
 public:
  explicit KmParser(std::string_view text) : ts_(detail::tokenize(text)) {}

  std::vector<KnowledgeElement> parse() {
    std::vector<KnowledgeElement> out;
    while (!ts_.at_end()) {
      const Token& head = ts_.peek();
      if (head.is_word("object"))
        out.emplace_back(object());
      else if (head.is_word("attribute"))
        out.emplace_back(attribute());
      else if (head.is_word("relation"))
        out.emplace_back(relation());
      else if (head.is_word("value"))
        out.emplace_back(value());
      else if (head.is_word("comparison"))
        out.emplace_back(comparison());
      else
        ts_.fail(head, "expected 'object', 'attribute', 'relation', 'value' or 'comparison', found " +
                           detail::describe(head));
      if (auto v = detail::record_violations(out.back()); !v.empty()) throw KmError(std::move(v));
    }
    return out;
  }

 private:
  // Calls field(name) for each "name: ...;" entry of a braced block.
  template <typename F>
  void block(const std::vector<std::string>& allowed, F&& field) {
    ts_.expect_symbol("{");
    std::set<std::string> seen;
    while (!ts_.accept_symbol("}")) {
      const Token& key = ts_.expect_ident("a field name");
      bool known = false;
      for (const auto& a : allowed) known = known || a == key.text;
      if (!known) ts_.fail(key, "unknown field '" + key.text + "'");
      if (!seen.insert(key.text).second) ts_.fail(key, "field '" + key.text + "' given twice");
      ts_.expect_symbol(":");
      field(key.text);
      ts_.expect_symbol(";");
    }
  }

  std::vector<std::string> names() {
    std::vector<std::string> out;
    if (ts_.peek().is_symbol(";")) return out;
    do {
      out.push_back(ts_.expect_ident("a name").text);
    } while (ts_.accept_symbol(","));
    return out;
  }

  std::string string_literal() {
    const Token& t = ts_.peek();
    if (t.kind != Token::Kind::String) ts_.fail(t, "expected a quoted string, found " + detail::describe(t));
    return ts_.next().text;
  }

  // NAME or "none"
  std::optional<std::string> optional_name() {
    const Token& t = ts_.expect_ident("a name or 'none'");
    if (t.text == "none") return std::nullopt;
    return t.text;
  }

  void require(const std::set<std::string>& given, const std::string& field, const Token& at) {
    if (!given.count(field)) ts_.fail(at, "missing field '" + field + "'");
  }

  ObjectElement object() {
    ts_.next();
    ObjectElement e;
    const Token at = ts_.peek();
    e.name = ts_.expect_ident("an object name").text;
    if (ts_.peek().kind == Token::Kind::String) e.gloss = ts_.next().text;
    std::set<std::string> given;
    block({"attributes", "relations", "constraints"}, [&](const std::string& f) {
      given.insert(f);
      if (f == "attributes") {
        e.attributes = names();
      } else if (f == "relations") {
        e.relations = names();
      } else if (!ts_.peek().is_symbol(";")) {
        do {
          Constraint c;
          c.attribute = ts_.expect_ident("an attribute name").text;
          c.comparison = ts_.expect_ident("a comparison name").text;
          c.value = ts_.expect_ident("a value name").text;
          e.constraints.push_back(std::move(c));
        } while (ts_.accept_symbol(","));
      }
    });
    require(given, "attributes", at);
    return e;
  }

  AttributeElement attribute() {
    ts_.next();
    AttributeElement e;
    const Token at = ts_.peek();
    e.name = ts_.expect_ident("an attribute name").text;
    std::set<std::string> given;
    block({"measurability", "dimension", "function", "role", "gloss"}, [&](const std::string& f) {
      given.insert(f);
      if (f == "measurability") {
        const Token& t = ts_.peek();
        if (t.kind != Token::Kind::Int) ts_.fail(t, "expected an integer, found " + detail::describe(t));
        e.measurability = std::stoi(ts_.next().text);
      } else if (f == "dimension") {
        if (ts_.accept_word("none"))
          e.dimension.reset();
        else
          e.dimension = string_literal();
      } else if (f == "function") {
        e.function = optional_name();
      } else if (f == "role") {
        e.role = ts_.expect_ident("a role name").text;
      } else {
        e.gloss = string_literal();
      }
    });
    require(given, "measurability", at);
    return e;
  }

  RelationElement relation() {
    ts_.next();
    RelationElement e;
    e.name = ts_.expect_ident("a relation name").text;
    std::set<std::string> given;
    block({"mapping", "inputs", "outputs", "function"}, [&](const std::string& f) {
      given.insert(f);
      if (f == "mapping")
        e.mapping = ts_.expect_ident("a mapping tag").text;
      else if (f == "inputs")
        e.inputs = names();
      else if (f == "outputs")
        e.outputs = names();
      else
        e.function = optional_name();
    });
    return e;
  }

  ValueElement value() {
    ts_.next();
    ValueElement e;
    const Token at = ts_.peek();
    e.name = ts_.expect_ident("a value name").text;
    std::set<std::string> given;
    block({"attribute", "gloss"}, [&](const std::string& f) {
      given.insert(f);
      if (f == "attribute")
        e.attribute = ts_.expect_ident("an attribute name").text;
      else
        e.gloss = string_literal();
    });
    require(given, "attribute", at);
    return e;
  }

  ComparisonElement comparison() {
    ts_.next();
    ComparisonElement e{ts_.expect_ident("a comparison name").text};
    ts_.expect_symbol(";");
    return e;
  }

  TokenStream ts_;
};

}  // namespace

std::vector<KnowledgeElement> parse_km(std::string_view text) { return KmParser(text).parse(); }

}  // namespace kedl
