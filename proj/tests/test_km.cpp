#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "kedl/km.hpp"
#include "kedl/parser.hpp"
#include "kedl/tableau.hpp"

using namespace kedl;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(KEDL_SOURCE_DIR) + "/" + name);
  EXPECT_TRUE(in) << name;
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

const char* kAttr = "attribute L { measurability: 2; dimension: \"m\"; function: none; }\n";

bool has_violation(const std::vector<KmViolation>& vs, const std::string& element, const std::string& field) {
  for (const auto& v : vs)
    if (v.element == element && v.field == field) return true;
  return false;
}

std::vector<KmViolation> record_errors(const std::string& text) {
  try {
    parse_km(text);
  } catch (const KmError& e) {
    return e.violations();
  }
  return {};
}

}  // namespace

TEST(ParseKm, GasBlock) {
  const auto elements = parse_km(slurp("data/gas.km"));
  const auto* gas = std::get_if<ObjectElement>(&elements.at(0));
  ASSERT_NE(gas, nullptr);
  EXPECT_EQ(gas->name, "Gas");
  EXPECT_EQ(gas->attributes,
            (std::vector<std::string>{"GasComposition", "FirePoint", "Temperature", "GasConcentration", "GasVolume"}));
  EXPECT_TRUE(gas->relations.empty());
  EXPECT_TRUE(validate_km(elements).empty());
}

TEST(ParseKm, RecordInvariants) {
  EXPECT_NO_THROW(parse_km("attribute S { measurability: 0; dimension: none; function: none; }"));
  EXPECT_NO_THROW(parse_km("attribute S { measurability: 0; }"));
  EXPECT_TRUE(has_violation(record_errors("attribute S { measurability: 2; dimension: none; function: none; }"), "S",
                            "dimension"));
  EXPECT_TRUE(has_violation(record_errors("attribute S { measurability: 5; dimension: \"m\"; }"), "S", "measurability"));
  EXPECT_TRUE(has_violation(
      record_errors("relation R { mapping: linear; inputs: L; outputs: ; function: f; }"), "R", "outputs"));
  EXPECT_TRUE(has_violation(record_errors("relation R { mapping: linear; inputs: L; outputs: L; }"), "R", "function"));
  EXPECT_TRUE(has_violation(record_errors("object O { attributes: ; }"), "O", "attributes"));
}

TEST(ParseKm, SyntaxErrors) {
  EXPECT_THROW(parse_km("object O { attributes: L; colour: red; }"), ParseError);
  EXPECT_THROW(parse_km("object O { attributes: L; attributes: L; }"), ParseError);
  EXPECT_THROW(parse_km("object O { relations: R; }"), ParseError);
  EXPECT_THROW(parse_km("attribute S { dimension: \"m\"; }"), ParseError);
  EXPECT_THROW(parse_km("thing T;"), ParseError);
  EXPECT_THROW(parse_km("attribute S { measurability: two; }"), ParseError);
}

TEST(ValidateKm, Examples) {
  const auto dangling = validate_km(parse_km(std::string("object Gas { attributes: L, Pressure; }\n") + kAttr));
  EXPECT_TRUE(has_violation(dangling, "Gas", "attributes"));

  EXPECT_TRUE(validate_km(parse_km("attribute R { measurability: 3; dimension: \"s\"; }")).empty());

  const std::vector<KnowledgeElement> empty_object{ObjectElement{"O", "", {}, {}, {}}};
  EXPECT_TRUE(has_violation(validate_km(empty_object), "O", "attributes"));
}

TEST(ValidateKm, CrossReferences) {
  const std::string attrs = std::string(kAttr) + "attribute W { measurability: 2; dimension: \"m\"; }\n";
  const auto outside = validate_km(parse_km(attrs +
                                            "object O { attributes: L; relations: R; }\n"
                                            "relation R { mapping: linear; inputs: L; outputs: W; function: f; }\n"));
  EXPECT_TRUE(has_violation(outside, "O", "relations"));

  const auto missing = validate_km(parse_km(attrs + "object O { attributes: L; relations: Q; }\n"));
  EXPECT_TRUE(has_violation(missing, "O", "relations"));

  const auto dup = validate_km(parse_km(attrs + kAttr));
  EXPECT_TRUE(has_violation(dup, "L", "name"));

  const auto constraint = validate_km(parse_km(attrs +
                                               "value V { attribute: W; }\ncomparison gt;\n"
                                               "object O { attributes: L; constraints: L gt V, L lt V; }\n"));
  EXPECT_TRUE(has_violation(constraint, "O", "constraints"));
  EXPECT_EQ(constraint.size(), 3u);  // V belongs to W (twice); lt is undeclared

  const auto rel_inputs =
      validate_km(parse_km(attrs + "relation R { mapping: logical; inputs: Z; outputs: W; function: f; }\n"));
  EXPECT_TRUE(has_violation(rel_inputs, "R", "inputs"));
}

// The four reference definitions written out by hand, with each role.filler
// pair under its own existential.
TEST(TranslateKm, ReproducesReferenceDefinitions) {
  const KnowledgeBase kb = translate_to_kb(parse_km(slurp("data/gas.km")));
  EXPECT_EQ(kb.sig.atoms(Sort::Object), (std::vector<std::string>{"Gas", "Fire-source", "Gas-explosion", "Tunnel"}));
  EXPECT_EQ(kb.sig.atoms(Sort::Attribute).size(), 16u);  // 15 attributes and the value Meters1200
  EXPECT_EQ(kb.sig.roles(RoleKind::Cross).size(), 15u);
  EXPECT_EQ(kb.sig.roles(RoleKind::AttrAttr), std::vector<std::string>{"more-than"});

  const std::pair<const char*, const char*> reference[] = {
      {"Gas",
       "some has-composite GasComposition and some has-fire-spot FirePoint and some has-temperature Temperature"
       " and some has-gas-density GasConcentration and some has-gas-amount GasVolume"},
      {"Fire-source",
       "some has-location Location and some has-fire-kind FireSourceCategory"
       " and some has-fire-temperature SourceTemperature"},
      {"Gas-explosion",
       "some has-time Time and some has-location Location and some has-gas-density GasConcentration"
       " and some has-fire-kind FireSourceCategory and some has-blast-impact-power ExplosiveImpact"
       " and some has-blast-energy ExplosiveEnergy"},
      {"Tunnel",
       "some has-location Location and some has-length Length and some has-width Width and some has-height Height"
       " and some has-disblast-impact-power AntiExplosiveImpact and some has-blast-impact-power ExplosiveImpact"}};
  ASSERT_EQ(kb.definitions.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(kb.definitions[i].atom, reference[i].first);
    EXPECT_EQ(kb.definitions[i].body, parse_concept(reference[i].second, kb.sig)) << reference[i].first;
  }
  EXPECT_TRUE(kb.inclusions.empty());
  EXPECT_TRUE(kb.abox.empty());
}

TEST(TranslateKm, GoldenFile) {
  const std::string emitted = emit_kedl(parse_km(slurp("data/gas.km")));
  EXPECT_EQ(emitted, slurp("tests/data/gas.kedl.golden"));
  EXPECT_EQ(emitted, slurp("data/gas.kedl"));
  EXPECT_EQ(emit_kedl(parse_km(slurp("data/gas.km"))), emitted);
  EXPECT_EQ(parse_kb(emitted), translate_to_kb(parse_km(slurp("data/gas.km"))));
}

TEST(TranslateKm, SingleObject) {
  const KnowledgeBase kb = translate_to_kb(parse_km(std::string("object O { attributes: L; }\n") + kAttr));
  ASSERT_EQ(kb.definitions.size(), 1u);
  EXPECT_EQ(kb.sig.roles(RoleKind::Cross), std::vector<std::string>{"has-L"});
  EXPECT_EQ(kb.definitions[0].body, parse_concept("some has-L L", kb.sig));
}

TEST(TranslateKm, Constraint) {
  const KnowledgeBase kb = translate_to_kb(parse_km(slurp("tests/data/long_tunnel.km")));
  ASSERT_EQ(kb.definitions.size(), 1u);
  const Concept body = kb.definitions[0].body;
  ASSERT_TRUE(body.is(Concept::Kind::And));
  EXPECT_EQ(body.right(), parse_concept("some has-length (some more-than Meters1200)", kb.sig));
  EXPECT_TRUE(is_sat(is_satisfiable(parse_concept("LongTunnel", kb.sig), kb)));
  EXPECT_TRUE(subsumes(kb, parse_concept("LongTunnel", kb.sig),
                       parse_concept("some has-length (Length and some more-than Meters1200)", kb.sig)));
}

TEST(TranslateKm, Relations) {
  const std::string text = std::string(kAttr) +
                           "attribute W { measurability: 2; dimension: \"m\"; }\n"
                           "attribute V { measurability: 2; dimension: \"m^3\"; }\n"
                           "object Box { attributes: L, W, V; relations: volume; }\n"
                           "relation volume { mapping: nonlinear; inputs: L, W; outputs: V; function: product; }\n";
  const KnowledgeBase kb = translate_to_kb(parse_km(text));
  EXPECT_EQ(kb.sig.roles(RoleKind::AttrAttr), std::vector<std::string>{"q_volume"});
  ASSERT_EQ(kb.inclusions.size(), 2u);
  EXPECT_EQ(kb.inclusions[0].sub, parse_concept("L", kb.sig));
  EXPECT_EQ(kb.inclusions[0].sup, parse_concept("some q_volume V", kb.sig));
  EXPECT_EQ(kb.inclusions[1].sub, parse_concept("W", kb.sig));
  EXPECT_TRUE(is_sat(is_consistent(kb)));
  const std::string emitted = emit_kedl(parse_km(text));
  EXPECT_NE(emitted.find("# relation volume: mapping nonlinear, function product, inputs L W, outputs V"),
            std::string::npos);
  EXPECT_EQ(parse_kb(emitted), kb);
}

TEST(TranslateKm, Collisions) {
  // Role name of L collides with the object called has-L.
  EXPECT_THROW(translate_to_kb(parse_km(std::string("object has-L { attributes: L; }\n") + kAttr)), KbError);
  EXPECT_THROW(translate_to_kb(parse_km(std::string("object O { attributes: Pressure; }\n") + kAttr)), KmError);
}

TEST(TranslateKm, TranslationsAreConsistent) {
  for (const char* file : {"data/gas.km", "tests/data/long_tunnel.km"}) {
    const KnowledgeBase kb = translate_to_kb(parse_km(slurp(file)));
    EXPECT_EQ(parse_kb(print_kb(kb)), kb);
    EXPECT_TRUE(is_sat(is_consistent(kb))) << file;
    for (const auto& d : kb.definitions)
      EXPECT_TRUE(is_sat(is_satisfiable(Concept::atom(d.atom, Sort::Object), kb))) << d.atom;
  }
}
