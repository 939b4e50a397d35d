#include <gtest/gtest.h>

#include "kedl/oracle.hpp"
#include "kedl/parser.hpp"
#include "kedl/semantics.hpp"
#include "support/random_concepts.hpp"

using namespace kedl;

namespace {

const char* kTunnelKb =
    "oconcept Tunnel, Gas; aconcept Location, Length; xrole has-length, has-location;"
    "oindividual tunnel1, gas1; aindividual len1;";

// Delta = {tunnel1}, Sigma = {loc1, len1}, has-length = {(tunnel1, len1)}.
Interpretation tunnel_model(const Signature& sig) {
  Interpretation i(sig, 1, 2);
  i.set_element_names(Sort::Object, {"tunnel1"});
  i.set_element_names(Sort::Attribute, {"loc1", "len1"});
  i.role("has-length").insert(0, 1);
  i.atom("Tunnel").set(0);
  i.atom("Length").set(1);
  i.atom("Location").set(0);
  i.set_individual("tunnel1", {Sort::Object, 0});
  i.set_individual("gas1", {Sort::Object, 0});
  i.set_individual("len1", {Sort::Attribute, 1});
  return i;
}

ElementSet bits(std::size_t n, std::initializer_list<std::size_t> on) {
  ElementSet s(n);
  for (auto k : on) s.set(k);
  return s;
}

}  // namespace

TEST(ValidateInterpretation, FunctionalityBreach) {
  const Signature sig = parse_kb("aconcept A; xrole r;").sig;
  Interpretation i(sig, 1, 2);
  i.role("r").insert(0, 0);
  i.role("r").insert(0, 1);
  const auto v = validate_interpretation(i);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].where, "(r, x1)");
  i.set_mode(Functionality::Unrestricted);
  EXPECT_TRUE(validate_interpretation(i).empty());
}

TEST(ValidateInterpretation, ExactlyOneNeedsASuccessor) {
  const Signature sig = parse_kb("xrole r;").sig;
  Interpretation i(sig, 2, 1, Functionality::ExactlyOne);
  i.role("r").insert(0, 0);
  const auto v = validate_interpretation(i);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].where, "(r, x2)");
}

TEST(ValidateInterpretation, HandModelIsValid) {
  const Signature sig = parse_kb(kTunnelKb).sig;
  EXPECT_TRUE(validate_interpretation(tunnel_model(sig)).empty());
}

TEST(ValidateInterpretation, HandModelIsAmongEnumerated) {
  const Signature sig = parse_kb(kTunnelKb).sig;
  const Interpretation hand = tunnel_model(sig);
  bool found = false;
  enumerate_interpretations(sig, Bounds{1, 2}, [&](const Interpretation& i) {
    // Compare structure, ignoring element names.
    if (i.domain_size(Sort::Attribute) == 2 && i.role("has-length") == hand.role("has-length") &&
        i.atom("Tunnel") == hand.atom("Tunnel") && i.atom("Length") == hand.atom("Length") &&
        i.atom("Location") == hand.atom("Location") && i.atom("Gas") == hand.atom("Gas") &&
        i.role("has-location") == hand.role("has-location") && i.individual("len1") == hand.individual("len1") &&
        i.individual("tunnel1") == hand.individual("tunnel1") && i.individual("gas1") == hand.individual("gas1"))
      found = true;
    return !found;
  });
  EXPECT_TRUE(found);
}

TEST(ValidateInterpretation, EmptyDomain) {
  const Signature sig = parse_kb("oconcept C;").sig;
  const auto v = validate_interpretation(Interpretation(sig, 0, 1));
  ASSERT_FALSE(v.empty());
  EXPECT_NE(v[0].message.find("non-empty"), std::string::npos);
}

TEST(Extension, TopAndContradiction) {
  const Signature sig = parse_kb(kTunnelKb).sig;
  const Interpretation i = tunnel_model(sig);
  EXPECT_EQ(extension(parse_concept("top", sig), i), i.full_set(Sort::Object));
  EXPECT_EQ(extension(parse_concept("top", sig, Sort::Attribute), i), i.full_set(Sort::Attribute));
  EXPECT_TRUE(extension(parse_concept("Tunnel and not Tunnel", sig), i).none());
  EXPECT_TRUE(extension(parse_concept("bot", sig), i).none());
}

TEST(Extension, CrossExistential) {
  const Signature sig = parse_kb("aconcept A; xrole has-r;").sig;
  Interpretation i(sig, 1, 1);
  i.role("has-r").insert(0, 0);
  i.atom("A").set(0);
  EXPECT_EQ(extension(parse_concept("some has-r A", sig), i), bits(1, {0}));
}

TEST(Extension, InverseAndUniversal) {
  const Signature sig = parse_kb(kTunnelKb).sig;
  const Interpretation i = tunnel_model(sig);
  // len1 has the has-length predecessor tunnel1; loc1 has none.
  EXPECT_EQ(extension(parse_concept("some inv(has-length) Tunnel", sig), i), bits(2, {1}));
  EXPECT_EQ(extension(parse_concept("all inv(has-length) Gas", sig), i), bits(2, {0}));
  EXPECT_EQ(extension(parse_concept("all has-location Location", sig), i), bits(1, {0}));
  EXPECT_EQ(extension(parse_concept("some has-length Location", sig), i), bits(1, {}));
}

TEST(SatisfiesAssertion, ConceptAndRole) {
  const KnowledgeBase kb = parse_kb(std::string(kTunnelKb) + "Tunnel(gas1); has-length(tunnel1, len1);");
  const Interpretation i = tunnel_model(kb.sig);
  EXPECT_TRUE(satisfies_assertion(i, kb.abox[0]));
  EXPECT_TRUE(satisfies_assertion(i, kb.abox[1]));
  EXPECT_FALSE(satisfies_assertion(i, RoleAssertion{"has-location", "tunnel1", "len1"}));
  EXPECT_FALSE(satisfies_assertion(i, ConceptAssertion{parse_concept("Gas", kb.sig), "gas1"}));
}

TEST(SatisfiesAssertion, ObjectRoleAbsent) {
  const KnowledgeBase kb = parse_kb("orole p; oindividual c, d;");
  Interpretation i(kb.sig, 2, 1);
  i.set_individual("c", {Sort::Object, 0});
  i.set_individual("d", {Sort::Object, 1});
  EXPECT_FALSE(satisfies_assertion(i, RoleAssertion{"p", "c", "d"}));
  i.role("p").insert(0, 1);
  EXPECT_TRUE(satisfies_assertion(i, RoleAssertion{"p", "c", "d"}));
}

TEST(SatisfiesFormula, Readings) {
  const Signature sig = parse_kb("oconcept C, D;").sig;
  const Concept c = parse_concept("C", sig), d = parse_concept("D", sig);
  enumerate_interpretations(sig, Bounds{2, 1}, [&](const Interpretation& i) {
    EXPECT_TRUE(satisfies_formula(i, Inclusion{c, Concept::top()}));
    EXPECT_TRUE(satisfies_formula(i, Equivalence{parse_concept("C and C", sig), c}));
    // Literal existential reading: any x outside C is a vacuous witness.
    if ((~i.atom("C")).any()) {
      EXPECT_TRUE(satisfies_formula(i, Inclusion{c, d}, Reading::Existential));
    }
    return true;
  });
  // C = {x1, x2}, D = {x1}: the universal reading fails, the existential holds.
  Interpretation i(sig, 2, 1);
  i.atom("C").set();
  i.atom("D").set(0);
  EXPECT_FALSE(satisfies_formula(i, Inclusion{c, d}));
  EXPECT_TRUE(satisfies_formula(i, Inclusion{c, d}, Reading::Existential));
}

TEST(Serialization, FormatAndRoundTrip) {
  const KnowledgeBase kb = parse_kb(kTunnelKb);
  const Interpretation i = tunnel_model(kb.sig);
  const std::string text = serialize_interpretation(i);
  EXPECT_EQ(text,
            "delta: tunnel1;\n"
            "sigma: loc1 len1;\n"
            "Gas = {};\n"
            "Length = {len1};\n"
            "Location = {loc1};\n"
            "Tunnel = {tunnel1};\n"
            "has-length = {(tunnel1,len1)};\n"
            "has-location = {};\n"
            "ind gas1 = tunnel1;\n"
            "ind len1 = len1;\n"
            "ind tunnel1 = tunnel1;\n");
  const Interpretation back = parse_interpretation(text, kb.sig);
  EXPECT_EQ(serialize_interpretation(back), text);
}

TEST(SemanticsProperties, DualityInverseCoherenceMonotonicity) {
  const Signature sig = parse_kb(gen::kRandomSignature).sig;
  gen::ConceptGenerator gen(3, false);
  std::vector<Concept> objs, attrs;
  for (int k = 0; k < 6; ++k) {
    objs.push_back(gen(Sort::Object, 2));
    attrs.push_back(gen(Sort::Attribute, 2));
  }
  const RoleRef roles[] = {{"p", RoleKind::ObjObj}, {"q", RoleKind::AttrAttr}, {"r", RoleKind::Cross},
                           {"r", RoleKind::CrossInverse}};
  std::size_t checked = 0;
  enumerate_interpretations(sig, Bounds{2, 1}, [&](const Interpretation& i) {
    if (checked++ % 7) return true;  // a spread-out sample keeps this quick
    EXPECT_TRUE(validate_interpretation(i).empty());
    for (const auto& role : roles) {
      const auto& fillers = target_sort(role.kind) == Sort::Object ? objs : attrs;
      for (std::size_t k = 0; k + 1 < fillers.size(); ++k) {
        const Concept& f = fillers[k];
        const Sort src = source_sort(role.kind);
        const ElementSet all = extension(Concept::forall(role, f), i);
        const ElementSet dual = ~extension(Concept::exists(role, Concept::negation(f)), i);
        EXPECT_EQ(all, dual);
        EXPECT_EQ(all.size(), i.domain_size(src));
        const ElementSet some = extension(Concept::exists(role, f), i);
        const ElementSet wider = extension(Concept::exists(role, Concept::disjunction(f, fillers[k + 1])), i);
        EXPECT_TRUE(some.is_subset_of(wider));
      }
    }
    const RoleExtension& r = i.role("r");
    for (std::size_t u = 0; u < i.domain_size(Sort::Attribute); ++u) {
      ElementSet single(i.domain_size(Sort::Attribute));
      single.set(u);
      // x in (some inv(r) {u})-preimage exactly when (x,u) in r.
      for (std::size_t x = 0; x < i.domain_size(Sort::Object); ++x) {
        Interpretation j = i;
        j.atom("A") = single;
        const bool via_inverse = extension(parse_concept("some r A", sig), j).test(x);
        EXPECT_EQ(via_inverse, r.contains(x, u));
        ElementSet xs(i.domain_size(Sort::Object));
        xs.set(x);
        j.atom("C") = xs;
        EXPECT_EQ(extension(parse_concept("some inv(r) C", sig), j).test(u), r.contains(x, u));
      }
    }
    return true;
  });
  EXPECT_GT(checked, 1000u);
}
