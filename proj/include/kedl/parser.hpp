// Surface syntax for concepts and knowledge bases.
//
//   decl    := ("oconcept"|"aconcept") NAME ";" | ("orole"|"arole"|"xrole") NAME ";"
//            | ("oindividual"|"aindividual") NAME ";"
//   concept := "top" | "bot" | NAME | "not" concept | concept ("and"|"or") concept
//            | ("some"|"all") roleref concept | "(" concept ")"
//            | concept ("=>"|"<=>") concept
//   roleref := NAME | "inv(" NAME ")"
//   tbox    := NAME ":=" concept ";" | concept "<=" concept ";"
//   abox    := NAME "(" NAME ")" ";" | "(" concept ")" "(" NAME ")" ";"
//            | NAME "(" NAME "," NAME ")" ";"
//
// Precedence: not > and > or > (=>, <=>); arrows associate to the right. A
// quantifier takes the tightest following concept. Declarations may appear
// anywhere in a file. "top"/"bot" take their sort from the context; where the
// context fixes none, "top:attribute" / "bot:object" select it explicitly.

#ifndef KEDL_PARSER_HPP
#define KEDL_PARSER_HPP

#include <optional>
#include <string>
#include <string_view>

#include "kedl/concept.hpp"
#include "kedl/kb.hpp"
#include "kedl/signature.hpp"

namespace kedl {

// Parses and sort-checks a concept. `expected` fixes the sort of a concept
// whose sort is not determined by its atoms and roles (object otherwise).
// Throws ParseError or SortError.
Concept parse_concept(std::string_view text, const Signature& sig,
                      std::optional<Sort> expected = std::nullopt);

// Throws ParseError, SortError or KbError.
KnowledgeBase parse_kb(std::string_view text);

// Text accepted by parse_kb that reproduces kb.
std::string print_kb(const KnowledgeBase& kb);

bool is_reserved_word(std::string_view word);

// One inclusion "l <= r" or assertion ("C(a)", "(concept)(a)", "r(a, b)")
// over kb's signature. Throws ParseError, SortError or KbError.
Formula parse_formula(std::string_view text, const Signature& sig);

// Declarations for the names of a concept or inclusion text that sig does not
// declare: names after some/all/inv are roles, the rest atoms. The first
// assignment that sort-checks wins, trying cross, object and attribute roles
// in that order and object atoms before attribute atoms. Returns sig extended
// by the guesses. Throws SortError when no assignment fits.
Signature infer_signature(std::string_view text, const Signature& sig = {});

}  // namespace kedl

#endif  // KEDL_PARSER_HPP
