#pragma once

#include "amlowl/expr.hpp"

#include <string_view>

namespace amlowl {

// Parses one class expression in the Manchester-style input syntax:
//
//   expr        := term ("or" term)*
//   term        := factor ("and" factor)*
//   factor      := "not" factor | "(" expr ")" | "{" name ("," name)* "}"
//                | "Thing" | "Nothing" | name ["@rc" | "@ic" | "@suc"]
//                | restriction
//   restriction := prop ("some" | "only") factor
//                | prop ("min" | "max" | "exactly") INT [factor]
//                | prop "value" (name | literal)
//   literal     := STRING ["^^" datatype] | NUMBER | "true" | "false"
//
// hasIE, hasEI, isIEOf and isEIOf are object properties; any other property
// name is a data property whose "some" filler is a data range:
//
//   range       := "not" range | "(" range ")" | "{" literal "}" | datatype
//
// Names are identifiers or <bracketed> IRIs. "#" starts a line comment.
//
// Throws SyntaxError on malformed input and UncoveredConstructor for
// constructors outside the supported subset (data "only"/cardinalities,
// Self restrictions).
ClassExpression parse(std::string_view text);

} // namespace amlowl
