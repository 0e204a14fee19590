#pragma once

#include "amlowl/expr.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace amlowl {

enum class ViolationTag {
  // Inverse-property placement conditions.
  C1,  // R- in the filler of a restriction over R
  C2,  // inverse property under/over a cardinality (or universal) restriction
  C3,  // R- in the filler of a restriction over a different property
  C4,  // isEIOf in the filler of a restriction over an inverse property
  // Positions that must collapse into a single CAEX element.
  MixedSignAtomicConjunction,  // e.g. (not A1) and A2
  MultipleClassReferences,     // e.g. A1 and A2
  MultipleNominals,            // e.g. {a} and {b}
  CaexKindMismatch,            // interface class on an internal element or vice versa
  ChildUnderInterface,         // external interfaces have no children
  // Constructs that the concept-tree multiplexing cannot represent.
  NonDistributableDisjunction,  // a union under only/min/max/exactly
  ComplexUniversalFiller,       // only with a filler other than A, not A, Thing
};

std::string_view toString(ViolationTag tag);

struct Violation {
  ViolationTag tag;
  std::string path;  // dotted path to the offending subterm, "" for the root
  std::string message;
};

// Checks that an NNF class is a proper AML class. Returns every breach; the
// empty list means the class can be translated.
std::vector<Violation> checkProper(const ClassExpression& ce);

std::string describe(const Violation& v);

} // namespace amlowl
