#pragma once

// Forward (class expression to concept models) and backward (concept models
// to class expression) translation, plus the canonical forests used to
// compare classes up to the translation.

#include "amlowl/caex.hpp"
#include "amlowl/concept_tree.hpp"
#include "amlowl/expr.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace amlowl {

enum class MappingPattern {
  SimpleComplement,    // not A
  Existential,         // R some C
  ExistentialNegated,  // R some (not C)
  Universal,           // R only C
  UniversalNegated,    // R only (not C)
  AtLeast,             // R min n C
  AtMost,              // R max n C
  Exact,               // R exactly n C
  FillsObject,         // R value a
  FillsData,           // P value "v"
};

std::string_view toString(MappingPattern pattern);
const std::vector<MappingPattern>& allMappingPatterns();

struct MappingRow {
  MappingPattern pattern;
  bool negated = false;
  unsigned min = 1;
  std::optional<unsigned> max;  // empty means unlimited
  bool identifiedByID = false;

  bool operator==(const MappingRow&) const = default;
};

// Concept attributes a pattern sets on the element it produces; `n` is the
// cardinality argument where one applies.
MappingRow mappingRow(MappingPattern pattern, unsigned n = 0);

// Patterns used by a translation, for coverage accounting.
struct MappingTrace {
  std::set<MappingPattern> used;
};

struct ForwardOptions {
  std::uint64_t idSeed = 0;
  std::optional<std::string> sourceClassName;
  MappingTrace* trace = nullptr;
};

// nnf, properness check, ConstructD, inverse removal, then depth-first
// emission of one model per concept tree.
// Throws ImproperClass, Unsatisfiable or UncoveredConstructor.
ConceptModelDocument transF(const ClassExpression& ce, const ForwardOptions& options = {});

// Emits the model of one concept tree. IDs and names are left empty.
CaexElement emitModel(const ConceptTreeNode& conceptTree, MappingTrace* trace = nullptr);

// One disjunct per model, combined with Or. Throws ImproperModel unless every
// model has exactly one primary element, and AmbiguousCardinality when a
// window has min > max.
ClassExpression transB(const ConceptModelDocument& doc, MappingTrace* trace = nullptr);
ClassExpression transBModel(const CaexElement& root, MappingTrace* trace = nullptr);

// Forward pipeline up to the concept trees, then a normal form per tree:
// flattened intersections without redundant Thing, min 1 as some, max 0 over
// a literal as only over its complement, some {a} as value a, positional
// class kinds left implicit, existentials absorbed by an equal min/exactly
// sibling, and children in a fixed order.
ConceptForest canonicalize(const ClassExpression& ce);
// Sorted serializations of the canonical trees.
std::vector<std::string> canonicalKeys(const ClassExpression& ce);
bool equivalent(const ClassExpression& a, const ClassExpression& b);

// Canonical child order, existential absorption, class paths reduced to
// class names, fresh IDs and derived element names.
ConceptModelDocument normalize(const ConceptModelDocument& doc, std::uint64_t idSeed = 0);

} // namespace amlowl
