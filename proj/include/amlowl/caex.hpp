#pragma once

// In-memory AML concept models: a small CAEX subset decorated with the five
// concept attributes.

#include "amlowl/expr.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace amlowl {

struct ConceptAttributes {
  bool negated = false;
  unsigned minCardinality = 1;
  std::optional<unsigned> maxCardinality;  // empty means unlimited
  bool identifiedByID = false;
  bool primary = false;

  bool isDefault() const { return *this == ConceptAttributes{}; }
  bool hasDefaultWindow() const { return minCardinality == 1 && !maxCardinality; }
  bool operator==(const ConceptAttributes&) const = default;
};

enum class ElementKind { InternalElement, ExternalInterface };

std::string_view toString(ElementKind kind);

struct ClassRef {
  std::string path;
  CaexKind refKind = CaexKind::RoleClass;

  bool operator==(const ClassRef&) const = default;
};

struct CaexAttribute {
  std::string name;
  std::string datatype = "string";  // without the xs: prefix
  std::optional<std::string> requiredValue;
  ConceptAttributes conceptAttrs;

  bool operator==(const CaexAttribute&) const = default;
};

struct CaexElement {
  std::string id;
  std::string name;
  ElementKind kind = ElementKind::InternalElement;
  std::optional<ClassRef> classRef;
  ConceptAttributes conceptAttrs;
  std::vector<CaexAttribute> attributes;
  std::vector<CaexElement> internalElements;
  std::vector<CaexElement> externalInterfaces;

  bool operator==(const CaexElement&) const = default;
};

struct ConceptModelDocument {
  std::vector<CaexElement> models;
  std::optional<std::string> sourceClassName;

  bool operator==(const ConceptModelDocument&) const = default;
};

// Names of the concept attributes as they appear in CAEX. Data attributes may
// not use them.
bool isConceptAttributeName(std::string_view name);

// Throws InvalidModel naming the offending element.
void validate(const ConceptModelDocument& doc);

// Number of primary elements per model.
std::vector<std::size_t> primaryCounts(const ConceptModelDocument& doc);
std::size_t countPrimary(const CaexElement& root);
// True if the element or one of its descendants is primary.
bool containsPrimary(const CaexElement& element);

// Last '/'-separated segment of a class path.
std::string classNameOf(const std::string& path);
// Class name, individual name, or "Thing".
std::string defaultName(const CaexElement& element);

// Order-insensitive description of an element's subtree. Generated IDs and
// names are left out; individual names are kept.
std::string structuralKey(const CaexElement& element, bool includeWindow = true);

// Sorts attributes, interfaces and internal elements recursively: children
// leading to the primary element first, then by structural key.
void canonicalOrder(CaexElement& element);

// Deterministic 26-character identifiers in Crockford base32.
class IdGenerator {
public:
  explicit IdGenerator(std::uint64_t seed = 0);
  std::string next();

private:
  std::uint64_t prefix_;
  std::uint64_t counter_ = 0;
};

// Assigns fresh IDs in depth-first pre-order. Elements identified by ID keep
// theirs.
void assignIds(ConceptModelDocument& doc, std::uint64_t seed = 0);

// ASCII tree with [min,max] windows (-1 for unlimited), '!' for negated and
// '*' for primary. ANSI colours when `color` is set.
std::string renderModel(const CaexElement& root, bool color = false);
std::string renderDocument(const ConceptModelDocument& doc, bool color = false);

} // namespace amlowl
