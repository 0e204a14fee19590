#pragma once

#include "amlowl/caex.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace amlowl {

// Validates `doc` and serializes it. Concept attributes equal to their
// defaults are omitted. Output is UTF-8 with LF newlines and two-space
// indentation, and depends only on the document.
std::string writeXml(const ConceptModelDocument& doc);

struct XmlReadResult {
  ConceptModelDocument document;
  std::vector<std::string> warnings;  // unknown elements and attributes
};

// Throws XmlSyntaxError for malformed XML and SchemaError for structures
// outside the supported subset. Models with zero or several primary elements
// are accepted.
XmlReadResult readXmlWithWarnings(std::string_view xml);
ConceptModelDocument readXml(std::string_view xml);

} // namespace amlowl
