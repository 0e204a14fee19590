#pragma once

// AND-trees and AML concept trees.
//
// Every node holds the class expression it represents. Branching nodes are
// intersections (one child per operand) or object restrictions (one child,
// the filler). Leaves are atomic classes (possibly negated), Thing, Nothing,
// singleton nominals and data restrictions.

#include "amlowl/expr.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace amlowl {

enum class NodeKind { Intersection, Restriction, Atomic, Thing, Nothing, Nominal };

enum class Flavor { Some, All, Min, Max, Exact, HasValue };

std::string_view toString(NodeKind kind);
std::string_view toString(Flavor flavor);

struct RestrictionInfo {
  PropertyRef property;
  Flavor flavor = Flavor::Some;
  std::optional<unsigned> n;  // cardinality restrictions only
  bool negatedFiller = false;
  std::optional<DataRange> dataRange;  // data restrictions only

  bool operator==(const RestrictionInfo&) const = default;
};

struct ConceptTreeNode {
  ClassExpression expr;
  NodeKind kind = NodeKind::Thing;
  std::optional<RestrictionInfo> restriction;
  std::vector<ConceptTreeNode> children;
  // Set on the node that describes the instances of the source class: the
  // root, or after inverse removal the filler of the restriction that leads
  // to the original object.
  bool primary = false;

  std::size_t size() const;
  bool isLeaf() const { return children.empty(); }
};

struct ConceptForest {
  std::vector<ConceptTreeNode> trees;
};

// Algorithm "Construct": the AND-tree of an NNF class without unions.
// Throws DisjunctionPresent on Or or multi-member nominals.
ConceptTreeNode construct(const ClassExpression& ce);

// Algorithm "ConstructD": one AND-tree per disjunct. Unions under
// intersections and existential restrictions are multiplexed by copying the
// enclosing node once per nested tree. Unions under universal or cardinality
// restrictions do not distribute and raise ImproperClass.
ConceptForest constructD(const ClassExpression& ce);

// Algorithm "removeInverseProperty". The returned tree contains no inverse
// properties and exactly one primary node. Throws ImproperClass if an inverse
// property sits below a forward restriction or under a cardinality.
ConceptTreeNode removeInverseProperty(const ConceptTreeNode& root);

// Expression implied by the node's children (identity for leaves).
ClassExpression rebuildExpression(const ConceptTreeNode& node);

// Node for `ce` with no children yet.
ConceptTreeNode makeNode(const ClassExpression& ce);

// The nodes whose conjunction describes the object a node stands for.
std::vector<ConceptTreeNode> conjunctNodes(const ConceptTreeNode& node);

std::size_t countPrimary(const ConceptTreeNode& node);

// Indented ASCII rendering, one node per line.
std::string renderTree(const ConceptTreeNode& node);
// Nested JSON object (compact, keys in fixed order).
std::string toJson(const ConceptTreeNode& node);

} // namespace amlowl
