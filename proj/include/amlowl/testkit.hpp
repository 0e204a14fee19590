#pragma once

// Random generators and brute-force oracles for the property suites and the
// CLI fuzz command.

#include "amlowl/caex.hpp"
#include "amlowl/expr.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace amlowl::testkit {

struct GenConfig {
  int maxDepth = 3;
  int maxFanout = 3;
  std::vector<std::string> atomPool{"Robot", "IOController", "IODevice", "Gripper"};
  std::vector<std::string> interfacePool{"IOInterface", "PowerInterface"};
  bool allowInverse = true;
  bool allowDisjunction = true;
  std::uint64_t seed = 1;
};

// A class that passes checkProper after nnf. Inverse restrictions form the
// outermost prefix, hasEI fillers describe interfaces without children, and
// unions only occur where they distribute.
ClassExpression genProperClass(const GenConfig& cfg);

// Any covered class, negations not pushed inward. Negation is never applied
// to nominals or data restrictions, so nnf succeeds.
ClassExpression genArbitraryClass(const GenConfig& cfg);

// A document whose models each have exactly one primary element on a path of
// default windows, and no [m,n] windows with 1 <= m < n.
ConceptModelDocument genProperDocument(const GenConfig& cfg);

// Disjuncts obtained by textbook distribution of unions and nominals out of
// intersections and existential fillers.
std::vector<ClassExpression> dnf(const ClassExpression& ce);
std::size_t dnfCount(const ClassExpression& ce);

struct WorldObject {
  ElementKind kind = ElementKind::InternalElement;
  std::set<std::string> labels;
  std::optional<std::string> individual;
  std::vector<std::pair<std::string, Literal>> attributes;
  std::vector<std::size_t> children;
  std::optional<std::size_t> parent;
};

// A finite forest: internal elements own internal elements and interfaces,
// interfaces own nothing.
struct World {
  std::vector<WorldObject> objects;
};

struct WorldConfig {
  int maxChildren = 5;
  int maxDepth = 4;
  int maxLabels = 3;
  int maxRoots = 2;
  std::vector<std::string> atomPool{"Robot", "IOController", "IODevice", "Gripper",
                                    "IOInterface", "PowerInterface"};
  std::vector<std::string> individuals{"a", "b", "c", "d"};
  std::uint64_t seed = 1;
};

World genWorld(const WorldConfig& cfg);

// Extension of ce in the world by direct evaluation of the constructor
// semantics.
std::set<std::size_t> modelCheck(const ClassExpression& ce, const World& world);
bool satisfies(const ClassExpression& ce, const World& world, std::size_t object);

// True if the object can play the primary element of the model: its
// ancestors line up with the path to the primary and every element on the
// way matches, with child counts inside their windows.
bool matchesModel(const CaexElement& model, const World& world, std::size_t object);
bool matchesDocument(const ConceptModelDocument& doc, const World& world, std::size_t object);

} // namespace amlowl::testkit
