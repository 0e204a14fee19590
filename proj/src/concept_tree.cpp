#include "amlowl/concept_tree.hpp"

#include "amlowl/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace amlowl {

std::string_view toString(NodeKind kind) {
  switch (kind) {
    case NodeKind::Intersection: return "intersection";
    case NodeKind::Restriction: return "restriction";
    case NodeKind::Atomic: return "atomic";
    case NodeKind::Thing: return "thing";
    case NodeKind::Nothing: return "nothing";
    case NodeKind::Nominal: return "nominal";
  }
  return "?";
}

std::string_view toString(Flavor flavor) {
  switch (flavor) {
    case Flavor::Some: return "some";
    case Flavor::All: return "all";
    case Flavor::Min: return "min";
    case Flavor::Max: return "max";
    case Flavor::Exact: return "exact";
    case Flavor::HasValue: return "hasValue";
  }
  return "?";
}

std::size_t ConceptTreeNode::size() const {
  std::size_t n = 1;
  for (const auto& c : children) n += c.size();
  return n;
}

ConceptTreeNode makeNode(const ClassExpression& ce) {
  ConceptTreeNode node;
  node.expr = ce;
  visit(overloaded{
            [&](const Atomic&) { node.kind = NodeKind::Atomic; },
            [&](const Not& n) {
              if (!n.operand.is<Atomic>())
                throw std::invalid_argument("expected NNF, got '" + print(ce) + "'");
              node.kind = NodeKind::Atomic;
            },
            [&](const Thing&) { node.kind = NodeKind::Thing; },
            [&](const Nothing&) { node.kind = NodeKind::Nothing; },
            [&](const And&) { node.kind = NodeKind::Intersection; },
            [&](const Or&) {
              throw DisjunctionPresent("union '" + print(ce) + "' in an AND-tree");
            },
            [&](const OneOf& o) {
              if (o.individuals.size() != 1)
                throw DisjunctionPresent("nominal '" + print(ce) + "' in an AND-tree");
              node.kind = NodeKind::Nominal;
            },
            [&](const ObjectSome& r) {
              node.kind = NodeKind::Restriction;
              node.restriction = RestrictionInfo{r.property, Flavor::Some, std::nullopt,
                                                 r.filler.is<Not>(), std::nullopt};
            },
            [&](const ObjectAll& r) {
              node.kind = NodeKind::Restriction;
              node.restriction = RestrictionInfo{r.property, Flavor::All, std::nullopt,
                                                 r.filler.is<Not>(), std::nullopt};
            },
            [&](const ObjectCardinality& r) {
              node.kind = NodeKind::Restriction;
              Flavor f = r.kind == CardinalityKind::Min   ? Flavor::Min
                         : r.kind == CardinalityKind::Max ? Flavor::Max
                                                          : Flavor::Exact;
              node.restriction = RestrictionInfo{r.property, f, r.n, r.filler.is<Not>(), std::nullopt};
            },
            [&](const ObjectHasValue& r) {
              node.kind = NodeKind::Restriction;
              node.restriction =
                  RestrictionInfo{r.property, Flavor::HasValue, std::nullopt, false, std::nullopt};
            },
            [&](const DataSome& r) {
              node.kind = NodeKind::Restriction;
              node.restriction =
                  RestrictionInfo{r.property, Flavor::Some, std::nullopt, r.range.negated, r.range};
            },
            [&](const DataHasValue& r) {
              node.kind = NodeKind::Restriction;
              node.restriction = RestrictionInfo{
                  r.property, Flavor::HasValue, std::nullopt, false,
                  DataRange{r.value.datatype, r.value.lexical, false}};
            },
        },
        ce);
  return node;
}

ClassExpression rebuildExpression(const ConceptTreeNode& node) {
  if (node.kind == NodeKind::Intersection) {
    std::vector<ClassExpression> ops;
    for (const auto& c : node.children) ops.push_back(c.expr);
    return objectIntersectionOf(std::move(ops));
  }
  if (node.kind != NodeKind::Restriction || node.children.empty()) return node.expr;
  const auto& r = *node.restriction;
  const auto& filler = node.children.front().expr;
  switch (r.flavor) {
    case Flavor::Some: return objectSomeValuesFrom(r.property, filler);
    case Flavor::All: return objectAllValuesFrom(r.property, filler);
    case Flavor::Min: return objectMinCardinality(*r.n, r.property, filler);
    case Flavor::Max: return objectMaxCardinality(*r.n, r.property, filler);
    case Flavor::Exact: return objectExactCardinality(*r.n, r.property, filler);
    case Flavor::HasValue:
      return objectHasValue(r.property, filler.as<OneOf>().individuals.front());
  }
  return node.expr;
}

namespace {

void refresh(ConceptTreeNode& node) {
  node.expr = rebuildExpression(node);
  if (node.restriction && !node.children.empty())
    node.restriction->negatedFiller = node.children.front().expr.is<Not>();
}

void attach(ConceptTreeNode& parent, ConceptTreeNode child) {
  if (parent.kind == NodeKind::Intersection && child.kind == NodeKind::Intersection && !child.primary) {
    for (auto& c : child.children) parent.children.push_back(std::move(c));
  } else {
    parent.children.push_back(std::move(child));
  }
}

ConceptTreeNode nominalNode(const std::string& individual) {
  return makeNode(objectOneOf({individual}));
}

std::vector<ConceptTreeNode> multiplex(const std::vector<ConceptTreeNode>& roots,
                                       const std::vector<ConceptTreeNode>& nested) {
  std::vector<ConceptTreeNode> out;
  out.reserve(roots.size() * nested.size());
  for (const auto& root : roots) {
    // The original root plus nested.size() - 1 copies, one per nested tree.
    for (const auto& tree : nested) {
      ConceptTreeNode copy = root;
      attach(copy, tree);
      out.push_back(std::move(copy));
    }
  }
  return out;
}

std::vector<ConceptTreeNode> constructAll(const ClassExpression& ce) {
  if (ce.is<Or>()) {
    std::vector<ConceptTreeNode> roots;
    for (const auto& op : ce.as<Or>().operands) {
      auto sub = constructAll(op);
      roots.insert(roots.end(), std::make_move_iterator(sub.begin()),
                   std::make_move_iterator(sub.end()));
    }
    return roots;
  }
  if (ce.is<OneOf>()) {
    std::vector<ConceptTreeNode> roots;
    for (const auto& ind : ce.as<OneOf>().individuals) roots.push_back(nominalNode(ind));
    return roots;
  }

  std::vector<ConceptTreeNode> roots{makeNode(ce)};
  if (ce.is<And>()) {
    for (const auto& op : ce.as<And>().operands) roots = multiplex(roots, constructAll(op));
  } else if (ce.is<ObjectHasValue>()) {
    roots.front().children.push_back(nominalNode(ce.as<ObjectHasValue>().individual));
  } else if (auto filler = restrictionFiller(ce)) {
    auto nested = constructAll(*filler);
    if (nested.size() > 1 && !ce.is<ObjectSome>())
      throw ImproperClass("union inside '" + print(ce) +
                          "' does not distribute over a universal or cardinality restriction");
    roots = multiplex(roots, nested);
  }
  for (auto& r : roots) refresh(r);
  return roots;
}

bool isInverseRestriction(const ConceptTreeNode& n) {
  return n.kind == NodeKind::Restriction && n.restriction->property.isInverse();
}

} // namespace

ConceptTreeNode construct(const ClassExpression& ce) {
  ConceptTreeNode root = makeNode(ce);
  if (ce.is<And>()) {
    for (const auto& op : ce.as<And>().operands) root.children.push_back(construct(op));
  } else if (ce.is<ObjectHasValue>()) {
    root.children.push_back(nominalNode(ce.as<ObjectHasValue>().individual));
  } else if (auto filler = restrictionFiller(ce)) {
    root.children.push_back(construct(*filler));
  }
  return root;
}

ConceptForest constructD(const ClassExpression& ce) { return ConceptForest{constructAll(ce)}; }

std::vector<ConceptTreeNode> conjunctNodes(const ConceptTreeNode& node) {
  if (node.kind == NodeKind::Intersection) return node.children;
  return {node};
}

ConceptTreeNode removeInverseProperty(const ConceptTreeNode& root) {
  ConceptTreeNode current = root;
  bool first = true;
  while (containsInverse(current.expr)) {
    std::vector<ConceptTreeNode> inverse, normal;
    for (auto& c : conjunctNodes(current))
      (isInverseRestriction(c) ? inverse : normal).push_back(std::move(c));

    if (inverse.empty())
      throw ImproperClass("inverse property below a forward restriction in '" +
                          print(current.expr) + "'");
    for (const auto& n : normal)
      if (containsInverse(n.expr))
        throw ImproperClass("inverse property below a forward restriction in '" + print(n.expr) +
                            "'");
    const PropertyRef invProp = inverse.front().restriction->property;
    for (const auto& i : inverse) {
      const auto& r = *i.restriction;
      if (r.property != invProp)
        throw ImproperClass("isIEOf and isEIOf on the same object in '" + print(current.expr) +
                            "'");
      if (r.flavor != Flavor::Some && r.flavor != Flavor::HasValue)
        throw ImproperClass("cardinality or universal restriction over inverse property in '" +
                            print(i.expr) + "'");
    }
    if (!first && invProp.name == "isEIOf")
      throw ImproperClass("isEIOf inside the filler of an inverse restriction in '" +
                          print(root.expr) + "'");

    // The object described so far becomes a child of its parent, reached
    // through the forward property.
    ConceptTreeNode filler;
    if (normal.empty()) {
      filler = makeNode(owlThing());
    } else if (normal.size() == 1) {
      filler = std::move(normal.front());
    } else {
      filler = makeNode(objectIntersectionOf({owlThing(), owlThing()}));
      filler.kind = NodeKind::Intersection;
      filler.children = std::move(normal);
      refresh(filler);
    }
    if (first) filler.primary = true;
    ConceptTreeNode child = makeNode(objectSomeValuesFrom(invProp.inverse(), filler.expr));
    child.children.push_back(std::move(filler));
    refresh(child);

    std::vector<ConceptTreeNode> parent{std::move(child)};
    for (auto& i : inverse) {
      for (auto& c : conjunctNodes(i.children.front()))
        if (c.kind != NodeKind::Thing) parent.push_back(std::move(c));
    }

    if (parent.size() == 1) {
      current = std::move(parent.front());
    } else {
      ConceptTreeNode next = makeNode(objectIntersectionOf({owlThing(), owlThing()}));
      next.kind = NodeKind::Intersection;
      next.children = std::move(parent);
      refresh(next);
      current = std::move(next);
    }
    first = false;
  }
  if (first) current.primary = true;
  return current;
}

std::size_t countPrimary(const ConceptTreeNode& node) {
  std::size_t n = node.primary ? 1 : 0;
  for (const auto& c : node.children) n += countPrimary(c);
  return n;
}

namespace {

std::string label(const ConceptTreeNode& node) {
  std::string s;
  switch (node.kind) {
    case NodeKind::Intersection: s = "AND"; break;
    case NodeKind::Restriction: {
      const auto& r = *node.restriction;
      if (r.dataRange) {
        s = print(node.expr);
        break;
      }
      s = r.property.name + " " + std::string(toString(r.flavor));
      if (r.n) s += " " + std::to_string(*r.n);
      break;
    }
    default: s = print(node.expr); break;
  }
  if (node.primary) s += " *";
  return s;
}

void render(const ConceptTreeNode& node, const std::string& indent, bool last, bool root,
            std::ostringstream& os) {
  if (root)
    os << label(node) << '\n';
  else
    os << indent << (last ? "`- " : "+- ") << label(node) << '\n';
  std::string childIndent = root ? "" : indent + (last ? "   " : "|  ");
  for (std::size_t i = 0; i < node.children.size(); ++i)
    render(node.children[i], childIndent, i + 1 == node.children.size(), false, os);
}

nlohmann::ordered_json json(const ConceptTreeNode& node) {
  nlohmann::ordered_json j;
  j["kind"] = std::string(toString(node.kind));
  // Branching nodes are spelled out by their children.
  if (node.children.empty()) j["expr"] = print(node.expr);
  if (node.restriction) {
    const auto& r = *node.restriction;
    j["property"] = r.property.name;
    j["flavor"] = std::string(toString(r.flavor));
    if (r.n) j["n"] = *r.n;
    j["negatedFiller"] = r.negatedFiller;
    if (r.dataRange) {
      nlohmann::ordered_json dr;
      dr["datatype"] = r.dataRange->datatype;
      if (r.dataRange->requiredValue) dr["value"] = *r.dataRange->requiredValue;
      dr["negated"] = r.dataRange->negated;
      j["dataRange"] = dr;
    }
  }
  j["primary"] = node.primary;
  auto children = nlohmann::ordered_json::array();
  for (const auto& c : node.children) children.push_back(json(c));
  j["children"] = std::move(children);
  return j;
}

} // namespace

std::string renderTree(const ConceptTreeNode& node) {
  std::ostringstream os;
  render(node, "", true, true, os);
  return os.str();
}

std::string toJson(const ConceptTreeNode& node) { return json(node).dump(); }

} // namespace amlowl
