#include "amlowl/translator.hpp"

#include "amlowl/errors.hpp"
#include "amlowl/nnf.hpp"
#include "amlowl/proper.hpp"

#include <algorithm>

namespace amlowl {

std::string_view toString(MappingPattern pattern) {
  switch (pattern) {
    case MappingPattern::SimpleComplement: return "simpleComplement";
    case MappingPattern::Existential: return "existential";
    case MappingPattern::ExistentialNegated: return "existentialNegated";
    case MappingPattern::Universal: return "universal";
    case MappingPattern::UniversalNegated: return "universalNegated";
    case MappingPattern::AtLeast: return "atLeast";
    case MappingPattern::AtMost: return "atMost";
    case MappingPattern::Exact: return "exact";
    case MappingPattern::FillsObject: return "fillsObject";
    case MappingPattern::FillsData: return "fillsData";
  }
  return "?";
}

const std::vector<MappingPattern>& allMappingPatterns() {
  static const std::vector<MappingPattern> all{
      MappingPattern::SimpleComplement, MappingPattern::Existential,
      MappingPattern::ExistentialNegated, MappingPattern::Universal,
      MappingPattern::UniversalNegated, MappingPattern::AtLeast,
      MappingPattern::AtMost, MappingPattern::Exact,
      MappingPattern::FillsObject, MappingPattern::FillsData};
  return all;
}

MappingRow mappingRow(MappingPattern pattern, unsigned n) {
  switch (pattern) {
    case MappingPattern::SimpleComplement: return {pattern, true, 1, std::nullopt};
    case MappingPattern::Existential: return {pattern, false, 1, std::nullopt};
    case MappingPattern::ExistentialNegated: return {pattern, true, 1, std::nullopt};
    case MappingPattern::Universal: return {pattern, true, 0, 0u};
    case MappingPattern::UniversalNegated: return {pattern, false, 0, 0u};
    case MappingPattern::AtLeast: return {pattern, false, n, std::nullopt};
    case MappingPattern::AtMost: return {pattern, false, 0, n};
    case MappingPattern::Exact: return {pattern, false, n, n};
    case MappingPattern::FillsObject: return {pattern, false, 1, std::nullopt, true};
    case MappingPattern::FillsData: return {pattern, false, 1, std::nullopt};
  }
  return {pattern, false, 1, std::nullopt};
}

namespace {

void record(MappingTrace* trace, MappingPattern p) {
  if (trace) trace->used.insert(p);
}

CaexKind positionalKind(ElementKind kind) {
  return kind == ElementKind::InternalElement ? CaexKind::RoleClass : CaexKind::InterfaceClass;
}

ElementKind kindOf(const PropertyRef& p) {
  return p.name == "hasEI" ? ElementKind::ExternalInterface : ElementKind::InternalElement;
}

void applyRow(ConceptAttributes& c, const MappingRow& row) {
  c.minCardinality = row.min;
  c.maxCardinality = row.max;
  if (row.identifiedByID) c.identifiedByID = true;
}

// ---------------------------------------------------------------- forward

class Emitter {
public:
  explicit Emitter(MappingTrace* trace) : trace_(trace) {}

  CaexElement object(const ConceptTreeNode& o, ElementKind kind, bool top) {
    CaexElement e;
    e.kind = kind;
    e.conceptAttrs.primary = o.primary;
    for (const auto& c : conjunctNodes(o)) conjunct(e, c);
    if (top && e.conceptAttrs.negated) record(trace_, MappingPattern::SimpleComplement);
    return e;
  }

private:
  void setClass(CaexElement& e, const ConceptTreeNode& c) {
    const bool negated = c.expr.is<Not>();
    const auto& a = negated ? c.expr.as<Not>().operand.as<Atomic>() : c.expr.as<Atomic>();
    if (e.classRef || e.conceptAttrs.negated)
      throw ImproperClass("several class references on one element near '" + print(c.expr) + "'");
    e.classRef = ClassRef{a.name, a.kind.value_or(positionalKind(e.kind))};
    e.conceptAttrs.negated = negated;
  }

  void conjunct(CaexElement& e, const ConceptTreeNode& c) {
    switch (c.kind) {
      case NodeKind::Atomic: setClass(e, c); return;
      case NodeKind::Thing: return;
      case NodeKind::Nothing:
        throw Unsatisfiable("owl:Nothing has no concept-model representation");
      case NodeKind::Nominal:
        if (e.conceptAttrs.identifiedByID)
          throw ImproperClass("several nominals on one element near '" + print(c.expr) + "'");
        e.id = c.expr.as<OneOf>().individuals.front();
        e.conceptAttrs.identifiedByID = true;
        return;
      case NodeKind::Intersection:
        for (const auto& cc : c.children) conjunct(e, cc);
        return;
      case NodeKind::Restriction:
        if (c.restriction->dataRange) e.attributes.push_back(attribute(c));
        else if (c.restriction->property.isInverse())
          throw ImproperClass("inverse property left in concept tree: '" + print(c.expr) + "'");
        else child(e, c);
        return;
    }
  }

  CaexAttribute attribute(const ConceptTreeNode& c) {
    const auto& r = *c.restriction;
    CaexAttribute a;
    a.name = r.property.name;
    a.datatype = r.dataRange->datatype;
    a.requiredValue = r.dataRange->requiredValue;
    a.conceptAttrs.negated = r.dataRange->negated;
    if (a.requiredValue && !a.conceptAttrs.negated) record(trace_, MappingPattern::FillsData);
    else if (a.conceptAttrs.negated) record(trace_, MappingPattern::SimpleComplement);
    else record(trace_, MappingPattern::Existential);
    return a;
  }

  static ClassRef literalRef(const Atomic& a, ElementKind kind) {
    return ClassRef{a.name, a.kind.value_or(positionalKind(kind))};
  }

  void child(CaexElement& parent, const ConceptTreeNode& c) {
    const auto& r = *c.restriction;
    const ElementKind kind = kindOf(r.property);
    const ConceptTreeNode& filler = c.children.front();
    CaexElement e;
    MappingRow row = mappingRow(MappingPattern::Existential);

    switch (r.flavor) {
      case Flavor::HasValue:
        e.kind = kind;
        e.id = filler.expr.as<OneOf>().individuals.front();
        row = mappingRow(MappingPattern::FillsObject);
        break;
      case Flavor::All: {
        // The filler is a literal; the element carries its complement.
        e.kind = kind;
        const auto& f = filler.expr;
        if (f.is<Atomic>()) {
          e.classRef = literalRef(f.as<Atomic>(), kind);
          e.conceptAttrs.negated = true;
          row = mappingRow(MappingPattern::Universal);
        } else if (f.is<Not>()) {
          e.classRef = literalRef(f.as<Not>().operand.as<Atomic>(), kind);
          row = mappingRow(MappingPattern::UniversalNegated);
        } else if (f.is<Thing>()) {
          e.conceptAttrs.negated = true;
          row = mappingRow(MappingPattern::Universal);
        } else if (f.is<Nothing>()) {
          row = mappingRow(MappingPattern::UniversalNegated);
        } else {
          throw ImproperClass("universal restriction over a complex filler: '" + print(c.expr) + "'");
        }
        break;
      }
      case Flavor::Some:
        e = object(filler, kind, false);
        row = mappingRow(e.conceptAttrs.negated ? MappingPattern::ExistentialNegated
                                                : MappingPattern::Existential);
        break;
      case Flavor::Min:
        e = object(filler, kind, false);
        row = mappingRow(MappingPattern::AtLeast, *r.n);
        break;
      case Flavor::Max:
        e = object(filler, kind, false);
        row = mappingRow(MappingPattern::AtMost, *r.n);
        break;
      case Flavor::Exact:
        e = object(filler, kind, false);
        row = mappingRow(MappingPattern::Exact, *r.n);
        break;
    }
    record(trace_, row.pattern);
    applyRow(e.conceptAttrs, row);
    (kind == ElementKind::InternalElement ? parent.internalElements : parent.externalInterfaces)
        .push_back(std::move(e));
  }

  MappingTrace* trace_;
};

void assignNames(CaexElement& e) {
  e.name = defaultName(e);
  for (auto& c : e.externalInterfaces) assignNames(c);
  for (auto& c : e.internalElements) assignNames(c);
}

std::string violationsText(const std::vector<Violation>& violations) {
  std::string msg = "class is not a proper AML class:";
  for (const auto& v : violations) msg += "\n  " + describe(v);
  return msg;
}

ClassExpression checkedNnf(const ClassExpression& ce) {
  auto n = nnf(ce);
  auto violations = checkProper(n);
  if (!violations.empty()) throw ImproperClass(violationsText(violations));
  return n;
}

// --------------------------------------------------------------- backward

bool sameExpression(const ClassExpression& a, const ClassExpression& b) {
  return sortOperands(a) == sortOperands(b);
}

// Drops `R some C` when a sibling `R min n C` or `R exactly n C` with n >= 1
// already implies it.
void absorb(std::vector<ClassExpression>& restrictions) {
  std::vector<ClassExpression> kept;
  for (std::size_t i = 0; i < restrictions.size(); ++i) {
    const auto& r = restrictions[i];
    bool implied = false;
    if (r.is<ObjectSome>()) {
      const auto& s = r.as<ObjectSome>();
      for (std::size_t j = 0; j < restrictions.size() && !implied; ++j) {
        if (j == i || !restrictions[j].is<ObjectCardinality>()) continue;
        const auto& c = restrictions[j].as<ObjectCardinality>();
        implied = c.kind != CardinalityKind::Max && c.n >= 1 && c.property == s.property &&
                  sameExpression(c.filler, s.filler);
      }
    }
    if (!implied) kept.push_back(r);
  }
  restrictions = std::move(kept);
}

class Backward {
public:
  explicit Backward(MappingTrace* trace) : trace_(trace) {}

  ClassExpression model(const CaexElement& root) {
    std::vector<const CaexElement*> path;
    if (!findPrimary(root, path))
      throw ImproperModel("model has no primary element", {0});
    if (!root.conceptAttrs.hasDefaultWindow())
      throw InvalidModel("model root '" + root.name + "' must keep the default cardinality window");

    // desc(e0) = M(e0 without e1); desc(ei) = M(ei without e(i+1)) and the
    // inverse restriction towards desc(e(i-1)).
    std::vector<ClassExpression> desc;
    for (std::size_t i = 0; i < path.size(); ++i) {
      const CaexElement* next = i + 1 < path.size() ? path[i + 1] : nullptr;
      auto conj = describe(*path[i], next);
      if (i == 0 && root.classRef && root.conceptAttrs.negated)
        record(trace_, MappingPattern::SimpleComplement);
      if (next && !next->conceptAttrs.hasDefaultWindow()) {
        // The window on the path child constrains the parent.
        auto extra = childRestrictions(*next);
        conj.insert(conj.end(), extra.begin(), extra.end());
      }
      if (i > 0) {
        PropertyRef inv = path[i]->kind == ElementKind::InternalElement ? isIEOf() : isEIOf();
        conj.push_back(objectSomeValuesFrom(inv, objectIntersectionOf(desc)));
      }
      desc = std::move(conj);
    }
    return objectIntersectionOf(desc);
  }

private:
  bool findPrimary(const CaexElement& e, std::vector<const CaexElement*>& path) {
    path.push_back(&e);
    if (e.conceptAttrs.primary) return true;
    for (const auto& c : e.externalInterfaces)
      if (findPrimary(c, path)) return true;
    for (const auto& c : e.internalElements)
      if (findPrimary(c, path)) return true;
    path.pop_back();
    return false;
  }

  // Conjuncts of an element's description, leaving out the restriction for
  // `skip`. Order: class or nominal, data restrictions, object restrictions.
  std::vector<ClassExpression> describe(const CaexElement& e, const CaexElement* skip) {
    std::vector<ClassExpression> conj;
    const auto& c = e.conceptAttrs;
    if (e.classRef) {
      std::optional<CaexKind> annotation;
      if (e.classRef->refKind != positionalKind(e.kind)) annotation = e.classRef->refKind;
      auto a = atomicClass(classNameOf(e.classRef->path), annotation);
      conj.push_back(c.negated ? objectComplementOf(a) : a);
    } else if (c.negated) {
      conj.push_back(owlNothing());
    }
    if (c.identifiedByID) conj.push_back(objectOneOf({e.id}));

    for (const auto& a : e.attributes) {
      if (a.conceptAttrs.primary)
        throw ImproperModel("primary element is the attribute '" + a.name +
                                "'; the primary must be an internal element or interface",
                            {1});
      if (!a.conceptAttrs.hasDefaultWindow())
        throw UncoveredConstructor("cardinality window on attribute '" + a.name +
                                   "' would need a data cardinality restriction");
      auto prop = PropertyRef::named(a.name);
      if (!prop.isData())
        throw InvalidModel("attribute name '" + a.name + "' is an object property");
      if (a.requiredValue && !a.conceptAttrs.negated) {
        record(trace_, MappingPattern::FillsData);
        conj.push_back(dataHasValue(prop, Literal{*a.requiredValue, a.datatype}));
      } else {
        record(trace_, a.conceptAttrs.negated ? MappingPattern::SimpleComplement
                                              : MappingPattern::Existential);
        conj.push_back(
            dataSomeValuesFrom(prop, DataRange{a.datatype, a.requiredValue, a.conceptAttrs.negated}));
      }
    }

    std::vector<ClassExpression> objects;
    auto addChildren = [&](const std::vector<CaexElement>& children) {
      for (const auto& ch : children) {
        if (&ch == skip) continue;
        auto rs = childRestrictions(ch);
        objects.insert(objects.end(), rs.begin(), rs.end());
      }
    };
    addChildren(e.externalInterfaces);
    addChildren(e.internalElements);
    absorb(objects);
    conj.insert(conj.end(), objects.begin(), objects.end());
    return conj;
  }

  static std::string windowText(const ConceptAttributes& c) {
    return "[" + std::to_string(c.minCardinality) + "," +
           (c.maxCardinality ? std::to_string(*c.maxCardinality) : "-1") + "]";
  }

  std::vector<ClassExpression> childRestrictions(const CaexElement& ch) {
    const auto& c = ch.conceptAttrs;
    PropertyRef prop = ch.kind == ElementKind::InternalElement ? hasIE() : hasEI();
    auto model = describe(ch, nullptr);
    auto filler = objectIntersectionOf(model);
    const unsigned min = c.minCardinality;

    if (c.maxCardinality && *c.maxCardinality < min)
      throw AmbiguousCardinality("element '" + ch.name + "' has window " + windowText(c) +
                                 " with min > max");

    if (!c.maxCardinality) {
      if (min == 1) {
        if (model.size() == 1 && model.front().is<OneOf>()) {
          record(trace_, MappingPattern::FillsObject);
          return {objectHasValue(prop, model.front().as<OneOf>().individuals.front())};
        }
        record(trace_, c.negated ? MappingPattern::ExistentialNegated : MappingPattern::Existential);
        return {objectSomeValuesFrom(prop, filler)};
      }
      record(trace_, MappingPattern::AtLeast);
      return {objectMinCardinality(min, prop, filler)};
    }
    const unsigned max = *c.maxCardinality;
    if (max == 0) {
      if (model.size() == 1) {
        const auto& m = model.front();
        if (m.is<Not>()) {
          record(trace_, MappingPattern::Universal);
          return {objectAllValuesFrom(prop, m.as<Not>().operand)};
        }
        if (m.is<Atomic>()) {
          record(trace_, MappingPattern::UniversalNegated);
          return {objectAllValuesFrom(prop, objectComplementOf(m))};
        }
        if (m.is<Nothing>()) {
          record(trace_, MappingPattern::Universal);
          return {objectAllValuesFrom(prop, owlThing())};
        }
      }
      record(trace_, MappingPattern::AtMost);
      return {objectMaxCardinality(0, prop, filler)};
    }
    if (min == 0) {
      record(trace_, MappingPattern::AtMost);
      return {objectMaxCardinality(max, prop, filler)};
    }
    if (min == max) {
      record(trace_, MappingPattern::Exact);
      return {objectExactCardinality(min, prop, filler)};
    }
    record(trace_, MappingPattern::AtLeast);
    record(trace_, MappingPattern::AtMost);
    return {objectMinCardinality(min, prop, filler), objectMaxCardinality(max, prop, filler)};
  }

  MappingTrace* trace_;
};

// ------------------------------------------------------------ canonical form

enum class Slot { Element, Interface };

bool hasPrimary(const ConceptTreeNode& n) { return countPrimary(n) > 0; }

void refreshNode(ConceptTreeNode& n) {
  n.expr = rebuildExpression(n);
  if (n.restriction && !n.children.empty())
    n.restriction->negatedFiller = n.children.front().expr.is<Not>();
}

bool isLiteralNode(const ConceptTreeNode& n) {
  return !n.primary && (n.kind == NodeKind::Atomic || n.kind == NodeKind::Thing ||
                        n.kind == NodeKind::Nothing);
}

ConceptTreeNode complementNode(const ConceptTreeNode& n) {
  if (n.kind == NodeKind::Thing) return makeNode(owlNothing());
  if (n.kind == NodeKind::Nothing) return makeNode(owlThing());
  if (n.expr.is<Not>()) return makeNode(n.expr.as<Not>().operand);
  return makeNode(objectComplementOf(n.expr));
}

ConceptTreeNode canonicalNode(ConceptTreeNode n, Slot slot);

void canonicalRestriction(ConceptTreeNode& n) {
  auto& r = *n.restriction;
  if (r.dataRange) {
    if (r.flavor == Flavor::Some && r.dataRange->requiredValue && !r.dataRange->negated) {
      r.flavor = Flavor::HasValue;
      n.expr = dataHasValue(r.property, Literal{*r.dataRange->requiredValue, r.dataRange->datatype});
    }
    return;
  }
  auto& filler = n.children.front();
  filler = canonicalNode(std::move(filler), r.property.name == "hasEI" ? Slot::Interface
                                                                        : Slot::Element);
  if (r.flavor == Flavor::Min && *r.n == 1) {
    r.flavor = Flavor::Some;
    r.n.reset();
  }
  if (r.flavor == Flavor::Exact && *r.n == 0) r.flavor = Flavor::Max;
  if (r.flavor == Flavor::Max && *r.n == 0 && isLiteralNode(filler)) {
    r.flavor = Flavor::All;
    r.n.reset();
    filler = complementNode(filler);
  }
  if (r.flavor == Flavor::Some && filler.kind == NodeKind::Nominal && !filler.primary)
    r.flavor = Flavor::HasValue;
  refreshNode(n);
}

std::string sortKey(const ConceptTreeNode& n) { return (hasPrimary(n) ? "0" : "1") + toJson(n); }

void absorbNodes(std::vector<ConceptTreeNode>& nodes) {
  std::vector<ConceptTreeNode> kept;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto& a = nodes[i];
    bool implied = false;
    if (a.kind == NodeKind::Restriction && !a.restriction->dataRange &&
        a.restriction->flavor == Flavor::Some && !hasPrimary(a)) {
      const std::string filler = toJson(a.children.front());
      for (std::size_t j = 0; j < nodes.size() && !implied; ++j) {
        const auto& b = nodes[j];
        if (j == i || b.kind != NodeKind::Restriction || b.restriction->dataRange) continue;
        const auto& rb = *b.restriction;
        implied = (rb.flavor == Flavor::Min || rb.flavor == Flavor::Exact) && *rb.n >= 1 &&
                  rb.property == a.restriction->property && toJson(b.children.front()) == filler;
      }
    }
    if (!implied) kept.push_back(a);
  }
  nodes = std::move(kept);
}

ConceptTreeNode canonicalNode(ConceptTreeNode n, Slot slot) {
  switch (n.kind) {
    case NodeKind::Atomic: {
      const bool negated = n.expr.is<Not>();
      const auto& a = negated ? n.expr.as<Not>().operand.as<Atomic>() : n.expr.as<Atomic>();
      CaexKind positional = slot == Slot::Element ? CaexKind::RoleClass : CaexKind::InterfaceClass;
      if (a.kind && *a.kind == positional) {
        auto plain = atomicClass(a.name);
        n.expr = negated ? objectComplementOf(plain) : plain;
      }
      return n;
    }
    case NodeKind::Restriction:
      canonicalRestriction(n);
      return n;
    case NodeKind::Intersection: {
      std::vector<ConceptTreeNode> ops;
      for (auto& c : n.children) {
        auto cc = canonicalNode(std::move(c), slot);
        if (cc.kind == NodeKind::Intersection && !cc.primary) {
          for (auto& g : cc.children) ops.push_back(std::move(g));
        } else if (cc.kind != NodeKind::Thing || cc.primary) {
          ops.push_back(std::move(cc));
        }
      }
      absorbNodes(ops);
      std::vector<std::pair<std::string, ConceptTreeNode>> keyed;
      for (auto& o : ops) keyed.emplace_back(sortKey(o), std::move(o));
      std::stable_sort(keyed.begin(), keyed.end(),
                       [](const auto& x, const auto& y) { return x.first < y.first; });
      if (keyed.empty()) {
        auto t = makeNode(owlThing());
        t.primary = n.primary;
        return t;
      }
      if (keyed.size() == 1) {
        auto only = std::move(keyed.front().second);
        only.primary = only.primary || n.primary;
        return only;
      }
      n.children.clear();
      for (auto& k : keyed) n.children.push_back(std::move(k.second));
      refreshNode(n);
      return n;
    }
    default:
      return n;
  }
}

// ---------------------------------------------------------------- normalize

bool isBareNominal(const CaexElement& e) {
  return e.conceptAttrs.identifiedByID && !e.classRef && !e.conceptAttrs.negated &&
         e.attributes.empty() && e.internalElements.empty() && e.externalInterfaces.empty();
}

void absorbElements(std::vector<CaexElement>& children) {
  std::vector<CaexElement> kept;
  for (std::size_t i = 0; i < children.size(); ++i) {
    const auto& a = children[i];
    bool implied = false;
    if (a.conceptAttrs.hasDefaultWindow() && !containsPrimary(a) && !isBareNominal(a)) {
      const std::string key = structuralKey(a, false);
      for (std::size_t j = 0; j < children.size() && !implied; ++j) {
        if (j == i) continue;
        const auto& b = children[j].conceptAttrs;
        bool lowerBound = b.minCardinality >= 1 &&
                          ((!b.maxCardinality && b.minCardinality >= 2) ||
                           (b.maxCardinality && *b.maxCardinality == b.minCardinality));
        implied = lowerBound && !containsPrimary(children[j]) &&
                  structuralKey(children[j], false) == key;
      }
    }
    if (!implied) kept.push_back(a);
  }
  children = std::move(kept);
}

void normalizeElement(CaexElement& e) {
  if (e.classRef) e.classRef->path = classNameOf(e.classRef->path);
  for (auto& c : e.externalInterfaces) normalizeElement(c);
  for (auto& c : e.internalElements) normalizeElement(c);
  absorbElements(e.externalInterfaces);
  absorbElements(e.internalElements);
}

// Same domain as the forward emission: Nothing only as the filler of only.
void rejectNothing(const ConceptTreeNode& n) {
  if (n.kind == NodeKind::Nothing)
    throw Unsatisfiable("owl:Nothing has no concept-model representation");
  if (n.kind == NodeKind::Restriction && n.restriction->flavor == Flavor::All) return;
  for (const auto& c : n.children) rejectNothing(c);
}

} // namespace

CaexElement emitModel(const ConceptTreeNode& conceptTree, MappingTrace* trace) {
  return Emitter(trace).object(conceptTree, ElementKind::InternalElement, true);
}

ConceptModelDocument transF(const ClassExpression& ce, const ForwardOptions& options) {
  auto n = checkedNnf(ce);
  auto forest = constructD(n);
  ConceptModelDocument doc;
  doc.sourceClassName = options.sourceClassName;
  for (const auto& tree : forest.trees) {
    auto conceptTree = removeInverseProperty(tree);
    auto root = emitModel(conceptTree, options.trace);
    canonicalOrder(root);
    doc.models.push_back(std::move(root));
  }
  assignIds(doc, options.idSeed);
  for (auto& m : doc.models) assignNames(m);
  validate(doc);
  return doc;
}

ClassExpression transBModel(const CaexElement& root, MappingTrace* trace) {
  return Backward(trace).model(root);
}

ClassExpression transB(const ConceptModelDocument& doc, MappingTrace* trace) {
  auto counts = primaryCounts(doc);
  if (counts.empty()) throw ImproperModel("document has no models", counts);
  std::string problems;
  for (std::size_t i = 0; i < counts.size(); ++i)
    if (counts[i] != 1)
      problems += "\n  model " + std::to_string(i + 1) + ": " + std::to_string(counts[i]) +
                  " primary elements";
  if (!problems.empty())
    throw ImproperModel("every model needs exactly one primary element:" + problems, counts);

  std::vector<ClassExpression> disjuncts;
  for (const auto& m : doc.models) disjuncts.push_back(transBModel(m, trace));
  if (disjuncts.size() == 1) return disjuncts.front();
  return objectUnionOf(std::move(disjuncts));
}

ConceptForest canonicalize(const ClassExpression& ce) {
  auto n = checkedNnf(ce);
  auto forest = constructD(n);
  ConceptForest out;
  for (const auto& tree : forest.trees) {
    auto t = removeInverseProperty(tree);
    rejectNothing(t);
    out.trees.push_back(canonicalNode(std::move(t), Slot::Element));
  }
  return out;
}

std::vector<std::string> canonicalKeys(const ClassExpression& ce) {
  std::vector<std::string> keys;
  for (const auto& t : canonicalize(ce).trees) keys.push_back(toJson(t));
  std::sort(keys.begin(), keys.end());
  return keys;
}

bool equivalent(const ClassExpression& a, const ClassExpression& b) {
  return canonicalKeys(a) == canonicalKeys(b);
}

ConceptModelDocument normalize(const ConceptModelDocument& doc, std::uint64_t idSeed) {
  ConceptModelDocument out = doc;
  for (auto& m : out.models) {
    normalizeElement(m);
    canonicalOrder(m);
  }
  assignIds(out, idSeed);
  for (auto& m : out.models) assignNames(m);
  return out;
}

} // namespace amlowl
