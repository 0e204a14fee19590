#include "amlowl/testkit.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace amlowl::testkit {

namespace {

class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  bool chance(double p) { return std::bernoulli_distribution(p)(engine_); }
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  template <class T>
  T pick(const std::vector<T>& items) {
    return items[static_cast<std::size_t>(uniform(0, static_cast<int>(items.size()) - 1))];
  }

private:
  std::mt19937_64 engine_;
};

enum class Slot { Element, Interface };

const PropertyRef& manufacturer() {
  static const PropertyRef p = PropertyRef::named("hasManufacturer");
  return p;
}
const PropertyRef& weight() {
  static const PropertyRef p = PropertyRef::named("hasWeight");
  return p;
}

ClassExpression randomDataRestriction(Rng& rng) {
  switch (rng.uniform(0, 5)) {
    case 0:
      return dataHasValue(manufacturer(), Literal{rng.pick<std::string>({"KUKA", "ABB"}), "string"});
    case 1: return dataHasValue(weight(), Literal{rng.pick<std::string>({"3", "5"}), "integer"});
    case 2: return dataSomeValuesFrom(weight(), DataRange{"integer", std::nullopt, false});
    case 3: return dataSomeValuesFrom(weight(), DataRange{"integer", std::nullopt, true});
    case 4: return dataSomeValuesFrom(manufacturer(), DataRange{"string", "KUKA", true});
    default: return dataSomeValuesFrom(weight(), DataRange{"integer", "5", false});
  }
}

class ProperGenerator {
public:
  explicit ProperGenerator(const GenConfig& cfg) : cfg_(cfg), rng_(cfg.seed) {}

  ClassExpression run() {
    const int depth = std::max(1, cfg_.maxDepth);
    if (!cfg_.allowInverse || rng_.chance(0.4)) return position(depth, Slot::Element, true, true, true);
    const int levels = rng_.uniform(1, 2);
    const bool interfacePrimary = rng_.chance(0.35);
    auto core = position(depth, interfacePrimary ? Slot::Interface : Slot::Element, true, true, true);
    return objectIntersectionOf({core, inverseLink(levels, interfacePrimary, depth)});
  }

private:
  std::string fresh() { return "i" + std::to_string(individuals_++); }

  ClassExpression literal(Slot slot) {
    const auto& pool = slot == Slot::Element ? cfg_.atomPool : cfg_.interfacePool;
    std::optional<CaexKind> kind;
    if (rng_.chance(0.1)) kind = slot == Slot::Element ? CaexKind::RoleClass : CaexKind::InterfaceClass;
    else if (slot == Slot::Element && rng_.chance(0.05)) kind = CaexKind::SystemUnitClass;
    auto a = atomicClass(rng_.pick(pool), kind);
    return rng_.chance(0.25) ? objectComplementOf(a) : a;
  }

  // The description of one object.
  ClassExpression position(int depth, Slot slot, bool existentialOnly, bool allowLiteral,
                           bool allowNominal) {
    if (existentialOnly && cfg_.allowDisjunction && rng_.chance(0.12))
      return objectUnionOf({position(depth, slot, true, allowLiteral, allowNominal),
                            position(depth, slot, true, allowLiteral, allowNominal)});
    std::vector<ClassExpression> conj;
    bool hasLiteral = false, hasNominal = false;
    if (allowLiteral && rng_.chance(0.7)) {
      conj.push_back(literal(slot));
      hasLiteral = true;
    }
    if (allowNominal && rng_.chance(0.08)) {
      conj.push_back(objectOneOf({fresh()}));
      hasNominal = true;
    }
    if (rng_.chance(0.3)) conj.push_back(randomDataRestriction(rng_));
    if (slot == Slot::Element && depth > 0) {
      int k = rng_.uniform(0, cfg_.maxFanout);
      for (int i = 0; i < k; ++i) conj.push_back(objectRestriction(depth - 1, existentialOnly));
    }
    if (existentialOnly && cfg_.allowDisjunction && rng_.chance(0.1))
      conj.push_back(objectUnionOf({position(depth, slot, true, allowLiteral && !hasLiteral, allowNominal && !hasNominal),
                                    position(depth, slot, true, allowLiteral && !hasLiteral, allowNominal && !hasNominal)}));
    return objectIntersectionOf(std::move(conj));
  }

  ClassExpression objectRestriction(int depth, bool existentialOnly) {
    const PropertyRef prop = rng_.chance(0.65) ? hasIE() : hasEI();
    const Slot slot = prop.name == "hasEI" ? Slot::Interface : Slot::Element;
    const unsigned n = static_cast<unsigned>(rng_.uniform(0, 3));
    switch (rng_.uniform(0, 6)) {
      case 0:
      case 1: return objectSomeValuesFrom(prop, position(depth, slot, existentialOnly, true, true));
      case 2: {
        int r = rng_.uniform(0, 9);
        ClassExpression f = r == 0 ? owlThing() : r == 1 ? owlNothing() : literal(slot);
        return objectAllValuesFrom(prop, f);
      }
      case 3: return objectMinCardinality(n, prop, position(depth, slot, false, true, true));
      case 4: return objectMaxCardinality(n, prop, position(depth, slot, false, true, true));
      case 5: return objectExactCardinality(n, prop, position(depth, slot, false, true, true));
      default:
        if (existentialOnly && cfg_.allowDisjunction && rng_.chance(0.3))
          return objectSomeValuesFrom(prop, objectOneOf({fresh(), fresh()}));
        return objectHasValue(prop, fresh());
    }
  }

  // Restriction from an object (an interface if `fromInterface`) to its parent.
  ClassExpression inverseLink(int remaining, bool fromInterface, int depth) {
    const PropertyRef prop = fromInterface ? isEIOf() : isIEOf();
    if (remaining == 1 && rng_.chance(0.2)) return objectHasValue(prop, fresh());
    auto parent = position(std::max(0, depth - 1), Slot::Element, true, true, true);
    if (remaining > 1) parent = objectIntersectionOf({parent, inverseLink(remaining - 1, false, depth)});
    return objectSomeValuesFrom(prop, parent);
  }

  GenConfig cfg_;
  Rng rng_;
  int individuals_ = 0;
};

class ArbitraryGenerator {
public:
  explicit ArbitraryGenerator(const GenConfig& cfg) : cfg_(cfg), rng_(cfg.seed) {}

  ClassExpression run() { return gen(std::max(1, cfg_.maxDepth), true); }

private:
  ClassExpression atom() {
    std::vector<std::string> pool = cfg_.atomPool;
    pool.insert(pool.end(), cfg_.interfacePool.begin(), cfg_.interfacePool.end());
    return atomicClass(rng_.pick(pool));
  }

  PropertyRef objectProperty() {
    static const std::vector<PropertyRef> props{hasIE(), hasEI(), isIEOf(), isEIOf()};
    return props[static_cast<std::size_t>(rng_.uniform(0, cfg_.allowInverse ? 3 : 1))];
  }

  // `positive` is the polarity the term ends up with after negations are
  // pushed inward.
  ClassExpression gen(int depth, bool positive) {
    if (depth <= 0) {
      int r = rng_.uniform(0, 9);
      if (r == 0) return owlThing();
      if (r == 1) return objectComplementOf(atom());
      return atom();
    }
    const int choice = rng_.uniform(0, 12);
    switch (choice) {
      case 0: return atom();
      case 1: return rng_.chance(0.5) ? owlThing() : owlNothing();
      case 2:
      case 3: return objectComplementOf(gen(depth - 1, !positive));
      case 4: {
        std::vector<ClassExpression> ops;
        for (int i = rng_.uniform(2, 3); i > 0; --i) ops.push_back(gen(depth - 1, positive));
        return objectIntersectionOf(std::move(ops));
      }
      case 5: {
        if (!cfg_.allowDisjunction) return atom();
        std::vector<ClassExpression> ops;
        for (int i = rng_.uniform(2, 3); i > 0; --i) ops.push_back(gen(depth - 1, positive));
        return objectUnionOf(std::move(ops));
      }
      case 6:
        if (!positive) return atom();
        if (rng_.chance(0.5)) return objectHasValue(objectProperty(), rng_.pick<std::string>({"a", "b", "c", "d"}));
        return objectOneOf({rng_.pick<std::string>({"a", "b"}), rng_.pick<std::string>({"c", "d"})});
      case 7:
        if (!positive) return atom();
        return randomDataRestriction(rng_);
      case 8: return objectSomeValuesFrom(objectProperty(), gen(depth - 1, positive));
      case 9: return objectAllValuesFrom(objectProperty(), gen(depth - 1, positive));
      default: {
        auto kind = static_cast<CardinalityKind>(rng_.uniform(0, 2));
        return objectCardinality(kind, static_cast<unsigned>(rng_.uniform(0, 3)), objectProperty(),
                                 gen(depth - 1, true));
      }
    }
  }

  GenConfig cfg_;
  Rng rng_;
};

class DocumentGenerator {
public:
  explicit DocumentGenerator(const GenConfig& cfg) : cfg_(cfg), rng_(cfg.seed) {}

  ConceptModelDocument run() {
    ConceptModelDocument doc;
    int models = cfg_.allowDisjunction ? rng_.uniform(1, 2) : 1;
    for (int i = 0; i < models; ++i) {
      auto root = element(ElementKind::InternalElement, std::max(1, cfg_.maxDepth));
      root.conceptAttrs.minCardinality = 1;
      root.conceptAttrs.maxCardinality.reset();
      choosePrimary(root);
      doc.models.push_back(std::move(root));
    }
    assignIds(doc, cfg_.seed);
    for (auto& m : doc.models) name(m);
    return doc;
  }

private:
  void name(CaexElement& e) {
    e.name = defaultName(e);
    for (auto& c : e.externalInterfaces) name(c);
    for (auto& c : e.internalElements) name(c);
  }

  CaexElement element(ElementKind kind, int depth) {
    CaexElement e;
    e.kind = kind;
    const bool ie = kind == ElementKind::InternalElement;
    if (rng_.chance(0.7)) {
      CaexKind refKind = ie ? (rng_.chance(0.1) ? CaexKind::SystemUnitClass : CaexKind::RoleClass)
                            : CaexKind::InterfaceClass;
      e.classRef = ClassRef{rng_.pick(ie ? cfg_.atomPool : cfg_.interfacePool), refKind};
      e.conceptAttrs.negated = rng_.chance(0.2);
    }
    if (rng_.chance(0.1)) {
      e.conceptAttrs.identifiedByID = true;
      e.id = "i" + std::to_string(individuals_++);
    }
    for (int i = rng_.uniform(0, 1); i > 0; --i) e.attributes.push_back(attribute());
    if (ie && depth > 0) {
      for (int i = rng_.uniform(0, cfg_.maxFanout); i > 0; --i) {
        auto kindOfChild = rng_.chance(0.35) ? ElementKind::ExternalInterface : ElementKind::InternalElement;
        auto child = element(kindOfChild, depth - 1);
        window(child);
        (kindOfChild == ElementKind::InternalElement ? e.internalElements : e.externalInterfaces)
            .push_back(std::move(child));
      }
    }
    return e;
  }

  CaexAttribute attribute() {
    CaexAttribute a;
    if (rng_.chance(0.5)) {
      a.name = "hasManufacturer";
      a.datatype = "string";
      if (rng_.chance(0.7)) a.requiredValue = rng_.pick<std::string>({"KUKA", "ABB"});
    } else {
      a.name = "hasWeight";
      a.datatype = "integer";
      if (rng_.chance(0.5)) a.requiredValue = rng_.pick<std::string>({"3", "5"});
    }
    a.conceptAttrs.negated = rng_.chance(0.2);
    return a;
  }

  void window(CaexElement& e) {
    auto& c = e.conceptAttrs;
    switch (rng_.uniform(0, 5)) {
      case 0:
      case 1: break;
      case 2: c.minCardinality = static_cast<unsigned>(rng_.pick<int>({0, 2, 3})); break;
      case 3:
        c.minCardinality = 0;
        c.maxCardinality = static_cast<unsigned>(rng_.uniform(0, 3));
        break;
      case 4: {
        unsigned n = static_cast<unsigned>(rng_.uniform(1, 3));
        c.minCardinality = n;
        c.maxCardinality = n;
        break;
      }
      default:
        // An element standing for Nothing under a [0,0] window.
        c.minCardinality = 0;
        c.maxCardinality = 0u;
        if (e.attributes.empty() && e.internalElements.empty() && e.externalInterfaces.empty() &&
            !c.identifiedByID && rng_.chance(0.3)) {
          e.classRef.reset();
          c.negated = true;
        }
        break;
    }
    bool zeroWindow = c.maxCardinality && *c.maxCardinality == 0;
    if (!zeroWindow && c.negated && !e.classRef) c.negated = false;
  }

  void collect(CaexElement& e, std::vector<std::vector<CaexElement*>>& paths,
               std::vector<CaexElement*>& current) {
    current.push_back(&e);
    paths.push_back(current);
    for (auto& c : e.externalInterfaces) collect(c, paths, current);
    for (auto& c : e.internalElements) collect(c, paths, current);
    current.pop_back();
  }

  void choosePrimary(CaexElement& root) {
    std::vector<std::vector<CaexElement*>> paths;
    std::vector<CaexElement*> current;
    collect(root, paths, current);
    auto& path = paths[static_cast<std::size_t>(rng_.uniform(0, static_cast<int>(paths.size()) - 1))];
    for (auto* e : path) {
      e->conceptAttrs.minCardinality = 1;
      e->conceptAttrs.maxCardinality.reset();
      if (e->conceptAttrs.negated && !e->classRef) e->conceptAttrs.negated = false;
    }
    path.back()->conceptAttrs.primary = true;
  }

  GenConfig cfg_;
  Rng rng_;
  int individuals_ = 0;
};

// ----------------------------------------------------------------- worlds

bool sameDatatype(const std::string& a, const std::string& b) {
  return normalizeDatatype(a) == normalizeDatatype(b);
}

bool inRange(const Literal& lit, const DataRange& r) {
  bool member = r.requiredValue
                    ? lit.lexical == *r.requiredValue && sameDatatype(lit.datatype, r.datatype)
                    : sameDatatype(lit.datatype, r.datatype) && conformsTo(lit.lexical, r.datatype);
  return r.negated ? !member : member;
}

std::vector<std::size_t> successors(const World& w, std::size_t x, const PropertyRef& p) {
  const auto& o = w.objects[x];
  std::vector<std::size_t> out;
  if (p.name == "hasIE" || p.name == "hasEI") {
    ElementKind want = p.name == "hasIE" ? ElementKind::InternalElement : ElementKind::ExternalInterface;
    for (auto c : o.children)
      if (w.objects[c].kind == want) out.push_back(c);
  } else if (o.parent) {
    ElementKind self = p.name == "isIEOf" ? ElementKind::InternalElement : ElementKind::ExternalInterface;
    if (o.kind == self) out.push_back(*o.parent);
  }
  return out;
}

class Evaluator {
public:
  explicit Evaluator(const World& w) : w_(w) {}

  bool holds(const ClassExpression& ce, std::size_t x) const {
    const auto& o = w_.objects[x];
    return visit(
        overloaded{
            [&](const Atomic& a) { return o.labels.count(a.name) > 0; },
            [](const Thing&) { return true; },
            [](const Nothing&) { return false; },
            [&](const Not& n) { return !holds(n.operand, x); },
            [&](const And& a) {
              for (const auto& op : a.operands)
                if (!holds(op, x)) return false;
              return true;
            },
            [&](const Or& a) {
              for (const auto& op : a.operands)
                if (holds(op, x)) return true;
              return false;
            },
            [&](const OneOf& n) {
              return o.individual && std::find(n.individuals.begin(), n.individuals.end(),
                                               *o.individual) != n.individuals.end();
            },
            [&](const ObjectSome& r) {
              for (auto y : successors(w_, x, r.property))
                if (holds(r.filler, y)) return true;
              return false;
            },
            [&](const ObjectAll& r) {
              for (auto y : successors(w_, x, r.property))
                if (!holds(r.filler, y)) return false;
              return true;
            },
            [&](const ObjectCardinality& r) {
              unsigned count = 0;
              for (auto y : successors(w_, x, r.property))
                if (holds(r.filler, y)) ++count;
              switch (r.kind) {
                case CardinalityKind::Min: return count >= r.n;
                case CardinalityKind::Max: return count <= r.n;
                case CardinalityKind::Exact: return count == r.n;
              }
              return false;
            },
            [&](const ObjectHasValue& r) {
              for (auto y : successors(w_, x, r.property))
                if (w_.objects[y].individual == r.individual) return true;
              return false;
            },
            [&](const DataSome& r) {
              for (const auto& [name, lit] : o.attributes)
                if (name == r.property.name && inRange(lit, r.range)) return true;
              return false;
            },
            [&](const DataHasValue& r) {
              for (const auto& [name, lit] : o.attributes)
                if (name == r.property.name && lit.lexical == r.value.lexical &&
                    sameDatatype(lit.datatype, r.value.datatype))
                  return true;
              return false;
            },
        },
        ce);
  }

private:
  const World& w_;
};

bool elementMatches(const CaexElement& e, const World& w, std::size_t x, const CaexElement* skip) {
  const auto& o = w.objects[x];
  const auto& c = e.conceptAttrs;
  if (e.classRef) {
    bool has = o.labels.count(classNameOf(e.classRef->path)) > 0;
    if (c.negated == has) return false;
  } else if (c.negated) {
    return false;
  }
  if (c.identifiedByID && o.individual != e.id) return false;
  for (const auto& a : e.attributes) {
    DataRange range{a.datatype, a.requiredValue, a.conceptAttrs.negated};
    bool found = false;
    for (const auto& [name, lit] : o.attributes)
      if (name == a.name && inRange(lit, range)) found = true;
    if (!found) return false;
  }
  auto windowOk = [&](const CaexElement& child) {
    if (&child == skip) return true;
    unsigned count = 0;
    for (auto y : o.children)
      if (w.objects[y].kind == child.kind && elementMatches(child, w, y, nullptr)) ++count;
    const auto& cc = child.conceptAttrs;
    return count >= cc.minCardinality && (!cc.maxCardinality || count <= *cc.maxCardinality);
  };
  for (const auto& ch : e.externalInterfaces)
    if (!windowOk(ch)) return false;
  for (const auto& ch : e.internalElements)
    if (!windowOk(ch)) return false;
  return true;
}

bool primaryPath(const CaexElement& e, std::vector<const CaexElement*>& path) {
  path.push_back(&e);
  if (e.conceptAttrs.primary) return true;
  for (const auto& c : e.externalInterfaces)
    if (primaryPath(c, path)) return true;
  for (const auto& c : e.internalElements)
    if (primaryPath(c, path)) return true;
  path.pop_back();
  return false;
}

void distribute(const ClassExpression& ce, std::vector<ClassExpression>& out);

std::vector<ClassExpression> dnfOf(const ClassExpression& ce) {
  std::vector<ClassExpression> out;
  distribute(ce, out);
  return out;
}

void distribute(const ClassExpression& ce, std::vector<ClassExpression>& out) {
  if (ce.is<Or>()) {
    // (C or D) -> C, D
    for (const auto& op : ce.as<Or>().operands) distribute(op, out);
  } else if (ce.is<OneOf>()) {
    // {a, b} -> {a}, {b}
    for (const auto& ind : ce.as<OneOf>().individuals) out.push_back(objectOneOf({ind}));
  } else if (ce.is<And>()) {
    // (C or D) and E -> (C and E), (D and E)
    std::vector<std::vector<ClassExpression>> partial{{}};
    for (const auto& op : ce.as<And>().operands) {
      std::vector<std::vector<ClassExpression>> next;
      for (const auto& d : dnfOf(op))
        for (const auto& p : partial) {
          auto q = p;
          q.push_back(d);
          next.push_back(std::move(q));
        }
      partial = std::move(next);
    }
    for (auto& p : partial) out.push_back(objectIntersectionOf(std::move(p)));
  } else if (ce.is<ObjectSome>()) {
    // R some (C or D) -> (R some C), (R some D)
    const auto& r = ce.as<ObjectSome>();
    for (const auto& d : dnfOf(r.filler)) out.push_back(objectSomeValuesFrom(r.property, d));
  } else {
    out.push_back(ce);
  }
}

} // namespace

ClassExpression genProperClass(const GenConfig& cfg) { return ProperGenerator(cfg).run(); }

ClassExpression genArbitraryClass(const GenConfig& cfg) { return ArbitraryGenerator(cfg).run(); }

ConceptModelDocument genProperDocument(const GenConfig& cfg) { return DocumentGenerator(cfg).run(); }

std::vector<ClassExpression> dnf(const ClassExpression& ce) { return dnfOf(ce); }

std::size_t dnfCount(const ClassExpression& ce) { return dnf(ce).size(); }

World genWorld(const WorldConfig& cfg) {
  Rng rng(cfg.seed);
  World w;
  std::vector<std::string> freeIndividuals = cfg.individuals;
  static const std::vector<std::pair<std::string, Literal>> attributePool{
      {"hasManufacturer", {"KUKA", "string"}},
      {"hasManufacturer", {"ABB", "string"}},
      {"hasWeight", {"3", "integer"}},
      {"hasWeight", {"5", "integer"}},
      {"hasWeight", {"heavy", "string"}},
  };

  std::function<std::size_t(ElementKind, int, std::optional<std::size_t>)> build =
      [&](ElementKind kind, int depth, std::optional<std::size_t> parent) {
        std::size_t id = w.objects.size();
        w.objects.emplace_back();
        WorldObject o;
        o.kind = kind;
        o.parent = parent;
        for (int i = rng.uniform(0, cfg.maxLabels); i > 0; --i) o.labels.insert(rng.pick(cfg.atomPool));
        if (!freeIndividuals.empty() && rng.chance(0.3)) {
          auto pos = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(freeIndividuals.size()) - 1));
          o.individual = freeIndividuals[pos];
          freeIndividuals.erase(freeIndividuals.begin() + static_cast<std::ptrdiff_t>(pos));
        }
        for (int i = rng.uniform(0, 2); i > 0; --i) o.attributes.push_back(rng.pick(attributePool));
        w.objects[id] = o;
        if (kind == ElementKind::InternalElement && depth < cfg.maxDepth) {
          int n = rng.uniform(0, std::max(0, cfg.maxChildren - depth));
          for (int i = 0; i < n; ++i) {
            auto childKind = rng.chance(0.4) ? ElementKind::ExternalInterface : ElementKind::InternalElement;
            auto child = build(childKind, depth + 1, id);
            w.objects[id].children.push_back(child);
          }
        }
        return id;
      };

  for (int r = rng.uniform(1, std::max(1, cfg.maxRoots)); r > 0; --r)
    build(ElementKind::InternalElement, 0, std::nullopt);
  return w;
}

bool satisfies(const ClassExpression& ce, const World& world, std::size_t object) {
  return Evaluator(world).holds(ce, object);
}

std::set<std::size_t> modelCheck(const ClassExpression& ce, const World& world) {
  Evaluator ev(world);
  std::set<std::size_t> out;
  for (std::size_t x = 0; x < world.objects.size(); ++x)
    if (ev.holds(ce, x)) out.insert(x);
  return out;
}

bool matchesModel(const CaexElement& model, const World& world, std::size_t object) {
  std::vector<const CaexElement*> path;
  if (!primaryPath(model, path)) return false;
  std::size_t x = object;
  for (std::size_t i = path.size(); i-- > 0;) {
    const CaexElement* next = i + 1 < path.size() ? path[i + 1] : nullptr;
    const CaexElement* skip = next && next->conceptAttrs.hasDefaultWindow() ? next : nullptr;
    if (!elementMatches(*path[i], world, x, skip)) return false;
    if (i == 0) break;
    const auto& o = world.objects[x];
    if (o.kind != path[i]->kind || !o.parent) return false;
    x = *o.parent;
  }
  return true;
}

bool matchesDocument(const ConceptModelDocument& doc, const World& world, std::size_t object) {
  for (const auto& m : doc.models)
    if (matchesModel(m, world, object)) return true;
  return false;
}

} // namespace amlowl::testkit
