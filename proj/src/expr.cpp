#include "amlowl/expr.hpp"

#include <algorithm>
#include <cctype>
#include <regex>
#include <stdexcept>

namespace amlowl {

std::string_view toString(CaexKind kind) {
  switch (kind) {
    case CaexKind::RoleClass: return "RoleClass";
    case CaexKind::InterfaceClass: return "InterfaceClass";
    case CaexKind::SystemUnitClass: return "SystemUnitClass";
  }
  return "?";
}

PropertyRef PropertyRef::named(std::string name) {
  PropertyKind kind = PropertyKind::Data;
  if (name == "hasIE" || name == "hasEI")
    kind = PropertyKind::ObjectForward;
  else if (name == "isIEOf" || name == "isEIOf")
    kind = PropertyKind::ObjectInverse;
  return PropertyRef{std::move(name), kind};
}

std::optional<std::string> PropertyRef::inverseOf() const {
  if (name == "hasIE") return "isIEOf";
  if (name == "isIEOf") return "hasIE";
  if (name == "hasEI") return "isEIOf";
  if (name == "isEIOf") return "hasEI";
  return std::nullopt;
}

PropertyRef PropertyRef::inverse() const {
  auto inv = inverseOf();
  if (!inv) throw std::logic_error("data property '" + name + "' has no inverse");
  return named(*inv);
}

PropertyRef hasIE() { return PropertyRef::named("hasIE"); }
PropertyRef hasEI() { return PropertyRef::named("hasEI"); }
PropertyRef isIEOf() { return PropertyRef::named("isIEOf"); }
PropertyRef isEIOf() { return PropertyRef::named("isEIOf"); }

std::string normalizeDatatype(std::string_view datatype) {
  for (std::string_view prefix : {"xsd:", "xs:"}) {
    if (datatype.substr(0, prefix.size()) == prefix) {
      datatype.remove_prefix(prefix.size());
      break;
    }
  }
  return std::string(datatype);
}

bool conformsTo(std::string_view lexical, std::string_view datatype) {
  static const std::regex integer(R"([+-]?[0-9]+)");
  static const std::regex decimal(R"([+-]?([0-9]+(\.[0-9]*)?|\.[0-9]+)([eE][+-]?[0-9]+)?)");
  const std::string lex(lexical);
  const std::string dt = normalizeDatatype(datatype);
  if (dt == "integer" || dt == "int" || dt == "long" || dt == "short")
    return std::regex_match(lex, integer);
  if (dt == "nonNegativeInteger")
    return std::regex_match(lex, integer) && lex.front() != '-';
  if (dt == "double" || dt == "float" || dt == "decimal")
    return std::regex_match(lex, decimal);
  if (dt == "boolean") return lex == "true" || lex == "false";
  return true;
}

// -- ClassExpression --------------------------------------------------------

ClassExpression::ClassExpression() : node_(std::make_shared<const ExprNode>(ExprNode{Thing{}})) {}

ClassExpression::ClassExpression(std::shared_ptr<const ExprNode> node) : node_(std::move(node)) {}

std::string ClassExpression::toString() const { return print(*this); }

namespace {

ClassExpression make(ExprNode::Variant v) {
  return ClassExpression(std::make_shared<const ExprNode>(ExprNode{std::move(v)}));
}

int cmp(const std::string& a, const std::string& b) { return a < b ? -1 : (b < a ? 1 : 0); }

template <class T>
int cmpScalar(const T& a, const T& b) {
  return a < b ? -1 : (b < a ? 1 : 0);
}

int cmp(const PropertyRef& a, const PropertyRef& b) { return cmp(a.name, b.name); }

int cmp(const std::vector<ClassExpression>& a, const std::vector<ClassExpression>& b) {
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
    if (int c = compare(a[i], b[i])) return c;
  return cmpScalar(a.size(), b.size());
}

int cmp(const DataRange& a, const DataRange& b) {
  if (int c = cmp(a.datatype, b.datatype)) return c;
  if (int c = cmpScalar(a.requiredValue, b.requiredValue)) return c;
  return cmpScalar(a.negated, b.negated);
}

void requireObject(const PropertyRef& p, std::string_view ctor) {
  if (!p.isObject())
    throw std::invalid_argument(std::string(ctor) + " requires an object property, got '" +
                                p.name + "'");
}

void requireData(const PropertyRef& p, std::string_view ctor) {
  if (!p.isData())
    throw std::invalid_argument(std::string(ctor) + " requires a data property, got '" +
                                p.name + "'");
}

} // namespace

int compare(const ClassExpression& a, const ClassExpression& b) {
  if (&a.node() == &b.node()) return 0;
  const auto& va = a.node().value;
  const auto& vb = b.node().value;
  if (va.index() != vb.index()) return cmpScalar(va.index(), vb.index());
  return std::visit(
      overloaded{
          [&](const Atomic& x) {
            const auto& y = std::get<Atomic>(vb);
            if (int c = cmp(x.name, y.name)) return c;
            return cmpScalar(x.kind, y.kind);
          },
          [&](const Thing&) { return 0; },
          [&](const Nothing&) { return 0; },
          [&](const Not& x) { return compare(x.operand, std::get<Not>(vb).operand); },
          [&](const And& x) { return cmp(x.operands, std::get<And>(vb).operands); },
          [&](const Or& x) { return cmp(x.operands, std::get<Or>(vb).operands); },
          [&](const OneOf& x) { return cmpScalar(x.individuals, std::get<OneOf>(vb).individuals); },
          [&](const ObjectSome& x) {
            const auto& y = std::get<ObjectSome>(vb);
            if (int c = cmp(x.property, y.property)) return c;
            return compare(x.filler, y.filler);
          },
          [&](const ObjectAll& x) {
            const auto& y = std::get<ObjectAll>(vb);
            if (int c = cmp(x.property, y.property)) return c;
            return compare(x.filler, y.filler);
          },
          [&](const ObjectCardinality& x) {
            const auto& y = std::get<ObjectCardinality>(vb);
            if (int c = cmpScalar(x.kind, y.kind)) return c;
            if (int c = cmpScalar(x.n, y.n)) return c;
            if (int c = cmp(x.property, y.property)) return c;
            return compare(x.filler, y.filler);
          },
          [&](const ObjectHasValue& x) {
            const auto& y = std::get<ObjectHasValue>(vb);
            if (int c = cmp(x.property, y.property)) return c;
            return cmp(x.individual, y.individual);
          },
          [&](const DataSome& x) {
            const auto& y = std::get<DataSome>(vb);
            if (int c = cmp(x.property, y.property)) return c;
            return cmp(x.range, y.range);
          },
          [&](const DataHasValue& x) {
            const auto& y = std::get<DataHasValue>(vb);
            if (int c = cmp(x.property, y.property)) return c;
            if (int c = cmp(x.value.datatype, y.value.datatype)) return c;
            return cmp(x.value.lexical, y.value.lexical);
          },
      },
      va);
}

bool operator==(const ClassExpression& a, const ClassExpression& b) { return compare(a, b) == 0; }
bool operator<(const ClassExpression& a, const ClassExpression& b) { return compare(a, b) < 0; }

// -- constructors -----------------------------------------------------------

ClassExpression atomicClass(std::string name, std::optional<CaexKind> kind) {
  if (name.empty()) throw std::invalid_argument("atomic class name must not be empty");
  return make(Atomic{std::move(name), kind});
}

ClassExpression owlThing() { return make(Thing{}); }
ClassExpression owlNothing() { return make(Nothing{}); }

ClassExpression objectComplementOf(ClassExpression operand) { return make(Not{std::move(operand)}); }

ClassExpression objectIntersectionOf(std::vector<ClassExpression> operands) {
  std::vector<ClassExpression> flat;
  for (auto& op : operands) {
    if (op.is<And>()) {
      const auto& inner = op.as<And>().operands;
      flat.insert(flat.end(), inner.begin(), inner.end());
    } else {
      flat.push_back(std::move(op));
    }
  }
  if (flat.empty()) return owlThing();
  if (flat.size() == 1) return flat.front();
  return make(And{std::move(flat)});
}

ClassExpression objectUnionOf(std::vector<ClassExpression> operands) {
  std::vector<ClassExpression> flat;
  for (auto& op : operands) {
    if (op.is<Or>()) {
      const auto& inner = op.as<Or>().operands;
      flat.insert(flat.end(), inner.begin(), inner.end());
    } else {
      flat.push_back(std::move(op));
    }
  }
  if (flat.empty()) return owlNothing();
  if (flat.size() == 1) return flat.front();
  return make(Or{std::move(flat)});
}

ClassExpression objectOneOf(std::vector<std::string> individuals) {
  if (individuals.empty()) throw std::invalid_argument("nominal needs at least one individual");
  return make(OneOf{std::move(individuals)});
}

ClassExpression objectSomeValuesFrom(PropertyRef property, ClassExpression filler) {
  requireObject(property, "ObjectSomeValuesFrom");
  return make(ObjectSome{std::move(property), std::move(filler)});
}

ClassExpression objectAllValuesFrom(PropertyRef property, ClassExpression filler) {
  requireObject(property, "ObjectAllValuesFrom");
  return make(ObjectAll{std::move(property), std::move(filler)});
}

ClassExpression objectCardinality(CardinalityKind kind, unsigned n, PropertyRef property,
                                  ClassExpression filler) {
  requireObject(property, "object cardinality restriction");
  return make(ObjectCardinality{kind, n, std::move(property), std::move(filler)});
}

ClassExpression objectMinCardinality(unsigned n, PropertyRef property, ClassExpression filler) {
  return objectCardinality(CardinalityKind::Min, n, std::move(property), std::move(filler));
}

ClassExpression objectMaxCardinality(unsigned n, PropertyRef property, ClassExpression filler) {
  return objectCardinality(CardinalityKind::Max, n, std::move(property), std::move(filler));
}

ClassExpression objectExactCardinality(unsigned n, PropertyRef property,
                                       ClassExpression filler) {
  return objectCardinality(CardinalityKind::Exact, n, std::move(property), std::move(filler));
}

ClassExpression objectHasValue(PropertyRef property, std::string individual) {
  requireObject(property, "ObjectHasValue");
  return make(ObjectHasValue{std::move(property), std::move(individual)});
}

ClassExpression dataSomeValuesFrom(PropertyRef property, DataRange range) {
  requireData(property, "DataSomeValuesFrom");
  range.datatype = normalizeDatatype(range.datatype);
  if (range.requiredValue && !conformsTo(*range.requiredValue, range.datatype))
    throw std::invalid_argument("value '" + *range.requiredValue + "' is not a valid " +
                                range.datatype);
  return make(DataSome{std::move(property), std::move(range)});
}

ClassExpression dataHasValue(PropertyRef property, Literal value) {
  requireData(property, "DataHasValue");
  value.datatype = normalizeDatatype(value.datatype);
  if (!conformsTo(value.lexical, value.datatype))
    throw std::invalid_argument("value '" + value.lexical + "' is not a valid " + value.datatype);
  return make(DataHasValue{std::move(property), std::move(value)});
}

// -- helpers ----------------------------------------------------------------

bool isRestriction(const ClassExpression& ce) {
  return ce.is<ObjectSome>() || ce.is<ObjectAll>() || ce.is<ObjectCardinality>() ||
         ce.is<ObjectHasValue>() || ce.is<DataSome>() || ce.is<DataHasValue>();
}

std::optional<PropertyRef> restrictionProperty(const ClassExpression& ce) {
  return visit(overloaded{
                   [](const ObjectSome& r) -> std::optional<PropertyRef> { return r.property; },
                   [](const ObjectAll& r) -> std::optional<PropertyRef> { return r.property; },
                   [](const ObjectCardinality& r) -> std::optional<PropertyRef> {
                     return r.property;
                   },
                   [](const ObjectHasValue& r) -> std::optional<PropertyRef> {
                     return r.property;
                   },
                   [](const DataSome& r) -> std::optional<PropertyRef> { return r.property; },
                   [](const DataHasValue& r) -> std::optional<PropertyRef> { return r.property; },
                   [](const auto&) -> std::optional<PropertyRef> { return std::nullopt; },
               },
               ce);
}

std::optional<ClassExpression> restrictionFiller(const ClassExpression& ce) {
  return visit(overloaded{
                   [](const ObjectSome& r) -> std::optional<ClassExpression> { return r.filler; },
                   [](const ObjectAll& r) -> std::optional<ClassExpression> { return r.filler; },
                   [](const ObjectCardinality& r) -> std::optional<ClassExpression> {
                     return r.filler;
                   },
                   [](const auto&) -> std::optional<ClassExpression> { return std::nullopt; },
               },
               ce);
}

ClassExpression withFiller(const ClassExpression& restriction, ClassExpression filler) {
  return visit(overloaded{
                   [&](const ObjectSome& r) { return objectSomeValuesFrom(r.property, filler); },
                   [&](const ObjectAll& r) { return objectAllValuesFrom(r.property, filler); },
                   [&](const ObjectCardinality& r) {
                     return objectCardinality(r.kind, r.n, r.property, filler);
                   },
                   [&](const auto&) -> ClassExpression {
                     throw std::logic_error("withFiller: expression has no filler");
                   },
               },
               restriction);
}

std::vector<ClassExpression> conjuncts(const ClassExpression& ce) {
  if (ce.is<And>()) return ce.as<And>().operands;
  return {ce};
}

bool containsInverse(const ClassExpression& ce) {
  if (auto p = restrictionProperty(ce); p && p->isInverse()) return true;
  return visit(overloaded{
                   [](const Not& n) { return containsInverse(n.operand); },
                   [](const And& a) {
                     return std::any_of(a.operands.begin(), a.operands.end(),
                                        [](const auto& op) { return containsInverse(op); });
                   },
                   [](const Or& a) {
                     return std::any_of(a.operands.begin(), a.operands.end(),
                                        [](const auto& op) { return containsInverse(op); });
                   },
                   [&](const auto&) {
                     auto f = restrictionFiller(ce);
                     return f && containsInverse(*f);
                   },
               },
               ce);
}

bool containsDisjunction(const ClassExpression& ce) {
  return visit(overloaded{
                   [](const Or&) { return true; },
                   [](const OneOf& o) { return o.individuals.size() > 1; },
                   [](const Not& n) { return containsDisjunction(n.operand); },
                   [](const And& a) {
                     return std::any_of(a.operands.begin(), a.operands.end(),
                                        [](const auto& op) { return containsDisjunction(op); });
                   },
                   [&](const auto&) {
                     auto f = restrictionFiller(ce);
                     return f && containsDisjunction(*f);
                   },
               },
               ce);
}

// -- printing ---------------------------------------------------------------

namespace {

const char* const kKeywords[] = {"and",     "or",   "not",  "some",  "only",
                                 "min",     "max",  "exactly", "value", "Self",
                                 "Thing",   "Nothing", "owl:Thing", "owl:Nothing", "true",
                                 "false"};

bool isIdentifier(const std::string& s) {
  if (s.empty()) return false;
  auto first = static_cast<unsigned char>(s.front());
  if (!(std::isalpha(first) || first == '_')) return false;
  for (char ch : s) {
    auto c = static_cast<unsigned char>(ch);
    if (!(std::isalnum(c) || c == '_' || c == '-' || c == '.' || c == ':')) return false;
  }
  for (const char* kw : kKeywords)
    if (s == kw) return false;
  return true;
}

std::string printName(const std::string& name) {
  if (isIdentifier(name)) return name;
  return "<" + name + ">";
}

bool isSimple(const ClassExpression& ce) {
  return ce.is<Atomic>() || ce.is<Thing>() || ce.is<Nothing>() || ce.is<OneOf>();
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

std::string cardinalityKeyword(CardinalityKind k) {
  switch (k) {
    case CardinalityKind::Min: return "min";
    case CardinalityKind::Max: return "max";
    case CardinalityKind::Exact: return "exactly";
  }
  return "?";
}

std::string printOperand(const ClassExpression& ce) {
  if (isSimple(ce)) return print(ce);
  if (ce.is<Not>() && isSimple(ce.as<Not>().operand)) return print(ce);
  return "(" + print(ce) + ")";
}

std::string printFiller(const ClassExpression& ce) {
  if (isSimple(ce)) return print(ce);
  return "(" + print(ce) + ")";
}

std::string printRange(const DataRange& r) {
  std::string body = r.requiredValue ? "{" + printLiteral(Literal{*r.requiredValue, r.datatype}) + "}"
                                     : printName(r.datatype);
  return r.negated ? "(not " + body + ")" : body;
}

std::string join(const std::vector<ClassExpression>& ops, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (i) out += sep;
    out += printOperand(ops[i]);
  }
  return out;
}

} // namespace

std::string printLiteral(const Literal& lit) {
  static const std::regex integer(R"(-?[0-9]+)");
  static const std::regex real(R"(-?[0-9]+(\.[0-9]+([eE][+-]?[0-9]+)?|[eE][+-]?[0-9]+))");
  const std::string dt = normalizeDatatype(lit.datatype);
  if (dt == "string") return quoted(lit.lexical);
  if (dt == "integer" && std::regex_match(lit.lexical, integer)) return lit.lexical;
  if (dt == "double" && std::regex_match(lit.lexical, real)) return lit.lexical;
  if (dt == "boolean" && (lit.lexical == "true" || lit.lexical == "false")) return lit.lexical;
  return quoted(lit.lexical) + "^^" + printName(dt);
}

std::string print(const ClassExpression& ce) {
  return visit(
      overloaded{
          [](const Atomic& a) {
            std::string s = printName(a.name);
            if (a.kind) {
              switch (*a.kind) {
                case CaexKind::RoleClass: s += "@rc"; break;
                case CaexKind::InterfaceClass: s += "@ic"; break;
                case CaexKind::SystemUnitClass: s += "@suc"; break;
              }
            }
            return s;
          },
          [](const Thing&) { return std::string("Thing"); },
          [](const Nothing&) { return std::string("Nothing"); },
          [](const Not& n) {
            return "not " + (isSimple(n.operand) ? print(n.operand) : "(" + print(n.operand) + ")");
          },
          [](const And& a) { return join(a.operands, " and "); },
          [](const Or& o) { return join(o.operands, " or "); },
          [](const OneOf& o) {
            std::string s = "{";
            for (std::size_t i = 0; i < o.individuals.size(); ++i) {
              if (i) s += ", ";
              s += printName(o.individuals[i]);
            }
            return s + "}";
          },
          [](const ObjectSome& r) {
            return printName(r.property.name) + " some " + printFiller(r.filler);
          },
          [](const ObjectAll& r) {
            return printName(r.property.name) + " only " + printFiller(r.filler);
          },
          [](const ObjectCardinality& r) {
            return printName(r.property.name) + " " + cardinalityKeyword(r.kind) + " " +
                   std::to_string(r.n) + " " + printFiller(r.filler);
          },
          [](const ObjectHasValue& r) {
            return printName(r.property.name) + " value " + printName(r.individual);
          },
          [](const DataSome& r) { return printName(r.property.name) + " some " + printRange(r.range); },
          [](const DataHasValue& r) {
            return printName(r.property.name) + " value " + printLiteral(r.value);
          },
      },
      ce);
}

ClassExpression sortOperands(const ClassExpression& ce) {
  auto sorted = [](const std::vector<ClassExpression>& ops) {
    std::vector<std::pair<std::string, ClassExpression>> keyed;
    for (const auto& op : ops) {
      auto s = sortOperands(op);
      keyed.emplace_back(print(s), s);
    }
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<ClassExpression> out;
    for (auto& [k, e] : keyed) out.push_back(std::move(e));
    return out;
  };
  return visit(overloaded{
                   [&](const Not& n) { return objectComplementOf(sortOperands(n.operand)); },
                   [&](const And& a) { return objectIntersectionOf(sorted(a.operands)); },
                   [&](const Or& o) { return objectUnionOf(sorted(o.operands)); },
                   [&](const OneOf& o) {
                     auto ind = o.individuals;
                     std::sort(ind.begin(), ind.end());
                     return objectOneOf(std::move(ind));
                   },
                   [&](const auto&) {
                     if (auto f = restrictionFiller(ce)) return withFiller(ce, sortOperands(*f));
                     return ce;
                   },
               },
               ce);
}

} // namespace amlowl
