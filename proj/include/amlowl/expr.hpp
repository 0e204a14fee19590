#pragma once

// Class-expression algebra over the OWL constructors that have an AML
// concept-model representation.

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace amlowl {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

enum class CaexKind { RoleClass, InterfaceClass, SystemUnitClass };

std::string_view toString(CaexKind kind);

enum class PropertyKind { ObjectForward, ObjectInverse, Data };

// hasIE/hasEI and their inverses isIEOf/isEIOf are the only object
// properties; every other identifier names a data property.
struct PropertyRef {
  std::string name;
  PropertyKind kind = PropertyKind::Data;

  static PropertyRef named(std::string name);

  bool isObject() const { return kind != PropertyKind::Data; }
  bool isInverse() const { return kind == PropertyKind::ObjectInverse; }
  bool isData() const { return kind == PropertyKind::Data; }
  // hasIE <-> isIEOf, hasEI <-> isEIOf. Empty for data properties.
  std::optional<std::string> inverseOf() const;
  // Throws std::logic_error on data properties.
  PropertyRef inverse() const;
  // hasEI / isEIOf
  bool isInterfaceEdge() const { return name == "hasEI" || name == "isEIOf"; }

  bool operator==(const PropertyRef&) const = default;
};

PropertyRef hasIE();
PropertyRef hasEI();
PropertyRef isIEOf();
PropertyRef isEIOf();

// "xsd:integer", "xs:integer" and "integer" all name the same datatype.
std::string normalizeDatatype(std::string_view datatype);

// True when the lexical form is a valid member of the datatype. Unknown
// datatypes accept every lexical form.
bool conformsTo(std::string_view lexical, std::string_view datatype);

struct Literal {
  std::string lexical;
  std::string datatype = "string";

  bool operator==(const Literal&) const = default;
};

struct DataRange {
  std::string datatype = "string";
  std::optional<std::string> requiredValue;
  bool negated = false;

  bool operator==(const DataRange&) const = default;
};

struct ExprNode;

class ClassExpression {
public:
  ClassExpression();  // owl:Thing
  explicit ClassExpression(std::shared_ptr<const ExprNode> node);

  const ExprNode& node() const { return *node_; }

  template <class T>
  bool is() const;
  template <class T>
  const T& as() const;

  std::string toString() const;

  friend bool operator==(const ClassExpression& a, const ClassExpression& b);
  friend bool operator<(const ClassExpression& a, const ClassExpression& b);

private:
  std::shared_ptr<const ExprNode> node_;
};

int compare(const ClassExpression& a, const ClassExpression& b);

struct Atomic {
  std::string name;
  std::optional<CaexKind> kind;  // explicit @rc/@ic/@suc annotation
};
struct Thing {};
struct Nothing {};
struct Not {
  ClassExpression operand;
};
struct And {
  std::vector<ClassExpression> operands;
};
struct Or {
  std::vector<ClassExpression> operands;
};
struct OneOf {
  std::vector<std::string> individuals;
};
struct ObjectSome {
  PropertyRef property;
  ClassExpression filler;
};
struct ObjectAll {
  PropertyRef property;
  ClassExpression filler;
};

enum class CardinalityKind { Min, Max, Exact };

struct ObjectCardinality {
  CardinalityKind kind;
  unsigned n = 0;
  PropertyRef property;
  ClassExpression filler;
};
struct ObjectHasValue {
  PropertyRef property;
  std::string individual;
};
struct DataSome {
  PropertyRef property;
  DataRange range;
};
struct DataHasValue {
  PropertyRef property;
  Literal value;
};

struct ExprNode {
  using Variant = std::variant<Atomic, Thing, Nothing, Not, And, Or, OneOf, ObjectSome,
                               ObjectAll, ObjectCardinality, ObjectHasValue, DataSome,
                               DataHasValue>;
  Variant value;
};

template <class T>
bool ClassExpression::is() const {
  return std::holds_alternative<T>(node_->value);
}

template <class T>
const T& ClassExpression::as() const {
  return std::get<T>(node_->value);
}

template <class F>
decltype(auto) visit(F&& f, const ClassExpression& ce) {
  return std::visit(std::forward<F>(f), ce.node().value);
}

// Constructors. And/Or flatten nested operands of the same kind; an
// intersection of one operand is that operand and an empty one is Thing
// (dually for unions). Property kinds are checked against the constructor.
ClassExpression atomicClass(std::string name, std::optional<CaexKind> kind = std::nullopt);
ClassExpression owlThing();
ClassExpression owlNothing();
ClassExpression objectComplementOf(ClassExpression operand);
ClassExpression objectIntersectionOf(std::vector<ClassExpression> operands);
ClassExpression objectUnionOf(std::vector<ClassExpression> operands);
ClassExpression objectOneOf(std::vector<std::string> individuals);
ClassExpression objectSomeValuesFrom(PropertyRef property, ClassExpression filler);
ClassExpression objectAllValuesFrom(PropertyRef property, ClassExpression filler);
ClassExpression objectMinCardinality(unsigned n, PropertyRef property, ClassExpression filler);
ClassExpression objectMaxCardinality(unsigned n, PropertyRef property, ClassExpression filler);
ClassExpression objectExactCardinality(unsigned n, PropertyRef property,
                                       ClassExpression filler);
ClassExpression objectCardinality(CardinalityKind kind, unsigned n, PropertyRef property,
                                  ClassExpression filler);
ClassExpression objectHasValue(PropertyRef property, std::string individual);
ClassExpression dataSomeValuesFrom(PropertyRef property, DataRange range);
ClassExpression dataHasValue(PropertyRef property, Literal value);

// Restriction helpers. `filler` is empty for data restrictions and
// ObjectHasValue.
bool isRestriction(const ClassExpression& ce);
std::optional<PropertyRef> restrictionProperty(const ClassExpression& ce);
std::optional<ClassExpression> restrictionFiller(const ClassExpression& ce);
// Same restriction with the filler replaced. Precondition: the restriction
// has a filler.
ClassExpression withFiller(const ClassExpression& restriction, ClassExpression filler);

// Top-level conjuncts: the operands of an And, otherwise the expression itself.
std::vector<ClassExpression> conjuncts(const ClassExpression& ce);

bool containsInverse(const ClassExpression& ce);
bool containsDisjunction(const ClassExpression& ce);

// Canonical pretty-printer (Manchester-style); parse(print(ce)) == ce.
std::string print(const ClassExpression& ce);
std::string printLiteral(const Literal& lit);

// Recursively orders And/Or operands and nominal members; the result is the
// canonical AST used for structural comparison.
ClassExpression sortOperands(const ClassExpression& ce);

} // namespace amlowl
