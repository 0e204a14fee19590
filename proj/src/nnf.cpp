#include "amlowl/nnf.hpp"

#include "amlowl/errors.hpp"

#include <algorithm>

namespace amlowl {

namespace {

ClassExpression positive(const ClassExpression& ce);

ClassExpression negative(const ClassExpression& ce) {
  return visit(
      overloaded{
          [&](const Atomic&) { return objectComplementOf(ce); },
          [](const Thing&) { return owlNothing(); },
          [](const Nothing&) { return owlThing(); },
          [](const Not& n) { return positive(n.operand); },
          [](const And& a) {
            std::vector<ClassExpression> ops;
            for (const auto& op : a.operands) ops.push_back(negative(op));
            return objectUnionOf(std::move(ops));
          },
          [](const Or& o) {
            std::vector<ClassExpression> ops;
            for (const auto& op : o.operands) ops.push_back(negative(op));
            return objectIntersectionOf(std::move(ops));
          },
          [&](const OneOf&) -> ClassExpression {
            throw UncoveredConstructor("complement of nominal '" + print(ce) +
                                       "' has no concept-model representation");
          },
          [](const ObjectSome& r) {
            return objectAllValuesFrom(r.property, negative(r.filler));
          },
          [](const ObjectAll& r) {
            return objectSomeValuesFrom(r.property, negative(r.filler));
          },
          [](const ObjectCardinality& r) {
            auto filler = positive(r.filler);
            switch (r.kind) {
              case CardinalityKind::Min:
                if (r.n == 0) return owlNothing();
                return objectMaxCardinality(r.n - 1, r.property, filler);
              case CardinalityKind::Max:
                return objectMinCardinality(r.n + 1, r.property, filler);
              case CardinalityKind::Exact:
                if (r.n == 0) return objectMinCardinality(1, r.property, filler);
                return objectUnionOf({objectMaxCardinality(r.n - 1, r.property, filler),
                                      objectMinCardinality(r.n + 1, r.property, filler)});
            }
            return owlNothing();
          },
          [&](const ObjectHasValue&) -> ClassExpression {
            throw UncoveredConstructor("complement of fills restriction '" + print(ce) +
                                       "' has no concept-model representation");
          },
          [&](const DataSome&) -> ClassExpression {
            throw UncoveredConstructor("complement of data restriction '" + print(ce) +
                                       "' needs DataAllValuesFrom, which is not supported");
          },
          [&](const DataHasValue&) -> ClassExpression {
            throw UncoveredConstructor("complement of fills restriction '" + print(ce) +
                                       "' has no concept-model representation");
          },
      },
      ce);
}

ClassExpression positive(const ClassExpression& ce) {
  return visit(overloaded{
                   [](const Not& n) { return negative(n.operand); },
                   [](const And& a) {
                     std::vector<ClassExpression> ops;
                     for (const auto& op : a.operands) ops.push_back(positive(op));
                     return objectIntersectionOf(std::move(ops));
                   },
                   [](const Or& o) {
                     std::vector<ClassExpression> ops;
                     for (const auto& op : o.operands) ops.push_back(positive(op));
                     return objectUnionOf(std::move(ops));
                   },
                   [&](const auto&) {
                     if (auto f = restrictionFiller(ce)) return withFiller(ce, positive(*f));
                     return ce;
                   },
               },
               ce);
}

} // namespace

ClassExpression nnf(const ClassExpression& ce) { return positive(ce); }

bool isNnf(const ClassExpression& ce) {
  return visit(overloaded{
                   [](const Not& n) { return n.operand.is<Atomic>(); },
                   [](const And& a) {
                     return std::all_of(a.operands.begin(), a.operands.end(),
                                        [](const auto& op) { return isNnf(op); });
                   },
                   [](const Or& o) {
                     return std::all_of(o.operands.begin(), o.operands.end(),
                                        [](const auto& op) { return isNnf(op); });
                   },
                   [&](const auto&) {
                     auto f = restrictionFiller(ce);
                     return !f || isNnf(*f);
                   },
               },
               ce);
}

} // namespace amlowl
