#pragma once

#include "amlowl/expr.hpp"

namespace amlowl {

// Negation normal form: complements end up on atomic classes only (negated
// data ranges are folded into the range itself). Throws UncoveredConstructor
// when a negation cannot be pushed inside the covered constructors, i.e. the
// complement of a nominal, of a fills restriction or of a data restriction.
ClassExpression nnf(const ClassExpression& ce);

bool isNnf(const ClassExpression& ce);

} // namespace amlowl
