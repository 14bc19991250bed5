#pragma once

#include "pdda/presentation.hpp"
#include "pdda/rational.hpp"

namespace pdda {

// {f, g} by biderivation extension from the generator table; valid for
// Laurent operands (the bracket extends uniquely to the localization).
Polynomial bracket(const PoissonPresentation& pres, const Polynomial& f, const Polynomial& g);

// Quotient-rule extension to formal fractions:
// {a/b, c/d} = ({a,c} bd - {b,c} ad - {a,d} cb + {b,d} ac) / (b^2 d^2).
RationalExpression bracket(const PoissonPresentation& pres, const RationalExpression& f,
                           const RationalExpression& g);

}  // namespace pdda
