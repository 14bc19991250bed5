#pragma once

#include "pdda/bracket.hpp"
#include "pdda/groebner.hpp"

namespace pdda {

// Smallest Poisson ideal containing I: a fixpoint that adjoins the normal
// forms of {X_v, g} until every generator bracket reduces to zero.
// Terminates by the ascending chain condition; budget errors propagate from
// the Groebner layer.
IdealPresentation poisson_closure(const IdealPresentation& I, const GroebnerOptions& opt = {});

// True when {X_v, g} reduces to zero against the ideal's basis for every
// ambient variable and generator.
bool bracket_stable(const IdealPresentation& I, const GroebnerOptions& opt = {});

}  // namespace pdda
