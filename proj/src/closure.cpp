#include "pdda/closure.hpp"

namespace pdda {

IdealPresentation poisson_closure(const IdealPresentation& I, const GroebnerOptions& opt) {
  const PoissonPresentation& pres = I.ambient();
  std::vector<Polynomial> gens = I.generators();
  if (gens.empty()) return I;  // the zero ideal is Poisson

  for (;;) {
    GroebnerBasis gb = groebner(gens, MonomialOrder::grevlex(), opt);
    if (gb.is_unit_ideal())
      return IdealPresentation(I.ambient_ptr(), gb.elements());
    std::vector<Polynomial> next = gb.elements();
    bool grew = false;
    for (int v = 0; v < pres.n; ++v) {
      for (const Polynomial& g : gb.elements()) {
        Polynomial r = gb.normal_form(bracket(pres, pres.var(v), g));
        if (!r.is_zero()) {
          next.push_back(std::move(r));
          grew = true;
        }
      }
    }
    if (!grew) return IdealPresentation(I.ambient_ptr(), gb.elements());
    gens = std::move(next);
  }
}

bool bracket_stable(const IdealPresentation& I, const GroebnerOptions& opt) {
  if (I.is_zero()) return true;
  const PoissonPresentation& pres = I.ambient();
  const GroebnerBasis& gb = I.basis(MonomialOrder::grevlex(), opt);
  for (int v = 0; v < pres.n; ++v)
    for (const Polynomial& g : gb.elements())
      if (!gb.contains(bracket(pres, pres.var(v), g))) return false;
  return true;
}

}  // namespace pdda
