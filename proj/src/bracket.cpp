#include "pdda/bracket.hpp"

namespace pdda {

Polynomial bracket(const PoissonPresentation& pres, const Polynomial& f, const Polynomial& g) {
  if (f.nvars() != pres.n || g.nvars() != pres.n || f.field() != pres.field ||
      g.field() != pres.field)
    throw value_error("bracket operands do not live in the presentation ambient");

  // {f,g} = sum_{a<b} (df/dXa dg/dXb - df/dXb dg/dXa) {Xa,Xb}.
  std::vector<Polynomial> pf, pg;
  pf.reserve(static_cast<std::size_t>(pres.n));
  pg.reserve(static_cast<std::size_t>(pres.n));
  for (int v = 0; v < pres.n; ++v) {
    pf.push_back(f.partial(v));
    pg.push_back(g.partial(v));
  }

  Polynomial out = Polynomial::zero(pres.field, pres.n);
  for (int a = 0; a < pres.n; ++a) {
    for (int b = a + 1; b < pres.n; ++b) {
      Polynomial mixed = pf[static_cast<std::size_t>(a)] * pg[static_cast<std::size_t>(b)] -
                         pf[static_cast<std::size_t>(b)] * pg[static_cast<std::size_t>(a)];
      if (mixed.is_zero()) continue;
      Polynomial vb = pres.bracket_vars(a, b);
      if (vb.is_zero()) continue;
      out += mixed * vb;
    }
  }
  return out;
}

RationalExpression bracket(const PoissonPresentation& pres, const RationalExpression& f,
                           const RationalExpression& g) {
  const Polynomial& a = f.num();
  const Polynomial& b = f.den();
  const Polynomial& c = g.num();
  const Polynomial& d = g.den();
  Polynomial num = bracket(pres, a, c) * b * d - bracket(pres, b, c) * a * d -
                   bracket(pres, a, d) * c * b + bracket(pres, b, d) * a * c;
  Polynomial den = b * b * d * d;
  return RationalExpression(std::move(num), std::move(den)).simplified();
}

}  // namespace pdda
