#include "pdda/rational.hpp"

namespace pdda {

std::pair<Scalar, Polynomial> content_normalize(const Polynomial& f) {
  if (!f.field().is_rational())
    throw value_error("content normalization requires rational coefficients");
  if (f.is_zero()) throw value_error("content of the zero polynomial");

  mpz_class den_lcm = 1, num_gcd = 0;
  for (const auto& [m, c] : f.terms()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.value().get_den().get_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.value().get_num().get_mpz_t());
  }
  mpq_class content(num_gcd, den_lcm);
  content.canonicalize();
  if (f.leading_term(MonomialOrder::grevlex()).second.value() < 0) content = -content;

  Scalar c = Scalar::rational(content);
  Polynomial g = f.scaled(c.inverse());
  return {c, g};
}

RationalExpression::RationalExpression(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (num_.nvars() != den_.nvars() || num_.field() != den_.field())
    throw value_error("fraction numerator/denominator ambient mismatch");
  if (den_.is_zero()) throw value_error("fraction with zero denominator");
}

RationalExpression RationalExpression::of(Polynomial p) {
  Polynomial one = Polynomial::one(p.field(), p.nvars());
  return RationalExpression(std::move(p), std::move(one));
}

RationalExpression RationalExpression::zero(FieldSpec f, int nvars) {
  return of(Polynomial::zero(f, nvars));
}

RationalExpression RationalExpression::one(FieldSpec f, int nvars) {
  return of(Polynomial::one(f, nvars));
}

RationalExpression RationalExpression::operator-() const {
  return RationalExpression(-num_, den_);
}

RationalExpression RationalExpression::inverse() const {
  if (num_.is_zero()) throw value_error("inversion of a zero rational expression");
  return RationalExpression(den_, num_);
}

RationalExpression operator+(const RationalExpression& a, const RationalExpression& b) {
  return RationalExpression(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalExpression operator-(const RationalExpression& a, const RationalExpression& b) {
  return a + (-b);
}

RationalExpression operator*(const RationalExpression& a, const RationalExpression& b) {
  return RationalExpression(a.num_ * b.num_, a.den_ * b.den_);
}

bool RationalExpression::equals(const RationalExpression& o) const {
  return (num_ * o.den_ - o.num_ * den_).is_zero();
}

RationalExpression RationalExpression::simplified() const {
  if (num_.is_zero()) return zero(field(), nvars());

  Monomial common = Monomial::gcd(num_.exponent_floor(), den_.exponent_floor());
  Polynomial n = num_;
  Polynomial d = den_;
  if (!common.is_unit()) {
    Monomial inv = Monomial::unit(nvars()).over(common);
    n = n.times_term(Scalar::one(field()), inv);
    d = d.times_term(Scalar::one(field()), inv);
  }
  if (field().is_rational()) {
    auto [c, g] = content_normalize(d);
    return RationalExpression(n.scaled(c.inverse()), g);
  }
  Scalar lc = d.leading_term(MonomialOrder::grevlex()).second;
  return RationalExpression(n.scaled(lc.inverse()), d.scaled(lc.inverse()));
}

RationalExpression as_fraction(const Polynomial& laurent) {
  Monomial floor = laurent.exponent_floor();
  Monomial shift(laurent.nvars());
  bool shifted = false;
  for (int v = 0; v < laurent.nvars(); ++v) {
    if (floor[v] < 0) {
      shift.set(v, -floor[v]);
      shifted = true;
    }
  }
  if (!shifted) return RationalExpression::of(laurent);
  Scalar one = Scalar::one(laurent.field());
  Polynomial num = laurent.times_term(one, shift);
  Polynomial den = Polynomial::term(laurent.field(), laurent.nvars(), one, shift);
  return RationalExpression(num, den);
}

RationalExpression substitute(const Polynomial& f, const std::vector<RationalExpression>& images) {
  if (static_cast<int>(images.size()) != f.nvars() || images.empty())
    throw value_error("substitution needs one image per ambient variable");
  for (const auto& im : images) {
    if (im.field() != images.front().field() || im.nvars() != images.front().nvars())
      throw value_error("substitution images live in different ambients");
    if (im.field() != f.field()) throw value_error("substitution characteristic mismatch");
  }

  // Negative exponents invert the image up front: f = X^{-s} * g with g plain.
  Monomial floor = f.exponent_floor();
  Polynomial g = f;
  RationalExpression prefix =
      RationalExpression::one(images.front().field(), images.front().nvars());
  for (int v = 0; v < f.nvars(); ++v) {
    if (floor[v] >= 0) continue;
    auto s = static_cast<unsigned long>(-static_cast<long>(floor[v]));
    RationalExpression inv = images[static_cast<std::size_t>(v)].inverse();
    prefix = (prefix * RationalExpression(inv.num().pow(s), inv.den().pow(s))).simplified();
    g = g.times_term(Scalar::one(f.field()),
                     Monomial::var(f.nvars(), v, static_cast<std::int32_t>(s)));
  }

  FieldSpec field = prefix.field();
  int amb = prefix.nvars();

  // Common-denominator evaluation: den = prod den_v^{M_v}, each term of g
  // contributes c * prod num_v^{e_v} * prod den_v^{M_v - e_v}.
  std::vector<long> maxexp(static_cast<std::size_t>(f.nvars()), 0);
  for (const auto& [m, c] : g.terms())
    for (int v = 0; v < f.nvars(); ++v)
      maxexp[static_cast<std::size_t>(v)] = std::max(maxexp[static_cast<std::size_t>(v)],
                                                     static_cast<long>(m[v]));

  Polynomial den = Polynomial::one(field, amb);
  for (int v = 0; v < f.nvars(); ++v)
    if (maxexp[static_cast<std::size_t>(v)] > 0)
      den = den * images[static_cast<std::size_t>(v)].den().pow(
                      static_cast<unsigned long>(maxexp[static_cast<std::size_t>(v)]));

  Polynomial num = Polynomial::zero(field, amb);
  for (const auto& [m, c] : g.terms()) {
    Polynomial part = Polynomial::constant(field, amb, c);
    for (int v = 0; v < f.nvars(); ++v) {
      long e = m[v];
      long slack = maxexp[static_cast<std::size_t>(v)] - e;
      if (e > 0) part = part * images[static_cast<std::size_t>(v)].num().pow(
                                   static_cast<unsigned long>(e));
      if (slack > 0) part = part * images[static_cast<std::size_t>(v)].den().pow(
                                       static_cast<unsigned long>(slack));
    }
    num += part;
  }

  return (prefix * RationalExpression(num, den));
}

}  // namespace pdda
