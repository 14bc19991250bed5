#pragma once

#include <utility>
#include <vector>

#include "pdda/polynomial.hpp"

namespace pdda {

// Over Q: splits a nonzero polynomial as c * g where g has integer
// coefficients of collective gcd 1 and positive grevlex-leading coefficient.
std::pair<Scalar, Polynomial> content_normalize(const Polynomial& f);

// Formal fraction of polynomials. Never reduced to lowest terms; equality is
// by cross-multiplication.
class RationalExpression {
 public:
  RationalExpression(Polynomial num, Polynomial den);

  static RationalExpression of(Polynomial p);
  static RationalExpression zero(FieldSpec f, int nvars);
  static RationalExpression one(FieldSpec f, int nvars);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  FieldSpec field() const { return num_.field(); }
  int nvars() const { return num_.nvars(); }
  bool is_zero() const { return num_.is_zero(); }

  RationalExpression operator-() const;
  RationalExpression inverse() const;  // throws on zero numerator
  friend RationalExpression operator+(const RationalExpression& a, const RationalExpression& b);
  friend RationalExpression operator-(const RationalExpression& a, const RationalExpression& b);
  friend RationalExpression operator*(const RationalExpression& a, const RationalExpression& b);

  bool equals(const RationalExpression& o) const;  // n1*d2 == n2*d1

  // Value-preserving cleanup: cancels the common monomial factor of numerator
  // and denominator and rescales so the denominator is primitive with positive
  // leading coefficient (monic in characteristic p).
  RationalExpression simplified() const;

 private:
  Polynomial num_, den_;
};

inline bool frac_equal(const RationalExpression& a, const RationalExpression& b) {
  return a.equals(b);
}

// Clears negative exponents of a Laurent polynomial into the denominator;
// the denominator is a single monomial.
RationalExpression as_fraction(const Polynomial& laurent);

// Evaluates f at the given images, one per ambient variable of f. All images
// must share one ambient ring. Negative exponents of f invert the matching
// image (which must then be nonzero).
RationalExpression substitute(const Polynomial& f, const std::vector<RationalExpression>& images);

}  // namespace pdda
