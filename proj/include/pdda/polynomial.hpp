#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "pdda/monomial.hpp"
#include "pdda/scalar.hpp"

namespace pdda {

// Sparse multivariate (Laurent) polynomial with exact coefficients. Terms are
// stored under grevlex, nonzero coefficients only; this canonical form makes
// every output bit-reproducible.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Scalar, GrevlexLess>;

  Polynomial(FieldSpec field, int nvars) : field_(field), nvars_(nvars) {}

  static Polynomial zero(FieldSpec f, int nvars) { return Polynomial(f, nvars); }
  static Polynomial constant(FieldSpec f, int nvars, const Scalar& c);
  static Polynomial one(FieldSpec f, int nvars) { return constant(f, nvars, Scalar::one(f)); }
  static Polynomial variable(FieldSpec f, int nvars, int v);
  static Polynomial term(FieldSpec f, int nvars, Scalar c, Monomial m);

  FieldSpec field() const { return field_; }
  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  bool is_laurent() const;         // any negative exponent
  long long degree() const;        // max total degree; -1 for the zero polynomial
  Scalar coeff(const Monomial& m) const;
  bool is_constant() const;
  std::optional<Scalar> as_constant() const;  // set when zero or a single unit term

  void add_term(const Monomial& m, const Scalar& c);  // accumulating insert

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  Polynomial scaled(const Scalar& c) const;
  Polynomial times_term(const Scalar& c, const Monomial& m) const;
  Polynomial pow(unsigned long k) const;

  // Formal partial derivative (valid for Laurent exponents).
  Polynomial partial(int v) const;

  // Leading data under an arbitrary order; throws on the zero polynomial.
  const std::pair<const Monomial, Scalar>& leading_term(const MonomialOrder& ord) const;

  // Componentwise minimum of the exponent vectors over the support
  // (the largest monomial dividing every term); unit for the zero polynomial.
  Monomial exponent_floor() const;

  // Reinterpret in a new ambient ring; var_map[old] = new index.
  Polynomial remap(int new_nvars, const std::vector<int>& var_map) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

 private:
  void require_compatible(const Polynomial& o) const;

  FieldSpec field_;
  int nvars_;
  TermMap terms_;
};

}  // namespace pdda
