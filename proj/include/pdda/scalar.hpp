#pragma once

#include <gmpxx.h>

#include <string>

#include "pdda/errors.hpp"

namespace pdda {

// Coefficient field: the rationals (p == 0) or F_p for a prime p.
struct FieldSpec {
  unsigned long p = 0;

  bool operator==(const FieldSpec&) const = default;
  bool is_rational() const { return p == 0; }
};

bool is_prime(unsigned long n);

inline FieldSpec rationals() { return FieldSpec{0}; }
FieldSpec prime_field(unsigned long p);  // validates primality

// Exact field element. Rational values are kept canonical (lowest terms,
// positive denominator); residues are kept in [0, p).
class Scalar {
 public:
  Scalar() = default;  // 0 over Q

  static Scalar zero(const FieldSpec& f);
  static Scalar one(const FieldSpec& f);
  static Scalar of(const FieldSpec& f, long num, long den = 1);
  static Scalar rational(mpq_class q);
  static Scalar residue(mpz_class v, unsigned long p);
  static Scalar parse(const std::string& text, const FieldSpec& f);

  unsigned long characteristic() const { return p_; }
  FieldSpec field() const { return FieldSpec{p_}; }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integral() const;

  // Underlying value: the canonical rational, or the residue with
  // denominator 1 in characteristic p.
  const mpq_class& value() const { return v_; }

  Scalar operator-() const;
  Scalar inverse() const;  // throws value_error on zero

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  bool operator==(const Scalar& o) const { return p_ == o.p_ && v_ == o.v_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string str() const;

 private:
  void require_same_field(const Scalar& o) const;
  void reduce();

  mpq_class v_ = 0;
  unsigned long p_ = 0;
};

}  // namespace pdda
