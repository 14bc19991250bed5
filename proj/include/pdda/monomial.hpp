#pragma once

#include <cstdint>
#include <vector>

#include "pdda/errors.hpp"

namespace pdda {

// Exponent vector over a fixed ambient variable set. Negative exponents are
// permitted (Laurent context); polynomial-only call sites check positivity.
class Monomial {
 public:
  explicit Monomial(int nvars) : e_(static_cast<std::size_t>(nvars), 0) {}

  static Monomial unit(int nvars) { return Monomial(nvars); }
  static Monomial var(int nvars, int v, std::int32_t exp = 1);

  int nvars() const { return static_cast<int>(e_.size()); }
  std::int32_t operator[](int v) const { return e_[static_cast<std::size_t>(v)]; }
  void set(int v, std::int32_t e) { e_[static_cast<std::size_t>(v)] = e; }

  bool is_unit() const;
  bool has_negative() const;
  long long degree() const;  // total degree as int64

  Monomial times(const Monomial& o) const;  // exponent add, overflow checked
  Monomial over(const Monomial& o) const;   // exponent subtract, overflow checked
  Monomial pow(long k) const;

  // Divisibility in the polynomial (non-Laurent) sense: o[v] >= (*this)[v].
  bool divides(const Monomial& o) const;

  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial&) const = default;

 private:
  std::vector<std::int32_t> e_;
};

// Graded reverse lexicographic order with X1 > X2 > ... > Xn; this is the
// canonical storage order of every polynomial.
bool grevlex_less(const Monomial& a, const Monomial& b);

struct GrevlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_less(a, b); }
};

// grevlex, lex, or block(k): the first k variables compared by lex, ties
// broken by grevlex on the rest — an elimination order for the first k.
struct MonomialOrder {
  enum class Kind { grevlex, lex, block };

  Kind kind = Kind::grevlex;
  int block = 0;

  static MonomialOrder grevlex() { return {Kind::grevlex, 0}; }
  static MonomialOrder lex() { return {Kind::lex, 0}; }
  static MonomialOrder block_elim(int k) { return {Kind::block, k}; }

  bool less(const Monomial& a, const Monomial& b) const;
  bool operator==(const MonomialOrder&) const = default;
};

}  // namespace pdda
