#include "pdda/scalar.hpp"

#include <cctype>

namespace pdda {

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  mpz_class z(static_cast<unsigned long>(n));
  return mpz_probab_prime_p(z.get_mpz_t(), 40) > 0;
}

FieldSpec prime_field(unsigned long p) {
  if (!is_prime(p)) throw value_error("field characteristic " + std::to_string(p) + " is not prime");
  return FieldSpec{p};
}

namespace {

mpz_class mod_p(mpz_class v, unsigned long p) {
  mpz_class m(p);
  mpz_class r = v % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace

Scalar Scalar::zero(const FieldSpec& f) {
  Scalar s;
  s.p_ = f.p;
  return s;
}

Scalar Scalar::one(const FieldSpec& f) {
  Scalar s;
  s.p_ = f.p;
  s.v_ = 1;
  return s;
}

Scalar Scalar::of(const FieldSpec& f, long num, long den) {
  if (den == 0) throw value_error("scalar with zero denominator");
  if (f.p == 0) {
    Scalar s;
    s.v_ = mpq_class(num, den);
    s.v_.canonicalize();
    return s;
  }
  return residue(mpz_class(num), f.p) * residue(mpz_class(den), f.p).inverse();
}

Scalar Scalar::rational(mpq_class q) {
  q.canonicalize();
  Scalar s;
  s.v_ = std::move(q);
  return s;
}

Scalar Scalar::residue(mpz_class v, unsigned long p) {
  Scalar s;
  s.p_ = p;
  s.v_ = mod_p(std::move(v), p);
  return s;
}

Scalar Scalar::parse(const std::string& text, const FieldSpec& f) {
  std::string compact;
  compact.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  if (compact.empty()) throw value_error("empty scalar literal");
  auto slash = compact.find('/');
  try {
    if (slash == std::string::npos) {
      mpz_class n(compact);
      if (f.p != 0) return residue(n, f.p);
      return rational(mpq_class(n));
    }
    mpz_class n(compact.substr(0, slash));
    mpz_class d(compact.substr(slash + 1));
    if (d == 0) throw value_error("scalar with zero denominator: " + text);
    if (f.p != 0) return residue(n, f.p) * residue(d, f.p).inverse();
    return rational(mpq_class(n, d));
  } catch (const std::invalid_argument&) {
    throw value_error("malformed scalar literal: " + text);
  }
}

bool Scalar::is_integral() const { return v_.get_den() == 1; }

void Scalar::require_same_field(const Scalar& o) const {
  if (p_ != o.p_) throw value_error("scalar characteristic mismatch");
}

void Scalar::reduce() {
  if (p_ != 0)
    v_ = mod_p(v_.get_num(), p_);
  else
    v_.canonicalize();
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  s.v_ = -s.v_;
  s.reduce();
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw value_error("inversion of zero scalar");
  Scalar s;
  s.p_ = p_;
  if (p_ == 0) {
    s.v_ = 1 / v_;
  } else {
    mpz_class inv, m(p_);
    if (mpz_invert(inv.get_mpz_t(), v_.get_num().get_mpz_t(), m.get_mpz_t()) == 0)
      throw value_error("residue is not invertible");
    s.v_ = inv;
  }
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same_field(o);
  v_ += o.v_;
  reduce();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same_field(o);
  v_ -= o.v_;
  reduce();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same_field(o);
  v_ *= o.v_;
  reduce();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  require_same_field(o);
  return *this *= o.inverse();
}

std::string Scalar::str() const {
  return v_.get_str();
}

}  // namespace pdda
