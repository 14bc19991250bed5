#include "pdda/monomial.hpp"

#include <limits>

namespace pdda {

namespace {

std::int32_t checked(long long e) {
  if (e > std::numeric_limits<std::int32_t>::max() || e < std::numeric_limits<std::int32_t>::min())
    throw resource_error("monomial exponent out of range");
  return static_cast<std::int32_t>(e);
}

void require_same_ambient(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw value_error("monomial ambient dimension mismatch");
}

}  // namespace

Monomial Monomial::var(int nvars, int v, std::int32_t exp) {
  if (v < 0 || v >= nvars) throw value_error("variable index out of range");
  Monomial m(nvars);
  m.set(v, exp);
  return m;
}

bool Monomial::is_unit() const {
  for (auto e : e_)
    if (e != 0) return false;
  return true;
}

bool Monomial::has_negative() const {
  for (auto e : e_)
    if (e < 0) return true;
  return false;
}

long long Monomial::degree() const {
  long long d = 0;
  for (auto e : e_) d += e;
  return d;
}

Monomial Monomial::times(const Monomial& o) const {
  require_same_ambient(*this, o);
  Monomial r(nvars());
  for (int v = 0; v < nvars(); ++v)
    r.set(v, checked(static_cast<long long>(e_[v]) + o.e_[v]));
  return r;
}

Monomial Monomial::over(const Monomial& o) const {
  require_same_ambient(*this, o);
  Monomial r(nvars());
  for (int v = 0; v < nvars(); ++v)
    r.set(v, checked(static_cast<long long>(e_[v]) - o.e_[v]));
  return r;
}

Monomial Monomial::pow(long k) const {
  Monomial r(nvars());
  for (int v = 0; v < nvars(); ++v)
    r.set(v, checked(static_cast<long long>(e_[v]) * k));
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  require_same_ambient(*this, o);
  for (int v = 0; v < nvars(); ++v)
    if (o.e_[v] < e_[v]) return false;
  return true;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  require_same_ambient(a, b);
  Monomial r(a.nvars());
  for (int v = 0; v < a.nvars(); ++v) r.set(v, std::max(a[v], b[v]));
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  require_same_ambient(a, b);
  Monomial r(a.nvars());
  for (int v = 0; v < a.nvars(); ++v) r.set(v, std::min(a[v], b[v]));
  return r;
}

bool grevlex_less(const Monomial& a, const Monomial& b) {
  long long da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  for (int v = a.nvars() - 1; v >= 0; --v) {
    if (a[v] != b[v]) return a[v] > b[v];
  }
  return false;
}

namespace {

bool lex_less_range(const Monomial& a, const Monomial& b, int lo, int hi) {
  for (int v = lo; v < hi; ++v)
    if (a[v] != b[v]) return a[v] < b[v];
  return false;
}

bool lex_eq_range(const Monomial& a, const Monomial& b, int lo, int hi) {
  for (int v = lo; v < hi; ++v)
    if (a[v] != b[v]) return false;
  return true;
}

bool grevlex_less_range(const Monomial& a, const Monomial& b, int lo, int hi) {
  long long da = 0, db = 0;
  for (int v = lo; v < hi; ++v) {
    da += a[v];
    db += b[v];
  }
  if (da != db) return da < db;
  for (int v = hi - 1; v >= lo; --v)
    if (a[v] != b[v]) return a[v] > b[v];
  return false;
}

}  // namespace

bool MonomialOrder::less(const Monomial& a, const Monomial& b) const {
  switch (kind) {
    case Kind::grevlex:
      return grevlex_less(a, b);
    case Kind::lex:
      return lex_less_range(a, b, 0, a.nvars());
    case Kind::block:
      if (!lex_eq_range(a, b, 0, block)) return lex_less_range(a, b, 0, block);
      return grevlex_less_range(a, b, block, a.nvars());
  }
  return false;
}

}  // namespace pdda
