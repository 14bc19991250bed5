#include "pdda/polynomial.hpp"

namespace pdda {

Polynomial Polynomial::constant(FieldSpec f, int nvars, const Scalar& c) {
  Polynomial p(f, nvars);
  p.add_term(Monomial::unit(nvars), c);
  return p;
}

Polynomial Polynomial::variable(FieldSpec f, int nvars, int v) {
  Polynomial p(f, nvars);
  p.add_term(Monomial::var(nvars, v), Scalar::one(f));
  return p;
}

Polynomial Polynomial::term(FieldSpec f, int nvars, Scalar c, Monomial m) {
  if (m.nvars() != nvars) throw value_error("term monomial has wrong ambient dimension");
  Polynomial p(f, nvars);
  p.add_term(m, c);
  return p;
}

bool Polynomial::is_laurent() const {
  for (const auto& [m, c] : terms_)
    if (m.has_negative()) return true;
  return false;
}

long long Polynomial::degree() const {
  long long d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

Scalar Polynomial::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  if (it == terms_.end()) return Scalar::zero(field_);
  return it->second;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

std::optional<Scalar> Polynomial::as_constant() const {
  if (terms_.empty()) return Scalar::zero(field_);
  if (terms_.size() == 1 && terms_.begin()->first.is_unit()) return terms_.begin()->second;
  return std::nullopt;
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
  if (m.nvars() != nvars_) throw value_error("term monomial has wrong ambient dimension");
  if (c.characteristic() != field_.p) throw value_error("coefficient characteristic mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Polynomial::require_compatible(const Polynomial& o) const {
  if (nvars_ != o.nvars_) throw value_error("polynomial ambient dimension mismatch");
  if (field_ != o.field_) throw value_error("polynomial characteristic mismatch");
}

Polynomial Polynomial::operator-() const {
  Polynomial r(field_, nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  require_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_compatible(b);
  Polynomial r(a.field(), a.nvars());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) r.add_term(ma.times(mb), ca * cb);
  return r;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  Polynomial r(field_, nvars_);
  if (c.is_zero()) return r;
  for (const auto& [m, cc] : terms_) r.add_term(m, cc * c);
  return r;
}

Polynomial Polynomial::times_term(const Scalar& c, const Monomial& m) const {
  Polynomial r(field_, nvars_);
  if (c.is_zero()) return r;
  for (const auto& [mm, cc] : terms_) r.add_term(mm.times(m), cc * c);
  return r;
}

Polynomial Polynomial::pow(unsigned long k) const {
  Polynomial r = one(field_, nvars_);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1UL) r = r * base;
    k >>= 1UL;
    if (k > 0) base = base * base;
  }
  return r;
}

Polynomial Polynomial::partial(int v) const {
  Polynomial r(field_, nvars_);
  for (const auto& [m, c] : terms_) {
    std::int32_t e = m[v];
    if (e == 0) continue;
    Monomial mm = m;
    mm.set(v, e - 1);
    r.add_term(mm, c * Scalar::of(field_, e));
  }
  return r;
}

const std::pair<const Monomial, Scalar>& Polynomial::leading_term(const MonomialOrder& ord) const {
  if (terms_.empty()) throw value_error("leading term of the zero polynomial");
  if (ord.kind == MonomialOrder::Kind::grevlex) return *terms_.rbegin();
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
    if (ord.less(best->first, it->first)) best = it;
  return *best;
}

Monomial Polynomial::exponent_floor() const {
  Monomial floor = Monomial::unit(nvars_);
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (first) {
      floor = m;
      first = false;
      continue;
    }
    for (int v = 0; v < nvars_; ++v)
      if (m[v] < floor[v]) floor.set(v, m[v]);
  }
  return floor;
}

Polynomial Polynomial::remap(int new_nvars, const std::vector<int>& var_map) const {
  if (static_cast<int>(var_map.size()) != nvars_) throw value_error("remap table has wrong size");
  Polynomial r(field_, new_nvars);
  for (const auto& [m, c] : terms_) {
    Monomial mm(new_nvars);
    for (int v = 0; v < nvars_; ++v) {
      if (m[v] == 0) continue;
      int target = var_map[static_cast<std::size_t>(v)];
      if (target < 0 || target >= new_nvars)
        throw value_error("remap target out of range for a used variable");
      mm.set(target, mm[target] + m[v]);
    }
    r.add_term(mm, c);
  }
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  return nvars_ == o.nvars_ && field_ == o.field_ && terms_ == o.terms_;
}

}  // namespace pdda
