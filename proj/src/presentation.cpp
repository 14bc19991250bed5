#include "pdda/presentation.hpp"

#include <map>

namespace pdda {

Polynomial HigherDerivationTable::image(int k, int j) const {
  if (j < 0 || j >= var_) throw value_error("higher table index out of range");
  if (k < 0) throw value_error("negative higher-derivation index");
  if (k >= bound_) {
    const Polynomial& any = entries_.at(0).at(static_cast<std::size_t>(j));
    return Polynomial::zero(any.field(), any.nvars());
  }
  return entries_.at(static_cast<std::size_t>(k)).at(static_cast<std::size_t>(j));
}

namespace {

// D_k on a monomial, recursively through the product rule, with memoization.
class TableApplier {
 public:
  TableApplier(const HigherDerivationTable& t, FieldSpec field, int nvars)
      : t_(t), field_(field), nvars_(nvars) {}

  Polynomial monomial(int k, const Monomial& m) {
    if (k == 0) return Polynomial::term(field_, nvars_, Scalar::one(field_), m);
    int v = -1;
    for (int u = 0; u < nvars_; ++u)
      if (m[u] != 0) {
        v = u;
        break;
      }
    if (v < 0) return Polynomial::zero(field_, nvars_);  // D_k(1) = 0 for k > 0
    if (v >= t_.var()) throw value_error("higher table applied outside its domain");

    auto key = std::make_pair(k, m);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    Monomial rest = m;
    rest.set(v, m[v] - 1);
    Polynomial out = Polynomial::zero(field_, nvars_);
    for (int a = 0; a <= k; ++a) {
      Polynomial da = t_.image(a, v);
      if (da.is_zero()) continue;
      Polynomial db = monomial(k - a, rest);
      if (db.is_zero()) continue;
      out += da * db;
    }
    memo_.emplace(key, out);
    return out;
  }

 private:
  struct KeyLess {
    bool operator()(const std::pair<int, Monomial>& a, const std::pair<int, Monomial>& b) const {
      if (a.first != b.first) return a.first < b.first;
      return grevlex_less(a.second, b.second);
    }
  };

  const HigherDerivationTable& t_;
  FieldSpec field_;
  int nvars_;
  std::map<std::pair<int, Monomial>, Polynomial, KeyLess> memo_;
};

}  // namespace

Polynomial HigherDerivationTable::apply(int k, const Polynomial& f) const {
  if (k == 0) return f;
  TableApplier applier(*this, f.field(), f.nvars());
  Polynomial out = Polynomial::zero(f.field(), f.nvars());
  for (const auto& [m, c] : f.terms()) out += applier.monomial(k, m).scaled(c);
  return out;
}

PoissonPresentation::PoissonPresentation(FieldSpec field_, int n_) : field(field_), n(n_) {
  if (n < 1) throw value_error("presentation needs at least one variable");
  names.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) names[static_cast<std::size_t>(i)] = "X" + std::to_string(i + 1);
  lambda.assign(static_cast<std::size_t>(n),
                std::vector<Scalar>(static_cast<std::size_t>(n), Scalar::zero(field)));
  delta.assign(static_cast<std::size_t>(n),
               std::vector<Polynomial>(static_cast<std::size_t>(n), Polynomial::zero(field, n)));
  eta.assign(static_cast<std::size_t>(n), std::nullopt);
  higher.assign(static_cast<std::size_t>(n), std::nullopt);
}

void PoissonPresentation::set_lambda(int i, int j, const Scalar& s) {
  if (i == j) throw value_error("lambda diagonal entries are zero");
  lambda[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = s;
  lambda[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = -s;
}

void PoissonPresentation::set_delta(int i, int j, Polynomial image) {
  delta[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::move(image);
}

bool PoissonPresentation::delta_is_zero(int i) const {
  for (int j = 0; j < n; ++j)
    if (!delta[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].is_zero()) return false;
  return true;
}

Polynomial PoissonPresentation::alpha_apply(int i, const Polynomial& f) const {
  Polynomial out = Polynomial::zero(field, n);
  for (int v = 0; v < n; ++v) {
    const Scalar& l = lambda[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)];
    if (l.is_zero()) continue;
    Polynomial pv = f.partial(v);
    if (pv.is_zero()) continue;
    out += pv.times_term(l, Monomial::var(n, v));
  }
  return out;
}

Polynomial PoissonPresentation::delta_apply(int i, const Polynomial& f) const {
  Polynomial out = Polynomial::zero(field, n);
  for (int v = 0; v < n; ++v) {
    const Polynomial& image = delta[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)];
    if (image.is_zero()) continue;
    Polynomial pv = f.partial(v);
    if (pv.is_zero()) continue;
    out += pv * image;
  }
  return out;
}

Polynomial PoissonPresentation::bracket_vars(int i, int j) const {
  Polynomial out = Polynomial::zero(field, n);
  if (i == j) return out;
  if (i > j) {
    Monomial m = Monomial::var(n, i).times(Monomial::var(n, j));
    out.add_term(m, lambda[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    out += delta[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return out;
  }
  return -bracket_vars(j, i);
}

void PoissonPresentation::validate_structure() const {
  for (int i = 0; i < n; ++i) {
    if (!lambda[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)].is_zero())
      throw value_error("lambda has a nonzero diagonal entry");
    for (int j = 0; j < n; ++j) {
      if (lambda[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
          -lambda[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])
        throw value_error("lambda not skew-symmetric");
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Polynomial& image = delta[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (image.is_zero()) continue;
      if (j >= i) throw value_error("delta references later variable");
      if (image.is_laurent()) throw value_error("delta image has negative exponents");
      for (const auto& [m, c] : image.terms())
        for (int v = i; v < n; ++v)
          if (m[v] != 0) throw value_error("delta references later variable");
    }
  }
  for (int i = 0; i < n; ++i) {
    if (eta[static_cast<std::size_t>(i)] && eta[static_cast<std::size_t>(i)]->is_zero())
      throw value_error("eta is zero");
    const auto& table = higher[static_cast<std::size_t>(i)];
    if (!table) continue;
    if (table->var() != i) throw value_error("higher table bound to the wrong variable");
    if (table->bound() < 1) throw value_error("higher table bound must be positive");
    for (int j = 0; j < i; ++j) {
      if (table->image(0, j) != var(j))
        throw value_error("higher table D_0 is not the identity");
      if (table->bound() > 1 &&
          table->image(1, j) != delta[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
        throw value_error("higher table D_1 differs from delta");
      if (table->bound() == 1 &&
          !delta[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].is_zero())
        throw value_error("higher table D_1 differs from delta");
    }
  }
  if (nilpotence_cap < 1) throw value_error("nilpotence cap must be positive");
}

bool PoissonPresentation::operator==(const PoissonPresentation& o) const {
  return field == o.field && n == o.n && lambda == o.lambda && delta == o.delta;
}

}  // namespace pdda
