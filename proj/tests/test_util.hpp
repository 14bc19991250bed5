#pragma once

#include <random>
#include <string>
#include <vector>

#include "pdda/embedding.hpp"
#include "pdda/linalg.hpp"
#include "pdda/poly_io.hpp"

namespace pdda::testutil {

inline Polynomial P(const std::string& text, int nvars, FieldSpec field = rationals()) {
  return parse_polynomial(text, field, nvars, true);
}

// Four generators, the last carrying the one nontrivial derivation
// (X1 + X2) d/dX3; eta works out to 1 and the final expressions stay small.
inline PoissonPresentation ext4() {
  PoissonPresentation pres(rationals(), 4);
  Scalar one = Scalar::one(rationals());
  pres.set_lambda(2, 0, one);   // {X3, X1} = X3 X1
  pres.set_lambda(2, 1, one);   // {X3, X2} = X3 X2
  pres.set_lambda(3, 0, -one);  // {X4, X1} = -X4 X1
  pres.set_lambda(3, 1, -one);  // {X4, X2} = -X4 X2
  pres.set_delta(3, 2, P("X1 + X2", 4));
  return pres;
}

// Three generators with two derivation steps: {X2,X1} = -X1 X2 + 1,
// {X3,X1} = X1 X3 + X2^2, {X3,X2} = -X2 X3.
inline PoissonPresentation tower3() {
  PoissonPresentation pres(rationals(), 3);
  Scalar one = Scalar::one(rationals());
  pres.set_lambda(1, 0, -one);
  pres.set_lambda(2, 0, one);
  pres.set_lambda(2, 1, -one);
  pres.set_delta(1, 0, P("1", 3));
  pres.set_delta(2, 0, P("X2^2", 3));
  return pres;
}

// Log-canonical plane {X1, X2} = X1 X2.
inline PoissonPresentation plane() {
  PoissonPresentation pres(rationals(), 2);
  pres.set_lambda(0, 1, Scalar::one(rationals()));
  return pres;
}

inline Polynomial random_polynomial(std::mt19937_64& rng, FieldSpec field, int nvars,
                                    int max_terms, int max_deg, int coeff_span = 6) {
  std::uniform_int_distribution<int> nterms(1, max_terms), deg(0, max_deg),
      coef(-coeff_span, coeff_span), pick(0, nvars - 1);
  Polynomial p = Polynomial::zero(field, nvars);
  int terms = nterms(rng);
  for (int t = 0; t < terms; ++t) {
    Monomial m = Monomial::unit(nvars);
    int d = deg(rng);
    for (int q = 0; q < d; ++q) {
      int v = pick(rng);
      m.set(v, m[v] + 1);
    }
    p.add_term(m, Scalar::of(field, coef(rng)));
  }
  return p;
}

// Random log-canonical presentation with integer lambda entries.
inline PoissonPresentation random_log_canonical(std::mt19937_64& rng, int nvars,
                                                FieldSpec field = rationals()) {
  PoissonPresentation pres(field, nvars);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int i = 0; i < nvars; ++i)
    for (int j = i + 1; j < nvars; ++j) pres.set_lambda(i, j, Scalar::of(field, entry(rng)));
  return pres;
}

// Random admissible tower: a log-canonical base with one monomial derivation
// on the last variable, lambda entries adjusted so both extension conditions
// and the eta commutator hold by construction.
inline PoissonPresentation random_class_p(std::mt19937_64& rng, int nvars) {
  FieldSpec field = rationals();
  while (true) {
    PoissonPresentation pres(field, nvars);
    std::uniform_int_distribution<int> entry(-2, 2), pickk(0, nvars - 2), coefd(1, 3),
        degd(0, 2);
    int last = nvars - 1;
    int k = pickk(rng);

    // Monomial image mu = c * prod X_v^{e_v} over v != k, v < last.
    Monomial mu(nvars);
    for (int v = 0; v < last; ++v) {
      if (v == k) continue;
      mu.set(v, degd(rng));
    }
    Scalar c = Scalar::of(field, coefd(rng));

    // Free lambda entries among the base variables except row/column k.
    for (int i = 0; i < last; ++i)
      for (int j = i + 1; j < last; ++j)
        if (i != k && j != k) pres.set_lambda(i, j, Scalar::of(field, entry(rng)));
    for (int b = 0; b < last; ++b)
      if (b != k) pres.set_lambda(last, b, Scalar::of(field, entry(rng)));

    // Derivation condition: lambda_kb = sum_v e_v lambda_vb - lambda_{last,b}.
    for (int b = 0; b < last; ++b) {
      if (b == k) continue;
      Scalar sum = Scalar::zero(field);
      for (int v = 0; v < last; ++v) {
        if (v == k || mu[v] == 0) continue;
        sum += Scalar::of(field, mu[v]) * pres.lambda[static_cast<std::size_t>(v)]
                                                     [static_cast<std::size_t>(b)];
      }
      pres.set_lambda(k, b, sum - pres.lambda[static_cast<std::size_t>(last)]
                                             [static_cast<std::size_t>(b)]);
    }
    pres.set_lambda(last, k, Scalar::of(field, entry(rng)));

    // eta = lambda_{last,k} - sum_v e_v lambda_{last,v}; retry when zero.
    Scalar eta = pres.lambda[static_cast<std::size_t>(last)][static_cast<std::size_t>(k)];
    for (int v = 0; v < last; ++v) {
      if (v == k || mu[v] == 0) continue;
      eta -= Scalar::of(field, mu[v]) *
             pres.lambda[static_cast<std::size_t>(last)][static_cast<std::size_t>(v)];
    }
    if (eta.is_zero()) continue;

    pres.set_delta(last, k, Polynomial::term(field, nvars, c, mu));
    return pres;
  }
}

inline IdealPresentation ideal_of(const PoissonPresentation& pres,
                                  const std::vector<std::string>& gens) {
  std::vector<Polynomial> list;
  for (const std::string& g : gens) list.push_back(P(g, pres.n, pres.field));
  return IdealPresentation::in(pres, std::move(list));
}

inline void collect_monomials(int nvars, long long max_deg, int v, Monomial current,
                              std::vector<Monomial>& out) {
  if (v == nvars) {
    out.push_back(current);
    return;
  }
  for (long long e = 0; e + current.degree() <= max_deg; ++e) {
    Monomial next = current;
    next.set(v, static_cast<std::int32_t>(e));
    collect_monomials(nvars, max_deg, v + 1, next, out);
  }
}

inline std::vector<Monomial> monomials_up_to(int nvars, long long max_deg) {
  std::vector<Monomial> out;
  collect_monomials(nvars, max_deg, 0, Monomial::unit(nvars), out);
  return out;
}

// Degree-bounded membership as exact linear algebra: f is a combination
// sum h_i g_i with deg(h_i g_i) <= bound iff the column system is solvable.
inline bool linear_membership_oracle(const Polynomial& f, const std::vector<Polynomial>& gens,
                                     long long bound) {
  std::vector<Monomial> rows = monomials_up_to(f.nvars(), bound);
  auto row_of = [&rows](const Monomial& m) {
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (rows[r] == m) return r;
    throw value_error("monomial outside the bounded basis");
  };

  ScalarMatrix columns;  // built transposed, re-transposed for the rank runs
  for (const Polynomial& g : gens) {
    if (g.is_zero()) continue;
    for (const Monomial& m : monomials_up_to(f.nvars(), bound - g.degree())) {
      Polynomial shifted = g.times_term(Scalar::one(f.field()), m);
      std::vector<Scalar> column(rows.size(), Scalar::zero(f.field()));
      for (const auto& [mm, cc] : shifted.terms()) column[row_of(mm)] = cc;
      columns.push_back(std::move(column));
    }
  }
  std::vector<Scalar> rhs(rows.size(), Scalar::zero(f.field()));
  for (const auto& [mm, cc] : f.terms()) rhs[row_of(mm)] = cc;

  int rank_a = columns.empty() ? 0 : rank_row_reduction(transpose(columns));
  columns.push_back(rhs);
  int rank_ab = rank_row_reduction(transpose(columns));
  return rank_a == rank_ab;
}

}  // namespace pdda::testutil
