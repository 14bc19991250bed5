#include "pdda/verify.hpp"

#include <random>

namespace pdda {

Scalar binomial_scalar(const FieldSpec& f, int n, int k) {
  if (k < 0 || k > n) return Scalar::zero(f);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  if (f.p == 0) return Scalar::rational(mpq_class(b));
  return Scalar::residue(b, f.p);
}

AxiomReport verify_poisson_axioms(const PoissonPresentation& pres) {
  AxiomReport report;
  const int n = pres.n;

  // Jacobi on generator triples; the Jacobiator is a triderivation, so
  // triples suffice.
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        Polynomial xi = pres.var(i), xj = pres.var(j), xk = pres.var(k);
        Polynomial sum = bracket(pres, xi, bracket(pres, xj, xk)) +
                         bracket(pres, xj, bracket(pres, xk, xi)) +
                         bracket(pres, xk, bracket(pres, xi, xj));
        if (!sum.is_zero()) {
          report.failure = CheckFailure{"jacobi", {i, j, k}, sum};
          return report;
        }
      }
    }
  }

  // The two extension conditions per step i, on generator pairs below i:
  // alpha_i must respect the bracket, delta_i must respect it up to the
  // alpha-twist.
  for (int i = 1; i < n; ++i) {
    for (int a = 0; a < i; ++a) {
      for (int b = a + 1; b < i; ++b) {
        Polynomial xa = pres.var(a), xb = pres.var(b);
        Polynomial br = pres.bracket_vars(a, b);

        Polynomial alpha_res = pres.alpha_apply(i, br) -
                               bracket(pres, pres.alpha_apply(i, xa), xb) -
                               bracket(pres, xa, pres.alpha_apply(i, xb));
        if (!alpha_res.is_zero()) {
          report.failure = CheckFailure{"alpha-poisson", {i, a, b}, alpha_res};
          return report;
        }

        Polynomial da = pres.delta_apply(i, xa);
        Polynomial db = pres.delta_apply(i, xb);
        Polynomial delta_res = pres.delta_apply(i, br) - bracket(pres, da, xb) -
                               bracket(pres, xa, db) - pres.alpha_apply(i, xa) * db +
                               da * pres.alpha_apply(i, xb);
        if (!delta_res.is_zero()) {
          report.failure = CheckFailure{"delta-poisson", {i, a, b}, delta_res};
          return report;
        }
      }
    }
  }

  report.pass = true;
  return report;
}

Scalar infer_eta(const PoissonPresentation& pres, int i) {
  if (!pres.field.is_rational())
    throw value_error("eta inference requires characteristic zero; supply eta explicitly");
  if (pres.delta_is_zero(i)) throw value_error("delta is zero, eta is undetermined");

  std::optional<Scalar> eta;
  for (int j = 0; j < i; ++j) {
    Polynomial dj = pres.delta[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    // (delta alpha - alpha delta)(X_j) = lambda_ij delta(X_j) - alpha(delta(X_j)).
    Polynomial comm =
        dj.scaled(pres.lambda[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) -
        pres.alpha_apply(i, dj);
    if (dj.is_zero()) {
      if (!comm.is_zero()) throw value_error("no consistent eta exists");
      continue;
    }
    const auto& [lm, lc] = dj.leading_term(MonomialOrder::grevlex());
    Scalar candidate = comm.coeff(lm) / lc;
    if (dj.scaled(candidate) != comm) throw value_error("no consistent eta exists");
    if (eta && *eta != candidate) throw value_error("no consistent eta exists");
    eta = candidate;
  }
  if (!eta) throw value_error("delta is zero, eta is undetermined");
  if (eta->is_zero()) throw value_error("eta is zero");
  return *eta;
}

HigherDerivationTable build_higher_table(const PoissonPresentation& pres, int i) {
  if (pres.higher[static_cast<std::size_t>(i)]) return *pres.higher[static_cast<std::size_t>(i)];
  if (!pres.field.is_rational())
    throw value_error("explicit higher table required in positive characteristic");

  std::vector<std::vector<Polynomial>> entries;
  std::vector<Polynomial> row;
  for (int j = 0; j < i; ++j) row.push_back(pres.var(j));
  entries.push_back(row);

  if (pres.delta_is_zero(i)) return HigherDerivationTable(i, 1, std::move(entries));

  // D_k = delta^k / k! on generators, iterated until everything vanishes.
  for (int k = 1;; ++k) {
    if (k > pres.nilpotence_cap)
      throw resource_error("nilpotence cap exceeded while building the higher table");
    Scalar inv_k = Scalar::of(pres.field, 1, k);
    std::vector<Polynomial> next;
    bool all_zero = true;
    for (int j = 0; j < i; ++j) {
      Polynomial img =
          pres.delta_apply(i, entries.back()[static_cast<std::size_t>(j)]).scaled(inv_k);
      if (!img.is_zero()) all_zero = false;
      next.push_back(std::move(img));
    }
    if (all_zero) return HigherDerivationTable(i, k, std::move(entries));
    entries.push_back(std::move(next));
  }
}

namespace {

// Both sides of the higher bracket clause vanish past this index.
int bracket_clause_limit(const Polynomial& br, int bound) {
  long long deg = std::max<long long>(br.degree(), 2);
  long long hi = std::max<long long>(2LL * (bound - 1), deg * (bound - 1));
  return static_cast<int>(hi);
}

}  // namespace

ClassPReport verify_class_p(const PoissonPresentation& pres, int spot_rounds,
                            std::uint64_t seed) {
  ClassPReport report;
  try {
    pres.validate_structure();
  } catch (const value_error& e) {
    report.failure = CheckFailure{std::string("structure: ") + e.what(), {},
                                  Polynomial::zero(pres.field, pres.n)};
    return report;
  }

  const int n = pres.n;
  std::vector<std::optional<HigherDerivationTable>> tables(static_cast<std::size_t>(n));
  std::vector<std::optional<Scalar>> etas(static_cast<std::size_t>(n));

  for (int i = 1; i < n; ++i) {
    bool trivial = pres.delta_is_zero(i);
    if (trivial) {
      report.bounds[i] = 1;
      continue;
    }

    // eta: supplied wins, otherwise inferred (characteristic zero).
    try {
      if (pres.eta[static_cast<std::size_t>(i)]) {
        etas[static_cast<std::size_t>(i)] = *pres.eta[static_cast<std::size_t>(i)];
      } else {
        etas[static_cast<std::size_t>(i)] = infer_eta(pres, i);
      }
    } catch (const value_error& e) {
      report.failure = CheckFailure{std::string("eta: ") + e.what(), {i},
                                    Polynomial::zero(pres.field, pres.n)};
      return report;
    }

    try {
      tables[static_cast<std::size_t>(i)] = build_higher_table(pres, i);
    } catch (const resource_error& e) {
      report.failure = CheckFailure{std::string("locally-nilpotent: ") + e.what(), {i},
                                    Polynomial::zero(pres.field, pres.n)};
      return report;
    } catch (const value_error& e) {
      report.failure = CheckFailure{std::string("table: ") + e.what(), {i},
                                    Polynomial::zero(pres.field, pres.n)};
      return report;
    }
    const HigherDerivationTable& table = *tables[static_cast<std::size_t>(i)];
    const Scalar& eta = *etas[static_cast<std::size_t>(i)];
    const int bound = table.bound();
    report.bounds[i] = bound;
    report.eta.emplace(i, eta);

    // Iterativity on generators: D_k D_l = C(k+l, k) D_{k+l}.
    for (int k = 0; k < bound; ++k) {
      for (int l = 0; l < bound; ++l) {
        for (int j = 0; j < i; ++j) {
          Polynomial lhs = table.apply(k, table.image(l, j));
          Polynomial rhs = (k + l < bound ? table.image(k + l, j)
                                          : Polynomial::zero(pres.field, pres.n))
                               .scaled(binomial_scalar(pres.field, k + l, k));
          if (lhs != rhs) {
            report.failure = CheckFailure{"iterative", {i, j, k, l}, lhs - rhs};
            return report;
          }
        }
      }
    }

    // Higher bracket clause on generator pairs of the lower subalgebra.
    for (int a = 0; a < i; ++a) {
      for (int b = a + 1; b < i; ++b) {
        Polynomial xa = pres.var(a), xb = pres.var(b);
        Polynomial br = pres.bracket_vars(a, b);
        int m_hi = bracket_clause_limit(br, bound);
        for (int m = 0; m <= m_hi; ++m) {
          Polynomial lhs = table.apply(m, br);
          Polynomial rhs = Polynomial::zero(pres.field, pres.n);
          for (int l = 0; l <= m; ++l) {
            Polynomial dla = table.apply(l, xa);
            Polynomial dmb = table.apply(m - l, xb);
            rhs += bracket(pres, dla, dmb);
            if (l > 0) {
              Scalar lf = Scalar::of(pres.field, l);
              rhs += (pres.alpha_apply(i, table.apply(m - l, xa)) * table.apply(l, xb) -
                      dla * pres.alpha_apply(i, dmb))
                         .scaled(lf);
            }
          }
          if (lhs != rhs) {
            report.failure = CheckFailure{"skew-bracket", {i, a, b, m}, lhs - rhs};
            return report;
          }
        }
      }
    }

    // Eta clause on generators: D_k alpha = alpha D_k + k eta D_k.
    for (int j = 0; j < i; ++j) {
      for (int k = 0; k <= bound; ++k) {
        Polynomial img = table.image(k, j);
        Polynomial lhs =
            img.scaled(pres.lambda[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        Polynomial rhs =
            pres.alpha_apply(i, img) + img.scaled(eta * Scalar::of(pres.field, k));
        if (lhs != rhs) {
          report.failure = CheckFailure{"skew-alpha", {i, j, k}, lhs - rhs};
          return report;
        }
      }
    }
  }

  // Cross-step commutation: alpha_i D_{j,k} = D_{j,k} alpha_i + k lambda_ij D_{j,k}.
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < i; ++j) {
      if (pres.delta_is_zero(j)) continue;
      const HigherDerivationTable& tj = *tables[static_cast<std::size_t>(j)];
      for (int k = 0; k < tj.bound(); ++k) {
        for (int u = 0; u < j; ++u) {
          Polynomial img = tj.image(k, u);
          Polynomial res =
              pres.alpha_apply(i, img) -
              img.scaled(pres.lambda[static_cast<std::size_t>(i)][static_cast<std::size_t>(u)]) -
              img.scaled(pres.lambda[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                         Scalar::of(pres.field, k));
          if (!res.is_zero()) {
            report.failure = CheckFailure{"hypothesis-4", {i, j, k, u}, res};
            return report;
          }
        }
      }
    }
  }

  // Optional randomized defense in depth: the bracket and eta clauses on
  // random low-degree pairs rather than bare generators.
  if (spot_rounds > 0) {
    std::mt19937_64 rng(seed);
    for (int round = 0; round < spot_rounds; ++round) {
      for (int i = 1; i < n; ++i) {
        if (pres.delta_is_zero(i)) continue;
        const HigherDerivationTable& table = *tables[static_cast<std::size_t>(i)];
        const Scalar& eta = *etas[static_cast<std::size_t>(i)];
        auto random_poly = [&]() {
          Polynomial p = Polynomial::zero(pres.field, pres.n);
          std::uniform_int_distribution<int> nterms(1, 3), coef(-4, 4), pick(0, i - 1);
          for (int t = nterms(rng); t > 0; --t) {
            Monomial m = Monomial::unit(pres.n);
            std::uniform_int_distribution<int> degd(0, 2);
            int d = degd(rng);
            for (int q = 0; q < d; ++q) {
              int v = pick(rng);
              m.set(v, m[v] + 1);
            }
            p.add_term(m, Scalar::of(pres.field, coef(rng)));
          }
          return p;
        };
        Polynomial a = random_poly(), b = random_poly();
        int m_hi = bracket_clause_limit(bracket(pres, a, b), table.bound()) +
                   2 * (table.bound() - 1);
        for (int m = 0; m <= m_hi; ++m) {
          Polynomial lhs = table.apply(m, bracket(pres, a, b));
          Polynomial rhs = Polynomial::zero(pres.field, pres.n);
          for (int l = 0; l <= m; ++l) {
            Polynomial dla = table.apply(l, a);
            Polynomial dmb = table.apply(m - l, b);
            rhs += bracket(pres, dla, dmb);
            if (l > 0) {
              Scalar lf = Scalar::of(pres.field, l);
              rhs += (pres.alpha_apply(i, table.apply(m - l, a)) * table.apply(l, b) -
                      dla * pres.alpha_apply(i, dmb))
                         .scaled(lf);
            }
          }
          if (lhs != rhs) {
            report.failure = CheckFailure{"spot-skew-bracket", {i, m}, lhs - rhs};
            return report;
          }
          Polynomial alhs = table.apply(m, pres.alpha_apply(i, a));
          Polynomial arhs = pres.alpha_apply(i, table.apply(m, a)) +
                            table.apply(m, a).scaled(eta * Scalar::of(pres.field, m));
          if (alhs != arhs) {
            report.failure = CheckFailure{"spot-skew-alpha", {i, m}, alhs - arhs};
            return report;
          }
        }
      }
    }
  }

  report.pass = true;
  return report;
}

}  // namespace pdda
