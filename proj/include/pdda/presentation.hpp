#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pdda/polynomial.hpp"

namespace pdda {

// Explicit higher-derivation table for one extension variable: images
// D_k(X_j) for j < var and 0 <= k < bound, with D_k = 0 for k >= bound.
// D_0 is the identity on generators and D_1 the attached derivation.
class HigherDerivationTable {
 public:
  HigherDerivationTable(int var, int bound, std::vector<std::vector<Polynomial>> entries)
      : var_(var), bound_(bound), entries_(std::move(entries)) {}

  int var() const { return var_; }
  int bound() const { return bound_; }

  // D_k(X_j); zero beyond the truncation bound.
  Polynomial image(int k, int j) const;

  // Extends D_k to an arbitrary polynomial in X_1..X_{var-1} through the
  // higher Leibniz rule D_k(ab) = sum D_a(a) D_{k-a}(b).
  Polynomial apply(int k, const Polynomial& f) const;

 private:
  int var_;
  int bound_;
  std::vector<std::vector<Polynomial>> entries_;  // entries_[k][j]
};

// An iterated Poisson-Ore tower: skew-symmetric matrix (lambda_ij) giving
// alpha_i(X_j) = lambda_ij X_j, derivation images delta_i(X_j), optional eta
// scalars and explicit higher tables. All indices are 0-based internally.
class PoissonPresentation {
 public:
  PoissonPresentation(FieldSpec field, int n);

  FieldSpec field;
  int n;
  std::vector<std::string> names;
  std::vector<std::vector<Scalar>> lambda;            // n x n
  std::vector<std::vector<Polynomial>> delta;         // delta[i][j] = delta_i(X_j)
  std::vector<std::optional<Scalar>> eta;             // supplied eta_i
  std::vector<std::optional<HigherDerivationTable>> higher;
  int nilpotence_cap = 64;

  // Sets lambda_ij = s and lambda_ji = -s.
  void set_lambda(int i, int j, const Scalar& s);
  void set_delta(int i, int j, Polynomial image);

  Polynomial var(int v) const { return Polynomial::variable(field, n, v); }
  bool delta_is_zero(int i) const;

  // alpha_i extended as a derivation: sum_v lambda_iv X_v d/dX_v.
  Polynomial alpha_apply(int i, const Polynomial& f) const;
  // delta_i extended as a derivation from its generator images.
  Polynomial delta_apply(int i, const Polynomial& f) const;

  // {X_i, X_j} from the table (works for any i, j).
  Polynomial bracket_vars(int i, int j) const;

  // Structural invariants: skew-symmetry with zero diagonal, triangular
  // delta images, nonzero supplied etas, tables matching delta at k = 1.
  void validate_structure() const;

  bool operator==(const PoissonPresentation& o) const;
};

}  // namespace pdda
