#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "pdda/bracket.hpp"

namespace pdda {

// A failed check: which clause, the witnessing indices (0-based), and the
// nonzero residual polynomial reproducing the violation.
struct CheckFailure {
  std::string clause;
  std::vector<int> indices;
  Polynomial residual;
};

struct AxiomReport {
  bool pass = false;
  std::optional<CheckFailure> failure;
};

// Jacobi identity on all generator triples, then the two Poisson-Ore
// compatibility conditions for every (alpha_i, delta_i) on generator pairs
// of the subalgebra below i. Reports the first violation.
AxiomReport verify_poisson_axioms(const PoissonPresentation& pres);

// The unique scalar with (delta_i alpha_i - alpha_i delta_i)(X_j) =
// eta * delta_i(X_j) for all j < i. Characteristic zero only; throws
// value_error when delta_i = 0, when no consistent scalar exists, or when
// the consistent scalar is zero.
Scalar infer_eta(const PoissonPresentation& pres, int i);

// Characteristic zero: iterates delta_i^k / k! on generators until zero,
// throwing resource_error past the nilpotence cap. Otherwise returns the
// supplied explicit table.
HigherDerivationTable build_higher_table(const PoissonPresentation& pres, int i);

struct ClassPReport {
  bool pass = false;
  std::optional<CheckFailure> failure;
  std::map<int, Scalar> eta;     // inferred or supplied, for i with delta_i != 0
  std::map<int, int> bounds;     // truncation bound N_i per extension step
};

// Full class membership check: eta existence, iterativity, local nilpotence,
// the skew bracket/eta compatibility clauses on generators, and the
// cross-step commutation hypothesis. `spot_rounds` adds seeded random
// degree-2 pair checks of the bracket clause as defense in depth.
ClassPReport verify_class_p(const PoissonPresentation& pres, int spot_rounds = 0,
                            std::uint64_t seed = 0);

// Binomial coefficient as a field scalar.
Scalar binomial_scalar(const FieldSpec& f, int n, int k);

}  // namespace pdda
