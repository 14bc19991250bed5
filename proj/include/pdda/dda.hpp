#pragma once

#include <memory>
#include <mutex>

#include "pdda/verify.hpp"

namespace pdda {

// One step of the deleting derivations algorithm: the presentation before and
// after removing delta at `step`, and the change of variables expressing the
// new generators as Laurent polynomials in the old ones,
//   V_i = sum_k eta^{-k} D_k(U_i) U_step^{-k}   (i < step),  V_i = U_i otherwise.
struct DdaStepRecord {
  int step;  // 0-based index of the variable whose derivation is removed
  PoissonPresentation input;
  PoissonPresentation output;
  std::vector<Polynomial> change;
  int bound;
  Scalar eta;

  DdaStepRecord(int step_index, PoissonPresentation in, PoissonPresentation out)
      : step(step_index),
        input(std::move(in)),
        output(std::move(out)),
        bound(1),
        eta(Scalar::one(input.field)) {}
};

// The inverse change of variables, U_i as a Laurent polynomial in the V's:
// the same series with eta replaced by -eta (iterativity makes the two
// substitutions mutually inverse).
std::vector<Polynomial> inverse_change(const DdaStepRecord& rec);

// A full run: step records in execution order (step = n-1 down to 1), the
// final log-canonical presentation, and the composed expressions of the
// final generators inside the fraction field of the original algebra.
class DdaTrace {
 public:
  DdaTrace(PoissonPresentation original, std::vector<DdaStepRecord> steps);

  const PoissonPresentation& original() const { return original_; }
  const std::vector<DdaStepRecord>& steps() const { return steps_; }
  const PoissonPresentation& final_presentation() const { return final_; }
  const std::vector<std::vector<Scalar>>& lambda_bar() const { return final_.lambda; }

  // Composed expression of the i-th final generator in the original
  // variables; built on first request and cached.
  const RationalExpression& t_expression(int i) const;

 private:
  PoissonPresentation original_;
  PoissonPresentation final_;
  std::vector<DdaStepRecord> steps_;

  struct Cache {
    std::once_flag once;
    std::vector<RationalExpression> t;
  };
  std::shared_ptr<Cache> cache_;
};

// Performs the step at `step` (0-based). Requires every derivation above
// `step` to be zero already; eta is taken from the presentation or inferred.
DdaStepRecord dda_step(const PoissonPresentation& pres, int step);

// Runs the full algorithm; the presentation must pass verify_class_p.
DdaTrace dda_run(const PoissonPresentation& pres);

struct AffineBracketReport {
  bool pass = false;
  int a = -1, b = -1;  // first failing pair, 0-based
  std::optional<RationalExpression> residual;
  int pairs_checked = 0;
};

// End-to-end certificate: {T_a, T_b} = lambda_ab T_a T_b inside Frac A for
// every pair, with the bracket taken in the original presentation.
AffineBracketReport verify_affine_bracket(const DdaTrace& trace);

const RationalExpression& express_T_in_X(const DdaTrace& trace, int i);

}  // namespace pdda
