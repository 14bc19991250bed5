#pragma once

#include <set>

#include "pdda/closure.hpp"
#include "pdda/dda.hpp"

namespace pdda {

// A Poisson ideal put forward as prime. Primality is asserted by the caller,
// never tested; bracket-stability is verified at construction.
class PrimeCandidate {
 public:
  static PrimeCandidate make(IdealPresentation I, bool assert_prime,
                             const GroebnerOptions& opt = {});

  const IdealPresentation& ideal() const { return ideal_; }
  bool prime_asserted() const { return prime_asserted_; }
  bool poisson_verified() const { return poisson_verified_; }

 private:
  PrimeCandidate(IdealPresentation I, bool prime, bool poisson)
      : ideal_(std::move(I)), prime_asserted_(prime), poisson_verified_(poisson) {}

  IdealPresentation ideal_;
  bool prime_asserted_;
  bool poisson_verified_;
};

struct PhiStepResult {
  PrimeCandidate image;       // ideal of the step's output presentation
  int branch = 0;             // 0 localization, 1 quotient
  std::vector<Polynomial> step_closure;  // generators of <U_step>_P when branch = 1
};

// One embedding step along a recorded change of variables: localization
// contraction when the step variable avoids the ideal, quotient preimage
// along the closure of the step variable otherwise.
PhiStepResult phi_step(const PrimeCandidate& P, const DdaStepRecord& rec,
                       const GroebnerOptions& opt = {});

struct EmbeddingResult {
  std::vector<Polynomial> generators;          // reduced basis in the final ring
  std::vector<std::pair<int, int>> branch_word;  // (step, epsilon) in execution order
  std::set<int> diagram;                       // 0-based generator indices in the ideal
};

EmbeddingResult phi(const PrimeCandidate& P, const DdaTrace& trace,
                    const GroebnerOptions& opt = {});

std::set<int> stratum_of(const PrimeCandidate& P, const DdaTrace& trace,
                         const GroebnerOptions& opt = {});

struct MembershipCertificate {
  bool member = false;
  int failing_step = -1;          // 0-based step variable when not a member
  std::optional<Polynomial> witness;  // closure generator missing from the ideal
  std::vector<Polynomial> preimage;   // reduced basis in the original ring when member
};

// Walks the algorithm backwards, inverting each step; true exactly when at
// every step the step variable avoids the ideal or the kernel ideal is
// contained in it.
MembershipCertificate im_phi_membership(const PrimeCandidate& Q, const DdaTrace& trace,
                                        const GroebnerOptions& opt = {});

}  // namespace pdda
