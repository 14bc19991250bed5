#include <doctest.h>

#include "pdda/qmatrix.hpp"
#include "test_util.hpp"

using namespace pdda;
using testutil::P;

namespace {

PrimeCandidate prime_in(const PoissonPresentation& pres, const std::vector<std::string>& gens) {
  return PrimeCandidate::make(testutil::ideal_of(pres, gens), true);
}

PrimeCandidate prime_in_final(const DdaTrace& trace, const std::vector<std::string>& gens) {
  const PoissonPresentation& final_pres = trace.final_presentation();
  std::vector<Polynomial> list;
  for (const std::string& g : gens) list.push_back(P(g, final_pres.n, final_pres.field));
  return PrimeCandidate::make(
      IdealPresentation(std::make_shared<PoissonPresentation>(final_pres), std::move(list)),
      true);
}

}  // namespace

TEST_CASE("prime candidates are screened at construction") {
  PoissonPresentation e4 = testutil::ext4();
  CHECK_THROWS_AS(prime_in(e4, {"1"}), value_error);
  CHECK_THROWS_AS(prime_in(e4, {"X1*X2 - 1", "X1^2"}), value_error);  // unit ideal

  // <X4> alone is not bracket-stable in ext4 ({X4, X3} needs X1 + X2).
  PrimeCandidate unstable = prime_in(e4, {"X4"});
  CHECK_FALSE(unstable.poisson_verified());
  DdaTrace trace = dda_run(e4);
  CHECK_THROWS_AS(phi(unstable, trace), value_error);

  PrimeCandidate stable = prime_in(e4, {"X4", "X1 + X2"});
  CHECK(stable.poisson_verified());
}

TEST_CASE("embedding of the closure prime lands in the quotient branch") {
  PoissonPresentation e4 = testutil::ext4();
  DdaTrace trace = dda_run(e4);
  EmbeddingResult result = phi(prime_in(e4, {"X4", "X1 + X2"}), trace);

  REQUIRE(result.generators.size() == 2);
  CHECK(result.generators[0] == P("X4", 4));
  CHECK(result.generators[1] == P("X1 + X2", 4));
  CHECK(result.diagram == std::set<int>{3});
  REQUIRE(result.branch_word.size() == 3);
  CHECK(result.branch_word[0] == std::pair<int, int>{3, 1});
  CHECK(result.branch_word[1] == std::pair<int, int>{2, 0});
  CHECK(result.branch_word[2] == std::pair<int, int>{1, 0});
}

TEST_CASE("embedding of the zero ideal is the zero ideal") {
  PoissonPresentation e4 = testutil::ext4();
  DdaTrace trace = dda_run(e4);
  EmbeddingResult result = phi(prime_in(e4, {}), trace);
  CHECK(result.generators.empty());
  CHECK(result.diagram.empty());
  for (const auto& [step, eps] : result.branch_word) CHECK(eps == 0);
}

TEST_CASE("embedding through the localization branch") {
  PoissonPresentation e4 = testutil::ext4();
  DdaTrace trace = dda_run(e4);
  EmbeddingResult result = phi(prime_in(e4, {"X1"}), trace);
  REQUIRE(result.generators.size() == 1);
  CHECK(result.generators[0] == P("X1", 4));
  CHECK(result.diagram == std::set<int>{0});
  CHECK(result.branch_word[0] == std::pair<int, int>{3, 0});
}

TEST_CASE("embedding on a Poisson affine plane is the identity") {
  PoissonPresentation plane = testutil::plane();
  DdaTrace trace = dda_run(plane);
  EmbeddingResult result = phi(prime_in(plane, {"X1"}), trace);
  REQUIRE(result.generators.size() == 1);
  CHECK(result.generators[0] == P("X1", 2));
  CHECK(result.diagram == std::set<int>{0});
  CHECK(stratum_of(prime_in(plane, {"X2"}), trace) == std::set<int>{1});
}

TEST_CASE("stratum assignment on the fixtures") {
  PoissonPresentation e4 = testutil::ext4();
  DdaTrace trace = dda_run(e4);
  CHECK(stratum_of(prime_in(e4, {"X4", "X1 + X2"}), trace) == std::set<int>{3});
  CHECK(stratum_of(prime_in(e4, {}), trace).empty());
  CHECK(stratum_of(prime_in(e4, {"X1"}), trace) == std::set<int>{0});
}

TEST_CASE("image membership criterion") {
  PoissonPresentation e4 = testutil::ext4();
  DdaTrace trace = dda_run(e4);

  MembershipCertificate outside = im_phi_membership(prime_in_final(trace, {"T4"}), trace);
  REQUIRE_FALSE(outside.member);
  CHECK(outside.failing_step == 3);
  REQUIRE(outside.witness.has_value());
  CHECK(*outside.witness == P("X1 + X2", 4));

  MembershipCertificate inside =
      im_phi_membership(prime_in_final(trace, {"T4", "T1 + T2"}), trace);
  REQUIRE(inside.member);
  REQUIRE(inside.preimage.size() == 2);
  CHECK(inside.preimage[0] == P("X4", 4));
  CHECK(inside.preimage[1] == P("X1 + X2", 4));

  MembershipCertificate zero = im_phi_membership(prime_in_final(trace, {}), trace);
  CHECK(zero.member);
  CHECK(zero.preimage.empty());
}

TEST_CASE("round trip through the embedding and back") {
  PoissonPresentation e4 = testutil::ext4();
  DdaTrace trace = dda_run(e4);
  std::vector<std::vector<std::string>> primes = {
      {"X4", "X1 + X2"}, {"X1"}, {}, {"X1", "X2"}, {"X1 + X2"}};
  for (const auto& gens : primes) {
    PrimeCandidate P0 = prime_in(e4, gens);
    EmbeddingResult image = phi(P0, trace);
    PrimeCandidate Q = PrimeCandidate::make(
        IdealPresentation(std::make_shared<PoissonPresentation>(trace.final_presentation()),
                          image.generators),
        true);
    MembershipCertificate cert = im_phi_membership(Q, trace);
    REQUIRE(cert.member);
    CHECK(cert.preimage == P0.ideal().basis().elements());
  }
}

TEST_CASE("variable membership transports along each step") {
  PoissonPresentation e4 = testutil::ext4();
  DdaTrace trace = dda_run(e4);
  std::vector<std::vector<std::string>> primes = {{"X4", "X1 + X2"}, {"X1"}, {"X1", "X2"}, {}};
  for (const auto& gens : primes) {
    PrimeCandidate current = prime_in(e4, gens);
    for (const DdaStepRecord& rec : trace.steps()) {
      PhiStepResult step = phi_step(current, rec);
      for (int l = rec.step; l < e4.n; ++l) {
        bool before = current.ideal().contains(rec.input.var(l));
        bool after = step.image.ideal().contains(rec.output.var(l));
        REQUIRE(before == after);
      }
      current = step.image;
    }
  }
}

TEST_CASE("each embedding step preserves bracket stability") {
  PoissonPresentation e4 = testutil::ext4();
  DdaTrace trace = dda_run(e4);
  PrimeCandidate current = prime_in(e4, {"X4", "X1 + X2"});
  for (const DdaStepRecord& rec : trace.steps()) {
    PhiStepResult step = phi_step(current, rec);
    CHECK(step.image.poisson_verified());
    current = step.image;
  }
}

TEST_CASE("quotient branch output contains the step closure") {
  PoissonPresentation e4 = testutil::ext4();
  DdaTrace trace = dda_run(e4);
  PrimeCandidate start = prime_in(e4, {"X4", "X1 + X2"});
  PhiStepResult step = phi_step(start, trace.steps()[0]);
  CHECK(step.branch == 1);
  REQUIRE_FALSE(step.step_closure.empty());
  for (const Polynomial& g : step.step_closure) CHECK(step.image.ideal().contains(g));
}

TEST_CASE("ambient mismatches are rejected") {
  PoissonPresentation e4 = testutil::ext4();
  PoissonPresentation t3 = testutil::tower3();
  DdaTrace trace = dda_run(e4);
  CHECK_THROWS_AS(phi(prime_in(t3, {"X1"}), trace), value_error);
  CHECK_THROWS_AS(im_phi_membership(prime_in(t3, {"X1"}), trace), value_error);
}

TEST_CASE("embedding on the quantum 2x2 fixture") {
  PoissonPresentation qm = matrix_poisson(2, 2);
  DdaTrace trace = dda_run(qm);

  // X1 X4 - X2 X3 is Poisson central, so it generates a bracket-stable
  // prime. In the localized step it rewrites to T11 T22 with T22 invertible,
  // so the image is the principal ideal on T11.
  PrimeCandidate det = prime_in(qm, {"X1*X4 - X2*X3"});
  REQUIRE(det.poisson_verified());
  EmbeddingResult result = phi(det, trace);
  REQUIRE(result.generators.size() == 1);
  CHECK(result.generators[0] == P("X1", 4));
  CHECK(result.diagram == std::set<int>{0});

  // And back: the preimage of <T11> reassembles the determinant (monic under
  // grevlex, where X2 X3 leads).
  PrimeCandidate Q = prime_in_final(trace, {"T1"});
  MembershipCertificate cert = im_phi_membership(Q, trace);
  REQUIRE(cert.member);
  REQUIRE(cert.preimage.size() == 1);
  CHECK(cert.preimage[0] == P("X2*X3 - X1*X4", 4));
}

TEST_CASE("round trips on random admissible towers") {
  // Variable-generated ideals are genuinely prime; keep the bracket-stable
  // ones plus the zero ideal and walk them through and back.
  std::mt19937_64 rng(919);
  int done = 0;
  for (int round = 0; round < 8; ++round) {
    PoissonPresentation pres = testutil::random_class_p(rng, 3);
    DdaTrace trace = dda_run(pres);
    std::vector<IdealPresentation> primes = {IdealPresentation::in(pres, {})};
    for (int v = 0; v < pres.n; ++v)
      primes.push_back(IdealPresentation::in(pres, {pres.var(v)}));
    for (IdealPresentation& seed : primes) {
      PrimeCandidate candidate = PrimeCandidate::make(seed, true);
      if (!candidate.poisson_verified()) continue;
      EmbeddingResult image = phi(candidate, trace);
      PrimeCandidate Q = PrimeCandidate::make(
          IdealPresentation(std::make_shared<PoissonPresentation>(trace.final_presentation()),
                            image.generators),
          true);
      MembershipCertificate cert = im_phi_membership(Q, trace);
      REQUIRE(cert.member);
      CHECK(cert.preimage == candidate.ideal().basis().elements());
      ++done;
    }
  }
  CHECK(done >= 16);
}
