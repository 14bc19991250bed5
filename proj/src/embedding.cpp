#include "pdda/embedding.hpp"

namespace pdda {

namespace {

// Extended-ring layout for the contraction computations: the variables to be
// eliminated sit in front ([0, n] = source block plus the inverse t), the
// target copy behind ([n + 1, 2n + 1)).
struct ContractionRing {
  int n;
  int total() const { return 2 * n + 1; }
  int src(int v) const { return v; }
  int t() const { return n; }
  int dst(int v) const { return n + 1 + v; }
};

// change[i] as a polynomial in the extended ring with U_step^{-k} rewritten
// as t^k.
Polynomial change_with_inverse(const ContractionRing& ring, const Polynomial& change, int step,
                               const FieldSpec& field) {
  Polynomial out(field, ring.total());
  for (const auto& [m, c] : change.terms()) {
    Monomial mm(ring.total());
    for (int v = 0; v < ring.n; ++v) {
      if (v == step) continue;
      if (m[v] != 0) mm.set(ring.src(v), m[v]);
    }
    if (m[step] >= 0)
      mm.set(ring.src(step), m[step]);
    else
      mm.set(ring.t(), -m[step]);
    out.add_term(mm, c);
  }
  return out;
}

// Contraction of <gens> S^{-1} to the subring generated by the images:
// eliminate the source block and t from <gens, t X_step - 1, dst_i - image_i>.
std::vector<Polynomial> localize_and_contract(const std::vector<Polynomial>& gens, int step,
                                              const std::vector<Polynomial>& images,
                                              const FieldSpec& field, int n,
                                              const GroebnerOptions& opt) {
  ContractionRing ring{n};
  std::vector<int> into_src(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) into_src[static_cast<std::size_t>(v)] = ring.src(v);

  std::vector<Polynomial> ext;
  for (const Polynomial& g : gens) ext.push_back(g.remap(ring.total(), into_src));

  Polynomial rel_t =
      Polynomial::term(field, ring.total(), Scalar::one(field),
                       Monomial::var(ring.total(), ring.t()).times(
                           Monomial::var(ring.total(), ring.src(step)))) -
      Polynomial::one(field, ring.total());
  ext.push_back(std::move(rel_t));

  for (int i = 0; i < n; ++i) {
    Polynomial rel = Polynomial::variable(field, ring.total(), ring.dst(i)) -
                     change_with_inverse(ring, images[static_cast<std::size_t>(i)], step, field);
    ext.push_back(std::move(rel));
  }

  GroebnerBasis gb = groebner(ext, MonomialOrder::block_elim(n + 1), opt);

  std::vector<int> back(static_cast<std::size_t>(ring.total()), -1);
  for (int v = 0; v < n; ++v) back[static_cast<std::size_t>(ring.dst(v))] = v;
  std::vector<Polynomial> out;
  for (const Polynomial& g : gb.elements()) {
    bool kept = true;
    for (const auto& [m, c] : g.terms())
      for (int v = 0; v <= n && kept; ++v)
        if (m[v] != 0) kept = false;
    if (kept) out.push_back(g.remap(n, back));
  }
  return out;
}

}  // namespace

PrimeCandidate PrimeCandidate::make(IdealPresentation I, bool assert_prime,
                                    const GroebnerOptions& opt) {
  if (I.basis(MonomialOrder::grevlex(), opt).is_unit_ideal())
    throw value_error("the unit ideal is not prime");
  bool stable = bracket_stable(I, opt);
  return PrimeCandidate(std::move(I), assert_prime, stable);
}

namespace {

void require_embeddable(const PrimeCandidate& P) {
  if (!P.prime_asserted()) throw value_error("primality must be asserted for embedding steps");
  if (!P.poisson_verified()) throw value_error("ideal is not bracket-stable");
}

}  // namespace

PhiStepResult phi_step(const PrimeCandidate& P, const DdaStepRecord& rec,
                       const GroebnerOptions& opt) {
  require_embeddable(P);
  const PoissonPresentation& cin = rec.input;
  if (!(P.ideal().ambient() == cin))
    throw value_error("prime ideal ambient does not match the step input");

  Polynomial step_var = cin.var(rec.step);
  auto out_ambient = std::make_shared<PoissonPresentation>(rec.output);

  if (!P.ideal().contains(step_var, opt)) {
    std::vector<Polynomial> sat = saturate(P.ideal().generators(), step_var, opt);
    std::vector<Polynomial> contracted =
        localize_and_contract(sat, rec.step, rec.change, cin.field, cin.n, opt);
    IdealPresentation image(out_ambient, std::move(contracted));
    return PhiStepResult{PrimeCandidate::make(std::move(image), true, opt), 0, {}};
  }

  IdealPresentation step_ideal(P.ideal().ambient_ptr(), {step_var});
  IdealPresentation closure = poisson_closure(step_ideal, opt);
  std::vector<Polynomial> gens = P.ideal().generators();
  for (const Polynomial& g : closure.generators()) gens.push_back(g);
  IdealPresentation image(out_ambient, std::move(gens));
  return PhiStepResult{PrimeCandidate::make(std::move(image), true, opt), 1,
                       closure.generators()};
}

EmbeddingResult phi(const PrimeCandidate& P, const DdaTrace& trace, const GroebnerOptions& opt) {
  require_embeddable(P);
  if (!(P.ideal().ambient() == trace.original()))
    throw value_error("prime ideal does not live in the trace's original algebra");

  EmbeddingResult result;
  PrimeCandidate current = P;
  for (const DdaStepRecord& rec : trace.steps()) {
    PhiStepResult step = phi_step(current, rec, opt);
    result.branch_word.emplace_back(rec.step, step.branch);
    current = std::move(step.image);
  }
  const GroebnerBasis& gb = current.ideal().basis(MonomialOrder::grevlex(), opt);
  result.generators = gb.elements();
  const PoissonPresentation& final_pres = trace.final_presentation();
  for (int v = 0; v < final_pres.n; ++v)
    if (gb.contains(final_pres.var(v))) result.diagram.insert(v);
  return result;
}

std::set<int> stratum_of(const PrimeCandidate& P, const DdaTrace& trace,
                         const GroebnerOptions& opt) {
  return phi(P, trace, opt).diagram;
}

MembershipCertificate im_phi_membership(const PrimeCandidate& Q, const DdaTrace& trace,
                                        const GroebnerOptions& opt) {
  require_embeddable(Q);
  if (!(Q.ideal().ambient() == trace.final_presentation()))
    throw value_error("candidate does not live in the trace's final algebra");

  MembershipCertificate cert;
  IdealPresentation current = Q.ideal();

  // Reverse execution order: invert the last performed step first.
  for (auto it = trace.steps().rbegin(); it != trace.steps().rend(); ++it) {
    const DdaStepRecord& rec = *it;
    auto in_ambient = std::make_shared<PoissonPresentation>(rec.input);
    Polynomial step_var_out = rec.output.var(rec.step);

    if (!current.contains(step_var_out, opt)) {
      // Localization branch is always invertible: extend along the inverse
      // change of variables and contract.
      std::vector<Polynomial> sat = saturate(current.generators(), step_var_out, opt);
      std::vector<Polynomial> lifted = localize_and_contract(
          sat, rec.step, inverse_change(rec), rec.input.field, rec.input.n, opt);
      current = IdealPresentation(in_ambient, std::move(lifted));
      continue;
    }

    IdealPresentation step_ideal(in_ambient, {rec.input.var(rec.step)});
    IdealPresentation closure = poisson_closure(step_ideal, opt);
    for (const Polynomial& g : closure.generators()) {
      if (!current.contains(g, opt)) {
        cert.member = false;
        cert.failing_step = rec.step;
        cert.witness = g;
        return cert;
      }
    }
    std::vector<Polynomial> gens = current.generators();
    for (const Polynomial& g : closure.generators()) gens.push_back(g);
    current = IdealPresentation(in_ambient, std::move(gens));
  }

  cert.member = true;
  cert.preimage = current.basis(MonomialOrder::grevlex(), opt).elements();
  return cert;
}

}  // namespace pdda
