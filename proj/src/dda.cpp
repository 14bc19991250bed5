#include "pdda/dda.hpp"

namespace pdda {

namespace {

Scalar scalar_pow(const Scalar& s, int k) {
  Scalar out = Scalar::one(s.field());
  for (int t = 0; t < k; ++t) out *= s;
  return out;
}

}  // namespace

std::vector<Polynomial> inverse_change(const DdaStepRecord& rec) {
  std::vector<Polynomial> out;
  out.reserve(rec.change.size());
  for (const Polynomial& v : rec.change) {
    Polynomial flipped(v.field(), v.nvars());
    for (const auto& [m, c] : v.terms()) {
      int k = -m[rec.step];  // slice index; +1 exponent only for the step letter itself
      flipped.add_term(m, (k > 0 && k % 2 != 0) ? -c : c);
    }
    out.push_back(std::move(flipped));
  }
  return out;
}

DdaStepRecord dda_step(const PoissonPresentation& pres, int step) {
  if (step < 1 || step >= pres.n) throw value_error("step index out of range");
  for (int l = step + 1; l < pres.n; ++l)
    if (!pres.delta_is_zero(l))
      throw value_error("derivations above the step variable must be zero");

  DdaStepRecord rec(step, pres, pres);

  // The output presentation keeps lambda and the lower derivations; the
  // step derivation is deleted together with its eta/table data.
  for (int j = 0; j < pres.n; ++j)
    rec.output.set_delta(step, j, Polynomial::zero(pres.field, pres.n));
  rec.output.eta[static_cast<std::size_t>(step)] = std::nullopt;
  rec.output.higher[static_cast<std::size_t>(step)] = std::nullopt;

  if (pres.delta_is_zero(step)) {
    for (int i = 0; i < pres.n; ++i) rec.change.push_back(pres.var(i));
    rec.bound = 1;
    return rec;
  }

  Scalar eta = pres.eta[static_cast<std::size_t>(step)]
                   ? *pres.eta[static_cast<std::size_t>(step)]
                   : infer_eta(pres, step);
  if (eta.is_zero()) throw value_error("eta is zero");
  HigherDerivationTable table = build_higher_table(pres, step);

  rec.eta = eta;
  rec.bound = table.bound();
  for (int i = 0; i < pres.n; ++i) {
    if (i >= step) {
      rec.change.push_back(pres.var(i));
      continue;
    }
    Polynomial v = Polynomial::zero(pres.field, pres.n);
    for (int k = 0; k < table.bound(); ++k) {
      Polynomial dk = table.image(k, i);
      if (dk.is_zero()) continue;
      v += dk.times_term(scalar_pow(eta.inverse(), k),
                         Monomial::var(pres.n, step, static_cast<std::int32_t>(-k)));
    }
    rec.change.push_back(std::move(v));
  }
  return rec;
}

DdaTrace::DdaTrace(PoissonPresentation original, std::vector<DdaStepRecord> steps)
    : original_(std::move(original)),
      final_(steps.empty() ? original_ : steps.back().output),
      steps_(std::move(steps)),
      cache_(std::make_shared<Cache>()) {}

const RationalExpression& DdaTrace::t_expression(int i) const {
  if (i < 0 || i >= original_.n) throw value_error("generator index out of range");
  std::call_once(cache_->once, [this] {
    std::vector<RationalExpression> images;
    images.reserve(static_cast<std::size_t>(original_.n));
    for (int v = 0; v < original_.n; ++v)
      images.push_back(RationalExpression::of(original_.var(v)));
    // Each record rewrites the current generators in terms of the previous
    // ones; folding in execution order lands in the original variables.
    for (const DdaStepRecord& rec : steps_) {
      std::vector<RationalExpression> next;
      next.reserve(images.size());
      for (int v = 0; v < original_.n; ++v)
        next.push_back(substitute(rec.change[static_cast<std::size_t>(v)], images).simplified());
      images = std::move(next);
    }
    cache_->t = std::move(images);
  });
  return cache_->t[static_cast<std::size_t>(i)];
}

DdaTrace dda_run(const PoissonPresentation& pres) {
  ClassPReport admissible = verify_class_p(pres);
  if (!admissible.pass)
    throw value_error("presentation fails class verification: " +
                      (admissible.failure ? admissible.failure->clause : std::string("unknown")));

  std::vector<DdaStepRecord> steps;
  PoissonPresentation current = pres;
  for (int step = pres.n - 1; step >= 1; --step) {
    DdaStepRecord rec = dda_step(current, step);
    current = rec.output;
    steps.push_back(std::move(rec));
  }
  return DdaTrace(pres, std::move(steps));
}

AffineBracketReport verify_affine_bracket(const DdaTrace& trace) {
  AffineBracketReport report;
  const PoissonPresentation& pres = trace.original();
  for (int a = 0; a < pres.n; ++a) {
    for (int b = a + 1; b < pres.n; ++b) {
      const RationalExpression& ta = trace.t_expression(a);
      const RationalExpression& tb = trace.t_expression(b);
      RationalExpression expect =
          ta * tb *
          RationalExpression::of(Polynomial::constant(
              pres.field, pres.n,
              trace.lambda_bar()[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]));
      RationalExpression got = bracket(pres, ta, tb);
      ++report.pairs_checked;
      if (!got.equals(expect)) {
        report.a = a;
        report.b = b;
        report.residual = (got - expect).simplified();
        return report;
      }
    }
  }
  report.pass = true;
  return report;
}

const RationalExpression& express_T_in_X(const DdaTrace& trace, int i) {
  return trace.t_expression(i);
}

}  // namespace pdda
