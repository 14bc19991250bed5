#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <vector>

#include "pdda/presentation.hpp"

namespace pdda {

struct GroebnerOptions {
  std::size_t spair_budget = 1'000'000;
};

// Reduced Groebner basis: monic elements, no leading-term divisibilities,
// fully reduced tails, sorted by leading monomial. Deterministic for fixed
// input and order.
class GroebnerBasis {
 public:
  GroebnerBasis(std::vector<Polynomial> reduced, MonomialOrder ord)
      : elements_(std::move(reduced)), order_(ord) {}

  const std::vector<Polynomial>& elements() const { return elements_; }
  const MonomialOrder& order() const { return order_; }

  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }
  bool is_zero_ideal() const { return elements_.empty(); }
  bool is_unit_ideal() const;

  bool operator==(const GroebnerBasis& o) const {
    return order_ == o.order_ && elements_ == o.elements_;
  }

 private:
  std::vector<Polynomial> elements_;
  MonomialOrder order_;
};

// Full tail reduction against an arbitrary generating family. The reducer
// choice is the first eligible element; `pick` overrides it (used by the
// reduction-path independence tests).
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& ord,
                       const std::function<std::size_t(std::size_t)>& pick = {});

// Buchberger with the coprime and chain criteria; throws resource_error when
// the S-pair budget is exhausted.
GroebnerBasis groebner(const std::vector<Polynomial>& gens, MonomialOrder ord,
                       const GroebnerOptions& opt = {});

// Generators of (I : f^infinity) via the adjoined-inverse method.
std::vector<Polynomial> saturate(const std::vector<Polynomial>& gens, const Polynomial& f,
                                 const GroebnerOptions& opt = {});

// Generators of I restricted to the complement of `drop` (same ambient ring;
// the dropped variables no longer occur).
std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens,
                                  const std::vector<int>& drop,
                                  const GroebnerOptions& opt = {});

// Generator list with cached reduced bases, bound to the presentation whose
// bracket the Poisson operations use.
class IdealPresentation {
 public:
  IdealPresentation(std::shared_ptr<const PoissonPresentation> ambient,
                    std::vector<Polynomial> gens);

  static IdealPresentation in(const PoissonPresentation& ambient, std::vector<Polynomial> gens);

  const PoissonPresentation& ambient() const { return *ambient_; }
  std::shared_ptr<const PoissonPresentation> ambient_ptr() const { return ambient_; }
  const std::vector<Polynomial>& generators() const { return gens_; }

  const GroebnerBasis& basis(const MonomialOrder& ord = MonomialOrder::grevlex(),
                             const GroebnerOptions& opt = {}) const;
  bool contains(const Polynomial& f, const GroebnerOptions& opt = {}) const;
  bool is_zero() const { return gens_.empty(); }

 private:
  std::shared_ptr<const PoissonPresentation> ambient_;
  std::vector<Polynomial> gens_;
  mutable std::vector<std::pair<MonomialOrder, GroebnerBasis>> cache_;
};

inline bool membership(const Polynomial& f, const IdealPresentation& I) { return I.contains(f); }

IdealPresentation saturate(const IdealPresentation& I, const Polynomial& f,
                           const GroebnerOptions& opt = {});
IdealPresentation eliminate(const IdealPresentation& I, const std::vector<int>& drop,
                            const GroebnerOptions& opt = {});

}  // namespace pdda
