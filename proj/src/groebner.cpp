#include "pdda/groebner.hpp"

#include <algorithm>
#include <set>

namespace pdda {

namespace {

void require_polynomial_input(const std::vector<Polynomial>& gens) {
  for (std::size_t i = 1; i < gens.size(); ++i) {
    if (gens[i].nvars() != gens[0].nvars() || gens[i].field() != gens[0].field())
      throw value_error("generators live in different ambient rings");
  }
  for (const Polynomial& g : gens)
    if (g.is_laurent()) throw value_error("Groebner input has negative exponents");
}

Polynomial make_monic(const Polynomial& f, const MonomialOrder& ord) {
  const auto& [m, c] = f.leading_term(ord);
  return f.scaled(c.inverse());
}

}  // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& ord,
                       const std::function<std::size_t(std::size_t)>& pick) {
  Polynomial remainder(f.field(), f.nvars());
  Polynomial work = f;
  while (!work.is_zero()) {
    const auto& [wm, wc] = work.leading_term(ord);
    std::vector<std::size_t> eligible;
    for (std::size_t t = 0; t < basis.size(); ++t) {
      if (basis[t].is_zero()) continue;
      if (basis[t].leading_term(ord).first.divides(wm)) eligible.push_back(t);
    }
    if (eligible.empty()) {
      remainder.add_term(wm, wc);
      work -= Polynomial::term(work.field(), work.nvars(), wc, wm);
      continue;
    }
    std::size_t choice = eligible[pick ? pick(eligible.size()) : 0];
    const Polynomial& g = basis[choice];
    const auto& [gm, gc] = g.leading_term(ord);
    work -= g.times_term(wc / gc, wm.over(gm));
  }
  return remainder;
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
  return pdda::normal_form(f, elements_, order_);
}

bool GroebnerBasis::is_unit_ideal() const {
  return elements_.size() == 1 && elements_.front().is_constant() && !elements_.front().is_zero();
}

GroebnerBasis groebner(const std::vector<Polynomial>& gens, MonomialOrder ord,
                       const GroebnerOptions& opt) {
  require_polynomial_input(gens);

  std::vector<Polynomial> basis;
  for (const Polynomial& g : gens) {
    if (g.is_zero()) continue;
    Polynomial r = normal_form(g, basis, ord);
    if (!r.is_zero()) basis.push_back(make_monic(r, ord));
  }
  if (basis.empty()) return GroebnerBasis({}, ord);

  struct Pair {
    Monomial lcm;
    std::size_t i, j;
  };
  auto pair_less = [&ord](const Pair& a, const Pair& b) {
    if (!(a.lcm == b.lcm)) return ord.less(a.lcm, b.lcm);
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };
  std::set<Pair, decltype(pair_less)> queue(pair_less);
  std::set<std::pair<std::size_t, std::size_t>> done;

  auto enqueue = [&](std::size_t i, std::size_t j) {
    Monomial l = Monomial::lcm(basis[i].leading_term(ord).first,
                               basis[j].leading_term(ord).first);
    queue.insert(Pair{std::move(l), i, j});
  };
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) enqueue(i, j);

  std::size_t spent = 0;
  while (!queue.empty()) {
    if (++spent > opt.spair_budget) throw resource_error("S-pair budget exceeded");
    Pair p = *queue.begin();
    queue.erase(queue.begin());
    done.insert({p.i, p.j});

    const Monomial& lmi = basis[p.i].leading_term(ord).first;
    const Monomial& lmj = basis[p.j].leading_term(ord).first;

    // Coprime leading monomials: the S-polynomial reduces to zero.
    if (p.lcm == lmi.times(lmj)) continue;

    // Chain criterion: a third element dividing the lcm whose two pairs are
    // already treated makes this pair redundant.
    bool redundant = false;
    for (std::size_t k = 0; k < basis.size() && !redundant; ++k) {
      if (k == p.i || k == p.j) continue;
      if (!basis[k].leading_term(ord).first.divides(p.lcm)) continue;
      auto key_ik = std::minmax(p.i, k);
      auto key_jk = std::minmax(p.j, k);
      if (done.count({key_ik.first, key_ik.second}) && done.count({key_jk.first, key_jk.second}))
        redundant = true;
    }
    if (redundant) continue;

    const Polynomial& fi = basis[p.i];
    const Polynomial& fj = basis[p.j];
    Polynomial s = fi.times_term(fi.leading_term(ord).second.inverse(), p.lcm.over(lmi)) -
                   fj.times_term(fj.leading_term(ord).second.inverse(), p.lcm.over(lmj));
    Polynomial r = normal_form(s, basis, ord);
    if (r.is_zero()) continue;
    basis.push_back(make_monic(r, ord));
    for (std::size_t t = 0; t + 1 < basis.size(); ++t) enqueue(t, basis.size() - 1);
  }

  // Minimize: drop elements whose leading monomial is divisible by another's
  // (for equal leading monomials the earlier element survives).
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool minimal = true;
    const Monomial& lmi = basis[i].leading_term(ord).first;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      const Monomial& lmj = basis[j].leading_term(ord).first;
      if (!lmj.divides(lmi)) continue;
      if (!(lmj == lmi) || j < i) {
        minimal = false;
        break;
      }
    }
    if (minimal) keep.push_back(i);
  }

  std::vector<Polynomial> minimal;
  minimal.reserve(keep.size());
  for (std::size_t i : keep) minimal.push_back(basis[i]);

  // Reduce: each element fully reduced against the others.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Polynomial> rest;
      rest.reserve(minimal.size() - 1);
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) rest.push_back(minimal[j]);
      Polynomial r = normal_form(minimal[i], rest, ord);
      if (r.is_zero()) {
        minimal.erase(minimal.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
      r = make_monic(r, ord);
      if (r != minimal[i]) {
        minimal[i] = r;
        changed = true;
      }
    }
  }

  std::sort(minimal.begin(), minimal.end(), [&ord](const Polynomial& a, const Polynomial& b) {
    return ord.less(a.leading_term(ord).first, b.leading_term(ord).first);
  });
  return GroebnerBasis(std::move(minimal), ord);
}

std::vector<Polynomial> saturate(const std::vector<Polynomial>& gens, const Polynomial& f,
                                 const GroebnerOptions& opt) {
  if (f.is_zero()) throw value_error("saturation by zero");
  require_polynomial_input(gens);
  const int n = f.nvars();
  const FieldSpec field = f.field();

  // Adjoin t in front: eliminate it from I + <1 - t f>.
  std::vector<int> shift(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) shift[static_cast<std::size_t>(v)] = v + 1;

  std::vector<Polynomial> ext;
  for (const Polynomial& g : gens) {
    if (g.is_zero()) continue;
    if (g.nvars() != n || g.field() != field)
      throw value_error("saturation ambient mismatch");
    ext.push_back(g.remap(n + 1, shift));
  }
  Polynomial rel = Polynomial::one(field, n + 1) -
                   f.remap(n + 1, shift).times_term(Scalar::one(field), Monomial::var(n + 1, 0));
  ext.push_back(std::move(rel));

  GroebnerBasis gb = groebner(ext, MonomialOrder::block_elim(1), opt);

  std::vector<int> unshift(static_cast<std::size_t>(n) + 1, -1);
  for (int v = 0; v < n; ++v) unshift[static_cast<std::size_t>(v) + 1] = v;
  std::vector<Polynomial> out;
  for (const Polynomial& g : gb.elements()) {
    bool uses_t = false;
    for (const auto& [m, c] : g.terms())
      if (m[0] != 0) uses_t = true;
    if (!uses_t) out.push_back(g.remap(n, unshift));
  }
  return out;
}

std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens,
                                  const std::vector<int>& drop,
                                  const GroebnerOptions& opt) {
  require_polynomial_input(gens);
  if (gens.empty()) return {};
  const int n = gens[0].nvars();

  std::vector<int> dropped = drop;
  std::sort(dropped.begin(), dropped.end());
  dropped.erase(std::unique(dropped.begin(), dropped.end()), dropped.end());
  for (int v : dropped)
    if (v < 0 || v >= n) throw value_error("eliminated variable out of range");
  if (dropped.empty()) return gens;

  // Permute the dropped variables to the front, run a block order, keep the
  // elements free of them, and permute back.
  std::vector<int> to_new(static_cast<std::size_t>(n), -1);
  int pos = 0;
  for (int v : dropped) to_new[static_cast<std::size_t>(v)] = pos++;
  for (int v = 0; v < n; ++v)
    if (to_new[static_cast<std::size_t>(v)] < 0) to_new[static_cast<std::size_t>(v)] = pos++;
  std::vector<int> to_old(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) to_old[static_cast<std::size_t>(to_new[static_cast<std::size_t>(v)])] = v;

  std::vector<Polynomial> permuted;
  for (const Polynomial& g : gens)
    if (!g.is_zero()) permuted.push_back(g.remap(n, to_new));

  int k = static_cast<int>(dropped.size());
  GroebnerBasis gb = groebner(permuted, MonomialOrder::block_elim(k), opt);

  std::vector<Polynomial> out;
  for (const Polynomial& g : gb.elements()) {
    bool uses_dropped = false;
    for (const auto& [m, c] : g.terms())
      for (int v = 0; v < k && !uses_dropped; ++v)
        if (m[v] != 0) uses_dropped = true;
    if (!uses_dropped) out.push_back(g.remap(n, to_old));
  }
  return out;
}

IdealPresentation::IdealPresentation(std::shared_ptr<const PoissonPresentation> ambient,
                                     std::vector<Polynomial> gens)
    : ambient_(std::move(ambient)) {
  if (!ambient_) throw value_error("ideal without ambient presentation");
  for (Polynomial& g : gens) {
    if (g.is_zero()) continue;
    if (g.nvars() != ambient_->n || g.field() != ambient_->field)
      throw value_error("ideal generator outside the ambient ring");
    if (g.is_laurent()) throw value_error("ideal generator has negative exponents");
    gens_.push_back(std::move(g));
  }
}

IdealPresentation IdealPresentation::in(const PoissonPresentation& ambient,
                                        std::vector<Polynomial> gens) {
  return IdealPresentation(std::make_shared<PoissonPresentation>(ambient), std::move(gens));
}

const GroebnerBasis& IdealPresentation::basis(const MonomialOrder& ord,
                                              const GroebnerOptions& opt) const {
  for (const auto& [cached_ord, gb] : cache_)
    if (cached_ord == ord) return gb;
  cache_.emplace_back(ord, groebner(gens_, ord, opt));
  return cache_.back().second;
}

bool IdealPresentation::contains(const Polynomial& f, const GroebnerOptions& opt) const {
  return basis(MonomialOrder::grevlex(), opt).contains(f);
}

IdealPresentation saturate(const IdealPresentation& I, const Polynomial& f,
                           const GroebnerOptions& opt) {
  return IdealPresentation(I.ambient_ptr(), saturate(I.generators(), f, opt));
}

IdealPresentation eliminate(const IdealPresentation& I, const std::vector<int>& drop,
                            const GroebnerOptions& opt) {
  return IdealPresentation(I.ambient_ptr(), eliminate(I.generators(), drop, opt));
}

}  // namespace pdda
