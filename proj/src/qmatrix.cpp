#include "pdda/qmatrix.hpp"

namespace pdda {

GridDiagram GridDiagram::from_mask(int m, int p, std::uint32_t mask) {
  if (m < 1 || p < 1 || m * p > 25) throw value_error("grid size limit is 25 squares");
  if (m * p < 32 && (mask >> static_cast<unsigned>(m * p)) != 0)
    throw value_error("diagram mask outside the grid");
  return GridDiagram{m, p, mask};
}

int GridDiagram::size() const {
  int count = 0;
  for (int b = 0; b < rows * cols; ++b)
    if ((mask >> static_cast<unsigned>(b)) & 1U) ++count;
  return count;
}

std::string GridDiagram::bitstring() const {
  std::string out(static_cast<std::size_t>(rows * cols), '0');
  for (int b = 0; b < rows * cols; ++b)
    if ((mask >> static_cast<unsigned>(b)) & 1U) out[static_cast<std::size_t>(b)] = '1';
  return out;
}

PoissonPresentation matrix_poisson(int m, int p, FieldSpec field) {
  if (m < 1 || p < 1) throw value_error("matrix dimensions must be positive");
  const int n = m * p;
  PoissonPresentation pres(field, n);
  auto idx = [p](int i, int j) { return i * p + j; };
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < p; ++j)
      pres.names[static_cast<std::size_t>(idx(i, j))] =
          "X" + std::to_string(i + 1) + (m > 9 || p > 9 ? "_" : "") + std::to_string(j + 1);

  Scalar one = Scalar::one(field);
  Scalar minus_two = Scalar::of(field, -2);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < p; ++j) {
      for (int k = i; k < m; ++k) {
        for (int l = (k == i ? j + 1 : 0); l < p; ++l) {
          int a = idx(i, j), b = idx(k, l);
          if (i == k || j == l) {
            pres.set_lambda(a, b, one);
          } else if (j < l) {
            // {X_b, X_a} = -2 X_il X_kj, attached to the later variable.
            Monomial mono = Monomial::var(n, idx(i, l)).times(Monomial::var(n, idx(k, j)));
            pres.set_delta(b, a, Polynomial::term(field, n, minus_two, mono));
          }
        }
      }
    }
  }
  return pres;
}

std::vector<GridDiagram> enumerate_diagrams(int m, int p) {
  if (m < 1 || p < 1 || m * p > 25) throw value_error("grid size limit is 25 squares");
  const int n = m * p;

  std::vector<std::uint32_t> above(static_cast<std::size_t>(n), 0);
  std::vector<std::uint32_t> left(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < p; ++j) {
      int s = i * p + j;
      for (int u = 0; u < i; ++u) above[static_cast<std::size_t>(s)] |= 1U << (u * p + j);
      for (int u = 0; u < j; ++u) left[static_cast<std::size_t>(s)] |= 1U << (i * p + u);
    }
  }

  std::vector<GridDiagram> out;
  const std::uint64_t total = 1ULL << n;
  for (std::uint64_t w = 0; w < total; ++w) {
    auto mask = static_cast<std::uint32_t>(w);
    bool ok = true;
    for (int s = 0; s < n && ok; ++s) {
      if (!((mask >> static_cast<unsigned>(s)) & 1U)) continue;
      std::uint32_t a = above[static_cast<std::size_t>(s)];
      std::uint32_t l = left[static_cast<std::size_t>(s)];
      ok = ((mask & a) == a) || ((mask & l) == l);
    }
    if (ok) out.push_back(GridDiagram{m, p, mask});
  }
  return out;
}

StratumReport build_Mw(const DdaTrace& trace, const GridDiagram& w) {
  const PoissonPresentation& final_pres = trace.final_presentation();
  if (final_pres.n != w.rows * w.cols)
    throw value_error("diagram does not match the trace dimensions");

  std::vector<int> complement;
  for (int v = 0; v < final_pres.n; ++v)
    if (!((w.mask >> static_cast<unsigned>(v)) & 1U)) complement.push_back(v);

  StratumReport report;
  report.diagram = w;
  report.r = static_cast<int>(complement.size());
  report.Mw.assign(complement.size(),
                   std::vector<Scalar>(complement.size(), Scalar::zero(final_pres.field)));
  const auto& lam = trace.lambda_bar();
  for (std::size_t a = 0; a < complement.size(); ++a)
    for (std::size_t b = 0; b < complement.size(); ++b)
      report.Mw[a][b] = lam[static_cast<std::size_t>(complement[a])]
                           [static_cast<std::size_t>(complement[b])];

  for (std::size_t a = 0; a < complement.size(); ++a)
    for (std::size_t b = 0; b < complement.size(); ++b)
      if (report.Mw[a][b] != -report.Mw[b][a])
        throw value_error("stratum matrix is not skew-symmetric");

  report.rank = rank_fraction_free(report.Mw);
  report.s = report.r - report.rank;
  return report;
}

std::vector<StratumReport> strata_table(int m, int p) {
  DdaTrace trace = dda_run(matrix_poisson(m, p));
  std::vector<StratumReport> out;
  for (const GridDiagram& w : enumerate_diagrams(m, p)) out.push_back(build_Mw(trace, w));
  return out;
}

std::map<int, int> stratum_counts(const std::vector<StratumReport>& reports) {
  std::map<int, int> counts;
  for (const StratumReport& r : reports) ++counts[r.s];
  return counts;
}

}  // namespace pdda
