#include "pdda/linalg.hpp"

namespace pdda {

ScalarMatrix transpose(const ScalarMatrix& m) {
  if (m.empty()) return {};
  ScalarMatrix t(m[0].size(), std::vector<Scalar>(m.size(), Scalar::zero(m[0][0].field())));
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m[r].size(); ++c) t[c][r] = m[r][c];
  return t;
}

int rank_fraction_free(const ScalarMatrix& m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();

  // Clear each row to integers; row scaling does not change the rank.
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    if (m[r].size() != cols) throw value_error("ragged matrix");
    mpz_class den_lcm = 1;
    for (std::size_t c = 0; c < cols; ++c) {
      if (!m[r][c].field().is_rational())
        throw value_error("fraction-free elimination requires rational entries");
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
              m[r][c].value().get_den().get_mpz_t());
    }
    for (std::size_t c = 0; c < cols; ++c) {
      mpq_class scaled = m[r][c].value() * mpq_class(den_lcm);
      scaled.canonicalize();
      a[r][c] = scaled.get_num();
    }
  }

  mpz_class prev = 1;
  std::size_t row = 0;
  int rank = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[row]);

    for (std::size_t r = row + 1; r < rows; ++r) {
      for (std::size_t c = col + 1; c < cols; ++c) {
        mpz_class num = a[r][c] * a[row][col] - a[r][col] * a[row][c];
        mpz_class q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
        if (rem != 0) throw value_error("fraction-free elimination lost exactness");
        a[r][c] = q;
      }
      a[r][col] = 0;
    }
    prev = a[row][col];
    ++rank;
    ++row;
  }
  return rank;
}

int rank_row_reduction(ScalarMatrix a) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size(), cols = a[0].size();
  std::size_t row = 0;
  int rank = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && a[pivot][col].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[row]);
    Scalar inv = a[row][col].inverse();
    for (std::size_t c = col; c < cols; ++c) a[row][c] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || a[r][col].is_zero()) continue;
      Scalar factor = a[r][col];
      for (std::size_t c = col; c < cols; ++c) a[r][c] -= factor * a[row][c];
    }
    ++rank;
    ++row;
  }
  return rank;
}

}  // namespace pdda
