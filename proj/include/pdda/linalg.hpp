#pragma once

#include <vector>

#include "pdda/scalar.hpp"

namespace pdda {

using ScalarMatrix = std::vector<std::vector<Scalar>>;

ScalarMatrix transpose(const ScalarMatrix& m);

// Rank by fraction-free (Bareiss) elimination: rows are cleared to integers,
// pivoting by row swaps, every division exact. Characteristic zero only.
int rank_fraction_free(const ScalarMatrix& m);

// Rank by plain field Gauss-Jordan; an independent code path used to
// cross-check kernel dimensions.
int rank_row_reduction(ScalarMatrix m);

}  // namespace pdda
