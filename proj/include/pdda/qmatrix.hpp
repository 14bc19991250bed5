#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "pdda/dda.hpp"
#include "pdda/linalg.hpp"

namespace pdda {

// A subset of an m x p grid (the black squares), canonically serialized as a
// row-major bitstring.
struct GridDiagram {
  int rows = 0, cols = 0;
  std::uint32_t mask = 0;  // bit i*cols + j set when square (i, j) is black

  static GridDiagram from_mask(int m, int p, std::uint32_t mask);

  bool contains(int i, int j) const {
    return (mask >> static_cast<unsigned>(i * cols + j)) & 1U;
  }
  int size() const;
  std::string bitstring() const;

  bool operator==(const GridDiagram&) const = default;
};

// Semiclassical-limit Poisson structure on m x p matrix entries, variables
// ordered row-major: row/column-sharing pairs are log-canonical, strictly
// nested pairs carry the derivation term -2 X_il X_kj.
PoissonPresentation matrix_poisson(int m, int p, FieldSpec field = rationals());

// All grid subsets in which every black square has the full column above it
// black or the full row to its left black. Requires m*p <= 25.
std::vector<GridDiagram> enumerate_diagrams(int m, int p);

struct StratumReport {
  GridDiagram diagram;
  int r = 0;     // complement size
  int rank = 0;  // rank of M(w)
  int s = 0;     // kernel dimension r - rank
  ScalarMatrix Mw;
};

// M(w): the final log-canonical matrix with rows and columns at the black
// squares deleted; the kernel dimension comes from fraction-free elimination.
StratumReport build_Mw(const DdaTrace& trace, const GridDiagram& w);

std::vector<StratumReport> strata_table(int m, int p);

// Count of diagrams per kernel dimension.
std::map<int, int> stratum_counts(const std::vector<StratumReport>& reports);

}  // namespace pdda
