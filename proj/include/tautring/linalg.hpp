#pragma once

// Exact linear algebra over Q. Rows are cleared of denominators and reduced by
// fraction-free (Bareiss) elimination.

#include <vector>

#include "tautring/rational.hpp"

namespace tautring::linalg {

using Matrix = std::vector<std::vector<Rational>>;

struct Echelon {
  std::vector<std::vector<Integer>> rows;  // row echelon form (integer entries)
  std::vector<int> pivots;                 // pivot column of each nonzero row
  int rank() const { return static_cast<int>(pivots.size()); }
};

Echelon row_echelon(const Matrix& m, int columns);
int rank(const Matrix& m);

struct Solution {
  bool consistent = false;
  std::vector<Rational> x;  // one solution (free variables zero) when consistent
  std::vector<int> pivots;
  int witness_row = -1;     // echelon row reading 0 = residual when inconsistent
  Rational residual;
};

/// Solves a·x = b, with a given as rows of equations over `unknowns` columns.
Solution solve(const Matrix& a, const std::vector<Rational>& b, int unknowns);

}  // namespace tautring::linalg
