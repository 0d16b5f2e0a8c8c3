#ifndef LIEFRAME_EXACT_LINALG_HPP
#define LIEFRAME_EXACT_LINALG_HPP

#include <optional>
#include <vector>

#include "lieframe/rational.hpp"

namespace lieframe {

/// Row echelon form produced by fraction-free (Bareiss) elimination.
struct Echelon {
  RatMatrix mat;                // echelon form, rows 0..rank-1 are the pivots
  std::vector<int> pivot_cols;  // one entry per pivot row
  int rank = 0;
};

/// Fraction-free Gaussian elimination. Rows are cleared to integers first so
/// all intermediate entries stay integral (Bareiss two-step determinant rule).
Echelon row_echelon(const RatMatrix& m);

int exact_rank(const RatMatrix& m);

/// Exact kernel basis; every returned v satisfies m*v == 0 identically and
/// rank + nullity == columns.
std::vector<RatVector> exact_nullspace(const RatMatrix& m);

/// Unique solution of a square nonsingular system.
RatVector exact_solve(const RatMatrix& a, const RatVector& b);

RatMatrix exact_inverse(const RatMatrix& a);

/// Coordinates of `target` in the span of `basis` columns, if it lies there.
std::optional<RatVector> span_coordinates(const RatMatrix& basis,
                                          const RatVector& target);

/// Column-major flattening, the pairing used for rank/Gram computations.
RatVector vec(const RatMatrix& m);

}  // namespace lieframe

#endif
