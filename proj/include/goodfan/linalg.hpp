#pragma once
// Exact rational linear algebra at desk scale: elimination, rank, nullspace,
// inverses, and the convex-combination feasibility test used by hulls.

#include <optional>
#include <vector>

#include "goodfan/numeric.hpp"

namespace goodfan {

using RatMat = std::vector<RatVec>;

RatMat to_rat_matrix(const std::vector<IntVec>& rows);

// Reduced row echelon form in place; returns pivot column indices.
std::vector<int> rref(RatMat& m);

int rank_of(const std::vector<IntVec>& rows);
int rank_of_rat(const RatMat& rows);

// Right nullspace basis of the matrix whose rows are `rows` (ncols columns;
// rows may be empty), as primitive integer vectors, deterministic (one per
// free column of the RREF, in column order, denominators cleared, gcd 1,
// first nonzero coordinate positive).
std::vector<IntVec> integer_nullspace(const std::vector<IntVec>& rows, int ncols);

Rat det_rat(RatMat m);
Int det_int(const std::vector<IntVec>& rows);  // must be square

// Inverse of a square integer matrix with determinant +-1 (columns given as
// `cols`); returns the inverse as a matrix of rows. Throws otherwise.
std::vector<IntVec> unimodular_inverse_rows(const std::vector<IntVec>& cols);

// Solve A x = b exactly (A given as rows); empty optional when inconsistent.
std::optional<RatVec> solve(const RatMat& a, const RatVec& b);

// Exact feasibility of  target in conv(points), phase-one simplex with
// Bland's rule. `points` need not be extreme.
bool in_convex_hull(const std::vector<IntVec>& points, const IntVec& target);

}  // namespace goodfan
