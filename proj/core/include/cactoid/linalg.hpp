#pragma once

#include "cactoid/matrix.hpp"
#include "cactoid/rational.hpp"

namespace cactoid {

/// Exact determinant. Denominators are cleared row by row, then the integer
/// matrix is reduced with fraction-free (Bareiss) elimination, so intermediate
/// values stay at minor size instead of exploding.
Rational det(const Matrix& m);

/// Exact inverse by Gauss-Jordan elimination over the rationals.
/// Throws SingularError carrying the achieved rank when no inverse exists.
Matrix inverse(const Matrix& m);

/// Rank of the matrix (side product of the elimination used by inverse()).
std::size_t rank(const Matrix& m);

/// Sum of all n^2 cofactors of a square matrix, evaluated by the classical
/// reduction: subtract the first row from every row, the first column from
/// every column, drop row/column one and take the determinant.
/// For a 1x1 matrix the value is 1 (determinant of the empty minor), the
/// convention under which the block-composition determinant formula
/// degenerates correctly; a 0x0 input is a dimension error.
Rational cofactor_sum(const Matrix& m);

/// Determinant through the Schur complement of the leading split x split
/// block: det(B11) * det(B22 - B21 B11^-1 B12). Kept as a second,
/// structurally different determinant route for differential testing.
/// Throws PivotError when the leading block is singular; callers may retry
/// with schur_det_trailing.
Rational schur_det(const Matrix& m, std::size_t split);

/// Same, resolved through the trailing block: det(B22) * det(B11 - B12 B22^-1 B21).
Rational schur_det_trailing(const Matrix& m, std::size_t split);

/// scale * beta * alpha^T for two column vectors of equal length.
Matrix rank_one(const Matrix& beta, const Matrix& alpha, const Rational& scale);

}  // namespace cactoid
