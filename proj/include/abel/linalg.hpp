#pragma once

#include <vector>

#include "abel/rational.hpp"

namespace abel {

// Dense exact rational matrix, row-major.
using QMatrix = std::vector<std::vector<Rational>>;

// Rank via fraction-free (Bareiss) elimination on the integer-cleared matrix.
std::size_t matrix_rank(QMatrix m);

// Determinant of a square matrix, Bareiss.
Rational matrix_det(QMatrix m);

// Basis of { x : x^T * rows = 0 }, i.e. left nullspace of the matrix whose
// rows are given (equivalently kernel of the transpose). Each basis vector
// is scaled to coprime integers with first nonzero entry positive;
// deterministic order (one vector per free pivot, ascending).
std::vector<std::vector<Rational>> left_nullspace(const QMatrix& rows);

} // namespace abel
