#pragma once

// Small exact linear algebra: rational matrices and determinants over the
// Laurent ring.

#include <vector>

#include <gmpxx.h>

#include "spochar/laurent.hpp"

namespace spochar {

using QVector = std::vector<mpq_class>;
using QMatrix = std::vector<QVector>; // row major

// reduced row echelon form in place; returns pivot columns
std::vector<std::size_t> row_reduce(QMatrix &a, std::size_t cols);

std::size_t rank(QMatrix a, std::size_t cols);

// basis of {x : a x = 0}, one vector per free column
std::vector<QVector> nullspace(QMatrix a, std::size_t cols);

// solves a x = b for square invertible a; throws MathError when singular
QVector solve(QMatrix a, const QVector &b);

using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

// cofactor expansion memoised over column subsets; exact, division free
LaurentPoly determinant(const PolyMatrix &a, Lattice lattice);

} // namespace spochar
