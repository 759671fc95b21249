#pragma once

#include <cstddef>
#include <vector>

#include "qlogic/rational.hpp"

// Dense exact linear algebra over the rationals. Sizes in this library are
// desk scale (tens of columns, a few thousand rows at most), so plain
// row-major vectors are enough.
namespace qlogic::linalg {

using Matrix = std::vector<RatVector>;

struct Echelon {
  Matrix rows;                      // nonzero rows of the reduced form
  std::vector<std::size_t> pivots;  // pivot column of each row
};

/// Reduced row echelon form. Pivot columns are searched in `column_order`
/// (all columns ascending when empty), which makes the result a canonical
/// basis of the row space for that order: every pivot entry is 1 and every
/// other row is zero in that column.
Echelon reduced_row_echelon(Matrix m, const std::vector<std::size_t>& column_order = {});

std::size_t rank(const Matrix& m);

/// Basis of { x : m x = 0 } for an m having `cols` columns.
Matrix null_space(const Matrix& m, std::size_t cols);

/// Affine dimension of a finite point set (-1 for the empty set).
long affine_dimension(const std::vector<RatVector>& points);

Rational dot(const RatVector& a, const RatVector& b);

}  // namespace qlogic::linalg
