#pragma once

#include "stforms/matrix.hpp"

#include <cstddef>
#include <vector>

namespace stforms {

struct RrefResult {
    RatMatrix reduced;
    std::vector<std::size_t> pivots;  // strictly increasing pivot column indices
};

/// Reduced row echelon form. Unique; all pivot entries are exactly 1.
RrefResult rref(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

/// Canonical nullspace basis read off the RREF free columns, ordered by
/// free-column index, with the free coordinate set to 1. Column vectors.
std::vector<RatMatrix> nullspace_basis(const RatMatrix& m);

/// Inverse of a square matrix; throws std::invalid_argument if singular.
RatMatrix inverse(const RatMatrix& m);

/// Canonical basis of the row space: nonzero rows of the RREF.
RatMatrix row_space_basis(const RatMatrix& m);

/// Canonical basis of the column space, returned as columns
/// (row_space_basis of the transpose, transposed back).
RatMatrix column_space_basis(const RatMatrix& m);

/// True iff v (a single row) lies in the row span of `rows`.
bool in_row_span(const RatMatrix& rows, const RatMatrix& v);

/// True iff every column of `vectors` lies in the column span of `span_cols`.
bool columns_in_span(const RatMatrix& span_cols, const RatMatrix& vectors);

}  // namespace stforms
