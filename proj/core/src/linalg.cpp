#include "stforms/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace stforms {

RrefResult rref(const RatMatrix& m) {
    RatMatrix r = m;
    const std::size_t rows = r.rows();
    const std::size_t cols = r.cols();
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols && lead < rows; ++col) {
        std::size_t pivot = lead;
        while (pivot < rows && r.at(pivot, col).is_zero()) ++pivot;
        if (pivot == rows) continue;
        if (pivot != lead)
            for (std::size_t j = 0; j < cols; ++j) std::swap(r.at(pivot, j), r.at(lead, j));
        const Rational inv = r.at(lead, col).inverse();
        for (std::size_t j = col; j < cols; ++j) r.at(lead, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == lead || r.at(i, col).is_zero()) continue;
            const Rational f = r.at(i, col);
            for (std::size_t j = col; j < cols; ++j) r.at(i, j) -= f * r.at(lead, j);
        }
        pivots.push_back(col);
        ++lead;
    }
    return {std::move(r), std::move(pivots)};
}

std::size_t rank(const RatMatrix& m) { return rref(m).pivots.size(); }

std::vector<RatMatrix> nullspace_basis(const RatMatrix& m) {
    const RrefResult rr = rref(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t p : rr.pivots) is_pivot[p] = true;
    std::vector<RatMatrix> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        RatMatrix v(cols, 1);
        v.at(free, 0) = Rational(1);
        for (std::size_t r = 0; r < rr.pivots.size(); ++r)
            v.at(rr.pivots[r], 0) = -rr.reduced.at(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

RatMatrix inverse(const RatMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("inverse: non-square matrix");
    const std::size_t n = m.rows();
    const RrefResult rr = rref(RatMatrix::hstack(m, RatMatrix::identity(n)));
    if (rr.pivots.size() < n || rr.pivots[n - 1] >= n)
        throw std::invalid_argument("inverse: singular matrix");
    std::vector<std::size_t> left(n), right(n);
    for (std::size_t i = 0; i < n; ++i) {
        left[i] = i;
        right[i] = n + i;
    }
    return rr.reduced.submatrix(left, right);
}

RatMatrix row_space_basis(const RatMatrix& m) {
    const RrefResult rr = rref(m);
    const std::size_t r = rr.pivots.size();
    std::vector<std::size_t> rows_idx(r);
    std::vector<std::size_t> cols_idx(m.cols());
    for (std::size_t i = 0; i < r; ++i) rows_idx[i] = i;
    for (std::size_t j = 0; j < m.cols(); ++j) cols_idx[j] = j;
    return rr.reduced.submatrix(rows_idx, cols_idx);
}

RatMatrix column_space_basis(const RatMatrix& m) {
    return row_space_basis(m.transpose()).transpose();
}

bool in_row_span(const RatMatrix& rows, const RatMatrix& v) {
    if (v.rows() != 1 || v.cols() != rows.cols())
        throw std::invalid_argument("in_row_span: shape mismatch");
    return rank(rows) == rank(RatMatrix::vstack(rows, v));
}

bool columns_in_span(const RatMatrix& span_cols, const RatMatrix& vectors) {
    if (span_cols.rows() != vectors.rows())
        throw std::invalid_argument("columns_in_span: shape mismatch");
    return rank(span_cols) == rank(RatMatrix::hstack(span_cols, vectors));
}

}  // namespace stforms
