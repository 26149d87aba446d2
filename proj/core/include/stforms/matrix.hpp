#pragma once

#include "stforms/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <vector>

namespace stforms {

/// Dense exact matrix over Rational, row-major storage.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static RatMatrix identity(std::size_t n);
    static RatMatrix from_rows(std::initializer_list<std::initializer_list<Rational>> rows);
    static RatMatrix from_ints(std::initializer_list<std::initializer_list<long long>> rows);
    static RatMatrix column(const std::vector<Rational>& entries);
    static RatMatrix row(const std::vector<Rational>& entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    const std::vector<Rational>& entries() const { return entries_; }

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    RatMatrix transpose() const;
    RatMatrix operator-() const;
    RatMatrix scale(const Rational& s) const;

    /// Shape-mismatch on any of these throws std::invalid_argument.
    friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    friend bool operator==(const RatMatrix& a, const RatMatrix& b);
    friend bool operator!=(const RatMatrix& a, const RatMatrix& b) { return !(a == b); }

    /// Row-major vectorization as a single row (1 x rows*cols).
    RatMatrix vec_row() const;
    /// Inverse of vec_row.
    static RatMatrix from_vec_row(const RatMatrix& v, std::size_t rows, std::size_t cols);

    static RatMatrix kronecker(const RatMatrix& a, const RatMatrix& b);
    static RatMatrix vstack(const RatMatrix& a, const RatMatrix& b);
    static RatMatrix hstack(const RatMatrix& a, const RatMatrix& b);

    /// Submatrix picking the given rows and columns, in the given order.
    RatMatrix submatrix(const std::vector<std::size_t>& row_idx,
                        const std::vector<std::size_t>& col_idx) const;

    /// Determinant by cofactor expansion; intended for the small (<= 4x4)
    /// minors used when inducing representations on form components.
    Rational det() const;

    /// Aligned fixed-width text rendering, one line per row.
    std::string str() const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> entries_;
};

std::ostream& operator<<(std::ostream& os, const RatMatrix& m);

}  // namespace stforms
