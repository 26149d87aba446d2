#include "stforms/matrix.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace stforms {

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

RatMatrix RatMatrix::from_rows(std::initializer_list<std::initializer_list<Rational>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    RatMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw std::invalid_argument("RatMatrix: ragged rows");
        std::size_t j = 0;
        for (const auto& x : row) m.at(i, j++) = x;
        ++i;
    }
    return m;
}

RatMatrix RatMatrix::from_ints(std::initializer_list<std::initializer_list<long long>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    RatMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw std::invalid_argument("RatMatrix: ragged rows");
        std::size_t j = 0;
        for (long long x : row) m.at(i, j++) = Rational(x);
        ++i;
    }
    return m;
}

RatMatrix RatMatrix::column(const std::vector<Rational>& entries) {
    RatMatrix m(entries.size(), 1);
    for (std::size_t i = 0; i < entries.size(); ++i) m.at(i, 0) = entries[i];
    return m;
}

RatMatrix RatMatrix::row(const std::vector<Rational>& entries) {
    RatMatrix m(1, entries.size());
    for (std::size_t j = 0; j < entries.size(); ++j) m.at(0, j) = entries[j];
    return m;
}

bool RatMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Rational& x) { return x.is_zero(); });
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

RatMatrix RatMatrix::operator-() const { return scale(Rational(-1)); }

RatMatrix RatMatrix::scale(const Rational& s) const {
    RatMatrix m = *this;
    for (auto& x : m.entries_) x *= s;
    return m;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("RatMatrix: shape mismatch in addition");
    RatMatrix m = a;
    for (std::size_t k = 0; k < m.entries_.size(); ++k) m.entries_[k] += b.entries_[k];
    return m;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("RatMatrix: shape mismatch in subtraction");
    RatMatrix m = a;
    for (std::size_t k = 0; k < m.entries_.size(); ++k) m.entries_[k] -= b.entries_[k];
    return m;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("RatMatrix: shape mismatch in multiplication");
    RatMatrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Rational& bkj = b.at(k, j);
                if (!bkj.is_zero()) m.at(i, j) += aik * bkj;
            }
        }
    return m;
}

bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

RatMatrix RatMatrix::vec_row() const {
    RatMatrix v(1, rows_ * cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) v.at(0, k) = entries_[k];
    return v;
}

RatMatrix RatMatrix::from_vec_row(const RatMatrix& v, std::size_t rows, std::size_t cols) {
    if (v.rows() != 1 || v.cols() != rows * cols)
        throw std::invalid_argument("RatMatrix: vec_row shape mismatch");
    RatMatrix m(rows, cols);
    for (std::size_t k = 0; k < rows * cols; ++k) m.entries_[k] = v.at(0, k);
    return m;
}

RatMatrix RatMatrix::kronecker(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix m(a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j) {
            const Rational& aij = a.at(i, j);
            if (aij.is_zero()) continue;
            for (std::size_t k = 0; k < b.rows_; ++k)
                for (std::size_t l = 0; l < b.cols_; ++l)
                    m.at(i * b.rows_ + k, j * b.cols_ + l) = aij * b.at(k, l);
        }
    return m;
}

RatMatrix RatMatrix::vstack(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.cols_) throw std::invalid_argument("RatMatrix: vstack width mismatch");
    RatMatrix m(a.rows_ + b.rows_, a.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j) m.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j) m.at(a.rows_ + i, j) = b.at(i, j);
    return m;
}

RatMatrix RatMatrix::hstack(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows_ != b.rows_) throw std::invalid_argument("RatMatrix: hstack height mismatch");
    RatMatrix m(a.rows_, a.cols_ + b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t j = 0; j < a.cols_; ++j) m.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols_; ++j) m.at(i, a.cols_ + j) = b.at(i, j);
    }
    return m;
}

RatMatrix RatMatrix::submatrix(const std::vector<std::size_t>& row_idx,
                               const std::vector<std::size_t>& col_idx) const {
    RatMatrix m(row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i)
        for (std::size_t j = 0; j < col_idx.size(); ++j) m.at(i, j) = at(row_idx[i], col_idx[j]);
    return m;
}

Rational RatMatrix::det() const {
    if (!is_square()) throw std::invalid_argument("RatMatrix: det of non-square matrix");
    const std::size_t n = rows_;
    if (n == 0) return Rational(1);
    if (n == 1) return at(0, 0);
    Rational acc;
    std::vector<std::size_t> rest_rows;
    for (std::size_t i = 1; i < n; ++i) rest_rows.push_back(i);
    int sgn = 1;
    for (std::size_t j = 0; j < n; ++j) {
        if (!at(0, j).is_zero()) {
            std::vector<std::size_t> rest_cols;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) rest_cols.push_back(k);
            Rational minor = submatrix(rest_rows, rest_cols).det();
            acc += Rational(sgn) * at(0, j) * minor;
        }
        sgn = -sgn;
    }
    return acc;
}

std::string RatMatrix::str() const {
    std::vector<std::string> cells(entries_.size());
    std::vector<std::size_t> width(cols_, 0);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            cells[i * cols_ + j] = at(i, j).str();
            width[j] = std::max(width[j], cells[i * cols_ + j].size());
        }
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            const std::string& c = cells[i * cols_ + j];
            if (j) os << ' ';
            os << std::string(width[j] - c.size(), ' ') << c;
        }
        if (i + 1 < rows_) os << '\n';
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const RatMatrix& m) { return os << m.str(); }

}  // namespace stforms
