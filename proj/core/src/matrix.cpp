#include "cactoid/matrix.hpp"

#include <utility>

#include "cactoid/errors.hpp"

namespace cactoid {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) {
            throw DimensionError("ragged initializer list for matrix");
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

Matrix Matrix::ones(std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            m(i, j) = 1;
        }
    }
    return m;
}

Matrix Matrix::column(std::vector<Rational> entries) {
    Matrix m(entries.size(), 1);
    for (std::size_t i = 0; i < entries.size(); ++i) {
        m(i, 0) = std::move(entries[i]);
    }
    return m;
}

Rational& Matrix::at(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_) {
        throw DimensionError("matrix index out of range");
    }
    return entries_[i * cols_ + j];
}

const Rational& Matrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) {
        throw DimensionError("matrix index out of range");
    }
    return entries_[i * cols_ + j];
}

void Matrix::set_labels(std::vector<std::string> row_labels, std::vector<std::string> col_labels) {
    if (!row_labels.empty() && row_labels.size() != rows_) {
        throw DimensionError("row label count does not match row count");
    }
    if (!col_labels.empty() && col_labels.size() != cols_) {
        throw DimensionError("column label count does not match column count");
    }
    row_labels_ = std::move(row_labels);
    col_labels_ = std::move(col_labels);
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            t(j, i) = (*this)(i, j);
        }
    }
    t.row_labels_ = col_labels_;
    t.col_labels_ = row_labels_;
    return t;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
        throw DimensionError("matrix addition with mismatched shapes");
    }
    Matrix out = *this;
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        out.entries_[k] += rhs.entries_[k];
    }
    return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
        throw DimensionError("matrix subtraction with mismatched shapes");
    }
    Matrix out = *this;
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        out.entries_[k] -= rhs.entries_[k];
    }
    return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) {
        throw DimensionError("matrix product with mismatched inner dimension");
    }
    Matrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (a.is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                const Rational& b = rhs(k, j);
                if (!b.is_zero()) {
                    out(i, j) += a * b;
                }
            }
        }
    }
    out.row_labels_ = row_labels_;
    out.col_labels_ = rhs.col_labels_;
    return out;
}

Matrix Matrix::operator*(const Rational& scalar) const {
    Matrix out = *this;
    for (auto& e : out.entries_) {
        e *= scalar;
    }
    return out;
}

Matrix Matrix::operator-() const {
    Matrix out = *this;
    for (auto& e : out.entries_) {
        e = -e;
    }
    return out;
}

bool Matrix::is_zero() const noexcept {
    for (const auto& e : entries_) {
        if (!e.is_zero()) {
            return false;
        }
    }
    return true;
}

Matrix Matrix::submatrix(const std::vector<std::size_t>& row_idx, const std::vector<std::size_t>& col_idx) const {
    Matrix out(row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i) {
        if (row_idx[i] >= rows_) {
            throw DimensionError("submatrix row index out of range");
        }
        for (std::size_t j = 0; j < col_idx.size(); ++j) {
            if (col_idx[j] >= cols_) {
                throw DimensionError("submatrix column index out of range");
            }
            out(i, j) = (*this)(row_idx[i], col_idx[j]);
        }
    }
    if (!row_labels_.empty()) {
        std::vector<std::string> rl;
        rl.reserve(row_idx.size());
        for (std::size_t i : row_idx) {
            rl.push_back(row_labels_[i]);
        }
        out.row_labels_ = std::move(rl);
    }
    if (!col_labels_.empty()) {
        std::vector<std::string> cl;
        cl.reserve(col_idx.size());
        for (std::size_t j : col_idx) {
            cl.push_back(col_labels_[j]);
        }
        out.col_labels_ = std::move(cl);
    }
    return out;
}

Matrix Matrix::minor_matrix(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) {
        throw DimensionError("minor index out of range");
    }
    std::vector<std::size_t> ri;
    std::vector<std::size_t> ci;
    ri.reserve(rows_ - 1);
    ci.reserve(cols_ - 1);
    for (std::size_t r = 0; r < rows_; ++r) {
        if (r != i) {
            ri.push_back(r);
        }
    }
    for (std::size_t c = 0; c < cols_; ++c) {
        if (c != j) {
            ci.push_back(c);
        }
    }
    return submatrix(ri, ci);
}

Matrix operator*(const Rational& scalar, const Matrix& m) { return m * scalar; }

}  // namespace cactoid
