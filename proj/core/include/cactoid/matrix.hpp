#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "cactoid/rational.hpp"

namespace cactoid {

/// Dense rational matrix, row-major. Rows and columns may carry vertex
/// labels; labels are metadata and do not take part in operator==.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static Matrix identity(std::size_t n);
    static Matrix ones(std::size_t rows, std::size_t cols);
    static Matrix column(std::vector<Rational> entries);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    bool empty() const noexcept { return entries_.empty(); }

    Rational& at(std::size_t i, std::size_t j);
    const Rational& at(std::size_t i, std::size_t j) const;
    Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    const std::vector<std::string>& row_labels() const noexcept { return row_labels_; }
    const std::vector<std::string>& col_labels() const noexcept { return col_labels_; }
    /// Sets both label vectors; each must be empty or match the dimension.
    void set_labels(std::vector<std::string> row_labels, std::vector<std::string> col_labels);

    Matrix transpose() const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix operator*(const Matrix& rhs) const;
    Matrix operator*(const Rational& scalar) const;
    Matrix operator-() const;

    bool operator==(const Matrix& rhs) const noexcept {
        return rows_ == rhs.rows_ && cols_ == rhs.cols_ && entries_ == rhs.entries_;
    }
    bool operator!=(const Matrix& rhs) const noexcept { return !(*this == rhs); }

    bool is_zero() const noexcept;

    /// Copies the selected rows/columns (in the given order), carrying labels along.
    Matrix submatrix(const std::vector<std::size_t>& row_idx, const std::vector<std::size_t>& col_idx) const;

    /// Deletes row i and column j.
    Matrix minor_matrix(std::size_t i, std::size_t j) const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> entries_;
    std::vector<std::string> row_labels_;
    std::vector<std::string> col_labels_;
};

Matrix operator*(const Rational& scalar, const Matrix& m);

}  // namespace cactoid
