#include "cactoid/linalg.hpp"

#include <utility>
#include <vector>

#include "cactoid/errors.hpp"

namespace cactoid {

namespace {

BigInt lcm(const BigInt& a, const BigInt& b) { return a / boost::multiprecision::gcd(a, b) * b; }

// Scales every row to integers. Returns the integer entries (row-major) and
// the product of the row multipliers.
struct ClearedRows {
    std::vector<BigInt> entries;
    BigInt scale;
};

ClearedRows clear_denominators(const Matrix& m) {
    const std::size_t n = m.rows();
    ClearedRows out;
    out.entries.resize(n * m.cols());
    out.scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        BigInt row_lcm = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            row_lcm = lcm(row_lcm, m(i, j).den());
        }
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rational& e = m(i, j);
            out.entries[i * m.cols() + j] = e.num() * (row_lcm / e.den());
        }
        out.scale *= row_lcm;
    }
    return out;
}

}  // namespace

Rational det(const Matrix& m) {
    if (!m.is_square()) {
        throw DimensionError("determinant of a non-square matrix");
    }
    const std::size_t n = m.rows();
    if (n == 0) {
        return 1;  // empty product convention
    }
    ClearedRows cleared = clear_denominators(m);
    std::vector<BigInt>& a = cleared.entries;
    auto e = [&](std::size_t i, std::size_t j) -> BigInt& { return a[i * n + j]; };

    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (e(k, k) == 0) {
            std::size_t pivot = k;
            while (pivot < n && e(pivot, k) == 0) {
                ++pivot;
            }
            if (pivot == n) {
                return 0;
            }
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(e(k, j), e(pivot, j));
            }
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                e(i, j) = (e(k, k) * e(i, j) - e(i, k) * e(k, j)) / prev;  // exact division
            }
            e(i, k) = 0;
        }
        prev = e(k, k);
    }
    BigInt det_int = e(n - 1, n - 1);
    if (sign < 0) {
        det_int = -det_int;
    }
    return Rational(std::move(det_int), std::move(cleared.scale));
}

namespace {

// Gauss-Jordan over the rationals on [m | I]. Returns the rank; when the rank
// is full, `result` holds the inverse.
std::size_t gauss_jordan(const Matrix& m, Matrix* result) {
    const std::size_t n = m.rows();
    Matrix a = m;
    Matrix inv = Matrix::identity(n);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = rank;
        while (pivot < n && a(pivot, col).is_zero()) {
            ++pivot;
        }
        if (pivot == n) {
            continue;  // no pivot in this column; rank deficit
        }
        if (pivot != rank) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(rank, j), a(pivot, j));
                std::swap(inv(rank, j), inv(pivot, j));
            }
        }
        const Rational p = a(rank, col).reciprocal();
        for (std::size_t j = 0; j < n; ++j) {
            a(rank, j) *= p;
            inv(rank, j) *= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == rank || a(i, col).is_zero()) {
                continue;
            }
            const Rational f = a(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(rank, j);
                inv(i, j) -= f * inv(rank, j);
            }
        }
        ++rank;
    }
    if (result != nullptr && rank == n) {
        *result = std::move(inv);
    }
    return rank;
}

}  // namespace

Matrix inverse(const Matrix& m) {
    if (!m.is_square()) {
        throw DimensionError("inverse of a non-square matrix");
    }
    Matrix out;
    const std::size_t r = gauss_jordan(m, &out);
    if (r != m.rows()) {
        throw SingularError(r, "matrix is singular (rank " + std::to_string(r) + " of " +
                                   std::to_string(m.rows()) + ")");
    }
    out.set_labels(m.col_labels(), m.row_labels());
    return out;
}

std::size_t rank(const Matrix& m) {
    if (m.rows() == 0 || m.cols() == 0) {
        return 0;
    }
    // gauss_jordan expects a square matrix; pad rectangular input with zeros.
    if (m.is_square()) {
        return gauss_jordan(m, nullptr);
    }
    const std::size_t n = std::max(m.rows(), m.cols());
    Matrix padded(n, n);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            padded(i, j) = m(i, j);
        }
    }
    return gauss_jordan(padded, nullptr);
}

Rational cofactor_sum(const Matrix& m) {
    if (!m.is_square()) {
        throw DimensionError("cofactor sum of a non-square matrix");
    }
    const std::size_t n = m.rows();
    if (n == 0) {
        throw DimensionError("cofactor sum of an empty matrix");
    }
    if (n == 1) {
        return 1;
    }
    Matrix reduced(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i) {
        for (std::size_t j = 1; j < n; ++j) {
            // Entry after subtracting row 0 from row i and column 0 from column j.
            reduced(i - 1, j - 1) = m(i, j) - m(0, j) - m(i, 0) + m(0, 0);
        }
    }
    return det(reduced);
}

Rational schur_det(const Matrix& m, std::size_t split) {
    if (!m.is_square()) {
        throw DimensionError("Schur determinant of a non-square matrix");
    }
    const std::size_t n = m.rows();
    if (split == 0 || split >= n) {
        throw DimensionError("Schur split must satisfy 1 <= split < n");
    }
    std::vector<std::size_t> head(split);
    std::vector<std::size_t> tail(n - split);
    for (std::size_t i = 0; i < split; ++i) {
        head[i] = i;
    }
    for (std::size_t i = split; i < n; ++i) {
        tail[i - split] = i;
    }
    const Matrix b11 = m.submatrix(head, head);
    Matrix b11_inv;
    try {
        b11_inv = inverse(b11);
    } catch (const SingularError& e) {
        throw PivotError("leading Schur block is singular (rank " + std::to_string(e.rank()) + ")");
    }
    const Matrix b12 = m.submatrix(head, tail);
    const Matrix b21 = m.submatrix(tail, head);
    const Matrix b22 = m.submatrix(tail, tail);
    return det(b11) * det(b22 - b21 * b11_inv * b12);
}

Rational schur_det_trailing(const Matrix& m, std::size_t split) {
    if (!m.is_square()) {
        throw DimensionError("Schur determinant of a non-square matrix");
    }
    const std::size_t n = m.rows();
    if (split == 0 || split >= n) {
        throw DimensionError("Schur split must satisfy 1 <= split < n");
    }
    std::vector<std::size_t> head(split);
    std::vector<std::size_t> tail(n - split);
    for (std::size_t i = 0; i < split; ++i) {
        head[i] = i;
    }
    for (std::size_t i = split; i < n; ++i) {
        tail[i - split] = i;
    }
    const Matrix b22 = m.submatrix(tail, tail);
    Matrix b22_inv;
    try {
        b22_inv = inverse(b22);
    } catch (const SingularError& e) {
        throw PivotError("trailing Schur block is singular (rank " + std::to_string(e.rank()) + ")");
    }
    const Matrix b11 = m.submatrix(head, head);
    const Matrix b12 = m.submatrix(head, tail);
    const Matrix b21 = m.submatrix(tail, head);
    return det(b22) * det(b11 - b12 * b22_inv * b21);
}

Matrix rank_one(const Matrix& beta, const Matrix& alpha, const Rational& scale) {
    if (beta.cols() != 1 || alpha.cols() != 1) {
        throw DimensionError("rank_one expects column vectors");
    }
    if (beta.rows() != alpha.rows()) {
        throw DimensionError("rank_one with mismatched vector lengths");
    }
    const std::size_t n = beta.rows();
    Matrix out(n, n);
    if (scale.is_zero()) {
        return out;
    }
    for (std::size_t i = 0; i < n; ++i) {
        const Rational bi = scale * beta(i, 0);
        if (bi.is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < n; ++j) {
            out(i, j) = bi * alpha(j, 0);
        }
    }
    return out;
}

}  // namespace cactoid
