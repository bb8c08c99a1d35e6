#include "cactoid/formulas.hpp"

#include <utility>

#include "cactoid/distance.hpp"
#include "cactoid/errors.hpp"
#include "cactoid/linalg.hpp"

namespace cactoid {

namespace {

void require_nonzero_cycles(const WeightedBlock& block) {
    const auto& totals = block.summary().cycle_totals;
    for (std::size_t j = 0; j < totals.size(); ++j) {
        if (totals[j].is_zero()) {
            throw ZeroCycleWeightError(j, "cycle " + std::to_string(j + 1) +
                                              " (canonical order) has total weight zero");
        }
    }
}

Rational sign_factor(const WeightedBlock& block) {
    return block.vertex_count() % 2 == 1 ? Rational(1) : Rational(-1);
}

// w_1^n * prod_j w_j^(m_j)
Rational weight_power_product(const WeightedBlock& block) {
    const CycleSummary& s = block.summary();
    Rational product(1);
    for (std::size_t i = 0; i < block.shape().path_len; ++i) {
        product *= s.cycle_totals[0];
    }
    for (std::size_t j = 0; j < block.cycle_count(); ++j) {
        for (std::size_t i = 0; i < block.shape().branch_lens[j]; ++i) {
            product *= s.cycle_totals[j];
        }
    }
    return product;
}

}  // namespace

Rational block_cof(const WeightedBlock& block) {
    return sign_factor(block) * weight_power_product(block);
}

Rational block_lambda(const WeightedBlock& block) {
    require_nonzero_cycles(block);
    const CycleSummary& s = block.summary();
    Rational lambda = (s.path_total * s.branch_totals[0] + s.path_pair_sum) / s.cycle_totals[0];
    for (std::size_t j = 0; j < block.cycle_count(); ++j) {
        lambda += s.branch_pair_sums[j] / s.cycle_totals[j];
    }
    return lambda;
}

Rational block_det(const WeightedBlock& block) {
    const CycleSummary& s = block.summary();
    std::vector<std::size_t> zero_cycles;
    for (std::size_t j = 0; j < block.cycle_count(); ++j) {
        if (s.cycle_totals[j].is_zero()) {
            zero_cycles.push_back(j);
        }
    }
    if (zero_cycles.empty()) {
        return block_cof(block) * block_lambda(block);
    }
    // The elimination leaves the bordered form [[0, X^T],[Y, Z]] with Z
    // diagonal in the cycle totals, so det D = -sum_k X_k Y_k prod_{i!=k} z_i.
    // A zero total w_j kills every term that keeps position k outside
    // cycle j. The minimum cycle spans n+m_1 >= 2 positions and any branch
    // with m_j >= 2 spans several, so in those configurations (and with two
    // zero cycles) everything vanishes. One zero cycle with a one-edge
    // branch leaves a single surviving term.
    const std::size_t j = zero_cycles.front();
    if (zero_cycles.size() > 1 || j == 0 || block.shape().branch_lens[j] != 1) {
        return 0;
    }
    Rational product = sign_factor(block) * s.branch_pair_sums[j];  // W_1^(j) W_0^(j)
    for (std::size_t i = 0; i < block.shape().path_len + block.shape().branch_lens[0]; ++i) {
        product *= s.cycle_totals[0];
    }
    for (std::size_t l = 1; l < block.cycle_count(); ++l) {
        if (l == j) {
            continue;
        }
        for (std::size_t i = 0; i < block.shape().branch_lens[l]; ++i) {
            product *= s.cycle_totals[l];
        }
    }
    return product;
}

Matrix block_alpha(const WeightedBlock& block) {
    require_nonzero_cycles(block);
    const CycleSummary& s = block.summary();
    const std::size_t n = block.shape().path_len;
    Matrix alpha(block.vertex_count(), 1);

    Rational head;
    for (std::size_t j = 0; j < block.cycle_count(); ++j) {
        head += block.weights().branches[j].closing / s.cycle_totals[j];
        if (j > 0) {
            head -= s.branch_totals[j] / s.cycle_totals[j];
        }
    }
    alpha(block.path_vertex(0), 0) = head;
    for (std::size_t i = 1; i <= n; ++i) {
        alpha(block.path_vertex(i), 0) = block.weights().path[i - 1] / s.cycle_totals[0];
    }
    for (std::size_t j = 0; j < block.cycle_count(); ++j) {
        const BranchWeights& branch = block.weights().branches[j];
        for (std::size_t i = 1; i <= block.shape().branch_lens[j]; ++i) {
            alpha(block.branch_vertex(j, i), 0) = branch.steps[i - 1] / s.cycle_totals[j];
        }
    }
    alpha.set_labels(block.local_names(), {});
    return alpha;
}

Matrix block_beta(const WeightedBlock& block) {
    require_nonzero_cycles(block);
    const CycleSummary& s = block.summary();
    const std::size_t n = block.shape().path_len;
    Matrix beta(block.vertex_count(), 1);

    for (std::size_t i = 0; i < n; ++i) {
        beta(block.path_vertex(i), 0) = block.weights().path[i] / s.cycle_totals[0];
    }
    Rational tail;
    for (std::size_t j = 0; j < block.cycle_count(); ++j) {
        tail += block.weights().branches[j].steps[0] / s.cycle_totals[j];
        if (j > 0) {
            tail -= s.branch_totals[j] / s.cycle_totals[j];
        }
    }
    beta(block.path_vertex(n), 0) = tail;
    for (std::size_t j = 0; j < block.cycle_count(); ++j) {
        const BranchWeights& branch = block.weights().branches[j];
        const std::size_t m = block.shape().branch_lens[j];
        for (std::size_t i = 1; i < m; ++i) {
            beta(block.branch_vertex(j, i), 0) = branch.steps[i] / s.cycle_totals[j];
        }
        beta(block.branch_vertex(j, m), 0) = branch.closing / s.cycle_totals[j];
    }
    beta.set_labels(block.local_names(), {});
    return beta;
}

Matrix block_laplacian_like(const WeightedBlock& block) {
    require_nonzero_cycles(block);
    const CycleSummary& s = block.summary();
    const std::size_t size = block.vertex_count();
    Matrix lap(size, size);

    // L = D_out - A_in, both over reciprocal cycle totals
    for (const BlockEdge& e : block_edges(block)) {
        const Rational coeff =
            (e.on_path ? s.cycle_totals[0] : s.cycle_totals[e.cycle]).reciprocal();
        lap(e.from, e.to) -= coeff;
        lap(e.from, e.from) += coeff;
    }

    // Lhat: rebalance u_n so columns sum to zero too
    if (block.cycle_count() > 1) {
        Rational shift;
        for (std::size_t j = 1; j < block.cycle_count(); ++j) {
            shift += s.cycle_totals[j].reciprocal();
        }
        const std::size_t u_n = block.path_vertex(block.shape().path_len);
        lap(u_n, block.path_vertex(0)) += shift;
        lap(u_n, u_n) -= shift;
    }

    std::vector<std::string> names = block.local_names();
    lap.set_labels(names, names);
    return lap;
}

Matrix block_inverse(const WeightedBlock& block) {
    require_nonzero_cycles(block);
    const Rational lambda = block_lambda(block);
    if (lambda.is_zero()) {
        throw SingularError(block.vertex_count() - 1,
                            "distance matrix is singular: lambda = det/cof = 0");
    }
    Matrix inv = -block_laplacian_like(block) +
                 rank_one(block_beta(block), block_alpha(block), lambda.reciprocal());
    std::vector<std::string> names = block.local_names();
    inv.set_labels(names, names);
    return inv;
}

Bag make_block_bag(const WeightedBlock& block) {
    Bag bag;
    bag.distance = block_distance_matrix(block);
    bag.lambda = block_lambda(block);
    bag.alpha = block_alpha(block);
    bag.beta = block_beta(block);
    bag.laplacian_like = block_laplacian_like(block);
    return bag;
}

namespace {

void require_consistent(const Bag& bag) {
    const std::size_t n = bag.distance.rows();
    if (!bag.distance.is_square() || !bag.laplacian_like.is_square() ||
        bag.laplacian_like.rows() != n || bag.alpha.rows() != n || bag.alpha.cols() != 1 ||
        bag.beta.rows() != n || bag.beta.cols() != 1) {
        throw DimensionError("bag members have inconsistent dimensions");
    }
}

ConditionResult compare_matrices(std::string name, const Matrix& expected, const Matrix& got) {
    ConditionResult result{std::move(name), true, std::nullopt};
    for (std::size_t i = 0; i < expected.rows(); ++i) {
        for (std::size_t j = 0; j < expected.cols(); ++j) {
            if (expected(i, j) != got(i, j)) {
                result.pass = false;
                result.first_mismatch = EntryMismatch{i, j, expected(i, j), got(i, j)};
                return result;
            }
        }
    }
    return result;
}

ConditionResult vector_sums_to_one(std::string name, const Matrix& column) {
    Rational total;
    for (std::size_t i = 0; i < column.rows(); ++i) {
        total += column(i, 0);
    }
    ConditionResult result{std::move(name), total == Rational(1), std::nullopt};
    if (!result.pass) {
        result.first_mismatch = EntryMismatch{0, 0, Rational(1), total};
    }
    return result;
}

}  // namespace

LapExpReport verify_left_lapexp(const Bag& bag) {
    require_consistent(bag);
    const std::size_t n = bag.distance.rows();
    const Matrix ones_col = Matrix::ones(n, 1);

    LapExpReport report;
    report.conditions.push_back(vector_sums_to_one("alpha-sums-to-one", bag.alpha));
    report.conditions.push_back(
        compare_matrices("laplacian-row-sums-zero", Matrix(n, 1), bag.laplacian_like * ones_col));
    report.conditions.push_back(compare_matrices(
        "alphaT-D-is-lambda-ones", Matrix::ones(1, n) * bag.lambda,
        bag.alpha.transpose() * bag.distance));
    report.conditions.push_back(compare_matrices(
        "LD-plus-I-is-beta-ones", rank_one(bag.beta, Matrix::ones(n, 1), 1),
        bag.laplacian_like * bag.distance + Matrix::identity(n)));
    return report;
}

LapExpReport verify_right_lapexp(const Bag& bag) {
    require_consistent(bag);
    const std::size_t n = bag.distance.rows();
    const Matrix ones_col = Matrix::ones(n, 1);

    LapExpReport report;
    report.conditions.push_back(vector_sums_to_one("beta-sums-to-one", bag.beta));
    report.conditions.push_back(compare_matrices("laplacian-col-sums-zero", Matrix(1, n),
                                                 ones_col.transpose() * bag.laplacian_like));
    report.conditions.push_back(compare_matrices("D-beta-is-lambda-ones",
                                                 ones_col * bag.lambda, bag.distance * bag.beta));
    report.conditions.push_back(compare_matrices(
        "DL-plus-I-is-ones-alpha", rank_one(Matrix::ones(n, 1), bag.alpha, 1),
        bag.distance * bag.laplacian_like + Matrix::identity(n)));
    return report;
}

}  // namespace cactoid
