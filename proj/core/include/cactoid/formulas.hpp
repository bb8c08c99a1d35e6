#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cactoid/block.hpp"
#include "cactoid/matrix.hpp"

namespace cactoid {

/// The (D, lambda, alpha, beta, L) tuple that expresses the inverse of a
/// distance matrix as D^-1 = -L + (1/lambda) beta alpha^T. alpha and beta
/// are |V| x 1 columns, laplacian_like has zero row and column sums.
struct Bag {
    Matrix distance;
    Rational lambda;
    Matrix alpha;
    Matrix beta;
    Matrix laplacian_like;
};

/// Determinant of the block distance matrix in closed form. With every
/// cycle weight nonzero this is (-1)^(|V|-1) * w_1^n * prod_j w_j^(m_j)
/// * lambda. A zero-weight cycle collapses the determinant to 0, with one
/// exception: exactly one zero cycle whose branch has a single edge (and a
/// nonzero minimum cycle), where the value is
/// (-1)^(|V|-1) * w_1^(n+m_1) * prod_{l != 1,j} w_l^(m_l) * W_1^(j) W_0^(j).
/// Exact in all cases; the test suite pins it against the elimination
/// oracle on every branch.
Rational block_det(const WeightedBlock& block);

/// Sum of all cofactors of the block distance matrix:
/// (-1)^(|V|-1) * w_1^n * prod_j w_j^(m_j).
Rational block_cof(const WeightedBlock& block);

/// lambda = det/cof = w_c*what_1/w_1 + w_c2/w_1 + sum_j w_j2/w_j.
/// Throws ZeroCycleWeightError when some w_j = 0.
Rational block_lambda(const WeightedBlock& block);

/// alpha: entry of vertex x is (weight of the edge entering x) / (total
/// weight of that edge's cycle); path edges count toward the minimum cycle.
/// u_0, entered by all r closing edges, carries
/// sum_j W_0^(j)/w_j - sum_{j>=2} what_j/w_j.
Matrix block_alpha(const WeightedBlock& block);

/// beta: same with the edge *leaving* x; u_n, left by all r branch starts,
/// carries sum_j W_1^(j)/w_j - sum_{j>=2} what_j/w_j.
Matrix block_beta(const WeightedBlock& block);

/// Laplacian-like matrix L = D_out - A_in + Lhat. A_in weights each edge by
/// the reciprocal of its cycle total (path edges by 1/w_1), D_out holds the
/// out-sums, and Lhat moves sum_{j>=2} 1/w_j from the (u_n,u_n) diagonal to
/// (u_n,u_0) so that column sums vanish as well.
Matrix block_laplacian_like(const WeightedBlock& block);

/// Exact inverse of the block distance matrix through the rank-one form
/// -L + (1/lambda) beta alpha^T. Throws ZeroCycleWeightError when some
/// w_j = 0 and SingularError when lambda = 0.
Matrix block_inverse(const WeightedBlock& block);

/// All of the above bundled; requires every cycle weight nonzero.
Bag make_block_bag(const WeightedBlock& block);

struct EntryMismatch {
    std::size_t row;
    std::size_t col;
    Rational expected;
    Rational got;
};

struct ConditionResult {
    std::string name;
    bool pass;
    std::optional<EntryMismatch> first_mismatch;
};

struct LapExpReport {
    std::vector<ConditionResult> conditions;

    bool pass() const {
        for (const auto& c : conditions) {
            if (!c.pass) {
                return false;
            }
        }
        return true;
    }
};

/// Left conditions: alpha^T 1 = 1, L 1 = 0, alpha^T D = lambda 1^T,
/// L D + I = beta 1^T. Reports every condition with the first failing entry.
LapExpReport verify_left_lapexp(const Bag& bag);

/// Right conditions: beta^T 1 = 1, 1^T L = 0, D beta = lambda 1,
/// D L + I = 1 alpha^T.
LapExpReport verify_right_lapexp(const Bag& bag);

}  // namespace cactoid
