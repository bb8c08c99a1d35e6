#pragma once

#include <cstddef>
#include <vector>

#include "cactoid/errors.hpp"
#include "cactoid/formulas.hpp"
#include "cactoid/graph.hpp"

namespace cactoid {

/// Thrown when a bag handed to compose_bags fails its LapExp verification;
/// carries the per-condition report.
class BagVerificationError : public Error {
public:
    BagVerificationError(std::size_t block, LapExpReport report, const std::string& msg)
        : Error(msg), block_(block), report_(std::move(report)) {}

    std::size_t block() const noexcept { return block_; }
    const LapExpReport& report() const noexcept { return report_; }

private:
    std::size_t block_;
    LapExpReport report_;
};

/// Per-block bags aligned with the blocks of a graph. The embedding (block
/// local index -> global index) lives on the graph.
struct CompositionInput {
    const CactoidGraph& graph;
    std::vector<Bag> block_bags;
};

/// Folds per-block bags into a whole-graph bag:
///   lambda = sum of block lambdas,
///   alpha(v) = sum of participating block alphas at v minus (bi(v) - 1),
///   beta analogous, L = sum of the zero-padded block Laplacian-likes,
///   D = the whole-graph distance matrix.
/// Every input bag is verified (left conditions) against its own D first and
/// must equal the graph D restricted to its block; the result passes both
/// LapExp suites against the whole-graph D.
Bag compose_bags(const CompositionInput& input);

/// det D of the whole graph via the block decomposition:
/// sum_i det(D_i) * prod_{j != i} cof(D_j). Valid with zero cofactors too.
Rational graph_det(const CactoidGraph& graph);

/// cof D of the whole graph: the product of the block cofactor sums.
Rational graph_cof(const CactoidGraph& graph);

/// Exact inverse of the whole-graph distance matrix via the composed bag.
/// Throws ZeroCycleWeightError when some block has a zero-weight cycle and
/// SingularError when the composed lambda vanishes.
Matrix graph_inverse(const CactoidGraph& graph);

}  // namespace cactoid
