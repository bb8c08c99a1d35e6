#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cactoid/block.hpp"
#include "cactoid/formulas.hpp"
#include "cactoid/graph.hpp"

namespace cactoid {

/// Outcome of one identity on one block or graph. `checked` counts the entry
/// comparisons actually performed; identities that do not apply to the input
/// (e.g. inverse checks on a singular case) report checked = 0 and pass.
struct IdentityResult {
    std::string name;
    bool pass = true;
    std::uint64_t checked = 0;
    std::optional<EntryMismatch> first_mismatch;
};

/// Every closed form and identity a single block is expected to satisfy,
/// cross-checked against the brute-force oracles:
///   det-closed-form, cof-closed-form, lambda-det-over-cof,
///   cycle-pair-sum, rearrange-clockwise, rearrange-anticlockwise,
///   branch-distance-pair-sum, left-*/right-* LapExp conditions,
///   inverse-times-distance, inverse-matches-oracle,
///   metric-shortest-paths (positive weights only),
///   degenerate-det-zero (zero-weight cycles only).
/// The result list always contains all names, in this fixed order.
std::vector<IdentityResult> check_block_identities(const WeightedBlock& block);

/// Whole-graph identities: cofactor multiplicativity, the block-sum
/// determinant, lambda additivity and det = lambda * cof, block restriction
/// of the distance matrix, composed-bag LapExp suites, composed inverse
/// against the oracle and the metric cross-check.
std::vector<IdentityResult> check_graph_identities(const CactoidGraph& graph);

}  // namespace cactoid
