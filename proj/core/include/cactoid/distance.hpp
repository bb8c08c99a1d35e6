#pragma once

#include "cactoid/block.hpp"
#include "cactoid/graph.hpp"
#include "cactoid/matrix.hpp"

namespace cactoid {

/// Distance matrix of a single block, straight from the closed-form table:
/// forward distances follow the edges, backward distances close around the
/// minimum-weight cycle (within a branch, around its own cycle), and
/// branch-to-branch distances run through u_0. With arbitrary rational
/// weights this table *is* the definition of the generalized distance
/// matrix; no path search is involved. Rows/columns are labeled with the
/// local vertex names.
Matrix block_distance_matrix(const WeightedBlock& block);

/// Distance matrix of a whole graph. Distances inside one block come from
/// the block table; across blocks they are summed along the unique chain of
/// cut vertices in the block tree. Labeled with the global vertex labels.
Matrix graph_distance_matrix(const CactoidGraph& graph);

/// All-pairs shortest paths over the explicit edge list (Floyd-Warshall).
/// Only meaningful when every weight is positive, where it must coincide
/// with the table; throws OracleDomainError otherwise.
Matrix shortest_path_oracle(const CactoidGraph& graph);

/// Convenience wrapper: a single-block graph for the oracle above.
Matrix shortest_path_oracle(const WeightedBlock& block);

}  // namespace cactoid
