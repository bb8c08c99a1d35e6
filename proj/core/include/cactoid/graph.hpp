#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cactoid/block.hpp"

namespace cactoid {

/// Gluing instructions: (block index, local vertex name) -> global label.
/// Vertices of different blocks mapped to the same label are identified.
using Gluing = std::map<std::pair<std::size_t, std::string>, std::string>;

/// A validated cactoid-type digraph: blocks glued at cut vertices so that
/// the block intersection structure forms a tree. Global vertex order is
/// deterministic: blocks in input order, vertices of each block in their
/// local order, a glued vertex keeping its first occurrence position.
class CactoidGraph {
public:
    std::size_t block_count() const noexcept { return blocks_.size(); }
    const WeightedBlock& block(std::size_t t) const { return blocks_[t]; }
    const std::string& block_id(std::size_t t) const { return ids_[t]; }

    std::size_t vertex_count() const noexcept { return labels_.size(); }
    const std::vector<std::string>& vertex_labels() const noexcept { return labels_; }

    /// embeddings()[t][local index] = global index.
    const std::vector<std::vector<std::size_t>>& embeddings() const noexcept { return embeddings_; }

    /// Number of blocks containing global vertex v (>= 1; >= 2 at cut vertices).
    std::size_t block_index_of(std::size_t v) const { return block_index_[v]; }

    /// Blocks adjacent to block t in the block tree, with the shared cut
    /// vertex (global index) realizing each adjacency.
    const std::vector<std::vector<std::pair<std::size_t, std::size_t>>>& block_adjacency() const noexcept {
        return block_adjacency_;
    }

    /// Some block containing v (the first in input order).
    std::size_t home_block(std::size_t v) const { return home_block_[v]; }

    /// Local index of global vertex v inside block t; throws if v is not in t.
    std::size_t local_index(std::size_t t, std::size_t v) const;

private:
    friend CactoidGraph assemble_graph(std::vector<WeightedBlock> blocks, const Gluing& gluing,
                                       std::vector<std::string> ids);

    std::vector<WeightedBlock> blocks_;
    std::vector<std::string> ids_;
    std::vector<std::string> labels_;
    std::vector<std::vector<std::size_t>> embeddings_;
    std::vector<std::size_t> block_index_;
    std::vector<std::size_t> home_block_;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> block_adjacency_;
};

/// Glues blocks into a cactoid-type digraph and validates the result.
/// Throws NotACactoidError when two blocks share more than one vertex,
/// ConnectivityError when the gluing leaves the graph disconnected and
/// BlockTreeError when the block intersection structure contains a cycle.
/// `ids` defaults to "B1", "B2", ...; unlabeled vertices get "<id>.<local>"
/// as their global label.
CactoidGraph assemble_graph(std::vector<WeightedBlock> blocks, const Gluing& gluing = {},
                            std::vector<std::string> ids = {});

}  // namespace cactoid
