#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cactoid/rational.hpp"

namespace cactoid {

/// Shape of one block: r directed cycles sharing a common directed path of
/// n edges. Cycle j consists of the common path u_0 -> ... -> u_n, a branch
/// u_n -> v_1 -> ... -> v_{m_j} of m_j edges and a closing edge v_{m_j} -> u_0.
struct BlockShape {
    std::size_t path_len = 0;               // n >= 1
    std::vector<std::size_t> branch_lens;   // m_j >= 1, one per cycle, r >= 1

    std::size_t cycle_count() const noexcept { return branch_lens.size(); }
    std::size_t vertex_count() const noexcept;

    /// Throws StructuralError unless n >= 1, r >= 1 and every m_j >= 1.
    void validate() const;
};

/// Weights of one branch: W_1..W_m on the branch edges plus the closing
/// weight W_0 on the edge back to u_0.
struct BranchWeights {
    std::vector<Rational> steps;
    Rational closing;
};

struct BlockWeights {
    std::vector<Rational> path;             // W_1..W_n, edge u_{i-1} -> u_i
    std::vector<BranchWeights> branches;    // aligned with BlockShape::branch_lens
};

/// Derived totals for one block, in canonical (sorted) cycle order:
///   path_total        w_c        = sum of path weights
///   branch_totals[j]  what_j     = sum of branch j weights incl. closing
///   cycle_totals[j]   w_j        = w_c + what_j, ascending
///   path_pair_sum     w_c2       = sum of path weights two at a time
///   branch_pair_sums[j] w_j2     = same over branch j incl. closing weight
struct CycleSummary {
    Rational path_total;
    std::vector<Rational> branch_totals;
    std::vector<Rational> cycle_totals;
    Rational path_pair_sum;
    std::vector<Rational> branch_pair_sums;
};

/// A block in canonical form: cycles stably sorted by total weight so that
/// cycle 1 is a minimum-weight cycle, which every closed form below relies
/// on. The permutation applied during sorting is kept so callers can map
/// results back to the order they supplied.
class WeightedBlock {
public:
    const BlockShape& shape() const noexcept { return shape_; }
    const BlockWeights& weights() const noexcept { return weights_; }
    const CycleSummary& summary() const noexcept { return summary_; }

    /// cycle_permutation()[c] is the input index of canonical cycle c.
    const std::vector<std::size_t>& cycle_permutation() const noexcept { return permutation_; }

    std::size_t cycle_count() const noexcept { return shape_.cycle_count(); }
    std::size_t vertex_count() const noexcept { return shape_.vertex_count(); }

    /// Local vertex indexing follows the fixed order
    /// u_0..u_n, v_1^(1)..v_{m_1}^(1), ..., v_1^(r)..v_{m_r}^(r)
    /// with cycles in canonical order.
    std::size_t path_vertex(std::size_t i) const;                      // u_i
    std::size_t branch_vertex(std::size_t cycle, std::size_t i) const; // v_i^(cycle), i in 1..m

    /// Names in the same order. Path vertices are "u0".."u{n}"; branch
    /// vertices are "v{i}.{j}" where j is the 1-based *input* cycle number,
    /// so names stay meaningful to whoever wrote the block down.
    std::vector<std::string> local_names() const;
    std::string local_name(std::size_t index) const;

    /// Resolves "u{i}" / "v{i}.{j}" (input cycle numbering) to a local index.
    std::optional<std::size_t> find_local(std::string_view name) const;

    /// All n + m_j + 1 weights around canonical cycle j, in traversal order
    /// starting at u_0: W_1..W_n, W_1^(j)..W_{m_j}^(j), W_0^(j).
    std::vector<Rational> cycle_weight_list(std::size_t cycle) const;

    bool all_cycles_nonzero() const;
    bool all_weights_positive() const;

private:
    friend WeightedBlock canonicalize_block(BlockShape shape, BlockWeights weights);

    BlockShape shape_;
    BlockWeights weights_;
    CycleSummary summary_;
    std::vector<std::size_t> permutation_;
};

/// Validates shape/weights consistency, sorts cycles by total weight
/// (stable, so ties keep input order) and computes all summaries.
/// Throws StructuralError on length mismatches.
WeightedBlock canonicalize_block(BlockShape shape, BlockWeights weights);

/// Pairwise-product sums (w_c2, [w_j2]) of a canonical block, recomputed
/// from the weights.
std::pair<Rational, std::vector<Rational>> pair_sums(const WeightedBlock& block);

/// Sum of the products of all unordered pairs of the given weights.
Rational pair_sum(const std::vector<Rational>& weights);

/// One directed edge of a block, in local vertex indices. `cycle` is the
/// canonical cycle owning the edge; path edges are shared by all cycles and
/// are marked with on_path instead.
struct BlockEdge {
    std::size_t from;
    std::size_t to;
    Rational weight;
    bool on_path;
    std::size_t cycle;  // meaningful when !on_path
};

std::vector<BlockEdge> block_edges(const WeightedBlock& block);

}  // namespace cactoid
