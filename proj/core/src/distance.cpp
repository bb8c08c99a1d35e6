#include "cactoid/distance.hpp"

#include <optional>
#include <queue>
#include <vector>

#include "cactoid/errors.hpp"

namespace cactoid {

namespace {

// prefix[i] = sum of the first i weights
std::vector<Rational> prefix_sums(const std::vector<Rational>& weights) {
    std::vector<Rational> prefix(weights.size() + 1);
    for (std::size_t i = 0; i < weights.size(); ++i) {
        prefix[i + 1] = prefix[i] + weights[i];
    }
    return prefix;
}

}  // namespace

Matrix block_distance_matrix(const WeightedBlock& block) {
    const BlockShape& shape = block.shape();
    const CycleSummary& summary = block.summary();
    const std::size_t n = shape.path_len;
    const std::size_t r = shape.cycle_count();
    const std::size_t size = block.vertex_count();

    const std::vector<Rational> path_prefix = prefix_sums(block.weights().path);
    std::vector<std::vector<Rational>> branch_prefix;
    branch_prefix.reserve(r);
    for (std::size_t c = 0; c < r; ++c) {
        branch_prefix.push_back(prefix_sums(block.weights().branches[c].steps));
    }

    const Rational& w_min = summary.cycle_totals[0];
    const Rational& w_c = summary.path_total;

    Matrix d(size, size);

    // path <-> path
    for (std::size_t p = 0; p <= n; ++p) {
        for (std::size_t q = p + 1; q <= n; ++q) {
            const Rational forward = path_prefix[q] - path_prefix[p];
            d(block.path_vertex(p), block.path_vertex(q)) = forward;
            d(block.path_vertex(q), block.path_vertex(p)) = w_min - forward;
        }
    }

    for (std::size_t j = 0; j < r; ++j) {
        const std::size_t m = shape.branch_lens[j];
        const Rational& w_j = summary.cycle_totals[j];
        const Rational& what_j = summary.branch_totals[j];

        // path <-> branch j
        for (std::size_t p = 0; p <= n; ++p) {
            for (std::size_t q = 1; q <= m; ++q) {
                d(block.path_vertex(p), block.branch_vertex(j, q)) =
                    (w_c - path_prefix[p]) + branch_prefix[j][q];
                d(block.branch_vertex(j, q), block.path_vertex(p)) =
                    (what_j - branch_prefix[j][q]) + path_prefix[p];
            }
        }

        // within branch j
        for (std::size_t p = 1; p <= m; ++p) {
            for (std::size_t q = p + 1; q <= m; ++q) {
                const Rational forward = branch_prefix[j][q] - branch_prefix[j][p];
                d(block.branch_vertex(j, p), block.branch_vertex(j, q)) = forward;
                d(block.branch_vertex(j, q), block.branch_vertex(j, p)) = w_j - forward;
            }
        }

        // branch j -> branch l, through u_0
        for (std::size_t l = 0; l < r; ++l) {
            if (l == j) {
                continue;
            }
            for (std::size_t p = 1; p <= m; ++p) {
                for (std::size_t q = 1; q <= shape.branch_lens[l]; ++q) {
                    d(block.branch_vertex(j, p), block.branch_vertex(l, q)) =
                        w_j - branch_prefix[j][p] + branch_prefix[l][q];
                }
            }
        }
    }

    std::vector<std::string> names = block.local_names();
    d.set_labels(names, names);
    return d;
}

Matrix graph_distance_matrix(const CactoidGraph& graph) {
    const std::size_t b = graph.block_count();
    std::vector<Matrix> block_d;
    block_d.reserve(b);
    for (std::size_t t = 0; t < b; ++t) {
        block_d.push_back(block_distance_matrix(graph.block(t)));
    }
    if (b == 1) {
        Matrix d = block_d[0];
        d.set_labels(graph.vertex_labels(), graph.vertex_labels());
        return d;
    }

    // For every ordered block pair, the chain of blocks and the cut vertices
    // entered along the unique block-tree path.
    struct Hop {
        std::size_t parent_block;
        std::size_t via_vertex;  // global cut vertex shared with the parent
    };
    std::vector<std::vector<Hop>> hops(b, std::vector<Hop>(b));
    std::vector<std::vector<char>> seen(b, std::vector<char>(b, 0));
    for (std::size_t root = 0; root < b; ++root) {
        std::queue<std::size_t> frontier;
        frontier.push(root);
        seen[root][root] = 1;
        while (!frontier.empty()) {
            const std::size_t t = frontier.front();
            frontier.pop();
            for (const auto& [s, v] : graph.block_adjacency()[t]) {
                if (!seen[root][s]) {
                    seen[root][s] = 1;
                    hops[root][s] = {t, v};
                    frontier.push(s);
                }
            }
        }
    }

    const std::size_t size = graph.vertex_count();
    Matrix d(size, size);
    auto local_distance = [&](std::size_t t, std::size_t gx, std::size_t gy) -> Rational {
        return block_d[t](graph.local_index(t, gx), graph.local_index(t, gy));
    };

    for (std::size_t x = 0; x < size; ++x) {
        for (std::size_t y = 0; y < size; ++y) {
            if (x == y) {
                continue;
            }
            const std::size_t bx = graph.home_block(x);
            // walk up from y's home block toward bx, collecting the chain
            std::size_t t = graph.home_block(y);
            Rational total;
            std::size_t target = y;
            while (t != bx) {
                const Hop& hop = hops[bx][t];
                if (hop.via_vertex != target) {
                    total += local_distance(t, hop.via_vertex, target);
                }
                target = hop.via_vertex;
                t = hop.parent_block;
            }
            if (target != x) {
                total += local_distance(bx, x, target);
            }
            d(x, y) = total;
        }
    }
    d.set_labels(graph.vertex_labels(), graph.vertex_labels());
    return d;
}

Matrix shortest_path_oracle(const CactoidGraph& graph) {
    const std::size_t size = graph.vertex_count();
    std::vector<std::optional<Rational>> dist(size * size);
    auto entry = [&](std::size_t i, std::size_t j) -> std::optional<Rational>& {
        return dist[i * size + j];
    };
    for (std::size_t i = 0; i < size; ++i) {
        entry(i, i) = Rational(0);
    }
    for (std::size_t t = 0; t < graph.block_count(); ++t) {
        const auto& embedding = graph.embeddings()[t];
        for (const BlockEdge& e : block_edges(graph.block(t))) {
            if (!e.weight.is_positive()) {
                throw OracleDomainError("shortest-path oracle needs positive weights, got " +
                                        e.weight.str());
            }
            auto& slot = entry(embedding[e.from], embedding[e.to]);
            if (!slot || e.weight < *slot) {
                slot = e.weight;
            }
        }
    }
    for (std::size_t k = 0; k < size; ++k) {
        for (std::size_t i = 0; i < size; ++i) {
            if (!entry(i, k)) {
                continue;
            }
            for (std::size_t j = 0; j < size; ++j) {
                if (!entry(k, j)) {
                    continue;
                }
                const Rational through = *entry(i, k) + *entry(k, j);
                auto& slot = entry(i, j);
                if (!slot || through < *slot) {
                    slot = through;
                }
            }
        }
    }
    Matrix d(size, size);
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) {
            if (!entry(i, j)) {
                throw StructuralError("graph is not strongly connected");  // unreachable for valid input
            }
            d(i, j) = *entry(i, j);
        }
    }
    d.set_labels(graph.vertex_labels(), graph.vertex_labels());
    return d;
}

Matrix shortest_path_oracle(const WeightedBlock& block) {
    return shortest_path_oracle(assemble_graph({block}));
}

}  // namespace cactoid
