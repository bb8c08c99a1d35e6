#include "cactoid/composition.hpp"

#include <utility>

#include "cactoid/distance.hpp"
#include "cactoid/linalg.hpp"

namespace cactoid {

Bag compose_bags(const CompositionInput& input) {
    const CactoidGraph& graph = input.graph;
    const std::size_t b = graph.block_count();
    if (input.block_bags.size() != b) {
        throw StructuralError("expected one bag per block, got " +
                              std::to_string(input.block_bags.size()) + " for " +
                              std::to_string(b) + " blocks");
    }

    Bag out;
    out.distance = graph_distance_matrix(graph);
    const std::size_t n = graph.vertex_count();

    for (std::size_t t = 0; t < b; ++t) {
        const Bag& bag = input.block_bags[t];
        const auto& embedding = graph.embeddings()[t];
        if (bag.distance.rows() != embedding.size() || bag.distance.cols() != embedding.size()) {
            throw StructuralError("bag " + std::to_string(t) +
                                  " does not match its block's vertex count");
        }
        if (out.distance.submatrix(embedding, embedding) != bag.distance) {
            throw StructuralError("bag " + std::to_string(t) +
                                  " distance matrix does not match the graph restriction");
        }
        LapExpReport report = verify_left_lapexp(bag);
        if (!report.pass()) {
            std::string failing;
            for (const auto& condition : report.conditions) {
                if (!condition.pass) {
                    failing = condition.name;
                    break;
                }
            }
            throw BagVerificationError(t, std::move(report),
                                       "bag for block " + graph.block_id(t) +
                                           " fails LapExp condition '" + failing + "'");
        }
    }

    out.lambda = 0;
    out.alpha = Matrix(n, 1);
    out.beta = Matrix(n, 1);
    out.laplacian_like = Matrix(n, n);
    for (std::size_t t = 0; t < b; ++t) {
        const Bag& bag = input.block_bags[t];
        const auto& embedding = graph.embeddings()[t];
        out.lambda += bag.lambda;
        for (std::size_t local = 0; local < embedding.size(); ++local) {
            out.alpha(embedding[local], 0) += bag.alpha(local, 0);
            out.beta(embedding[local], 0) += bag.beta(local, 0);
            for (std::size_t other = 0; other < embedding.size(); ++other) {
                out.laplacian_like(embedding[local], embedding[other]) +=
                    bag.laplacian_like(local, other);
            }
        }
    }
    for (std::size_t v = 0; v < n; ++v) {
        const Rational correction(static_cast<long long>(graph.block_index_of(v)) - 1);
        out.alpha(v, 0) -= correction;
        out.beta(v, 0) -= correction;
    }
    out.alpha.set_labels(graph.vertex_labels(), {});
    out.beta.set_labels(graph.vertex_labels(), {});
    out.laplacian_like.set_labels(graph.vertex_labels(), graph.vertex_labels());
    return out;
}

Rational graph_cof(const CactoidGraph& graph) {
    Rational product(1);
    for (std::size_t t = 0; t < graph.block_count(); ++t) {
        product *= block_cof(graph.block(t));
    }
    return product;
}

Rational graph_det(const CactoidGraph& graph) {
    const std::size_t b = graph.block_count();
    std::vector<Rational> dets(b);
    std::vector<Rational> cofs(b);
    for (std::size_t t = 0; t < b; ++t) {
        dets[t] = block_det(graph.block(t));
        cofs[t] = block_cof(graph.block(t));
    }
    Rational total;
    for (std::size_t i = 0; i < b; ++i) {
        if (dets[i].is_zero()) {
            continue;
        }
        Rational term = dets[i];
        for (std::size_t j = 0; j < b; ++j) {
            if (j != i) {
                term *= cofs[j];
            }
        }
        total += term;
    }
    return total;
}

Matrix graph_inverse(const CactoidGraph& graph) {
    CompositionInput input{graph, {}};
    input.block_bags.reserve(graph.block_count());
    for (std::size_t t = 0; t < graph.block_count(); ++t) {
        input.block_bags.push_back(make_block_bag(graph.block(t)));
    }
    Bag composed = compose_bags(input);
    if (composed.lambda.is_zero()) {
        throw SingularError(graph.vertex_count() - 1,
                            "graph distance matrix is singular: composed lambda = 0");
    }
    Matrix inv = -composed.laplacian_like +
                 rank_one(composed.beta, composed.alpha, composed.lambda.reciprocal());
    inv.set_labels(graph.vertex_labels(), graph.vertex_labels());
    return inv;
}

}  // namespace cactoid
