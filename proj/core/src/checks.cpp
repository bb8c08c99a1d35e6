#include "cactoid/checks.hpp"

#include <utility>

#include "cactoid/composition.hpp"
#include "cactoid/distance.hpp"
#include "cactoid/linalg.hpp"

namespace cactoid {

namespace {

IdentityResult skipped(std::string name) { return IdentityResult{std::move(name), true, 0, {}}; }

IdentityResult scalar_check(std::string name, const Rational& expected, const Rational& got) {
    IdentityResult result{std::move(name), expected == got, 1, {}};
    if (!result.pass) {
        result.first_mismatch = EntryMismatch{0, 0, expected, got};
    }
    return result;
}

IdentityResult matrix_check(std::string name, const Matrix& expected, const Matrix& got) {
    IdentityResult result{std::move(name), true, 0, {}};
    if (expected.rows() != got.rows() || expected.cols() != got.cols()) {
        result.pass = false;
        result.first_mismatch = EntryMismatch{0, 0, Rational(static_cast<long long>(expected.rows())),
                                              Rational(static_cast<long long>(got.rows()))};
        return result;
    }
    result.checked = static_cast<std::uint64_t>(expected.rows()) * expected.cols();
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

IdentityResult from_condition(std::string prefix, const ConditionResult& condition,
                              std::uint64_t checked) {
    IdentityResult result{std::move(prefix) + condition.name, condition.pass, checked,
                          condition.first_mismatch};
    return result;
}

// Accumulation of the pair sum along the cycle in forward (clockwise)
// direction starting at position s.
Rational clockwise_sum(const std::vector<Rational>& theta, std::size_t s) {
    const std::size_t n = theta.size();
    Rational total;
    for (std::size_t t = 0; t + 1 < n; ++t) {
        Rational inner;
        for (std::size_t u = t + 1; u < n; ++u) {
            inner += theta[(s + u) % n];
        }
        total += theta[(s + t) % n] * inner;
    }
    return total;
}

// Same sum accumulated against the orientation.
Rational anticlockwise_sum(const std::vector<Rational>& theta, std::size_t s) {
    const std::size_t n = theta.size();
    Rational total;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        Rational inner;
        for (std::size_t j = 1; j + i < n; ++j) {
            inner += theta[(s + j) % n];
        }
        total += theta[(s + n - i) % n] * inner;
    }
    return total;
}

}  // namespace

std::vector<IdentityResult> check_block_identities(const WeightedBlock& block) {
    std::vector<IdentityResult> results;
    const Matrix d = block_distance_matrix(block);
    const CycleSummary& s = block.summary();
    const std::size_t r = block.cycle_count();
    const bool regular = block.all_cycles_nonzero();

    results.push_back(scalar_check("det-closed-form", det(d), block_det(block)));
    results.push_back(scalar_check("cof-closed-form", cofactor_sum(d), block_cof(block)));

    if (regular) {
        results.push_back(
            scalar_check("lambda-det-over-cof", block_det(block) / block_cof(block), block_lambda(block)));
    } else {
        results.push_back(skipped("lambda-det-over-cof"));
    }

    {
        IdentityResult result{"cycle-pair-sum", true, 0, {}};
        for (std::size_t j = 0; j < r; ++j) {
            const Rational whole_cycle = pair_sum(block.cycle_weight_list(j));
            const Rational split =
                s.path_total * s.branch_totals[j] + s.path_pair_sum + s.branch_pair_sums[j];
            ++result.checked;
            if (whole_cycle != split) {
                result.pass = false;
                result.first_mismatch = EntryMismatch{j, 0, whole_cycle, split};
                break;
            }
        }
        results.push_back(std::move(result));
    }

    {
        IdentityResult clockwise{"rearrange-clockwise", true, 0, {}};
        IdentityResult anticlockwise{"rearrange-anticlockwise", true, 0, {}};
        for (std::size_t j = 0; j < r; ++j) {
            const std::vector<Rational> theta = block.cycle_weight_list(j);
            const Rational expected = pair_sum(theta);
            for (std::size_t start = 0; start < theta.size(); ++start) {
                ++clockwise.checked;
                const Rational cw = clockwise_sum(theta, start);
                if (clockwise.pass && cw != expected) {
                    clockwise.pass = false;
                    clockwise.first_mismatch = EntryMismatch{j, start, expected, cw};
                }
                ++anticlockwise.checked;
                const Rational acw = anticlockwise_sum(theta, start);
                if (anticlockwise.pass && acw != expected) {
                    anticlockwise.pass = false;
                    anticlockwise.first_mismatch = EntryMismatch{j, start, expected, acw};
                }
            }
        }
        results.push_back(std::move(clockwise));
        results.push_back(std::move(anticlockwise));
    }

    {
        // w_j2 = w_j d(u_n, v_s) + [sum_i W_i d(v_i, v_s) - d(u_n, v_m) d(u_0, v_s)]
        IdentityResult result{"branch-distance-pair-sum", true, 0, {}};
        const std::size_t u0 = block.path_vertex(0);
        const std::size_t un = block.path_vertex(block.shape().path_len);
        for (std::size_t j = 0; j < r; ++j) {
            const std::size_t m = block.shape().branch_lens[j];
            const std::size_t vm = block.branch_vertex(j, m);
            for (std::size_t vs = 1; vs <= m; ++vs) {
                const std::size_t target = block.branch_vertex(j, vs);
                Rational inner;
                for (std::size_t i = 1; i <= m; ++i) {
                    inner += block.weights().branches[j].steps[i - 1] *
                             d(block.branch_vertex(j, i), target);
                }
                const Rational rhs = s.cycle_totals[j] * d(un, target) + inner -
                                     d(un, vm) * d(u0, target);
                ++result.checked;
                if (rhs != s.branch_pair_sums[j]) {
                    result.pass = false;
                    result.first_mismatch = EntryMismatch{j, vs, s.branch_pair_sums[j], rhs};
                    break;
                }
            }
            if (!result.pass) {
                break;
            }
        }
        results.push_back(std::move(result));
    }

    if (regular) {
        const Bag bag = make_block_bag(block);
        const std::uint64_t cell_count =
            static_cast<std::uint64_t>(d.rows()) * static_cast<std::uint64_t>(d.cols());
        for (const ConditionResult& condition : verify_left_lapexp(bag).conditions) {
            results.push_back(from_condition("left-", condition, cell_count));
        }
        for (const ConditionResult& condition : verify_right_lapexp(bag).conditions) {
            results.push_back(from_condition("right-", condition, cell_count));
        }
        if (!bag.lambda.is_zero()) {
            const Matrix inv = block_inverse(block);
            results.push_back(
                matrix_check("inverse-times-distance", Matrix::identity(d.rows()), inv * d));
            results.push_back(matrix_check("inverse-matches-oracle", inverse(d), inv));
        } else {
            results.push_back(skipped("inverse-times-distance"));
            results.push_back(skipped("inverse-matches-oracle"));
        }
    } else {
        for (const char* name :
             {"left-alpha-sums-to-one", "left-laplacian-row-sums-zero", "left-alphaT-D-is-lambda-ones",
              "left-LD-plus-I-is-beta-ones", "right-beta-sums-to-one", "right-laplacian-col-sums-zero",
              "right-D-beta-is-lambda-ones", "right-DL-plus-I-is-ones-alpha", "inverse-times-distance",
              "inverse-matches-oracle"}) {
            results.push_back(skipped(name));
        }
    }

    if (block.all_weights_positive()) {
        results.push_back(matrix_check("metric-shortest-paths", shortest_path_oracle(block), d));
    } else {
        results.push_back(skipped("metric-shortest-paths"));
    }

    if (!regular) {
        // every zero-weight configuration collapses the determinant except
        // a lone zero cycle with a one-edge branch (det-closed-form still
        // pins that case against the oracle above)
        std::vector<std::size_t> zero_cycles;
        for (std::size_t j = 0; j < r; ++j) {
            if (s.cycle_totals[j].is_zero()) {
                zero_cycles.push_back(j);
            }
        }
        const bool collapses = zero_cycles.size() > 1 || zero_cycles.front() == 0 ||
                               block.shape().branch_lens[zero_cycles.front()] != 1;
        if (collapses) {
            results.push_back(scalar_check("degenerate-det-zero", Rational(0), det(d)));
        } else {
            results.push_back(skipped("degenerate-det-zero"));
        }
    } else {
        results.push_back(skipped("degenerate-det-zero"));
    }

    return results;
}

std::vector<IdentityResult> check_graph_identities(const CactoidGraph& graph) {
    std::vector<IdentityResult> results;
    const Matrix d = graph_distance_matrix(graph);
    const std::size_t b = graph.block_count();

    results.push_back(scalar_check("graph-cof-product", cofactor_sum(d), graph_cof(graph)));
    results.push_back(scalar_check("graph-det-blocks", det(d), graph_det(graph)));

    {
        IdentityResult result{"graph-block-restriction", true, 0, {}};
        for (std::size_t t = 0; t < b; ++t) {
            const auto& embedding = graph.embeddings()[t];
            const IdentityResult piece = matrix_check(
                "", block_distance_matrix(graph.block(t)), d.submatrix(embedding, embedding));
            result.checked += piece.checked;
            if (!piece.pass && result.pass) {
                result.pass = false;
                result.first_mismatch = piece.first_mismatch;
            }
        }
        results.push_back(std::move(result));
    }

    bool regular = true;
    for (std::size_t t = 0; t < b; ++t) {
        regular = regular && graph.block(t).all_cycles_nonzero();
    }

    if (regular) {
        CompositionInput input{graph, {}};
        Rational lambda_sum;
        for (std::size_t t = 0; t < b; ++t) {
            input.block_bags.push_back(make_block_bag(graph.block(t)));
            lambda_sum += input.block_bags.back().lambda;
        }
        const Bag composed = compose_bags(input);
        results.push_back(scalar_check("graph-lambda-additive", lambda_sum, composed.lambda));
        results.push_back(scalar_check("graph-lambda-det-over-cof", graph_det(graph),
                                       composed.lambda * graph_cof(graph)));
        const std::uint64_t cell_count =
            static_cast<std::uint64_t>(d.rows()) * static_cast<std::uint64_t>(d.cols());
        for (const ConditionResult& condition : verify_left_lapexp(composed).conditions) {
            results.push_back(from_condition("graph-left-", condition, cell_count));
        }
        for (const ConditionResult& condition : verify_right_lapexp(composed).conditions) {
            results.push_back(from_condition("graph-right-", condition, cell_count));
        }
        if (!composed.lambda.is_zero()) {
            const Matrix inv = graph_inverse(graph);
            results.push_back(
                matrix_check("graph-inverse-times-distance", Matrix::identity(d.rows()), inv * d));
            results.push_back(matrix_check("graph-inverse-matches-oracle", inverse(d), inv));
        } else {
            results.push_back(skipped("graph-inverse-times-distance"));
            results.push_back(skipped("graph-inverse-matches-oracle"));
        }
    } else {
        for (const char* name :
             {"graph-lambda-additive", "graph-lambda-det-over-cof", "graph-left-alpha-sums-to-one",
              "graph-left-laplacian-row-sums-zero", "graph-left-alphaT-D-is-lambda-ones",
              "graph-left-LD-plus-I-is-beta-ones", "graph-right-beta-sums-to-one",
              "graph-right-laplacian-col-sums-zero", "graph-right-D-beta-is-lambda-ones",
              "graph-right-DL-plus-I-is-ones-alpha", "graph-inverse-times-distance",
              "graph-inverse-matches-oracle"}) {
            results.push_back(skipped(name));
        }
        results.push_back(scalar_check("graph-degenerate-det", graph_det(graph), det(d)));
    }

    bool positive = true;
    for (std::size_t t = 0; t < b; ++t) {
        positive = positive && graph.block(t).all_weights_positive();
    }
    if (positive) {
        results.push_back(matrix_check("graph-metric-shortest-paths", shortest_path_oracle(graph), d));
    } else {
        results.push_back(skipped("graph-metric-shortest-paths"));
    }

    return results;
}

}  // namespace cactoid
