#include "cactoid/undirected.hpp"

#include <algorithm>
#include <deque>
#include <utility>

#include "cactoid/errors.hpp"
#include "cactoid/linalg.hpp"

namespace cactoid {

std::size_t UndirectedShape::vertex_count() const noexcept {
    std::size_t total = path_len + 1;
    for (std::size_t m : branch_lens) {
        total += m;
    }
    return total;
}

UndirectedShape make_undirected_shape(std::size_t n, std::vector<std::size_t> m) {
    if (n < 1) {
        throw StructuralError("common path length must be at least 1");
    }
    if (m.empty()) {
        throw StructuralError("shape needs at least one cycle");
    }
    for (std::size_t len : m) {
        if (len < 1) {
            throw StructuralError("every branch length must be at least 1");
        }
    }
    std::sort(m.begin(), m.end());
    return UndirectedShape{n, std::move(m)};
}

namespace {

struct VertexIndexing {
    std::size_t n;
    std::vector<std::size_t> branch_start;  // local index of v_1^(j)

    std::size_t u(std::size_t i) const { return i; }
    std::size_t v(std::size_t j, std::size_t i) const { return branch_start[j] + i - 1; }
};

VertexIndexing indexing_of(const UndirectedShape& shape) {
    VertexIndexing idx;
    idx.n = shape.path_len;
    idx.branch_start.reserve(shape.cycle_count());
    std::size_t next = shape.path_len + 1;
    for (std::size_t m : shape.branch_lens) {
        idx.branch_start.push_back(next);
        next += m;
    }
    return idx;
}

std::vector<std::string> shape_labels(const UndirectedShape& shape) {
    std::vector<std::string> labels;
    labels.reserve(shape.vertex_count());
    for (std::size_t i = 0; i <= shape.path_len; ++i) {
        labels.push_back("u" + std::to_string(i));
    }
    for (std::size_t j = 0; j < shape.cycle_count(); ++j) {
        for (std::size_t i = 1; i <= shape.branch_lens[j]; ++i) {
            labels.push_back("v" + std::to_string(i) + "." + std::to_string(j + 1));
        }
    }
    return labels;
}

std::vector<std::vector<std::size_t>> adjacency_of(const UndirectedShape& shape) {
    const VertexIndexing idx = indexing_of(shape);
    std::vector<std::vector<std::size_t>> adj(shape.vertex_count());
    auto link = [&](std::size_t a, std::size_t b) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    };
    for (std::size_t i = 1; i <= shape.path_len; ++i) {
        link(idx.u(i - 1), idx.u(i));
    }
    for (std::size_t j = 0; j < shape.cycle_count(); ++j) {
        const std::size_t m = shape.branch_lens[j];
        link(idx.u(shape.path_len), idx.v(j, 1));
        for (std::size_t i = 2; i <= m; ++i) {
            link(idx.v(j, i - 1), idx.v(j, i));
        }
        link(idx.v(j, m), idx.u(0));
    }
    return adj;
}

}  // namespace

Matrix undirected_distance_matrix(const UndirectedShape& shape) {
    const std::size_t size = shape.vertex_count();
    const auto adj = adjacency_of(shape);
    Matrix d(size, size);
    std::vector<long long> dist(size);
    for (std::size_t source = 0; source < size; ++source) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[source] = 0;
        std::deque<std::size_t> frontier{source};
        while (!frontier.empty()) {
            const std::size_t x = frontier.front();
            frontier.pop_front();
            for (std::size_t y : adj[x]) {
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    frontier.push_back(y);
                }
            }
        }
        for (std::size_t y = 0; y < size; ++y) {
            d(source, y) = dist[y];
        }
    }
    std::vector<std::string> labels = shape_labels(shape);
    d.set_labels(labels, labels);
    return d;
}

namespace {

std::string u_label(std::size_t i) { return "u" + std::to_string(i); }
std::string v_label(std::size_t j, std::size_t i) {
    return "v" + std::to_string(i) + "." + std::to_string(j + 1);
}

Rational bracket_value(std::size_t r, std::size_t k) {
    // (-2)^(r-1) * [k(k+1) - (r-1)(3k^2 - k - 2)]
    const BigInt kk(k);
    const BigInt rr(r);
    const BigInt inner = kk * (kk + 1) - (rr - 1) * (3 * kk * kk - kk - 2);
    Rational sign_pow(1);
    for (std::size_t i = 1; i < r; ++i) {
        sign_pow *= -2;
    }
    return sign_pow * Rational(inner);
}

Rational power_of_two(std::size_t exponent) {
    Rational p(1);
    for (std::size_t i = 0; i < exponent; ++i) {
        p *= 2;
    }
    return p;
}

}  // namespace

DetVerdict classify_det(const UndirectedShape& shape) {
    const std::size_t n = shape.path_len;
    const std::size_t r = shape.cycle_count();
    const auto& m = shape.branch_lens;

    DetVerdict verdict;

    if (r == 1) {
        const std::size_t cycle_vertices = shape.vertex_count();  // n + 1 + m_1
        if (cycle_vertices % 2 == 0) {
            verdict.kind = VerdictKind::Zero;
            verdict.rule = "cycle-even";
        } else {
            const std::size_t k = (cycle_vertices - 1) / 2;
            verdict.kind = VerdictKind::Closed;
            verdict.rule = "cycle-odd";
            verdict.value = Rational(static_cast<long long>(k * (k + 1)));
        }
        return verdict;
    }

    const bool all_ones = std::all_of(m.begin(), m.end(), [](std::size_t x) { return x == 1; });
    auto first_even = [&]() -> std::optional<std::size_t> {
        for (std::size_t j = 0; j < r; ++j) {
            if (m[j] % 2 == 0) {
                return j;
            }
        }
        return std::nullopt;
    };
    auto evens = [&] {
        std::vector<std::size_t> out;
        for (std::size_t j = 0; j < r; ++j) {
            if (m[j] % 2 == 0) {
                out.push_back(j);
            }
        }
        return out;
    };
    auto odd_ge3 = [&] {
        std::vector<std::size_t> out;
        for (std::size_t j = 0; j < r; ++j) {
            if (m[j] % 2 == 1 && m[j] >= 3) {
                out.push_back(j);
            }
        }
        return out;
    };

    if (n >= 4 && n % 2 == 0) {
        const std::size_t k = n / 2;
        verdict.kind = VerdictKind::Zero;
        verdict.rule = "even-n";
        const auto even_list = evens();
        const auto odd_list = odd_ge3();
        ColumnRelation rel;
        if (all_ones || (even_list.size() == 1 && odd_list.empty())) {
            rel.terms = {{u_label(0), 1}, {u_label(k - 1), -1}, {u_label(k + 1), 1}, {u_label(n), -1}};
        } else if (even_list.size() >= 2) {
            const std::size_t s = even_list[0];
            const std::size_t t = even_list[1];
            const std::size_t l = m[s] / 2;
            const std::size_t p = m[t] / 2;
            rel.terms = {{v_label(s, l), 1}, {v_label(s, l + 1), -1}, {v_label(t, p), -1}, {v_label(t, p + 1), 1}};
        } else {
            const std::size_t s = odd_list[0];
            const std::size_t l = (m[s] - 1) / 2;
            rel.terms = {{u_label(k - 1), 1}, {u_label(k + 1), -1}, {v_label(s, l), 1}, {v_label(s, l + 2), -1}};
        }
        verdict.dependence = std::move(rel);
        return verdict;
    }

    if (n >= 3 && n % 2 == 1) {
        verdict.rule = "odd-n";
        if (all_ones) {
            const std::size_t k = (n + 1) / 2;
            verdict.kind = VerdictKind::Closed;
            verdict.value = bracket_value(r, k);
            return verdict;
        }
        verdict.kind = VerdictKind::Zero;
        const auto even_list = evens();
        const auto odd_list = odd_ge3();
        ColumnRelation rel;
        if (odd_list.size() == 1 && even_list.empty()) {
            const std::size_t s = odd_list[0];
            const std::size_t l = (m[s] - 1) / 2;
            rel.terms = {{u_label(0), 1}, {u_label(n), -1}, {v_label(s, l), 1}, {v_label(s, l + 2), -1}};
        } else if (odd_list.size() >= 2) {
            const std::size_t s = odd_list[0];
            const std::size_t t = odd_list[1];
            const std::size_t l = (m[s] - 1) / 2;
            const std::size_t p = (m[t] - 1) / 2;
            rel.terms = {{v_label(s, l), 1}, {v_label(s, l + 2), -1}, {v_label(t, p), -1}, {v_label(t, p + 2), 1}};
        } else {
            const std::size_t k = (n - 1) / 2;  // n = 2k+1
            const std::size_t s = even_list[0];
            const std::size_t l = m[s] / 2;
            rel.terms = {{u_label(k), 1}, {u_label(k + 1), -1}, {v_label(s, l), 1}, {v_label(s, l + 1), -1}};
        }
        verdict.dependence = std::move(rel);
        return verdict;
    }

    if (n == 2) {
        verdict.rule = "n2";
        if (all_ones) {
            // complete bipartite K_{2,r+1}
            verdict.kind = VerdictKind::Closed;
            Rational value = power_of_two(r + 2) * Rational(static_cast<long long>(r) - 1);
            if (r % 2 == 0) {
                value = -value;
            }
            verdict.value = value;
            return verdict;
        }
        const bool head_ones = std::all_of(m.begin(), m.end() - 1, [](std::size_t x) { return x == 1; });
        if (head_ones && m.back() % 2 == 0) {
            const std::size_t k = m.back() / 2 + 1;
            verdict.kind = VerdictKind::Closed;
            verdict.value = bracket_value(r, k);
            return verdict;
        }
        verdict.kind = VerdictKind::Zero;
        const auto even_list = evens();
        const auto odd_list = odd_ge3();
        ColumnRelation rel;
        if (!odd_list.empty()) {
            const std::size_t s = odd_list[0];
            const std::size_t l = (m[s] - 1) / 2;
            rel.terms = {{u_label(0), 1}, {u_label(2), -1}, {v_label(s, l), 1}, {v_label(s, l + 2), -1}};
        } else {
            const std::size_t s = even_list[0];
            const std::size_t t = even_list[1];
            const std::size_t l = m[s] / 2;
            const std::size_t p = m[t] / 2;
            rel.terms = {{v_label(s, l), 1}, {v_label(s, l + 1), -1}, {v_label(t, p), -1}, {v_label(t, p + 1), 1}};
        }
        verdict.dependence = std::move(rel);
        return verdict;
    }

    // n == 1
    if (all_ones) {
        // r triangles over a common edge; tabulated constant, cross-checked
        // against the oracle by classify_with_oracle
        verdict.kind = VerdictKind::Closed;
        verdict.rule = "n1-triangles";
        Rational value = power_of_two(r - 2);  // r >= 2 here, r == 1 is the cycle case
        if (r % 2 == 0) {
            value = -value;
        }
        verdict.value = value;
        return verdict;
    }
    if (auto s = first_even()) {
        const std::size_t l = m[*s] / 2;
        verdict.kind = VerdictKind::Zero;
        verdict.rule = "n1-even";
        ColumnRelation rel;
        rel.terms = {{u_label(1), 1}, {u_label(0), -1}, {v_label(*s, l), -1}, {v_label(*s, l + 1), 1}};
        verdict.dependence = std::move(rel);
        return verdict;
    }
    verdict.kind = VerdictKind::Unknown;
    verdict.rule = "n1-open";
    return verdict;
}

Rational det_oracle(const UndirectedShape& shape, std::size_t max_vertices) {
    if (shape.vertex_count() > max_vertices) {
        throw SizeBoundError("shape has " + std::to_string(shape.vertex_count()) +
                             " vertices, oracle bound is " + std::to_string(max_vertices));
    }
    return det(undirected_distance_matrix(shape));
}

bool verify_dependence(const Matrix& distance, const ColumnRelation& relation) {
    const auto& labels = distance.col_labels();
    std::vector<std::size_t> cols;
    cols.reserve(relation.terms.size());
    for (const auto& [label, coeff] : relation.terms) {
        auto it = std::find(labels.begin(), labels.end(), label);
        if (it == labels.end()) {
            return false;
        }
        cols.push_back(static_cast<std::size_t>(it - labels.begin()));
    }
    for (std::size_t i = 0; i < distance.rows(); ++i) {
        Rational total;
        for (std::size_t t = 0; t < cols.size(); ++t) {
            total += Rational(relation.terms[t].second) * distance(i, cols[t]);
        }
        if (!total.is_zero()) {
            return false;
        }
    }
    return true;
}

Matrix odd_cycle_inverse(std::size_t k) {
    if (k < 1) {
        throw StructuralError("odd cycle inverse needs k >= 1");
    }
    const std::size_t size = 2 * k + 1;
    const Rational j_coeff(BigInt(size), BigInt(k) * BigInt(k + 1));
    Matrix inv(size, size);
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) {
            Rational entry = j_coeff;
            if (i == j) {
                entry -= 2;
            }
            if (j == (i + k) % size) {
                entry -= 1;
            }
            if (j == (i + k + 1) % size) {
                entry -= 1;
            }
            inv(i, j) = entry;
        }
    }
    return inv;
}

ClassifyOutcome classify_with_oracle(const UndirectedShape& shape, std::size_t max_vertices) {
    ClassifyOutcome outcome;
    outcome.verdict = classify_det(shape);
    if (shape.vertex_count() > max_vertices) {
        return outcome;
    }
    outcome.oracle = det_oracle(shape, max_vertices);
    if (outcome.verdict.kind == VerdictKind::Unknown) {
        return outcome;
    }
    const Rational claimed =
        outcome.verdict.kind == VerdictKind::Zero ? Rational(0) : *outcome.verdict.value;
    outcome.agrees = (claimed == *outcome.oracle);
    if (!*outcome.agrees) {
        outcome.discrepancy = Discrepancy{shape, outcome.verdict.rule, claimed, *outcome.oracle};
    }
    return outcome;
}

std::vector<UndirectedShape> all_shapes_up_to(std::size_t max_vertices) {
    std::vector<UndirectedShape> shapes;
    if (max_vertices < 3) {
        return shapes;
    }
    // enumerate sorted branch-length lists recursively
    std::vector<std::size_t> current;
    auto emit = [&](std::size_t n) {
        shapes.push_back(UndirectedShape{n, current});
    };
    auto recurse = [&](auto&& self, std::size_t n, std::size_t budget, std::size_t min_len) -> void {
        if (!current.empty()) {
            emit(n);
        }
        for (std::size_t next = min_len; next <= budget; ++next) {
            current.push_back(next);
            self(self, n, budget - next, next);
            current.pop_back();
        }
    };
    for (std::size_t n = 1; n + 2 <= max_vertices; ++n) {
        const std::size_t budget = max_vertices - n - 1;
        recurse(recurse, n, budget, 1);
    }
    return shapes;
}

}  // namespace cactoid
