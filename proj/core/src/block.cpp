#include "cactoid/block.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <utility>

#include "cactoid/errors.hpp"

namespace cactoid {

std::size_t BlockShape::vertex_count() const noexcept {
    std::size_t total = path_len + 1;
    for (std::size_t m : branch_lens) {
        total += m;
    }
    return total;
}

void BlockShape::validate() const {
    if (path_len < 1) {
        throw StructuralError("block path length must be at least 1");
    }
    if (branch_lens.empty()) {
        throw StructuralError("block needs at least one cycle");
    }
    for (std::size_t m : branch_lens) {
        if (m < 1) {
            throw StructuralError("every branch length must be at least 1");
        }
    }
}

Rational pair_sum(const std::vector<Rational>& weights) {
    // sum_{s<t} w_s w_t = ((sum w)^2 - sum w^2) / 2
    Rational total;
    Rational squares;
    for (const Rational& w : weights) {
        total += w;
        squares += w * w;
    }
    return (total * total - squares) / 2;
}

namespace {

Rational sum(const std::vector<Rational>& weights) {
    Rational total;
    for (const Rational& w : weights) {
        total += w;
    }
    return total;
}

std::vector<Rational> branch_weight_list(const BranchWeights& branch) {
    std::vector<Rational> list;
    list.reserve(branch.steps.size() + 1);
    list.push_back(branch.closing);
    list.insert(list.end(), branch.steps.begin(), branch.steps.end());
    return list;
}

}  // namespace

WeightedBlock canonicalize_block(BlockShape shape, BlockWeights weights) {
    shape.validate();
    const std::size_t r = shape.cycle_count();
    if (weights.path.size() != shape.path_len) {
        throw StructuralError("path weight count does not match path length");
    }
    if (weights.branches.size() != r) {
        throw StructuralError("branch weight group count does not match cycle count");
    }
    for (std::size_t j = 0; j < r; ++j) {
        if (weights.branches[j].steps.size() != shape.branch_lens[j]) {
            throw StructuralError("branch " + std::to_string(j + 1) +
                                  " weight count does not match its length");
        }
    }

    const Rational path_total = sum(weights.path);
    std::vector<Rational> branch_totals(r);
    std::vector<Rational> cycle_totals(r);
    for (std::size_t j = 0; j < r; ++j) {
        branch_totals[j] = sum(weights.branches[j].steps) + weights.branches[j].closing;
        cycle_totals[j] = path_total + branch_totals[j];
    }

    std::vector<std::size_t> order(r);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return cycle_totals[a] < cycle_totals[b];
    });

    WeightedBlock block;
    block.permutation_ = order;
    block.shape_.path_len = shape.path_len;
    block.shape_.branch_lens.reserve(r);
    block.weights_.path = std::move(weights.path);
    block.weights_.branches.reserve(r);
    block.summary_.path_total = path_total;
    block.summary_.path_pair_sum = pair_sum(block.weights_.path);
    block.summary_.branch_totals.reserve(r);
    block.summary_.cycle_totals.reserve(r);
    block.summary_.branch_pair_sums.reserve(r);
    for (std::size_t c = 0; c < r; ++c) {
        const std::size_t j = order[c];
        block.shape_.branch_lens.push_back(shape.branch_lens[j]);
        block.weights_.branches.push_back(std::move(weights.branches[j]));
        block.summary_.branch_totals.push_back(branch_totals[j]);
        block.summary_.cycle_totals.push_back(cycle_totals[j]);
        block.summary_.branch_pair_sums.push_back(
            pair_sum(branch_weight_list(block.weights_.branches.back())));
    }
    return block;
}

std::pair<Rational, std::vector<Rational>> pair_sums(const WeightedBlock& block) {
    std::vector<Rational> branch_sums;
    branch_sums.reserve(block.cycle_count());
    for (const BranchWeights& branch : block.weights().branches) {
        branch_sums.push_back(pair_sum(branch_weight_list(branch)));
    }
    return {pair_sum(block.weights().path), std::move(branch_sums)};
}

std::size_t WeightedBlock::path_vertex(std::size_t i) const {
    if (i > shape_.path_len) {
        throw StructuralError("path vertex index out of range");
    }
    return i;
}

std::size_t WeightedBlock::branch_vertex(std::size_t cycle, std::size_t i) const {
    if (cycle >= cycle_count() || i < 1 || i > shape_.branch_lens[cycle]) {
        throw StructuralError("branch vertex index out of range");
    }
    std::size_t base = shape_.path_len + 1;
    for (std::size_t c = 0; c < cycle; ++c) {
        base += shape_.branch_lens[c];
    }
    return base + (i - 1);
}

std::vector<std::string> WeightedBlock::local_names() const {
    std::vector<std::string> names;
    names.reserve(vertex_count());
    for (std::size_t i = 0; i <= shape_.path_len; ++i) {
        names.push_back("u" + std::to_string(i));
    }
    for (std::size_t c = 0; c < cycle_count(); ++c) {
        const std::string suffix = "." + std::to_string(permutation_[c] + 1);
        for (std::size_t i = 1; i <= shape_.branch_lens[c]; ++i) {
            names.push_back("v" + std::to_string(i) + suffix);
        }
    }
    return names;
}

std::string WeightedBlock::local_name(std::size_t index) const {
    if (index <= shape_.path_len) {
        return "u" + std::to_string(index);
    }
    std::size_t rest = index - shape_.path_len - 1;
    for (std::size_t c = 0; c < cycle_count(); ++c) {
        if (rest < shape_.branch_lens[c]) {
            return "v" + std::to_string(rest + 1) + "." + std::to_string(permutation_[c] + 1);
        }
        rest -= shape_.branch_lens[c];
    }
    throw StructuralError("local vertex index out of range");
}

namespace {

std::optional<std::size_t> parse_index(std::string_view text) {
    std::size_t value = 0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) {
        return std::nullopt;
    }
    return value;
}

}  // namespace

std::optional<std::size_t> WeightedBlock::find_local(std::string_view name) const {
    if (name.size() < 2) {
        return std::nullopt;
    }
    if (name[0] == 'u') {
        const auto i = parse_index(name.substr(1));
        if (!i || *i > shape_.path_len) {
            return std::nullopt;
        }
        return *i;
    }
    if (name[0] == 'v') {
        const std::size_t dot = name.find('.');
        if (dot == std::string_view::npos) {
            return std::nullopt;
        }
        const auto i = parse_index(name.substr(1, dot - 1));
        const auto user_cycle = parse_index(name.substr(dot + 1));
        if (!i || !user_cycle || *user_cycle < 1 || *user_cycle > cycle_count()) {
            return std::nullopt;
        }
        // translate the input cycle number to its canonical position
        std::size_t canonical = cycle_count();
        for (std::size_t c = 0; c < cycle_count(); ++c) {
            if (permutation_[c] == *user_cycle - 1) {
                canonical = c;
                break;
            }
        }
        if (*i < 1 || *i > shape_.branch_lens[canonical]) {
            return std::nullopt;
        }
        return branch_vertex(canonical, *i);
    }
    return std::nullopt;
}

std::vector<Rational> WeightedBlock::cycle_weight_list(std::size_t cycle) const {
    if (cycle >= cycle_count()) {
        throw StructuralError("cycle index out of range");
    }
    std::vector<Rational> list = weights_.path;
    const BranchWeights& branch = weights_.branches[cycle];
    list.insert(list.end(), branch.steps.begin(), branch.steps.end());
    list.push_back(branch.closing);
    return list;
}

bool WeightedBlock::all_cycles_nonzero() const {
    for (const Rational& w : summary_.cycle_totals) {
        if (w.is_zero()) {
            return false;
        }
    }
    return true;
}

bool WeightedBlock::all_weights_positive() const {
    for (const Rational& w : weights_.path) {
        if (!w.is_positive()) {
            return false;
        }
    }
    for (const BranchWeights& branch : weights_.branches) {
        for (const Rational& w : branch.steps) {
            if (!w.is_positive()) {
                return false;
            }
        }
        if (!branch.closing.is_positive()) {
            return false;
        }
    }
    return true;
}

std::vector<BlockEdge> block_edges(const WeightedBlock& block) {
    std::vector<BlockEdge> edges;
    const BlockShape& shape = block.shape();
    for (std::size_t i = 1; i <= shape.path_len; ++i) {
        edges.push_back({block.path_vertex(i - 1), block.path_vertex(i),
                         block.weights().path[i - 1], true, 0});
    }
    for (std::size_t c = 0; c < block.cycle_count(); ++c) {
        const BranchWeights& branch = block.weights().branches[c];
        const std::size_t m = shape.branch_lens[c];
        edges.push_back({block.path_vertex(shape.path_len), block.branch_vertex(c, 1),
                         branch.steps[0], false, c});
        for (std::size_t i = 2; i <= m; ++i) {
            edges.push_back({block.branch_vertex(c, i - 1), block.branch_vertex(c, i),
                             branch.steps[i - 1], false, c});
        }
        edges.push_back({block.branch_vertex(c, m), block.path_vertex(0), branch.closing, false, c});
    }
    return edges;
}

}  // namespace cactoid
