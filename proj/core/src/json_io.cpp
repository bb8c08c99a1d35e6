#include "cactoid/json_io.hpp"

#include <json.hpp>

#include "cactoid/errors.hpp"

namespace cactoid {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    }
}

Rational rational_field(const json& j, const std::string& where) {
    if (!j.is_string()) {
        throw ParseError(where + " must be a rational string like \"-3\" or \"1/2\"");
    }
    return Rational::parse(j.get<std::string>());
}

const json& require(const json& j, const char* key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end()) {
        throw ParseError(where + " is missing \"" + key + "\"");
    }
    return *it;
}

std::size_t size_field(const json& j, const std::string& where) {
    if (!j.is_number_unsigned()) {
        throw ParseError(where + " must be a non-negative integer");
    }
    return j.get<std::size_t>();
}

}  // namespace

std::string matrix_to_json(const Matrix& m) {
    ordered_json out;
    out["rows"] = m.rows();
    out["cols"] = m.cols();
    out["labels"] = {{"rows", m.row_labels()}, {"cols", m.col_labels()}};
    ordered_json entries = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            row.push_back(m(i, j).str());
        }
        entries.push_back(std::move(row));
    }
    out["entries"] = std::move(entries);
    return out.dump();
}

Matrix matrix_from_json(std::string_view text) {
    const json j = parse_json(text);
    const std::size_t rows = size_field(require(j, "rows", "matrix"), "matrix \"rows\"");
    const std::size_t cols = size_field(require(j, "cols", "matrix"), "matrix \"cols\"");
    const json& entries = require(j, "entries", "matrix");
    if (!entries.is_array() || entries.size() != rows) {
        throw ParseError("matrix \"entries\" must be an array of " + std::to_string(rows) +
                         " rows");
    }
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const json& row = entries[i];
        if (!row.is_array() || row.size() != cols) {
            throw ParseError("matrix row " + std::to_string(i) + " must have " +
                             std::to_string(cols) + " entries");
        }
        for (std::size_t k = 0; k < cols; ++k) {
            m(i, k) = rational_field(row[k], "matrix entry");
        }
    }
    if (auto it = j.find("labels"); it != j.end()) {
        std::vector<std::string> row_labels;
        std::vector<std::string> col_labels;
        if (auto r = it->find("rows"); r != it->end()) {
            row_labels = r->get<std::vector<std::string>>();
        }
        if (auto c = it->find("cols"); c != it->end()) {
            col_labels = c->get<std::vector<std::string>>();
        }
        try {
            m.set_labels(std::move(row_labels), std::move(col_labels));
        } catch (const DimensionError& e) {
            throw ParseError(std::string("matrix labels: ") + e.what());
        }
    }
    return m;
}

namespace {

BlockSpec block_spec_from_json(const json& j, std::size_t index) {
    const std::string where = "block " + std::to_string(index + 1);
    BlockSpec spec;
    if (auto it = j.find("id"); it != j.end()) {
        if (!it->is_string()) {
            throw ParseError(where + " \"id\" must be a string");
        }
        spec.id = it->get<std::string>();
    } else {
        spec.id = "B" + std::to_string(index + 1);
    }
    spec.path_len = size_field(require(j, "n", where), where + " \"n\"");
    for (const json& w : require(j, "path_weights", where)) {
        spec.path_weights.push_back(rational_field(w, where + " path weight"));
    }
    const json& cycles = require(j, "cycles", where);
    if (!cycles.is_array() || cycles.empty()) {
        throw ParseError(where + " \"cycles\" must be a non-empty array");
    }
    for (const json& c : cycles) {
        CycleSpec cycle;
        for (const json& w : require(c, "branch_weights", where + " cycle")) {
            cycle.branch_weights.push_back(rational_field(w, where + " branch weight"));
        }
        cycle.closing_weight =
            rational_field(require(c, "closing_weight", where + " cycle"), where + " closing weight");
        spec.cycles.push_back(std::move(cycle));
    }
    if (auto it = j.find("labels"); it != j.end()) {
        if (!it->is_object()) {
            throw ParseError(where + " \"labels\" must be an object");
        }
        for (const auto& [local, global] : it->items()) {
            if (!global.is_string()) {
                throw ParseError(where + " label for \"" + local + "\" must be a string");
            }
            spec.labels[local] = global.get<std::string>();
        }
    }
    return spec;
}

}  // namespace

InputSpec parse_input_spec(std::string_view text) {
    const json j = parse_json(text);
    const json& kind = require(j, "kind", "input spec");
    if (kind == "cactoid_digraph") {
        CactoidSpec spec;
        const json& blocks = require(j, "blocks", "input spec");
        if (!blocks.is_array() || blocks.empty()) {
            throw ParseError("\"blocks\" must be a non-empty array");
        }
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            spec.blocks.push_back(block_spec_from_json(blocks[i], i));
        }
        return spec;
    }
    if (kind == "undirected_family") {
        UndirectedSpec spec;
        spec.path_len = size_field(require(j, "n", "input spec"), "\"n\"");
        const json& m = require(j, "m", "input spec");
        if (!m.is_array() || m.empty()) {
            throw ParseError("\"m\" must be a non-empty array");
        }
        for (const json& len : m) {
            spec.branch_lens.push_back(size_field(len, "branch length"));
        }
        return spec;
    }
    throw ParseError("unknown spec kind: " + kind.dump());
}

std::string to_json(const CactoidSpec& spec) {
    ordered_json out;
    out["kind"] = "cactoid_digraph";
    ordered_json blocks = ordered_json::array();
    for (const BlockSpec& block : spec.blocks) {
        ordered_json b;
        b["id"] = block.id;
        b["n"] = block.path_len;
        ordered_json path = ordered_json::array();
        for (const Rational& w : block.path_weights) {
            path.push_back(w.str());
        }
        b["path_weights"] = std::move(path);
        ordered_json cycles = ordered_json::array();
        for (const CycleSpec& cycle : block.cycles) {
            ordered_json c;
            ordered_json branch = ordered_json::array();
            for (const Rational& w : cycle.branch_weights) {
                branch.push_back(w.str());
            }
            c["branch_weights"] = std::move(branch);
            c["closing_weight"] = cycle.closing_weight.str();
            cycles.push_back(std::move(c));
        }
        b["cycles"] = std::move(cycles);
        if (!block.labels.empty()) {
            ordered_json labels;
            for (const auto& [local, global] : block.labels) {
                labels[local] = global;
            }
            b["labels"] = std::move(labels);
        }
        blocks.push_back(std::move(b));
    }
    out["blocks"] = std::move(blocks);
    return out.dump();
}

std::string to_json(const UndirectedSpec& spec) {
    ordered_json out;
    out["kind"] = "undirected_family";
    out["n"] = spec.path_len;
    out["m"] = spec.branch_lens;
    return out.dump();
}

CactoidGraph assemble(const CactoidSpec& spec) {
    std::vector<WeightedBlock> blocks;
    std::vector<std::string> ids;
    Gluing gluing;
    blocks.reserve(spec.blocks.size());
    for (std::size_t t = 0; t < spec.blocks.size(); ++t) {
        const BlockSpec& b = spec.blocks[t];
        BlockShape shape;
        shape.path_len = b.path_len;
        BlockWeights weights;
        weights.path = b.path_weights;
        for (const CycleSpec& cycle : b.cycles) {
            shape.branch_lens.push_back(cycle.branch_weights.size());
            weights.branches.push_back(BranchWeights{cycle.branch_weights, cycle.closing_weight});
        }
        blocks.push_back(canonicalize_block(std::move(shape), std::move(weights)));
        ids.push_back(b.id);
        for (const auto& [local, global] : b.labels) {
            gluing[{t, local}] = global;
        }
    }
    return assemble_graph(std::move(blocks), gluing, std::move(ids));
}

UndirectedShape shape_of(const UndirectedSpec& spec) {
    return make_undirected_shape(spec.path_len, spec.branch_lens);
}

std::string bag_to_json(const Bag& bag) {
    ordered_json out;
    out["lambda"] = bag.lambda.str();
    ordered_json alpha = ordered_json::array();
    ordered_json beta = ordered_json::array();
    for (std::size_t i = 0; i < bag.alpha.rows(); ++i) {
        alpha.push_back(bag.alpha(i, 0).str());
    }
    for (std::size_t i = 0; i < bag.beta.rows(); ++i) {
        beta.push_back(bag.beta(i, 0).str());
    }
    out["alpha"] = std::move(alpha);
    out["beta"] = std::move(beta);
    out["laplacian_like"] = ordered_json::parse(matrix_to_json(bag.laplacian_like));
    return out.dump();
}

}  // namespace cactoid
