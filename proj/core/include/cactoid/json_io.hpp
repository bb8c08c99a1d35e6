#pragma once

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cactoid/formulas.hpp"
#include "cactoid/graph.hpp"
#include "cactoid/matrix.hpp"
#include "cactoid/undirected.hpp"

namespace cactoid {

/// JSON wire form of a matrix:
///   {"rows":n,"cols":m,"labels":{"rows":[...],"cols":[...]},
///    "entries":[["0","1/2",...],...]}
/// Entries are canonical rational strings; label arrays may be empty.
std::string matrix_to_json(const Matrix& m);
Matrix matrix_from_json(std::string_view text);

/// One cycle of a block spec, in the order the user wrote it.
struct CycleSpec {
    std::vector<Rational> branch_weights;
    Rational closing_weight;

    bool operator==(const CycleSpec&) const = default;
};

struct BlockSpec {
    std::string id;
    std::size_t path_len = 0;
    std::vector<Rational> path_weights;
    std::vector<CycleSpec> cycles;
    std::map<std::string, std::string> labels;  // local name -> global label

    bool operator==(const BlockSpec&) const = default;
};

/// {"kind":"cactoid_digraph","blocks":[...]}
struct CactoidSpec {
    std::vector<BlockSpec> blocks;

    bool operator==(const CactoidSpec&) const = default;
};

/// {"kind":"undirected_family","n":3,"m":[1,1]}
struct UndirectedSpec {
    std::size_t path_len = 0;
    std::vector<std::size_t> branch_lens;  // as written; sorted on assembly

    bool operator==(const UndirectedSpec&) const = default;
};

using InputSpec = std::variant<CactoidSpec, UndirectedSpec>;

/// Parses either spec kind, dispatching on "kind". Throws ParseError.
InputSpec parse_input_spec(std::string_view text);

std::string to_json(const CactoidSpec& spec);
std::string to_json(const UndirectedSpec& spec);

/// Canonicalizes the blocks and glues them per the label maps.
CactoidGraph assemble(const CactoidSpec& spec);
UndirectedShape shape_of(const UndirectedSpec& spec);

/// {"lambda":"4/3","alpha":[...],"beta":[...],"laplacian_like":{...}}
std::string bag_to_json(const Bag& bag);

}  // namespace cactoid
