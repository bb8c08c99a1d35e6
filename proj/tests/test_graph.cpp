#include <doctest.h>

#include "cactoid/errors.hpp"
#include "cactoid/graph.hpp"

using cactoid::BlockShape;
using cactoid::BlockWeights;
using cactoid::BranchWeights;
using cactoid::CactoidGraph;
using cactoid::Gluing;
using cactoid::Rational;
using cactoid::WeightedBlock;

namespace {

WeightedBlock unit_triangle() {
    return cactoid::canonicalize_block(BlockShape{1, {1}},
                                       BlockWeights{{1}, {BranchWeights{{1}, 1}}});
}

}  // namespace

TEST_CASE("single block with empty gluing") {
    const CactoidGraph graph = cactoid::assemble_graph({unit_triangle()});
    CHECK(graph.block_count() == 1);
    CHECK(graph.vertex_count() == 3);
    CHECK(graph.vertex_labels() == std::vector<std::string>{"B1.u0", "B1.u1", "B1.v1.1"});
    for (std::size_t v = 0; v < 3; ++v) {
        CHECK(graph.block_index_of(v) == 1);
    }
}

TEST_CASE("two triangles glued at one vertex") {
    Gluing gluing;
    gluing[{0, "u0"}] = "c";
    gluing[{1, "u0"}] = "c";
    const CactoidGraph graph = cactoid::assemble_graph({unit_triangle(), unit_triangle()}, gluing);
    CHECK(graph.vertex_count() == 5);
    CHECK(graph.vertex_labels() ==
          std::vector<std::string>{"c", "B1.u1", "B1.v1.1", "B2.u1", "B2.v1.1"});
    CHECK(graph.block_index_of(0) == 2);  // the cut vertex
    for (std::size_t v = 1; v < 5; ++v) {
        CHECK(graph.block_index_of(v) == 1);
    }
    REQUIRE(graph.block_adjacency()[0].size() == 1);
    CHECK(graph.block_adjacency()[0][0] == std::pair<std::size_t, std::size_t>{1, 0});
}

TEST_CASE("a glued vertex keeps its first occurrence position") {
    Gluing gluing;
    gluing[{0, "u1"}] = "shared";
    gluing[{1, "v1.1"}] = "shared";
    const CactoidGraph graph = cactoid::assemble_graph({unit_triangle(), unit_triangle()}, gluing);
    CHECK(graph.vertex_labels() ==
          std::vector<std::string>{"B1.u0", "shared", "B1.v1.1", "B2.u0", "B2.u1"});
    CHECK(graph.local_index(1, 1) == 2);  // "shared" is v1.1 of block 2
}

TEST_CASE("two blocks sharing two vertices is not a cactoid") {
    Gluing gluing;
    gluing[{0, "u0"}] = "a";
    gluing[{1, "u0"}] = "a";
    gluing[{0, "u1"}] = "b";
    gluing[{1, "u1"}] = "b";
    CHECK_THROWS_AS(cactoid::assemble_graph({unit_triangle(), unit_triangle()}, gluing),
                    cactoid::NotACactoidError);
}

TEST_CASE("multi-block input with no gluing is disconnected") {
    CHECK_THROWS_AS(cactoid::assemble_graph({unit_triangle(), unit_triangle()}),
                    cactoid::ConnectivityError);
}

TEST_CASE("a cycle of blocks is rejected") {
    Gluing gluing;
    gluing[{0, "u0"}] = "x";
    gluing[{1, "u0"}] = "x";
    gluing[{1, "u1"}] = "y";
    gluing[{2, "u0"}] = "y";
    gluing[{2, "u1"}] = "z";
    gluing[{0, "u1"}] = "z";
    CHECK_THROWS_AS(
        cactoid::assemble_graph({unit_triangle(), unit_triangle(), unit_triangle()}, gluing),
        cactoid::BlockTreeError);
}

TEST_CASE("three blocks on one cut vertex form a star") {
    Gluing gluing;
    gluing[{0, "v1.1"}] = "hub";
    gluing[{1, "u0"}] = "hub";
    gluing[{2, "u1"}] = "hub";
    const CactoidGraph graph =
        cactoid::assemble_graph({unit_triangle(), unit_triangle(), unit_triangle()}, gluing);
    CHECK(graph.vertex_count() == 7);
    const std::size_t hub = graph.embeddings()[0][2];  // block 1's v1.1
    CHECK(graph.vertex_labels()[hub] == "hub");
    CHECK(graph.block_index_of(hub) == 3);
    CHECK(graph.block_adjacency()[0].size() == 2);
}

TEST_CASE("gluing validation") {
    Gluing bad_name;
    bad_name[{0, "u9"}] = "a";
    CHECK_THROWS_AS(cactoid::assemble_graph({unit_triangle()}, bad_name), cactoid::StructuralError);

    Gluing bad_block;
    bad_block[{3, "u0"}] = "a";
    CHECK_THROWS_AS(cactoid::assemble_graph({unit_triangle()}, bad_block), cactoid::StructuralError);

    Gluing self_glue;
    self_glue[{0, "u0"}] = "a";
    self_glue[{0, "u1"}] = "a";
    CHECK_THROWS_AS(cactoid::assemble_graph({unit_triangle()}, self_glue), cactoid::StructuralError);

    CHECK_THROWS_AS(cactoid::assemble_graph({unit_triangle(), unit_triangle()}, {}, {"B1", "B1"}),
                    cactoid::StructuralError);
    CHECK_THROWS_AS(cactoid::assemble_graph({}), cactoid::StructuralError);
}

TEST_CASE("assembly is deterministic") {
    Gluing gluing;
    gluing[{0, "u0"}] = "c";
    gluing[{1, "u0"}] = "c";
    const CactoidGraph a = cactoid::assemble_graph({unit_triangle(), unit_triangle()}, gluing);
    const CactoidGraph b = cactoid::assemble_graph({unit_triangle(), unit_triangle()}, gluing);
    CHECK(a.vertex_labels() == b.vertex_labels());
    CHECK(a.embeddings() == b.embeddings());
}
