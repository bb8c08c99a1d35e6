#include <doctest.h>

#include <json.hpp>

#include "cactoid/distance.hpp"
#include "cactoid/errors.hpp"
#include "cactoid/formulas.hpp"
#include "cactoid/json_io.hpp"
#include "cactoid/linalg.hpp"

using cactoid::BigInt;
using cactoid::CactoidSpec;
using cactoid::InputSpec;
using cactoid::Matrix;
using cactoid::Rational;
using cactoid::UndirectedSpec;

namespace {

const char* kFigureSpec = R"({"kind":"cactoid_digraph",
 "blocks":[{"id":"B1","n":2,"path_weights":["2","1"],
            "cycles":[{"branch_weights":["-1","-1"],"closing_weight":"-1"},
                      {"branch_weights":["2","1"],"closing_weight":"1"}]}]})";

}  // namespace

TEST_CASE("matrix JSON round-trips with canonical entries") {
    Matrix m{{Rational(BigInt(1), BigInt(2)), Rational(-3)}, {Rational(0), Rational(7)}};
    m.set_labels({"a", "b"}, {"x", "y"});
    const std::string text = cactoid::matrix_to_json(m);
    const auto j = nlohmann::json::parse(text);
    CHECK(j["rows"] == 2);
    CHECK(j["entries"][0][0] == "1/2");
    CHECK(j["entries"][0][1] == "-3");
    CHECK(j["labels"]["rows"][1] == "b");

    const Matrix back = cactoid::matrix_from_json(text);
    CHECK(back == m);
    CHECK(back.row_labels() == m.row_labels());
    CHECK(back.col_labels() == m.col_labels());
    CHECK(cactoid::matrix_to_json(back) == text);  // byte-stable
}

TEST_CASE("matrix JSON validation") {
    CHECK_THROWS_AS(cactoid::matrix_from_json("не json"), cactoid::ParseError);
    CHECK_THROWS_AS(cactoid::matrix_from_json(R"({"rows":2,"cols":1,"entries":[["1"]]})"),
                    cactoid::ParseError);
    CHECK_THROWS_AS(cactoid::matrix_from_json(R"({"rows":1,"cols":1,"entries":[[1.5]]})"),
                    cactoid::ParseError);
    CHECK_THROWS_AS(cactoid::matrix_from_json(R"({"rows":1,"cols":1,"entries":[["1/0"]]})"),
                    cactoid::ParseError);
    CHECK_THROWS_AS(
        cactoid::matrix_from_json(
            R"({"rows":1,"cols":1,"entries":[["1"]],"labels":{"rows":["a","b"],"cols":[]}})"),
        cactoid::ParseError);
}

TEST_CASE("graph specs parse, assemble and round-trip") {
    const InputSpec parsed = cactoid::parse_input_spec(kFigureSpec);
    const auto* spec = std::get_if<CactoidSpec>(&parsed);
    REQUIRE(spec != nullptr);
    REQUIRE(spec->blocks.size() == 1);
    CHECK(spec->blocks[0].id == "B1");
    CHECK(spec->blocks[0].path_weights == std::vector<Rational>{2, 1});
    CHECK(spec->blocks[0].cycles[0].closing_weight == Rational(-1));

    // parse -> serialize -> parse is the identity on the in-memory value
    const std::string serialized = cactoid::to_json(*spec);
    const InputSpec reparsed = cactoid::parse_input_spec(serialized);
    REQUIRE(std::holds_alternative<CactoidSpec>(reparsed));
    CHECK(std::get<CactoidSpec>(reparsed) == *spec);
    CHECK(cactoid::to_json(std::get<CactoidSpec>(reparsed)) == serialized);

    const cactoid::CactoidGraph graph = cactoid::assemble(*spec);
    CHECK(graph.vertex_count() == 7);
    CHECK(cactoid::det(cactoid::graph_distance_matrix(graph)) == Rational(0));
}

TEST_CASE("labels in a spec glue blocks") {
    const char* text = R"({"kind":"cactoid_digraph","blocks":[
      {"id":"L","n":1,"path_weights":["1"],
       "cycles":[{"branch_weights":["1"],"closing_weight":"1"}],"labels":{"u0":"c"}},
      {"id":"R","n":1,"path_weights":["1"],
       "cycles":[{"branch_weights":["1"],"closing_weight":"1"}],"labels":{"u0":"c"}}]})";
    const auto spec = std::get<CactoidSpec>(cactoid::parse_input_spec(text));
    const cactoid::CactoidGraph graph = cactoid::assemble(spec);
    CHECK(graph.vertex_count() == 5);
    CHECK(graph.vertex_labels()[0] == "c");

    const auto round = std::get<CactoidSpec>(cactoid::parse_input_spec(cactoid::to_json(spec)));
    CHECK(round == spec);
}

TEST_CASE("undirected specs parse and round-trip") {
    const InputSpec parsed =
        cactoid::parse_input_spec(R"({"kind":"undirected_family","n":3,"m":[1,1]})");
    const auto* spec = std::get_if<UndirectedSpec>(&parsed);
    REQUIRE(spec != nullptr);
    CHECK(spec->path_len == 3);
    CHECK(spec->branch_lens == std::vector<std::size_t>{1, 1});
    const auto round = std::get<UndirectedSpec>(cactoid::parse_input_spec(cactoid::to_json(*spec)));
    CHECK(round == *spec);
    CHECK(cactoid::shape_of(*spec).vertex_count() == 6);
}

TEST_CASE("spec validation errors") {
    CHECK_THROWS_AS(cactoid::parse_input_spec("[1,2]"), cactoid::ParseError);
    CHECK_THROWS_AS(cactoid::parse_input_spec(R"({"kind":"mystery"})"), cactoid::ParseError);
    CHECK_THROWS_AS(cactoid::parse_input_spec(R"({"kind":"cactoid_digraph","blocks":[]})"),
                    cactoid::ParseError);
    CHECK_THROWS_AS(cactoid::parse_input_spec(R"({"kind":"cactoid_digraph","blocks":[{"n":1}]})"),
                    cactoid::ParseError);
    CHECK_THROWS_AS(cactoid::parse_input_spec(R"({"kind":"undirected_family","n":1,"m":[]})"),
                    cactoid::ParseError);
    CHECK_THROWS_AS(
        cactoid::parse_input_spec(R"({"kind":"undirected_family","n":-1,"m":[1]})"),
        cactoid::ParseError);
}

TEST_CASE("bag JSON carries lambda, the vectors and the Laplacian-like matrix") {
    const auto spec = std::get<CactoidSpec>(cactoid::parse_input_spec(
        R"({"kind":"cactoid_digraph","blocks":[{"id":"B1","n":1,"path_weights":["1"],
            "cycles":[{"branch_weights":["1"],"closing_weight":"1"},
                      {"branch_weights":["1"],"closing_weight":"1"}]}]})"));
    const cactoid::CactoidGraph graph = cactoid::assemble(spec);
    const cactoid::Bag bag = cactoid::make_block_bag(graph.block(0));
    const auto j = nlohmann::json::parse(cactoid::bag_to_json(bag));
    CHECK(j["lambda"] == "4/3");
    CHECK(j["alpha"] == nlohmann::json::array({"0", "1/3", "1/3", "1/3"}));
    CHECK(j["beta"] == nlohmann::json::array({"1/3", "0", "1/3", "1/3"}));
    CHECK(j["laplacian_like"]["rows"] == 4);
    CHECK(j["laplacian_like"]["entries"][1][0] == "1/3");
}
