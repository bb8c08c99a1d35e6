#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

std::string cli_path() {
    const char* path = std::getenv("CACTOID_CLI");
    REQUIRE_MESSAGE(path != nullptr, "CACTOID_CLI must point at the built binary");
    return path;
}

std::string fixtures_dir() {
    const char* path = std::getenv("CACTOID_FIXTURES");
    REQUIRE_MESSAGE(path != nullptr, "CACTOID_FIXTURES must point at tests/fixtures");
    return path;
}

RunResult run(const std::string& args) {
    const std::string command = "'" + cli_path() + "' " + args + " 2>/dev/null";
    RunResult result;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buffer{};
    std::size_t n = 0;
    while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        result.output.append(buffer.data(), n);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

}  // namespace

TEST_CASE("det on the example fixture prints 0 and exits cleanly") {
    const RunResult result = run("det " + fixtures_dir() + "/dc_2_2_2.json");
    CHECK(result.exit_code == 0);
    CHECK(result.output == "{\"det\":\"0\"}\n");
}

TEST_CASE("det --oracle cross-checks") {
    const RunResult result = run("det --oracle " + fixtures_dir() + "/dc_2_2_2.json");
    CHECK(result.exit_code == 0);
    CHECK(result.output == "{\"det\":\"0\"}\n");
}

TEST_CASE("inv on the degenerate fixture exits 1") {
    const RunResult result = run("inv " + fixtures_dir() + "/dc_2_2_2.json");
    CHECK(result.exit_code == 1);
    CHECK(result.output.empty());
}

TEST_CASE("dist prints the full matrix") {
    const RunResult result = run("dist " + fixtures_dir() + "/dc_2_2_2.json");
    CHECK(result.exit_code == 0);
    const auto j = nlohmann::json::parse(result.output);
    CHECK(j["rows"] == 7);
    CHECK(j["entries"][2][0] == "-3");
    CHECK(j["entries"][6][5] == "6");
}

TEST_CASE("dist also serves undirected shapes") {
    const RunResult result = run("dist '{\"kind\":\"undirected_family\",\"n\":1,\"m\":[1]}'");
    CHECK(result.exit_code == 0);
    const auto j = nlohmann::json::parse(result.output);
    CHECK(j["rows"] == 3);
    CHECK(j["entries"][0][1] == "1");
    CHECK(j["labels"]["rows"][2] == "v1.1");
}

TEST_CASE("inline JSON specs work") {
    const RunResult result =
        run("classify '{\"kind\":\"undirected_family\",\"n\":4,\"m\":[1,1]}'");
    CHECK(result.exit_code == 0);
    const auto j = nlohmann::json::parse(result.output);
    CHECK(j["verdict"] == "zero");
    CHECK(j["rule"] == "even-n");
    CHECK(j["agrees"] == true);
}

TEST_CASE("classify reports the closed value and the oracle") {
    const RunResult result =
        run("classify '{\"kind\":\"undirected_family\",\"n\":3,\"m\":[1,1]}'");
    CHECK(result.exit_code == 0);
    const auto j = nlohmann::json::parse(result.output);
    CHECK(j["verdict"] == "closed");
    CHECK(j["value"] == "4");
    CHECK(j["rule"] == "odd-n");
    CHECK(j["oracle"] == "4");
    CHECK(j["agrees"] == true);
}

TEST_CASE("cof and bag run on a well-behaved block") {
    const std::string spec =
        "'{\"kind\":\"cactoid_digraph\",\"blocks\":[{\"id\":\"B1\",\"n\":1,"
        "\"path_weights\":[\"1\"],\"cycles\":[{\"branch_weights\":[\"1\"],"
        "\"closing_weight\":\"1\"},{\"branch_weights\":[\"1\"],\"closing_weight\":\"1\"}]}]}'";
    const RunResult cof = run("cof " + spec);
    CHECK(cof.exit_code == 0);
    CHECK(cof.output == "{\"cof\":\"-27\"}\n");

    const RunResult bag = run("bag " + spec);
    CHECK(bag.exit_code == 0);
    const auto j = nlohmann::json::parse(bag.output);
    CHECK(j["lambda"] == "4/3");

    const RunResult inv = run("inv --oracle " + spec);
    CHECK(inv.exit_code == 0);
    const auto m = nlohmann::json::parse(inv.output);
    CHECK(m["rows"] == 4);
}

TEST_CASE("verify passes on the fixture") {
    const RunResult result = run("verify " + fixtures_dir() + "/dc_2_2_2.json");
    CHECK(result.exit_code == 0);
    const auto j = nlohmann::json::parse(result.output);
    CHECK(j["status"] == "pass");
}

TEST_CASE("parse problems exit with 2") {
    CHECK(run("det /no/such/file.json").exit_code == 2);
    CHECK(run("det '{\"kind\":\"nonsense\"}'").exit_code == 2);
    CHECK(run("classify " + fixtures_dir() + "/dc_2_2_2.json").exit_code == 2);
    CHECK(run("det '{\"kind\":\"cactoid_digraph\",\"blocks\":[{\"n\":1,"
              "\"path_weights\":[\"1\",\"2\"],\"cycles\":[{\"branch_weights\":[\"1\"],"
              "\"closing_weight\":\"1\"}]}]}'")
              .exit_code == 2);
    CHECK(run("frobnicate x").exit_code == 2);
}

TEST_CASE("fuzz subcommand emits a deterministic passing report") {
    const RunResult a = run("fuzz --seed 1 --cases 8");
    const RunResult b = run("fuzz --seed 1 --cases 8 --jobs 2");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    const auto j = nlohmann::json::parse(a.output);
    CHECK(j["status"] == "pass");
    CHECK(j["cases"] == 8);
}
