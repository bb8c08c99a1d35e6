// Command line front end: reads graph/shape specs as JSON (inline or from a
// file), prints results as JSON on stdout and diagnostics on stderr.
// Exit codes: 0 success, 1 verification mismatch or a singular matrix where
// an inverse was requested, 2 malformed input.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>

#include "cactoid/checks.hpp"
#include "cactoid/composition.hpp"
#include "cactoid/distance.hpp"
#include "cactoid/errors.hpp"
#include "cactoid/fuzz.hpp"
#include "cactoid/json_io.hpp"
#include "cactoid/linalg.hpp"
#include "cactoid/undirected.hpp"

namespace {

using nlohmann::ordered_json;

std::string load_spec_text(const std::string& arg) {
    for (char c : arg) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            continue;
        }
        if (c == '{') {
            return arg;  // inline JSON
        }
        break;
    }
    std::ifstream in(arg);
    if (!in) {
        throw cactoid::ParseError("cannot open spec file '" + arg + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

cactoid::CactoidGraph load_graph(const std::string& arg) {
    const cactoid::InputSpec spec = cactoid::parse_input_spec(load_spec_text(arg));
    const auto* cact = std::get_if<cactoid::CactoidSpec>(&spec);
    if (cact == nullptr) {
        throw cactoid::ParseError("this subcommand expects a \"cactoid_digraph\" spec");
    }
    return cactoid::assemble(*cact);
}

void emit(const std::string& json_text) { std::cout << json_text << "\n"; }

int run_dist(const std::string& arg) {
    const cactoid::InputSpec spec = cactoid::parse_input_spec(load_spec_text(arg));
    if (const auto* cact = std::get_if<cactoid::CactoidSpec>(&spec)) {
        emit(cactoid::matrix_to_json(cactoid::graph_distance_matrix(cactoid::assemble(*cact))));
    } else {
        const auto& undirected = std::get<cactoid::UndirectedSpec>(spec);
        emit(cactoid::matrix_to_json(
            cactoid::undirected_distance_matrix(cactoid::shape_of(undirected))));
    }
    return 0;
}

int run_scalar(const std::string& arg, bool oracle_check, bool cof) {
    const cactoid::CactoidGraph graph = load_graph(arg);
    const cactoid::Rational value =
        cof ? cactoid::graph_cof(graph) : cactoid::graph_det(graph);
    const char* key = cof ? "cof" : "det";
    if (oracle_check) {
        const cactoid::Matrix d = cactoid::graph_distance_matrix(graph);
        const cactoid::Rational reference = cof ? cactoid::cofactor_sum(d) : cactoid::det(d);
        if (reference != value) {
            std::cerr << key << " mismatch: closed form " << value.str() << ", oracle "
                      << reference.str() << "\n";
            return 1;
        }
    }
    ordered_json out;
    out[key] = value.str();
    emit(out.dump());
    return 0;
}

int run_inv(const std::string& arg, bool oracle_check) {
    const cactoid::CactoidGraph graph = load_graph(arg);
    const cactoid::Matrix inv = cactoid::graph_inverse(graph);
    if (oracle_check) {
        const cactoid::Matrix reference = cactoid::inverse(cactoid::graph_distance_matrix(graph));
        if (reference != inv) {
            std::cerr << "inverse mismatch against the Gauss-Jordan oracle\n";
            return 1;
        }
    }
    emit(cactoid::matrix_to_json(inv));
    return 0;
}

int run_bag(const std::string& arg) {
    const cactoid::CactoidGraph graph = load_graph(arg);
    cactoid::CompositionInput input{graph, {}};
    for (std::size_t t = 0; t < graph.block_count(); ++t) {
        input.block_bags.push_back(cactoid::make_block_bag(graph.block(t)));
    }
    emit(cactoid::bag_to_json(cactoid::compose_bags(input)));
    return 0;
}

int run_verify(const std::string& arg, std::size_t jobs) {
    (void)jobs;
    const cactoid::CactoidGraph graph = load_graph(arg);
    std::vector<cactoid::IdentityResult> results;
    if (graph.block_count() == 1) {
        results = cactoid::check_block_identities(graph.block(0));
    }
    for (cactoid::IdentityResult& r : cactoid::check_graph_identities(graph)) {
        results.push_back(std::move(r));
    }

    cactoid::VerificationReport report;
    report.cases = 1;
    for (const cactoid::IdentityResult& result : results) {
        cactoid::VerificationRecord record;
        record.name = result.name;
        record.pass = result.pass;
        record.cases_checked = result.checked > 0 ? 1 : 0;
        record.entries_checked = result.checked;
        record.failures = result.pass ? 0 : 1;
        if (result.first_mismatch) {
            record.first_failure = cactoid::CaseMismatch{
                0, result.first_mismatch->row, result.first_mismatch->col,
                result.first_mismatch->expected.str(), result.first_mismatch->got.str()};
        }
        report.pass = report.pass && result.pass;
        report.records.push_back(std::move(record));
    }
    emit(cactoid::report_to_json(report));
    return report.pass ? 0 : 1;
}

int run_classify(const std::string& arg, std::size_t max_vertices) {
    const cactoid::InputSpec spec = cactoid::parse_input_spec(load_spec_text(arg));
    const auto* undirected = std::get_if<cactoid::UndirectedSpec>(&spec);
    if (undirected == nullptr) {
        throw cactoid::ParseError("classify expects an \"undirected_family\" spec");
    }
    const cactoid::UndirectedShape shape = cactoid::shape_of(*undirected);
    const cactoid::ClassifyOutcome outcome = cactoid::classify_with_oracle(shape, max_vertices);

    ordered_json out;
    switch (outcome.verdict.kind) {
        case cactoid::VerdictKind::Closed:
            out["verdict"] = "closed";
            out["value"] = outcome.verdict.value->str();
            break;
        case cactoid::VerdictKind::Zero:
            out["verdict"] = "zero";
            out["value"] = "0";
            break;
        case cactoid::VerdictKind::Unknown:
            out["verdict"] = "unknown";
            break;
    }
    out["rule"] = outcome.verdict.rule;
    if (outcome.oracle) {
        out["oracle"] = outcome.oracle->str();
    }
    if (outcome.agrees) {
        out["agrees"] = *outcome.agrees;
    }
    if (outcome.verdict.dependence) {
        ordered_json dependence = ordered_json::array();
        for (const auto& [column, coefficient] : outcome.verdict.dependence->terms) {
            dependence.push_back({{"column", column}, {"coefficient", coefficient}});
        }
        out["dependence"] = std::move(dependence);
    }
    if (outcome.discrepancy) {
        out["discrepancy"] = {{"claimed", outcome.discrepancy->claimed.str()},
                              {"computed", outcome.discrepancy->computed.str()}};
    }
    emit(out.dump());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact distance matrices of weighted cactoid-type digraphs"};
    app.require_subcommand(1);

    std::string spec_arg;
    bool oracle_check = false;
    std::size_t max_vertices = 64;

    std::uint64_t fuzz_seed = 1;
    std::uint64_t fuzz_cases = 100;
    cactoid::FuzzBounds bounds;
    std::size_t jobs = 1;

    CLI::App* dist = app.add_subcommand("dist", "print the distance matrix");
    dist->add_option("spec", spec_arg, "spec file or inline JSON")->required();

    CLI::App* det_cmd = app.add_subcommand("det", "determinant of the distance matrix");
    det_cmd->add_option("spec", spec_arg)->required();
    det_cmd->add_flag("--oracle", oracle_check, "cross-check against exact elimination");

    CLI::App* cof_cmd = app.add_subcommand("cof", "sum of all cofactors of the distance matrix");
    cof_cmd->add_option("spec", spec_arg)->required();
    cof_cmd->add_flag("--oracle", oracle_check);

    CLI::App* inv_cmd = app.add_subcommand("inv", "inverse of the distance matrix");
    inv_cmd->add_option("spec", spec_arg)->required();
    inv_cmd->add_flag("--oracle", oracle_check);

    CLI::App* bag_cmd = app.add_subcommand("bag", "lambda, alpha, beta and the Laplacian-like matrix");
    bag_cmd->add_option("spec", spec_arg)->required();

    CLI::App* verify_cmd = app.add_subcommand("verify", "run every identity check on the input");
    verify_cmd->add_option("spec", spec_arg)->required();

    CLI::App* classify_cmd =
        app.add_subcommand("classify", "determinant verdict for an undirected family shape");
    classify_cmd->add_option("spec", spec_arg)->required();
    classify_cmd->add_option("--max-vertices", max_vertices, "oracle size cap")
        ->capture_default_str();

    CLI::App* fuzz_cmd = app.add_subcommand("fuzz", "randomized verification sweep");
    fuzz_cmd->add_option("--seed", fuzz_seed)->capture_default_str();
    fuzz_cmd->add_option("--cases", fuzz_cases)->capture_default_str();
    fuzz_cmd->add_option("--max-path", bounds.max_path)->capture_default_str();
    fuzz_cmd->add_option("--max-cycles", bounds.max_cycles)->capture_default_str();
    fuzz_cmd->add_option("--max-branch", bounds.max_branch)->capture_default_str();
    fuzz_cmd->add_option("--num-min", bounds.numerator_min)->capture_default_str();
    fuzz_cmd->add_option("--num-max", bounds.numerator_max)->capture_default_str();
    fuzz_cmd->add_option("--den-min", bounds.denominator_min)->capture_default_str();
    fuzz_cmd->add_option("--den-max", bounds.denominator_max)->capture_default_str();
    fuzz_cmd->add_option("--blocks", bounds.max_blocks, "maximum blocks per generated graph")
        ->capture_default_str();
    fuzz_cmd->add_flag("--include-degenerate", bounds.include_degenerate,
                       "keep blocks with zero-weight cycles");
    fuzz_cmd->add_flag("--positive", bounds.positive_weights, "positive weights only");
    fuzz_cmd->add_option("--jobs", jobs, "worker threads")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (dist->parsed()) {
            return run_dist(spec_arg);
        }
        if (det_cmd->parsed()) {
            return run_scalar(spec_arg, oracle_check, false);
        }
        if (cof_cmd->parsed()) {
            return run_scalar(spec_arg, oracle_check, true);
        }
        if (inv_cmd->parsed()) {
            return run_inv(spec_arg, oracle_check);
        }
        if (bag_cmd->parsed()) {
            return run_bag(spec_arg);
        }
        if (verify_cmd->parsed()) {
            return run_verify(spec_arg, jobs);
        }
        if (classify_cmd->parsed()) {
            return run_classify(spec_arg, max_vertices);
        }
        if (fuzz_cmd->parsed()) {
            const cactoid::VerificationReport report =
                cactoid::run_fuzz(fuzz_seed, fuzz_cases, bounds, jobs);
            emit(cactoid::report_to_json(report));
            return report.pass ? 0 : 1;
        }
    } catch (const cactoid::ZeroCycleWeightError& e) {
        std::cerr << "zero cycle weight: " << e.what() << "\n";
        return 1;
    } catch (const cactoid::SingularError& e) {
        std::cerr << "singular: " << e.what() << "\n";
        return 1;
    } catch (const cactoid::BagVerificationError& e) {
        std::cerr << "bag verification failed: " << e.what() << "\n";
        return 1;
    } catch (const cactoid::StructuralError& e) {
        std::cerr << "bad input: " << e.what() << "\n";
        return 2;
    } catch (const cactoid::ParseError& e) {
        std::cerr << "bad input: " << e.what() << "\n";
        return 2;
    } catch (const cactoid::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
