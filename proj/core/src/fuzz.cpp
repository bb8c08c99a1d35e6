#include "cactoid/fuzz.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <thread>
#include <utility>

#include "cactoid/errors.hpp"

namespace cactoid {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Bounded sampling done by hand so reports are reproducible across standard
// library implementations.
std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
}

long long pick_ll(std::mt19937_64& rng, long long lo, long long hi) {
    return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Rational random_weight(std::mt19937_64& rng, const FuzzBounds& bounds) {
    long long num_min = bounds.numerator_min;
    if (bounds.positive_weights && num_min < 1) {
        num_min = 1;
    }
    long long num_max = std::max(bounds.numerator_max, num_min);
    const BigInt num(pick_ll(rng, num_min, num_max));
    const BigInt den(pick_ll(rng, bounds.denominator_min, bounds.denominator_max));
    return Rational(num, den);
}

WeightedBlock random_block_once(std::mt19937_64& rng, const FuzzBounds& bounds) {
    BlockShape shape;
    shape.path_len = pick(rng, 1, bounds.max_path);
    const std::size_t r = pick(rng, 1, bounds.max_cycles);
    BlockWeights weights;
    for (std::size_t i = 0; i < shape.path_len; ++i) {
        weights.path.push_back(random_weight(rng, bounds));
    }
    for (std::size_t j = 0; j < r; ++j) {
        const std::size_t m = pick(rng, 1, bounds.max_branch);
        shape.branch_lens.push_back(m);
        BranchWeights branch;
        for (std::size_t i = 0; i < m; ++i) {
            branch.steps.push_back(random_weight(rng, bounds));
        }
        branch.closing = random_weight(rng, bounds);
        weights.branches.push_back(std::move(branch));
    }
    return canonicalize_block(std::move(shape), std::move(weights));
}

}  // namespace

std::mt19937_64 case_rng(std::uint64_t seed, std::uint64_t case_index) {
    return std::mt19937_64(splitmix64(seed ^ splitmix64(case_index + 1)));
}

WeightedBlock random_block(std::mt19937_64& rng, const FuzzBounds& bounds) {
    WeightedBlock block = random_block_once(rng, bounds);
    if (bounds.include_degenerate) {
        return block;
    }
    for (int attempt = 0; attempt < 10000; ++attempt) {
        if (block.all_cycles_nonzero()) {
            return block;
        }
        block = random_block_once(rng, bounds);
    }
    throw Error("weight bounds admit no block with all cycle weights nonzero");
}

CactoidGraph random_graph(std::mt19937_64& rng, const FuzzBounds& bounds) {
    const std::size_t b = pick(rng, 1, std::max<std::size_t>(1, bounds.max_blocks));
    std::vector<WeightedBlock> blocks;
    blocks.reserve(b);
    for (std::size_t t = 0; t < b; ++t) {
        blocks.push_back(random_block(rng, bounds));
    }

    // Attach every block after the first to a uniformly chosen vertex of an
    // earlier block; that always produces a valid block tree and sometimes
    // piles several blocks onto one cut vertex.
    Gluing gluing;
    struct Placed {
        std::size_t block;
        std::string local;
        std::string label;  // empty until the vertex becomes a cut vertex
    };
    std::vector<Placed> placed;
    std::size_t next_cut = 1;
    for (std::size_t t = 0; t < b; ++t) {
        const std::vector<std::string> names = blocks[t].local_names();
        if (t > 0) {
            Placed& target = placed[pick(rng, 0, placed.size() - 1)];
            if (target.label.empty()) {
                target.label = "g" + std::to_string(next_cut++);
                gluing[{target.block, target.local}] = target.label;
            }
            const std::string& local = names[pick(rng, 0, names.size() - 1)];
            gluing[{t, local}] = target.label;
        }
        for (const std::string& name : names) {
            // skip the vertex we just glued; it is already placed
            if (auto it = gluing.find({t, name}); it != gluing.end() && t > 0) {
                continue;
            }
            placed.push_back({t, name, ""});
        }
    }
    return assemble_graph(std::move(blocks), gluing);
}

namespace {

std::vector<IdentityResult> run_case(std::uint64_t seed, std::uint64_t index,
                                     const FuzzBounds& bounds) {
    std::mt19937_64 rng = case_rng(seed, index);
    if (bounds.max_blocks <= 1) {
        return check_block_identities(random_block(rng, bounds));
    }
    return check_graph_identities(random_graph(rng, bounds));
}

void merge_case(VerificationReport& report, std::uint64_t index,
                const std::vector<IdentityResult>& results,
                std::vector<std::size_t>& record_of, std::vector<std::string>& known) {
    for (const IdentityResult& result : results) {
        std::size_t slot = known.size();
        for (std::size_t k = 0; k < known.size(); ++k) {
            if (known[k] == result.name) {
                slot = k;
                break;
            }
        }
        if (slot == known.size()) {
            known.push_back(result.name);
            record_of.push_back(report.records.size());
            report.records.push_back(VerificationRecord{result.name, true, 0, 0, 0, {}});
        }
        VerificationRecord& record = report.records[record_of[slot]];
        if (result.checked > 0) {
            ++record.cases_checked;
            record.entries_checked += result.checked;
        }
        if (!result.pass) {
            record.pass = false;
            report.pass = false;
            ++record.failures;
            if (!record.first_failure && result.first_mismatch) {
                record.first_failure =
                    CaseMismatch{index, result.first_mismatch->row, result.first_mismatch->col,
                                 result.first_mismatch->expected.str(),
                                 result.first_mismatch->got.str()};
            }
        }
    }
}

}  // namespace

VerificationReport run_fuzz(std::uint64_t seed, std::uint64_t cases, const FuzzBounds& bounds,
                            std::size_t jobs) {
    VerificationReport report;
    report.cases = cases;

    std::vector<std::vector<IdentityResult>> results(cases);
    if (jobs <= 1) {
        for (std::uint64_t i = 0; i < cases; ++i) {
            results[i] = run_case(seed, i, bounds);
        }
    } else {
        std::atomic<std::uint64_t> next{0};
        auto worker = [&] {
            for (;;) {
                const std::uint64_t i = next.fetch_add(1);
                if (i >= cases) {
                    return;
                }
                results[i] = run_case(seed, i, bounds);
            }
        };
        std::vector<std::thread> pool;
        const std::size_t count = std::min<std::size_t>(jobs, static_cast<std::size_t>(cases));
        for (std::size_t t = 0; t < count; ++t) {
            pool.emplace_back(worker);
        }
        for (std::thread& t : pool) {
            t.join();
        }
    }

    // merge in case order so the report does not depend on scheduling
    std::vector<std::size_t> record_of;
    std::vector<std::string> known;
    for (std::uint64_t i = 0; i < cases; ++i) {
        merge_case(report, i, results[i], record_of, known);
    }
    return report;
}

std::string report_to_json(const VerificationReport& report) {
    nlohmann::ordered_json out;
    out["cases"] = report.cases;
    out["status"] = report.pass ? "pass" : "fail";
    nlohmann::ordered_json records = nlohmann::ordered_json::array();
    for (const VerificationRecord& record : report.records) {
        nlohmann::ordered_json r;
        r["name"] = record.name;
        r["status"] = record.pass ? "pass" : "fail";
        r["cases_checked"] = record.cases_checked;
        r["entries_checked"] = record.entries_checked;
        r["failures"] = record.failures;
        if (record.first_failure) {
            r["first_mismatch"] = {{"case", record.first_failure->case_index},
                                   {"row", record.first_failure->row},
                                   {"col", record.first_failure->col},
                                   {"expected", record.first_failure->expected},
                                   {"got", record.first_failure->got}};
        }
        records.push_back(std::move(r));
    }
    out["records"] = std::move(records);
    std::size_t passed = 0;
    for (const VerificationRecord& record : report.records) {
        if (record.pass) {
            ++passed;
        }
    }
    out["summary"] = {{"identities", report.records.size()},
                      {"passed", passed},
                      {"failed", report.records.size() - passed}};
    return out.dump();
}

}  // namespace cactoid
