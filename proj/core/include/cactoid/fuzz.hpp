#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cactoid/block.hpp"
#include "cactoid/checks.hpp"
#include "cactoid/graph.hpp"

namespace cactoid {

/// Size and weight ranges for generated blocks/graphs. Weights are sampled
/// as numerator/denominator pairs from the given ranges. With max_blocks = 1
/// the sweep exercises single blocks; above that it glues random block trees.
struct FuzzBounds {
    std::size_t max_path = 5;
    std::size_t max_cycles = 4;
    std::size_t max_branch = 4;
    long long numerator_min = -5;
    long long numerator_max = 5;
    long long denominator_min = 1;
    long long denominator_max = 4;
    std::size_t max_blocks = 1;
    /// Keep blocks with a zero-weight cycle instead of resampling them;
    /// such cases check the zero-determinant branch only.
    bool include_degenerate = false;
    /// Sample positive weights only (numerator range clamped to >= 1), so
    /// every case also exercises the shortest-path cross-check.
    bool positive_weights = false;
};

struct CaseMismatch {
    std::uint64_t case_index = 0;
    std::size_t row = 0;
    std::size_t col = 0;
    std::string expected;
    std::string got;
};

/// Aggregated outcome of one identity across all cases.
struct VerificationRecord {
    std::string name;
    bool pass = true;
    std::uint64_t cases_checked = 0;   // cases where the identity applied
    std::uint64_t entries_checked = 0; // total entry comparisons
    std::uint64_t failures = 0;        // failing cases
    std::optional<CaseMismatch> first_failure;
};

struct VerificationReport {
    std::vector<VerificationRecord> records;
    std::uint64_t cases = 0;
    bool pass = true;
};

/// Deterministic verification sweep: for each case a fresh block (or graph)
/// is generated from (seed, case index) alone and run through every
/// applicable identity. Safe to parallelize; the merged report is identical
/// for any job count.
VerificationReport run_fuzz(std::uint64_t seed, std::uint64_t cases, const FuzzBounds& bounds,
                            std::size_t jobs = 1);

/// Stable JSON rendering of a report (byte-identical for equal reports).
std::string report_to_json(const VerificationReport& report);

/// One deterministic case, exposed for tests and the acceptance suite.
WeightedBlock random_block(std::mt19937_64& rng, const FuzzBounds& bounds);
CactoidGraph random_graph(std::mt19937_64& rng, const FuzzBounds& bounds);
std::mt19937_64 case_rng(std::uint64_t seed, std::uint64_t case_index);

}  // namespace cactoid
