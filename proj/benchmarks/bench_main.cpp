#include <benchmark/benchmark.h>

#include <random>

#include "cactoid/composition.hpp"
#include "cactoid/distance.hpp"
#include "cactoid/fuzz.hpp"
#include "cactoid/linalg.hpp"

namespace {

cactoid::Matrix random_matrix(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    cactoid::Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const long long num = static_cast<long long>(rng() % 11) - 5;
            const long long den = static_cast<long long>(rng() % 4) + 1;
            m(i, j) = cactoid::Rational(cactoid::BigInt(num), cactoid::BigInt(den));
        }
    }
    return m;
}

void BM_Determinant(benchmark::State& state) {
    const cactoid::Matrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cactoid::det(m));
    }
}
BENCHMARK(BM_Determinant)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_Inverse(benchmark::State& state) {
    cactoid::Matrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 2);
    while (cactoid::det(m).is_zero()) {
        m = random_matrix(static_cast<std::size_t>(state.range(0)), 3);
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(cactoid::inverse(m));
    }
}
BENCHMARK(BM_Inverse)->Arg(8)->Arg(16)->Arg(32);

void BM_CofactorSum(benchmark::State& state) {
    const cactoid::Matrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cactoid::cofactor_sum(m));
    }
}
BENCHMARK(BM_CofactorSum)->Arg(16)->Arg(32);

void BM_BlockDistanceMatrix(benchmark::State& state) {
    cactoid::FuzzBounds bounds;
    bounds.max_path = static_cast<std::size_t>(state.range(0));
    bounds.max_cycles = 4;
    bounds.max_branch = static_cast<std::size_t>(state.range(0));
    auto rng = cactoid::case_rng(5, 0);
    const cactoid::WeightedBlock block = cactoid::random_block(rng, bounds);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cactoid::block_distance_matrix(block));
    }
    state.SetLabel(std::to_string(block.vertex_count()) + " vertices");
}
BENCHMARK(BM_BlockDistanceMatrix)->Arg(4)->Arg(8)->Arg(16);

void BM_BlockInverseClosedForm(benchmark::State& state) {
    cactoid::FuzzBounds bounds;
    bounds.max_path = static_cast<std::size_t>(state.range(0));
    bounds.max_branch = static_cast<std::size_t>(state.range(0));
    auto rng = cactoid::case_rng(6, 0);
    const cactoid::WeightedBlock block = cactoid::random_block(rng, bounds);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cactoid::block_inverse(block));
    }
}
BENCHMARK(BM_BlockInverseClosedForm)->Arg(4)->Arg(8);

void BM_GraphInverse(benchmark::State& state) {
    cactoid::FuzzBounds bounds;
    bounds.max_blocks = static_cast<std::size_t>(state.range(0));
    bounds.max_path = 3;
    bounds.max_cycles = 2;
    bounds.max_branch = 2;
    auto rng = cactoid::case_rng(7, 0);
    const cactoid::CactoidGraph graph = cactoid::random_graph(rng, bounds);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cactoid::graph_inverse(graph));
    }
    state.SetLabel(std::to_string(graph.vertex_count()) + " vertices");
}
BENCHMARK(BM_GraphInverse)->Arg(3)->Arg(5);

void BM_FuzzCase(benchmark::State& state) {
    cactoid::FuzzBounds bounds;
    std::uint64_t index = 0;
    for (auto _ : state) {
        auto rng = cactoid::case_rng(8, index++);
        benchmark::DoNotOptimize(
            cactoid::check_block_identities(cactoid::random_block(rng, bounds)));
    }
}
BENCHMARK(BM_FuzzCase);

}  // namespace

BENCHMARK_MAIN();
