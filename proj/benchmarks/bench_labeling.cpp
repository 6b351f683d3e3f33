#include <benchmark/benchmark.h>

#include "flc/labeling.hpp"

static void EvaluateCorona(benchmark::State& state) {
    const flc::Construction c = flc::label_corona_path(41, flc::InitialPair(0, 1), flc::connected_graph(32, 480, 1));
    const flc::EdgeLabeler labeler(41, flc::InitialPair(0, 1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(flc::evaluate(c.labeling, labeler));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(c.labeling.graph().size()));
}
BENCHMARK(EvaluateCorona);

static void StrongProduct(benchmark::State& state) {
    const flc::Graph c = flc::cycle(static_cast<std::size_t>(state.range(0)));
    const flc::Graph g = flc::connected_graph(8, 14, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(flc::strong(c, g));
    }
}
BENCHMARK(StrongProduct)->Arg(30)->Arg(240);

static void ConnectedGraph(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const std::size_t m = n * (n - 1) / 4;
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(flc::connected_graph(n, m, seed++));
    }
}
BENCHMARK(ConnectedGraph)->Arg(32)->Arg(256);

// K_n has no cordial labeling mod 3 for (0,1), so every permutation is tried.
static void BruteForceSearch(benchmark::State& state) {
    const flc::Graph g = flc::complete(static_cast<std::size_t>(state.range(0)));
    const auto workers = static_cast<unsigned>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(flc::brute_force_flc_search(g, 3, flc::InitialPair(0, 1), 9, workers));
    }
}
BENCHMARK(BruteForceSearch)->Args({7, 1})->Args({8, 1})->Args({8, 4})->Unit(benchmark::kMillisecond)->UseRealTime();
