#include <benchmark/benchmark.h>

#include "flc/numtheory.hpp"
#include "flc/survey.hpp"

static void PisanoPeriod(benchmark::State& state) {
    const auto m = static_cast<std::uint64_t>(state.range(0));
    const flc::InitialPair pair(0, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(flc::pisano_period(pair, m));
    }
}
BENCHMARK(PisanoPeriod)->Arg(11)->Arg(1009)->Arg(14969)->Arg(199999);

static void Classify(benchmark::State& state) {
    const auto p = static_cast<std::uint64_t>(state.range(0));
    const flc::InitialPair pair(-9, -21);
    for (auto _ : state) {
        benchmark::DoNotOptimize(flc::classify(p, pair));
    }
}
BENCHMARK(Classify)->Arg(41)->Arg(1009)->Arg(14969);

static void ClassifyScan(benchmark::State& state) {
    const auto primes = flc::odd_primes_upto(static_cast<std::uint64_t>(state.range(0)));
    const flc::ScanOptions options{static_cast<unsigned>(state.range(1)), nullptr};
    for (auto _ : state) {
        benchmark::DoNotOptimize(flc::classify_all(flc::InitialPair(0, 1), primes, options));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(primes.size()));
}
BENCHMARK(ClassifyScan)->Args({2000, 1})->Args({2000, 4})->Unit(benchmark::kMillisecond)->UseRealTime();

static void LegendreSymbol(benchmark::State& state) {
    std::int64_t a = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(flc::legendre_symbol(a, 14969));
        a = (a * 7 + 3) % 14969;
    }
}
BENCHMARK(LegendreSymbol);
