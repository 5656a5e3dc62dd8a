#include <benchmark/benchmark.h>

#include "korb/catalog.hpp"
#include "korb/korbit.hpp"

using namespace korb;

static void BM_OrbitsK2_S8(benchmark::State& state) {
    PermGroup g(8, {Permutation::parse_cycles("(1 2)", 8),
                    Permutation::parse_cycles("(1 2 3 4 5 6 7 8)", 8)});
    for (auto _ : state) benchmark::DoNotOptimize(orbits_k(g, 2));
}
BENCHMARK(BM_OrbitsK2_S8);

static void BM_OrbitsK2_Petersen(benchmark::State& state) {
    PermGroup g = petersen_group();
    for (auto _ : state) benchmark::DoNotOptimize(orbits_k(g, 2));
}
BENCHMARK(BM_OrbitsK2_Petersen);

static void BM_Materialize_F20(benchmark::State& state) {
    for (auto _ : state) {
        PermGroup g(5, {Permutation::parse_cycles("(1 2 3 4 5)", 5),
                        Permutation::parse_cycles("(1 2 4 3)", 5)});
        benchmark::DoNotOptimize(g.order());
    }
}
BENCHMARK(BM_Materialize_F20);
