#include <benchmark/benchmark.h>

#include "korb/aut.hpp"
#include "korb/examples_data.hpp"

using namespace korb;

static void BM_AutMatching6(benchmark::State& state) {
    KSet x = reconstruct_example("X2").set;
    for (auto _ : state) benchmark::DoNotOptimize(aut_of_kset(x).order);
}
BENCHMARK(BM_AutMatching6);

static void BM_Closure2_C6(benchmark::State& state) {
    PermGroup c6(6, {Permutation::parse_cycles("(1 2 3 4 5 6)", 6)});
    for (auto _ : state) benchmark::DoNotOptimize(k_closure(c6, 2).order);
}
BENCHMARK(BM_Closure2_C6);
