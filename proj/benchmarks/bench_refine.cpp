#include <benchmark/benchmark.h>

#include "korb/gi.hpp"

using namespace korb;

namespace {
Graph petersen() {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) pairs.push_back({a, b});
    std::vector<std::pair<int, int>> e;
    for (size_t i = 0; i < pairs.size(); ++i)
        for (size_t j = i + 1; j < pairs.size(); ++j) {
            auto [a, b] = pairs[i];
            auto [c, d] = pairs[j];
            if (a != c && a != d && b != c && b != d)
                e.push_back({static_cast<int>(i), static_cast<int>(j)});
        }
    return Graph::from_edges(10, std::move(e));
}
}  // namespace

static void BM_RefineToStable_Petersen(benchmark::State& state) {
    Graph g = petersen();
    for (auto _ : state)
        benchmark::DoNotOptimize(refine_to_stable(initial_partition(g)).class_count);
}
BENCHMARK(BM_RefineToStable_Petersen);

static void BM_OrbitPartition_Petersen(benchmark::State& state) {
    Graph g = petersen();
    for (auto _ : state)
        benchmark::DoNotOptimize(orbit_partition(g).aut_order);
}
BENCHMARK(BM_OrbitPartition_Petersen);
