#include <benchmark/benchmark.h>

#include "maxmatch/graph.hpp"
#include "maxmatch/matching.hpp"

using namespace maxmatch;

static void BM_MaxMatchingComplete(benchmark::State& state) {
    Graph g = complete_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(max_matching(g).size());
}
BENCHMARK(BM_MaxMatchingComplete)->Arg(8)->Arg(16)->Arg(32)->Arg(62);

static void BM_MaxMatchingPetersen(benchmark::State& state) {
    Graph g = petersen_graph();
    for (auto _ : state) benchmark::DoNotOptimize(max_matching(g).size());
}
BENCHMARK(BM_MaxMatchingPetersen);

static void BM_EssentialVertices(benchmark::State& state) {
    Graph g = cycle_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(essential_vertices(g).size());
}
BENCHMARK(BM_EssentialVertices)->Arg(10)->Arg(20)->Arg(40);

static void BM_FactorCritical(benchmark::State& state) {
    Graph g = complete_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(is_factor_critical(g).value);
}
BENCHMARK(BM_FactorCritical)->Arg(7)->Arg(9)->Arg(11);
