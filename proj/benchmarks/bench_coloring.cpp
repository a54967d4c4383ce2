#include <benchmark/benchmark.h>

#include "maxmatch/edge_coloring.hpp"
#include "maxmatch/friendly.hpp"
#include "maxmatch/graph.hpp"

using namespace maxmatch;

static void BM_VizingComplete(benchmark::State& state) {
    Graph g = complete_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(vizing_coloring(g).colors);
}
BENCHMARK(BM_VizingComplete)->Arg(8)->Arg(16)->Arg(24);

static void BM_ChromaticIndexPetersen(benchmark::State& state) {
    Graph g = petersen_graph();
    for (auto _ : state) benchmark::DoNotOptimize(chromatic_index(g).chi);
}
BENCHMARK(BM_ChromaticIndexPetersen);

static void BM_ChromaticIndexComplete(benchmark::State& state) {
    Graph g = complete_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(chromatic_index(g).chi);
}
BENCHMARK(BM_ChromaticIndexComplete)->Arg(6)->Arg(7)->Arg(8);

static void BM_IsFriendlyK7(benchmark::State& state) {
    Graph g = complete_graph(7);
    for (auto _ : state) benchmark::DoNotOptimize(is_friendly(g).verdict);
}
BENCHMARK(BM_IsFriendlyK7);

static void BM_DecomposeC(benchmark::State& state) {
    Graph g = cycle_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(decompose(g).parts.size());
}
BENCHMARK(BM_DecomposeC)->Arg(6)->Arg(10)->Arg(14);
