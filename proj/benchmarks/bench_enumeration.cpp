#include <benchmark/benchmark.h>

#include "maxmatch/enumeration.hpp"
#include "maxmatch/graph.hpp"
#include "maxmatch/verify.hpp"

using namespace maxmatch;

static void BM_EnumerateExact(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        long long count = 0;
        enumerate_graphs(n, {}, [&](const Graph&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_EnumerateExact)->Arg(6)->Arg(7)->Arg(8);

static void BM_CanonicalFormPetersen(benchmark::State& state) {
    Graph g = petersen_graph();
    for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g).size());
}
BENCHMARK(BM_CanonicalFormPetersen);

static void BM_CanonicalFormComplete(benchmark::State& state) {
    Graph g = complete_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g).size());
}
BENCHMARK(BM_CanonicalFormComplete)->Arg(10)->Arg(20);

static void BM_VerifyBound(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        VerificationReport r = verify_edge_bound(n);
        benchmark::DoNotOptimize(r.graphs_examined);
    }
}
BENCHMARK(BM_VerifyBound)->Arg(6)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_VerifyClass2Parallel(benchmark::State& state) {
    SuiteOptions opts;
    opts.jobs = static_cast<int>(state.range(0));
    for (auto _ : state) {
        VerificationReport r = verify_class2_theorem(8, opts);
        benchmark::DoNotOptimize(r.graphs_examined);
    }
}
BENCHMARK(BM_VerifyClass2Parallel)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
