#include <benchmark/benchmark.h>

#include "mbsr/families.hpp"
#include "mbsr/graph_ops.hpp"
#include "mbsr/isomorphism.hpp"
#include "mbsr/modular_sr.hpp"
#include "mbsr/outcome.hpp"
#include "mbsr/products.hpp"
#include "mbsr/resolving.hpp"
#include "mbsr/vertex_cover.hpp"

using namespace mbsr;

static void BM_VertexCoverPetersenComplement(benchmark::State& state) {
    const Graph g = complement(petersen());
    for (auto _ : state)
        benchmark::DoNotOptimize(min_vertex_cover(g).size);
}
BENCHMARK(BM_VertexCoverPetersenComplement);

static void BM_StrongResolvingGraphCycle(benchmark::State& state) {
    const Graph g = cycle(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(strong_resolving_graph(g).core.size());
}
BENCHMARK(BM_StrongResolvingGraphCycle)->Arg(16)->Arg(32)->Arg(64);

static void BM_SolveCycleCore(benchmark::State& state) {
    const SrGraph sr = strong_resolving_graph(cycle(static_cast<int>(state.range(0))));
    for (auto _ : state)
        benchmark::DoNotOptimize(outcome_srg_exact(sr));
}
BENCHMARK(BM_SolveCycleCore)->Arg(9)->Arg(13)->Arg(17);

static void BM_ClassifierModular(benchmark::State& state) {
    const SrGraph sr = modular_sr_by_theorem(cycle(4), cycle(6));
    for (auto _ : state)
        benchmark::DoNotOptimize(outcome_srg_classifier(sr));
}
BENCHMARK(BM_ClassifierModular);

static void BM_ModularTheorem(benchmark::State& state) {
    const Graph g = complement(path(5)), h = path(5);
    for (auto _ : state)
        benchmark::DoNotOptimize(modular_sr_by_theorem(g, h).core.size());
}
BENCHMARK(BM_ModularTheorem);

static void BM_IsomorphismPetersen(benchmark::State& state) {
    const Graph a = petersen();
    const Graph b = complement(complement(petersen()));
    for (auto _ : state)
        benchmark::DoNotOptimize(are_isomorphic(a, b));
}
BENCHMARK(BM_IsomorphismPetersen);
BENCHMARK_MAIN();
