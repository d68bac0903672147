#include <benchmark/benchmark.h>

#include "casclab/generators.hpp"
#include "casclab/graph.hpp"

using namespace casclab;

static void BM_Betweenness(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Rng rng(6, 0);
    const Graph g = gen_er(n, 6.0 / static_cast<double>(n - 1), rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(betweenness(g, 1).values.size());
}
BENCHMARK(BM_Betweenness)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);

static void BM_Components(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Rng rng(7, 0);
    const Graph g = gen_er(n, 6.0 / static_cast<double>(n - 1), rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(components(g).giant_size);
}
BENCHMARK(BM_Components)->Arg(10000);

static void BM_AverageClustering(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Rng rng(8, 0);
    const Graph g = gen_er(n, 6.0 / static_cast<double>(n - 1), rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(average_clustering(g));
}
BENCHMARK(BM_AverageClustering)->Arg(10000);
