#include <benchmark/benchmark.h>

#include "casclab/cascade.hpp"
#include "casclab/generators.hpp"

using namespace casclab;

static void BM_RunCascade(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Rng graph_rng(4, 0);
    const Graph g = gen_er(n, 6.0 / static_cast<double>(n - 1), graph_rng);
    Rng thr_rng(4, 1);
    const auto thresholds = assign_thresholds(n, DeltaThreshold{0.18}, thr_rng);
    NodeId seed = 0;
    for (auto _ : state) {
        const std::vector<NodeId> seeds{seed};
        benchmark::DoNotOptimize(run_cascade(g, thresholds, seeds).final_size);
        seed = (seed + 1) % static_cast<NodeId>(n);
    }
}
BENCHMARK(BM_RunCascade)->Arg(1000)->Arg(10000);

static void BM_AssignThresholds(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Rng rng(5, 0);
    for (auto _ : state)
        benchmark::DoNotOptimize(assign_thresholds(n, UniformThreshold{0.1, 0.3}, rng).phi.size());
}
BENCHMARK(BM_AssignThresholds)->Arg(10000);
