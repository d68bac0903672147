#include <benchmark/benchmark.h>

#include "casclab/generators.hpp"
#include "casclab/line_picking.hpp"

using namespace casclab;

static void BM_GenEr(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const double q = 6.0 / static_cast<double>(n - 1);
    std::uint64_t rep = 0;
    for (auto _ : state) {
        Rng rng(1, rep++);
        benchmark::DoNotOptimize(gen_er(n, q, rng).num_edges());
    }
}
BENCHMARK(BM_GenEr)->Arg(1000)->Arg(10000);

static void BM_GenWaxman(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const double s = 10.0;
    const double q = waxman_q(n, 6.0, s);
    std::uint64_t rep = 0;
    for (auto _ : state) {
        Rng rng(2, rep++);
        benchmark::DoNotOptimize(gen_waxman(n, s, q, rng).num_edges());
    }
}
BENCHMARK(BM_GenWaxman)->Arg(1000)->Arg(10000);

static void BM_GenBa(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::uint64_t rep = 0;
    for (auto _ : state) {
        Rng rng(3, rep++);
        benchmark::DoNotOptimize(gen_ba(n, 3, rng).num_edges());
    }
}
BENCHMARK(BM_GenBa)->Arg(10000)->Arg(100000);

static void BM_LaplaceG(benchmark::State& state) {
    double s = 0.0;
    for (auto _ : state) {
        s += 0.001;
        benchmark::DoNotOptimize(laplace_g(s));
    }
}
BENCHMARK(BM_LaplaceG);
