#include "casclab/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <string>
#include <thread>

#include "casclab/errors.hpp"
#include "casclab/line_picking.hpp"

namespace casclab {

bool classify_global(std::size_t size, std::size_t n, std::size_t giant,
                     const GlobalCascadeRule& rule, std::optional<std::size_t> batch_max) {
    if (size > n) throw ValidationError("cascade size exceeds n");
    if (const auto* frac = std::get_if<FractionOfNetwork>(&rule))
        return static_cast<double>(size) > frac->b * static_cast<double>(n);
    if (const auto* gf = std::get_if<FractionOfGiant>(&rule))
        return static_cast<double>(size) >= gf->gamma * static_cast<double>(giant);
    if (!batch_max) throw ValidationError("EmpiricalMax rule requires the batch maximum");
    return size == *batch_max;
}

RealizationRecord run_batch(const Graph& g, const ThresholdAssignment& thresholds,
                            std::size_t k, const SeedStrategy& strategy,
                            const GlobalCascadeRule& rule, std::uint64_t master_seed,
                            std::uint64_t realization_index) {
    if (k < 1) throw ValidationError("shock count k must be >= 1");
    RealizationRecord rec;
    rec.giant_size = components(g).giant_size;
    rec.shocks.reserve(k);
    const std::uint64_t shock_base = substream(kStreamShock, realization_index);
    for (std::size_t j = 0; j < k; ++j) {
        Rng rng(master_seed, substream(shock_base, j));
        const auto seeds = select_seeds(strategy, g, rng);
        const auto outcome = run_cascade(g, thresholds, seeds);
        ShockRecord sr;
        sr.seed = seeds.front();
        sr.size = static_cast<std::uint32_t>(outcome.final_size);
        sr.steps = static_cast<std::uint32_t>(outcome.steps);
        rec.shocks.push_back(sr);
        if (outcome.final_size == 1) ++rec.zero_count;
    }
    std::size_t batch_max = 0;
    for (const ShockRecord& sr : rec.shocks) batch_max = std::max<std::size_t>(batch_max, sr.size);
    for (ShockRecord& sr : rec.shocks) {
        sr.is_global = classify_global(sr.size, g.num_nodes(), rec.giant_size, rule, batch_max);
        if (sr.is_global) ++rec.global_count;
    }
    return rec;
}

FrequencyCi normal_ci(std::span<const double> values) {
    if (values.empty()) throw ValidationError("confidence interval needs at least one value");
    FrequencyCi ci;
    double sum = 0.0;
    for (double v : values) sum += v;
    ci.mean = sum / static_cast<double>(values.size());
    if (values.size() < 2) {
        ci.lo = ci.hi = ci.mean;
        ci.degenerate = true;
        return ci;
    }
    double ss = 0.0;
    for (double v : values) ss += (v - ci.mean) * (v - ci.mean);
    const double sd = std::sqrt(ss / static_cast<double>(values.size() - 1));
    const double half = 1.96 * sd / std::sqrt(static_cast<double>(values.size()));
    ci.lo = ci.mean - half;
    ci.hi = ci.mean + half;
    return ci;
}

FrequencyCi frequency_ci(std::span<const double> freqs) {
    FrequencyCi ci = normal_ci(freqs);
    ci.lo = std::max(0.0, ci.lo);
    ci.hi = std::min(1.0, ci.hi);
    return ci;
}

std::vector<std::pair<double, double>> ccdf(std::span<const std::uint32_t> sizes, std::size_t n) {
    if (sizes.empty()) throw ValidationError("ccdf needs a non-empty sample");
    for (std::uint32_t s : sizes)
        if (s < 1 || s > n) throw ValidationError("ccdf sizes must lie in [1, n]");
    std::vector<std::uint32_t> sorted(sizes.begin(), sizes.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::pair<double, double>> points;
    const double total = static_cast<double>(sorted.size());
    for (std::size_t i = 0; i < sorted.size();) {
        const std::uint32_t s = sorted[i];
        points.emplace_back(static_cast<double>(s) / static_cast<double>(n),
                            static_cast<double>(sorted.size() - i) / total);
        while (i < sorted.size() && sorted[i] == s) ++i;
    }
    return points;
}

namespace {

unsigned resolve_threads(unsigned threads, std::size_t work_units) {
    if (threads == 0) {
        const unsigned hw = std::thread::hardware_concurrency();
        threads = hw == 0 ? 1 : hw;
    }
    return static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(work_units, 1)));
}

// Runs fn(i) for i in [0, count) across `threads` threads; work is assigned
// by index so any schedule produces the same per-index results.
template <typename Fn>
void parallel_for_index(std::size_t count, unsigned threads, Fn fn) {
    threads = resolve_threads(threads, count);
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([count, threads, t, &fn] {
            for (std::size_t i = t; i < count; i += threads) fn(i);
        });
    for (auto& th : pool) th.join();
}

} // namespace

ExperimentSummary run_experiment(const ExperimentConfig& config, unsigned threads) {
    if (config.realizations < 1) throw ValidationError("realizations must be >= 1");
    if (config.shocks < 1) throw ValidationError("shocks per realization must be >= 1");
    validate(config.generator);

    ExperimentSummary summary;
    summary.n = std::visit([](const auto& sp) { return sp.n; }, config.generator);
    summary.per_realization.resize(config.realizations);

    std::exception_ptr failure;
    std::mutex failure_mutex;
    parallel_for_index(config.realizations, threads, [&](std::size_t r) {
        try {
            Rng graph_rng(config.master_seed, substream(kStreamGraph, r));
            const Graph g = generate(config.generator, graph_rng);
            Rng threshold_rng(config.master_seed, substream(kStreamThresholds, r));
            const auto thresholds = assign_thresholds(g.num_nodes(), config.thresholds, threshold_rng);
            summary.per_realization[r] = run_batch(g, thresholds, config.shocks,
                                                   config.seed_strategy, config.rule,
                                                   config.master_seed, r);
        } catch (...) {
            const std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    });
    if (failure) std::rethrow_exception(failure);

    std::vector<double> freqs;
    std::vector<std::uint32_t> pooled;
    pooled.reserve(config.realizations * config.shocks);
    double size_sum = 0.0, global_size_sum = 0.0;
    std::size_t global_total = 0, zero_total = 0;
    for (const RealizationRecord& rec : summary.per_realization) {
        freqs.push_back(static_cast<double>(rec.global_count) / static_cast<double>(config.shocks));
        zero_total += rec.zero_count;
        for (const ShockRecord& sr : rec.shocks) {
            pooled.push_back(sr.size);
            size_sum += sr.size;
            if (sr.is_global) {
                global_size_sum += sr.size;
                ++global_total;
            }
        }
    }
    const FrequencyCi ci = frequency_ci(freqs);
    summary.frequency_mean = ci.mean;
    summary.ci_lo = ci.lo;
    summary.ci_hi = ci.hi;
    summary.ci_degenerate = ci.degenerate;
    summary.ccdf_points = ccdf(pooled, summary.n);
    summary.mean_size_all = size_sum / static_cast<double>(pooled.size());
    if (global_total > 0) summary.mean_size_global = global_size_sum / static_cast<double>(global_total);
    summary.zero_fraction = static_cast<double>(zero_total) / static_cast<double>(pooled.size());
    return summary;
}

namespace {

GeneratorSpec apply_sweep_value(SweepParam param, double value, const GeneratorSpec& base) {
    GeneratorSpec spec = base;
    switch (param) {
    case SweepParam::S: {
        auto* wax = std::get_if<WaxmanSpec>(&spec);
        if (!wax) throw ValidationError("s-sweep applies to the Waxman family only");
        if (value < 0.0) throw ValidationError("s values must be >= 0");
        wax->s = value;
        return spec;
    }
    case SweepParam::Z: {
        if (auto* wax = std::get_if<WaxmanSpec>(&spec)) {
            if (value <= 0.0) throw ValidationError("z values must be > 0");
            wax->target_z = value;
            return spec;
        }
        if (auto* er = std::get_if<ErSpec>(&spec)) {
            if (value <= 0.0) throw ValidationError("z values must be > 0");
            er->q = value / static_cast<double>(er->n - 1);
            return spec;
        }
        if (auto* ba = std::get_if<BaSpec>(&spec)) {
            const double half = value / 2.0;
            // z = 2m: the BA family only admits even integer mean degrees.
            if (value <= 0.0 || half != std::floor(half))
                throw ValidationError("BA z-sweep needs even integer z = 2m, got " +
                                      std::to_string(value));
            ba->m = static_cast<std::size_t>(half);
            return spec;
        }
        throw ValidationError("z-sweep applies to Waxman, ER or BA");
    }
    case SweepParam::C: {
        auto* price = std::get_if<PriceSpec>(&spec);
        if (!price) throw ValidationError("c-sweep applies to the Price family only");
        if (value <= 0.0) throw ValidationError("c values must be > 0");
        price->c = value;
        return spec;
    }
    }
    throw ValidationError("unknown sweep parameter");
}

} // namespace

std::vector<std::pair<double, ExperimentSummary>> sweep(SweepParam param,
                                                        std::span<const double> values,
                                                        const ExperimentConfig& base,
                                                        unsigned threads) {
    if (values.empty()) throw ValidationError("sweep needs at least one value");
    std::vector<std::pair<double, ExperimentSummary>> out;
    out.reserve(values.size());
    const std::uint64_t sweep_base = substream(kStreamSweep, base.master_seed);
    for (double value : values) {
        ExperimentConfig cfg = base;
        cfg.generator = apply_sweep_value(param, value, base.generator);
        cfg.master_seed = substream(sweep_base, hash_double_bits(value));
        out.emplace_back(value, run_experiment(cfg, threads));
    }
    return out;
}

std::vector<BetweennessDegreePoint> betweenness_degree_experiment(
    std::span<const double> s_values, std::size_t n, double z, std::size_t realizations,
    double tau, std::uint64_t master_seed, unsigned threads) {
    if (realizations < 1) throw ValidationError("betweenness experiment needs realizations >= 1");
    std::vector<BetweennessDegreePoint> points;
    for (double s : s_values) {
        const double q = waxman_q(n, z, s);
        const std::uint64_t s_base = substream(kStreamGraph, hash_double_bits(s));
        std::vector<std::optional<double>> stats(realizations);
        std::exception_ptr failure;
        std::mutex failure_mutex;
        parallel_for_index(realizations, threads, [&](std::size_t r) {
            try {
                Rng rng(master_seed, substream(s_base, r));
                const Graph g = gen_waxman(n, s, q, rng);
                stats[r] = high_betweenness_mean_degree(g, tau).mean_degree;
            } catch (...) {
                const std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        });
        if (failure) std::rethrow_exception(failure);

        BetweennessDegreePoint pt;
        pt.s = s;
        std::vector<double> present;
        for (const auto& v : stats) {
            if (v)
                present.push_back(*v);
            else
                ++pt.excluded;
        }
        if (!present.empty()) {
            const FrequencyCi ci = normal_ci(present);
            pt.mean_degree = ci.mean;
            pt.ci_lo = ci.lo;
            pt.ci_hi = ci.hi;
            pt.ci_degenerate = ci.degenerate;
        }
        points.push_back(pt);
    }
    return points;
}

} // namespace casclab
