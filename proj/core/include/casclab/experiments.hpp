#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "casclab/cascade.hpp"
#include "casclab/generators.hpp"
#include "casclab/graph.hpp"

namespace casclab {

/// Global-cascade classification rules. FractionOfNetwork is the operative
/// default (b = 0.1): a cascade is global when size > b*n, strictly.
struct FractionOfNetwork {
    double b = 0.1;
};
/// size >= gamma * giant component size.
struct FractionOfGiant {
    double gamma = 1.0;
};
/// size equals the largest size observed in the batch.
struct EmpiricalMax {};

using GlobalCascadeRule = std::variant<FractionOfNetwork, FractionOfGiant, EmpiricalMax>;

bool classify_global(std::size_t size, std::size_t n, std::size_t giant,
                     const GlobalCascadeRule& rule,
                     std::optional<std::size_t> batch_max = std::nullopt);

struct ShockRecord {
    NodeId seed = 0;
    std::uint32_t size = 0;
    std::uint32_t steps = 0;
    bool is_global = false;
};

struct RealizationRecord {
    std::vector<ShockRecord> shocks;
    std::size_t giant_size = 0;
    std::size_t global_count = 0;
    std::size_t zero_count = 0; // cascades that never left their seed (size 1)
};

/// k independently seeded cascades on one graph/threshold assignment.
/// Shock j draws from stream (master_seed, SHOCK, realization_index, j), so
/// results do not depend on execution order.
RealizationRecord run_batch(const Graph& g, const ThresholdAssignment& thresholds,
                            std::size_t k, const SeedStrategy& strategy,
                            const GlobalCascadeRule& rule, std::uint64_t master_seed,
                            std::uint64_t realization_index);

struct ExperimentConfig {
    GeneratorSpec generator;
    std::size_t realizations = 10;
    std::size_t shocks = 1000;
    ThresholdDistribution thresholds = DeltaThreshold{0.18};
    SeedStrategy seed_strategy = UniformRandomSeed{};
    GlobalCascadeRule rule = FractionOfNetwork{0.1};
    std::uint64_t master_seed = 0;
};

struct FrequencyCi {
    double mean = 0.0;
    double lo = 0.0;
    double hi = 0.0;
    bool degenerate = false; // single sample: lo = hi = mean
};

/// Normal-approximation 95% CI over per-realization frequencies,
/// mean +- 1.96 * sd / sqrt(R), clamped to [0,1].
FrequencyCi frequency_ci(std::span<const double> freqs);

/// Same interval without the [0,1] clamp, for unconstrained statistics.
FrequencyCi normal_ci(std::span<const double> values);

struct ExperimentSummary {
    std::size_t n = 0;
    std::vector<RealizationRecord> per_realization;
    double frequency_mean = 0.0; // mean over realizations of global_count / k
    double ci_lo = 0.0;
    double ci_hi = 0.0;
    bool ci_degenerate = false;
    std::vector<std::pair<double, double>> ccdf_points; // (size fraction, P[S >= x])
    double mean_size_all = 0.0;
    std::optional<double> mean_size_global; // empty when no global cascade occurred
    double zero_fraction = 0.0;             // pooled fraction of size-1 cascades
};

/// Full protocol: R realizations, fresh graph + thresholds per realization,
/// k shocks each, pooled CCDF. Realizations may run in parallel (threads = 0
/// picks a default); the result is identical for every thread count.
ExperimentSummary run_experiment(const ExperimentConfig& config, unsigned threads = 0);

/// Empirical complementary cumulative distribution of size fractions.
std::vector<std::pair<double, double>> ccdf(std::span<const std::uint32_t> sizes, std::size_t n);

enum class SweepParam { S, Z, C };

/// One run_experiment per value, all else fixed. The master seed is offset
/// per value via substream(substream(master, SWEEP), bits(value)).
/// S applies to Waxman; Z to Waxman/ER/BA (BA needs even z = 2m); C to Price.
std::vector<std::pair<double, ExperimentSummary>> sweep(SweepParam param,
                                                        std::span<const double> values,
                                                        const ExperimentConfig& base,
                                                        unsigned threads = 0);

struct BetweennessDegreePoint {
    double s = 0.0;
    std::optional<double> mean_degree; // empty when every realization had no qualifying node
    double ci_lo = 0.0;
    double ci_hi = 0.0;
    bool ci_degenerate = false;
    std::size_t excluded = 0; // realizations with no node above tau
};

/// For each s: generate Waxman graphs calibrated to mean degree z and average
/// the mean degree of nodes with betweenness > tau.
std::vector<BetweennessDegreePoint> betweenness_degree_experiment(
    std::span<const double> s_values, std::size_t n, double z, std::size_t realizations,
    double tau, std::uint64_t master_seed, unsigned threads = 0);

} // namespace casclab
