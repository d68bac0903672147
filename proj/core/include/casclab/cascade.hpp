#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "casclab/graph.hpp"
#include "casclab/rng.hpp"

namespace casclab {

struct DeltaThreshold {
    double phi_star = 0.18; // every node gets exactly this threshold
};

struct UniformThreshold {
    double lo = 0.0;
    double hi = 1.0;
};

using ThresholdDistribution = std::variant<DeltaThreshold, UniformThreshold>;

struct ThresholdAssignment {
    std::vector<double> phi; // per-node activation fraction in (0,1]
    ThresholdDistribution distribution;
};

ThresholdAssignment assign_thresholds(std::size_t n, const ThresholdDistribution& dist, Rng& rng);

/// Number of active neighbors required to activate a node: ceil(phi * z).
std::size_t stability_kappa(double phi, std::size_t z);

/// True iff one active neighbor strictly exceeds the threshold, 1 > phi*z.
/// Isolated nodes (z = 0) are never vulnerable.
bool is_vulnerable(double phi, std::size_t z);

struct CascadeOutcome {
    std::vector<NodeId> seeds;
    std::size_t final_size = 0; // active nodes at termination, seeds included
    std::size_t steps = 0;      // synchronous rounds until no change
    std::optional<std::vector<std::size_t>> trajectory; // cumulative active count per round
};

/// Synchronous threshold dynamics: each round, every inactive node i activates
/// iff the count of its active (in-)neighbors strictly exceeds phi_i * z_i,
/// where z_i is the (in-)degree. Active nodes stay active. Returns the exact
/// fixed point. Frontier-based; equivalent to the full synchronous update
/// because the dynamics are monotone.
CascadeOutcome run_cascade(const Graph& g, const ThresholdAssignment& thresholds,
                           std::span<const NodeId> seeds, bool record_trajectory = false);

/// Testing oracle: re-evaluates the update rule for every node each round with
/// no frontier optimization. Guarded to n <= 20.
CascadeOutcome brute_force_fixpoint(const Graph& g, const ThresholdAssignment& thresholds,
                                    std::span<const NodeId> seeds);

struct UniformRandomSeed {};
struct TopDegreeFraction {
    double p = 0.01; // pick uniformly among the ceil(p*n) highest-degree nodes
};
struct ExplicitSeeds {
    std::vector<NodeId> nodes;
};

using SeedStrategy = std::variant<UniformRandomSeed, TopDegreeFraction, ExplicitSeeds>;

/// UniformRandom and TopDegreeFraction return a single node; ties in the
/// top-degree set are broken by node index.
std::vector<NodeId> select_seeds(const SeedStrategy& strategy, const Graph& g, Rng& rng);

} // namespace casclab
