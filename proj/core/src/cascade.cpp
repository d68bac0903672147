#include "casclab/cascade.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "casclab/errors.hpp"

namespace casclab {

ThresholdAssignment assign_thresholds(std::size_t n, const ThresholdDistribution& dist, Rng& rng) {
    ThresholdAssignment out;
    out.distribution = dist;
    out.phi.resize(n);
    if (const auto* delta = std::get_if<DeltaThreshold>(&dist)) {
        if (delta->phi_star <= 0.0 || delta->phi_star > 1.0)
            throw ValidationError("phi_star must lie in (0,1]");
        std::fill(out.phi.begin(), out.phi.end(), delta->phi_star);
    } else {
        const auto& u = std::get<UniformThreshold>(dist);
        if (u.lo <= 0.0 || u.hi > 1.0 || u.lo > u.hi)
            throw ValidationError("uniform threshold bounds must satisfy 0 < lo <= hi <= 1");
        for (double& phi : out.phi) phi = u.lo + (u.hi - u.lo) * rng.next_double();
    }
    return out;
}

std::size_t stability_kappa(double phi, std::size_t z) {
    return static_cast<std::size_t>(std::ceil(phi * static_cast<double>(z)));
}

bool is_vulnerable(double phi, std::size_t z) {
    if (z == 0) return false;
    return 1.0 > phi * static_cast<double>(z);
}

namespace {

void check_cascade_inputs(const Graph& g, const ThresholdAssignment& thresholds,
                          std::span<const NodeId> seeds) {
    if (seeds.empty()) throw ValidationError("seed set must be non-empty");
    if (thresholds.phi.size() != g.num_nodes())
        throw ValidationError("threshold assignment length " +
                              std::to_string(thresholds.phi.size()) + " != n " +
                              std::to_string(g.num_nodes()));
    for (NodeId s : seeds)
        if (s >= g.num_nodes()) throw ValidationError("seed " + std::to_string(s) + " out of range");
}

} // namespace

CascadeOutcome run_cascade(const Graph& g, const ThresholdAssignment& thresholds,
                           std::span<const NodeId> seeds, bool record_trajectory) {
    check_cascade_inputs(g, thresholds, seeds);
    const std::size_t n = g.num_nodes();

    CascadeOutcome out;
    out.seeds.assign(seeds.begin(), seeds.end());

    std::vector<char> active(n, 0);
    std::vector<std::uint32_t> active_in(n, 0); // active (in-)neighbor counts
    std::vector<NodeId> frontier;
    std::vector<NodeId> next;
    std::size_t active_count = 0;
    for (NodeId s : seeds) {
        if (!active[s]) {
            active[s] = 1;
            ++active_count;
            frontier.push_back(s);
        }
    }
    if (record_trajectory) out.trajectory.emplace().push_back(active_count);

    while (!frontier.empty()) {
        next.clear();
        for (NodeId u : frontier) {
            // An active node influences those that read it: its out-neighbors.
            for (NodeId v : g.neighbors(u)) {
                if (active[v]) continue;
                ++active_in[v];
                const double z = static_cast<double>(g.in_degree(v));
                if (static_cast<double>(active_in[v]) > thresholds.phi[v] * z) {
                    active[v] = 1;
                    ++active_count;
                    next.push_back(v);
                }
            }
        }
        if (!next.empty()) {
            ++out.steps;
            if (record_trajectory) out.trajectory->push_back(active_count);
        }
        frontier.swap(next);
    }
    out.final_size = active_count;
    return out;
}

CascadeOutcome brute_force_fixpoint(const Graph& g, const ThresholdAssignment& thresholds,
                                    std::span<const NodeId> seeds) {
    if (g.num_nodes() > 20)
        throw ValidationError("brute_force_fixpoint is a test oracle, guarded to n <= 20");
    check_cascade_inputs(g, thresholds, seeds);
    const std::size_t n = g.num_nodes();

    CascadeOutcome out;
    out.seeds.assign(seeds.begin(), seeds.end());

    std::vector<char> state(n, 0);
    for (NodeId s : seeds) state[s] = 1;
    for (;;) {
        std::vector<char> next(state);
        bool changed = false;
        for (NodeId i = 0; i < n; ++i) {
            if (state[i]) continue;
            std::size_t sum = 0;
            for (NodeId j : g.in_neighbors(i)) sum += state[j];
            const double z = static_cast<double>(g.in_degree(i));
            if (static_cast<double>(sum) > thresholds.phi[i] * z) {
                next[i] = 1;
                changed = true;
            }
        }
        if (!changed) break;
        state.swap(next);
        ++out.steps;
    }
    out.final_size = static_cast<std::size_t>(std::count(state.begin(), state.end(), 1));
    return out;
}

std::vector<NodeId> select_seeds(const SeedStrategy& strategy, const Graph& g, Rng& rng) {
    const std::size_t n = g.num_nodes();
    if (n == 0) throw ValidationError("cannot select seeds on an empty graph");
    if (std::holds_alternative<UniformRandomSeed>(strategy))
        return {static_cast<NodeId>(rng.next_below(n))};
    if (const auto* top = std::get_if<TopDegreeFraction>(&strategy)) {
        if (top->p <= 0.0 || top->p > 1.0) throw ValidationError("top-degree fraction must lie in (0,1]");
        const std::size_t count =
            std::min<std::size_t>(n, static_cast<std::size_t>(std::ceil(top->p * static_cast<double>(n))));
        std::vector<NodeId> order(n);
        std::iota(order.begin(), order.end(), 0);
        // Highest degree first, ties by node index.
        std::stable_sort(order.begin(), order.end(), [&g](NodeId a, NodeId b) {
            return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
        });
        return {order[rng.next_below(count)]};
    }
    const auto& ex = std::get<ExplicitSeeds>(strategy);
    for (NodeId s : ex.nodes)
        if (s >= n) throw ValidationError("explicit seed " + std::to_string(s) + " out of range");
    if (ex.nodes.empty()) throw ValidationError("explicit seed list must be non-empty");
    return ex.nodes;
}

} // namespace casclab
