#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "casclab/cascade.hpp"
#include "casclab/errors.hpp"
#include "casclab/generators.hpp"

using namespace casclab;

namespace {

Graph star(std::size_t leaves) {
    std::vector<Edge> edges;
    for (NodeId i = 1; i <= leaves; ++i) edges.push_back({0, i});
    return Graph::build(leaves + 1, edges, false);
}

ThresholdAssignment delta(std::size_t n, double phi) {
    Rng rng(0, 0);
    return assign_thresholds(n, DeltaThreshold{phi}, rng);
}

} // namespace

TEST_CASE("threshold assignment") {
    Rng rng(1, 0);
    const auto d = assign_thresholds(5, DeltaThreshold{0.18}, rng);
    CHECK(d.phi == std::vector<double>(5, 0.18));
    const auto one = assign_thresholds(3, DeltaThreshold{1.0}, rng);
    CHECK(one.phi == std::vector<double>(3, 1.0));
    CHECK_THROWS_AS(assign_thresholds(3, DeltaThreshold{0.0}, rng), ValidationError);
    CHECK_THROWS_AS(assign_thresholds(3, DeltaThreshold{1.1}, rng), ValidationError);

    // Law of large numbers for the uniform distribution.
    const auto u = assign_thresholds(10000, UniformThreshold{0.1, 0.3}, rng);
    double mean = 0.0;
    for (double phi : u.phi) mean += phi;
    mean /= 10000.0;
    const double se = (0.3 - 0.1) / std::sqrt(12.0) / std::sqrt(10000.0);
    CHECK(std::abs(mean - 0.2) < 3.0 * se);
    for (double phi : u.phi) {
        CHECK(phi > 0.0);
        CHECK(phi <= 1.0);
    }
}

TEST_CASE("stability and vulnerability") {
    CHECK(stability_kappa(0.18, 10) == 2);
    CHECK(stability_kappa(0.18, 4) == 1);
    CHECK(stability_kappa(0.5, 0) == 0);

    CHECK(is_vulnerable(0.18, 4));
    CHECK_FALSE(is_vulnerable(0.18, 6));
    // Boundary case from the strict update rule: 1 > 0.18 * 5.
    CHECK(is_vulnerable(0.18, 5));
    CHECK_FALSE(is_vulnerable(0.5, 0));
}

TEST_CASE("cascade on a star") {
    const Graph g = star(4);
    const std::vector<NodeId> leaf{1};

    const auto low = run_cascade(g, delta(5, 0.18), leaf, true);
    CHECK(low.final_size == 5);
    CHECK(low.steps == 2);
    REQUIRE(low.trajectory.has_value());
    CHECK(*low.trajectory == std::vector<std::size_t>{1, 2, 5});

    const auto high = run_cascade(g, delta(5, 0.5), leaf);
    CHECK(high.final_size == 1);
    CHECK(high.steps == 0);
}

TEST_CASE("saturation: seeding everyone terminates immediately") {
    Rng rng(2, 0);
    const Graph g = gen_er(40, 0.1, rng);
    std::vector<NodeId> all(40);
    std::iota(all.begin(), all.end(), 0);
    const auto out = run_cascade(g, delta(40, 0.18), all);
    CHECK(out.final_size == 40);
    CHECK(out.steps == 0);
}

TEST_CASE("cascade input validation") {
    const Graph g = star(4);
    CHECK_THROWS_AS(run_cascade(g, delta(5, 0.18), std::vector<NodeId>{}), ValidationError);
    CHECK_THROWS_AS(run_cascade(g, delta(4, 0.18), std::vector<NodeId>{0}), ValidationError);
    CHECK_THROWS_AS(run_cascade(g, delta(5, 0.18), std::vector<NodeId>{9}), ValidationError);
}

TEST_CASE("brute force oracle on hand-checked graphs") {
    const Graph p3 = Graph::build(3, std::vector<Edge>{{0, 1}, {1, 2}}, false);
    const auto end_seed = brute_force_fixpoint(p3, delta(3, 0.18), std::vector<NodeId>{0});
    CHECK(end_seed.final_size == 3);

    std::vector<Edge> tri{{0, 1}, {1, 2}, {0, 2}};
    const Graph k3 = Graph::build(3, tri, false);
    const auto stuck = brute_force_fixpoint(k3, delta(3, 0.9), std::vector<NodeId>{0});
    CHECK(stuck.final_size == 1);

    Rng rng(1, 0);
    const Graph big = gen_er(30, 0.2, rng);
    CHECK_THROWS_AS(brute_force_fixpoint(big, delta(30, 0.18), std::vector<NodeId>{0}),
                    ValidationError);
}

TEST_CASE("run_cascade equals the brute-force oracle on random small graphs") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Rng rng(seed, 1);
        const std::size_t n = 3 + seed % 10;
        const Graph g = gen_er(n, 0.4, rng);
        for (double phi : {0.18, 0.4, 0.9}) {
            const auto thresholds = delta(n, phi);
            for (NodeId s = 0; s < n; ++s) {
                const std::vector<NodeId> seeds{s};
                const auto fast = run_cascade(g, thresholds, seeds);
                const auto slow = brute_force_fixpoint(g, thresholds, seeds);
                CHECK(fast.final_size == slow.final_size);
                CHECK(fast.steps == slow.steps);
            }
        }
    }
}

TEST_CASE("oracle equality holds on directed graphs too") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Rng rng(seed, 2);
        const Graph g = gen_price(12, 2.0, true, rng);
        const auto thresholds = delta(12, 0.18);
        for (NodeId s = 0; s < 12; ++s) {
            const std::vector<NodeId> seeds{s};
            CHECK(run_cascade(g, thresholds, seeds).final_size ==
                  brute_force_fixpoint(g, thresholds, seeds).final_size);
        }
    }
}

TEST_CASE("termination fixed point: no inactive node is over threshold") {
    Rng rng(9, 0);
    const Graph g = gen_er(400, 0.012, rng);
    const auto thresholds = delta(400, 0.18);
    const auto out = run_cascade(g, thresholds, std::vector<NodeId>{0}, true);
    CHECK(out.steps <= g.num_nodes());
    REQUIRE(out.trajectory.has_value());
    CHECK(std::is_sorted(out.trajectory->begin(), out.trajectory->end()));
    CHECK(out.trajectory->back() == out.final_size);

    // Recover the active set by re-running and scanning.
    std::vector<char> active(g.num_nodes(), 0);
    {
        // Re-derive membership: a node is active iff seeding {0} activates it;
        // run once more and mark by simulating with trajectory bookkeeping.
        const auto again = run_cascade(g, thresholds, std::vector<NodeId>{0});
        CHECK(again.final_size == out.final_size);
    }
    // Full-scan fixed point check via the brute-force rule on the final state:
    // emulate one synchronous round from the fixed point and expect no change.
    std::vector<char> state(g.num_nodes(), 0);
    state[0] = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (NodeId i = 0; i < g.num_nodes(); ++i) {
            if (state[i]) continue;
            std::size_t sum = 0;
            for (NodeId j : g.neighbors(i)) sum += state[j];
            if (static_cast<double>(sum) > thresholds.phi[i] * static_cast<double>(g.degree(i))) {
                state[i] = 1;
                changed = true;
            }
        }
    }
    for (NodeId i = 0; i < g.num_nodes(); ++i) {
        if (state[i]) continue;
        std::size_t sum = 0;
        for (NodeId j : g.neighbors(i)) sum += state[j];
        CHECK_FALSE(static_cast<double>(sum) >
                    thresholds.phi[i] * static_cast<double>(g.degree(i)));
    }
    CHECK(static_cast<std::size_t>(std::count(state.begin(), state.end(), 1)) == out.final_size);
}

TEST_CASE("seed-set monotonicity") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Rng rng(seed, 3);
        const std::size_t n = 30;
        const Graph g = gen_er(n, 0.1, rng);
        const auto thresholds = delta(n, 0.4);
        std::vector<NodeId> seeds;
        std::size_t prev = 0;
        for (NodeId s = 0; s < 6; ++s) {
            seeds.push_back(s);
            const auto out = run_cascade(g, thresholds, seeds);
            CHECK(out.final_size >= prev);
            prev = out.final_size;
        }
    }
}

TEST_CASE("vulnerability consistency with single-neighbor seeding") {
    Rng rng(4, 0);
    const Graph g = gen_er(60, 0.08, rng);
    const auto thresholds = delta(60, 0.3);
    for (NodeId i = 0; i < g.num_nodes(); ++i) {
        const auto nbrs = g.neighbors(i);
        if (nbrs.empty()) continue;
        const std::vector<NodeId> seeds{nbrs.front()};
        const auto out = run_cascade(g, thresholds, seeds, true);
        // Activated in round 1 iff vulnerable.
        const bool round1 = out.trajectory && out.trajectory->size() > 1;
        bool i_active_round1 = false;
        if (round1) {
            // Determine from the rule directly: one active neighbor.
            i_active_round1 = is_vulnerable(thresholds.phi[i], g.degree(i));
        }
        if (is_vulnerable(thresholds.phi[i], g.degree(i))) {
            CHECK(out.final_size >= 2); // i joins in round 1
        }
        (void)i_active_round1;
    }
}

TEST_CASE("determinism of cascades") {
    Rng rng(12, 0);
    const Graph g = gen_er(200, 0.03, rng);
    const auto thresholds = delta(200, 0.18);
    const auto a = run_cascade(g, thresholds, std::vector<NodeId>{5}, true);
    const auto b = run_cascade(g, thresholds, std::vector<NodeId>{5}, true);
    CHECK(a.final_size == b.final_size);
    CHECK(a.steps == b.steps);
    CHECK(*a.trajectory == *b.trajectory);
}

TEST_CASE("seed selection strategies") {
    Rng rng(6, 0);
    const Graph s9 = star(9);
    for (int i = 0; i < 20; ++i) {
        const auto seeds = select_seeds(TopDegreeFraction{0.1}, s9, rng);
        REQUIRE(seeds.size() == 1);
        CHECK(seeds[0] == 0); // the hub is the whole top-10% set
    }

    const auto ex = select_seeds(ExplicitSeeds{{3}}, s9, rng);
    CHECK(ex == std::vector<NodeId>{3});
    CHECK_THROWS_AS(select_seeds(ExplicitSeeds{{42}}, s9, rng), ValidationError);

    const auto uni = select_seeds(UniformRandomSeed{}, s9, rng);
    REQUIRE(uni.size() == 1);
    CHECK(uni[0] < s9.num_nodes());

    const Graph empty = Graph::build(0, std::vector<Edge>{}, false);
    CHECK_THROWS_AS(select_seeds(UniformRandomSeed{}, empty, rng), ValidationError);
}

TEST_CASE("top-degree selection lands in the degree tail") {
    Rng rng(8, 0);
    const Graph g = gen_ba(2000, 3, rng);
    std::vector<std::size_t> degrees;
    for (NodeId i = 0; i < g.num_nodes(); ++i) degrees.push_back(g.degree(i));
    std::sort(degrees.begin(), degrees.end());
    const std::size_t p99 = degrees[static_cast<std::size_t>(0.99 * 2000)];
    for (int i = 0; i < 50; ++i) {
        const auto seeds = select_seeds(TopDegreeFraction{0.01}, g, rng);
        CHECK(g.degree(seeds[0]) >= p99);
    }
}
