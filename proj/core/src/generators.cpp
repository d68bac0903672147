#include "casclab/generators.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "casclab/errors.hpp"
#include "casclab/line_picking.hpp"

namespace casclab {

Graph gen_er(std::size_t n, double q, Rng& rng) {
    if (q < 0.0 || q > 1.0) throw ValidationError("ER attachment probability q must lie in [0,1]");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(q * static_cast<double>(n) * static_cast<double>(n) / 2.0) + 16);
    for (NodeId i = 0; i < n; ++i)
        for (NodeId j = i + 1; j < n; ++j)
            if (rng.next_double() < q) edges.push_back({i, j});
    return Graph::build(n, edges, false);
}

Graph gen_waxman(std::size_t n, double s, double q, Rng& rng) {
    if (q <= 0.0 || q > 1.0) throw ValidationError("Waxman q must lie in (0,1]");
    if (s < 0.0) throw ValidationError("Waxman s must be >= 0");
    std::vector<Point> pos(n);
    for (Point& p : pos) {
        p.x = rng.next_double();
        p.y = rng.next_double();
    }
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(q * static_cast<double>(n) * 4.0) + 16);
    for (NodeId i = 0; i < n; ++i) {
        for (NodeId j = i + 1; j < n; ++j) {
            const double u = rng.next_double();
            if (u >= q) continue; // acceptance probability is at most q
            const double dx = pos[i].x - pos[j].x;
            const double dy = pos[i].y - pos[j].y;
            const double d = std::sqrt(dx * dx + dy * dy);
            if (u < q * std::exp(-s * d)) edges.push_back({i, j});
        }
    }
    return Graph::build(n, edges, false, std::move(pos));
}

namespace {

// Growth core shared by BA and Price. `draw_count(i)` gives the number of
// connections for arriving node i; `first` is the number of seed nodes.
template <typename CountFn>
std::vector<Edge> grow_preferential(std::size_t n, std::size_t first, bool directed,
                                    Rng& rng, CountFn draw_count) {
    std::vector<Edge> edges;
    // One entry per unit of degree (undirected skeleton); preferential
    // selection is a uniform pick from this bag.
    std::vector<NodeId> bag;
    std::vector<NodeId> targets;
    for (std::size_t i = first; i < n; ++i) {
        const std::size_t existing = i;
        const std::size_t want = std::min(draw_count(i), existing);
        targets.clear();
        if (want >= existing) {
            for (NodeId t = 0; t < existing; ++t) targets.push_back(t);
        } else {
            while (targets.size() < want) {
                const NodeId t = bag[rng.next_below(bag.size())];
                if (std::find(targets.begin(), targets.end(), t) == targets.end())
                    targets.push_back(t);
            }
        }
        for (NodeId t : targets) {
            edges.push_back({static_cast<NodeId>(i), t});
            bag.push_back(t);
            bag.push_back(static_cast<NodeId>(i));
        }
    }
    (void)directed;
    return edges;
}

} // namespace

Graph gen_ba(std::size_t n, std::size_t m, Rng& rng) {
    if (m < 1) throw ValidationError("BA needs m >= 1");
    if (m >= n) throw ValidationError("BA needs m < n");
    auto edges = grow_preferential(n, m, false, rng, [m](std::size_t) { return m; });
    return Graph::build(n, edges, false);
}

Graph gen_price(std::size_t n, double c, bool directed, Rng& rng) {
    if (c <= 0.0) throw ValidationError("Price needs c > 0");
    if (n < 1) throw ValidationError("Price needs n >= 1");
    auto edges = grow_preferential(n, 1, directed, rng, [c, &rng](std::size_t) {
        return static_cast<std::size_t>(rng.zero_truncated_poisson(c));
    });
    return Graph::build(n, edges, directed);
}

void validate(const GeneratorSpec& spec) {
    std::visit(
        [](const auto& sp) {
            using T = std::decay_t<decltype(sp)>;
            if (sp.n < 1) throw ValidationError("generator needs n >= 1");
            if constexpr (std::is_same_v<T, ErSpec>) {
                if (sp.q < 0.0 || sp.q > 1.0) throw ValidationError("ER q must lie in [0,1]");
            } else if constexpr (std::is_same_v<T, WaxmanSpec>) {
                if (sp.s < 0.0) throw ValidationError("Waxman s must be >= 0");
                if (sp.target_z <= 0.0) throw ValidationError("Waxman target z must be > 0");
            } else if constexpr (std::is_same_v<T, BaSpec>) {
                if (sp.m < 1 || sp.m >= sp.n) throw ValidationError("BA needs 1 <= m < n");
            } else if constexpr (std::is_same_v<T, PriceSpec>) {
                if (sp.c <= 0.0) throw ValidationError("Price needs c > 0");
            }
        },
        spec);
}

Graph generate(const GeneratorSpec& spec, Rng& rng) {
    validate(spec);
    return std::visit(
        [&rng](const auto& sp) -> Graph {
            using T = std::decay_t<decltype(sp)>;
            if constexpr (std::is_same_v<T, ErSpec>) {
                return gen_er(sp.n, sp.q, rng);
            } else if constexpr (std::is_same_v<T, WaxmanSpec>) {
                return gen_waxman(sp.n, sp.s, waxman_q(sp.n, sp.target_z, sp.s), rng);
            } else if constexpr (std::is_same_v<T, BaSpec>) {
                return gen_ba(sp.n, sp.m, rng);
            } else {
                return gen_price(sp.n, sp.c, sp.directed, rng);
            }
        },
        spec);
}

} // namespace casclab
