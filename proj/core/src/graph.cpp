#include "casclab/graph.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <string>
#include <thread>

#include "casclab/errors.hpp"

namespace casclab {

Graph Graph::build(std::size_t n, std::span<const Edge> edges, bool directed,
                   std::optional<std::vector<Point>> positions) {
    for (const Edge& e : edges) {
        if (e.u >= n || e.v >= n)
            throw ValidationError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  ") has endpoint outside [0," + std::to_string(n) + ")");
        if (e.u == e.v)
            throw ValidationError("self-loop at node " + std::to_string(e.u));
    }
    // Duplicate detection on normalized pairs.
    {
        std::vector<Edge> norm(edges.begin(), edges.end());
        if (!directed)
            for (Edge& e : norm)
                if (e.u > e.v) std::swap(e.u, e.v);
        std::sort(norm.begin(), norm.end(), [](const Edge& a, const Edge& b) {
            return a.u != b.u ? a.u < b.u : a.v < b.v;
        });
        auto dup = std::adjacent_find(norm.begin(), norm.end());
        if (dup != norm.end())
            throw ValidationError("duplicate edge (" + std::to_string(dup->u) + "," +
                                  std::to_string(dup->v) + ")");
    }
    if (positions) {
        if (positions->size() != n)
            throw ValidationError("positions size " + std::to_string(positions->size()) +
                                  " != n " + std::to_string(n));
        for (const Point& p : *positions)
            if (p.x < 0.0 || p.x > 1.0 || p.y < 0.0 || p.y > 1.0)
                throw ValidationError("position outside the unit square");
    }

    Graph g;
    g.n_ = n;
    g.e_ = edges.size();
    g.directed_ = directed;
    if (positions) g.positions_ = std::move(*positions);

    auto fill_csr = [n](std::span<const Edge> es, bool both_ways, bool reverse,
                        std::vector<std::size_t>& offsets, std::vector<NodeId>& adj) {
        std::vector<std::size_t> deg(n, 0);
        for (const Edge& e : es) {
            if (both_ways) {
                ++deg[e.u];
                ++deg[e.v];
            } else {
                ++deg[reverse ? e.v : e.u];
            }
        }
        offsets.assign(n + 1, 0);
        for (std::size_t i = 0; i < n; ++i) offsets[i + 1] = offsets[i] + deg[i];
        adj.resize(offsets[n]);
        std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
        for (const Edge& e : es) {
            if (both_ways) {
                adj[cursor[e.u]++] = e.v;
                adj[cursor[e.v]++] = e.u;
            } else if (reverse) {
                adj[cursor[e.v]++] = e.u;
            } else {
                adj[cursor[e.u]++] = e.v;
            }
        }
        for (std::size_t i = 0; i < n; ++i)
            std::sort(adj.begin() + static_cast<std::ptrdiff_t>(offsets[i]),
                      adj.begin() + static_cast<std::ptrdiff_t>(offsets[i + 1]));
    };

    fill_csr(edges, !directed, false, g.offsets_, g.adj_);
    if (directed) fill_csr(edges, false, true, g.in_offsets_, g.in_adj_);
    return g;
}

std::size_t Graph::degree(NodeId i) const {
    if (i >= n_) throw ValidationError("node " + std::to_string(i) + " out of range");
    return offsets_[i + 1] - offsets_[i];
}

double Graph::mean_degree() const {
    if (n_ == 0) throw ValidationError("mean degree undefined on the empty graph");
    const double total = directed_ ? static_cast<double>(e_) : 2.0 * static_cast<double>(e_);
    return total / static_cast<double>(n_);
}

std::vector<Edge> Graph::edge_list() const {
    std::vector<Edge> out;
    out.reserve(e_);
    for (NodeId u = 0; u < n_; ++u)
        for (NodeId v : neighbors(u))
            if (directed_ || u < v) out.push_back({u, v});
    return out;
}

ComponentPartition components(const Graph& g) {
    const std::size_t n = g.num_nodes();
    ComponentPartition part;
    part.component_id.assign(n, UINT32_MAX);
    std::vector<NodeId> stack;
    std::uint32_t comp = 0;
    for (NodeId start = 0; start < n; ++start) {
        if (part.component_id[start] != UINT32_MAX) continue;
        std::size_t size = 0;
        stack.push_back(start);
        part.component_id[start] = comp;
        while (!stack.empty()) {
            const NodeId u = stack.back();
            stack.pop_back();
            ++size;
            auto visit = [&](NodeId v) {
                if (part.component_id[v] == UINT32_MAX) {
                    part.component_id[v] = comp;
                    stack.push_back(v);
                }
            };
            for (NodeId v : g.neighbors(u)) visit(v);
            if (g.is_directed())
                for (NodeId v : g.in_neighbors(u)) visit(v);
        }
        part.sizes.push_back(size);
        ++comp;
    }
    part.giant_size = part.sizes.empty() ? 0 : *std::max_element(part.sizes.begin(), part.sizes.end());
    return part;
}

namespace {

// One Brandes BFS accumulation from a single source.
void brandes_source(const Graph& g, NodeId s, std::vector<double>& bc,
                    std::vector<NodeId>& order, std::vector<std::int64_t>& dist,
                    std::vector<double>& sigma, std::vector<double>& delta) {
    const std::size_t n = g.num_nodes();
    order.clear();
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);

    dist[s] = 0;
    sigma[s] = 1.0;
    std::size_t head = 0;
    order.push_back(s);
    while (head < order.size()) {
        const NodeId u = order[head++];
        for (NodeId v : g.neighbors(u)) {
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                order.push_back(v);
            }
            if (dist[v] == dist[u] + 1) sigma[v] += sigma[u];
        }
    }
    // Dependency accumulation in reverse BFS order.
    for (std::size_t idx = order.size(); idx-- > 1;) {
        const NodeId w = order[idx];
        for (NodeId v : g.neighbors(w))
            if (dist[v] == dist[w] - 1) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
        bc[w] += delta[w];
    }
    (void)n;
}

} // namespace

BetweennessResult betweenness(const Graph& g, unsigned threads) {
    if (g.is_directed())
        throw ValidationError("betweenness is defined here for undirected graphs only");
    const std::size_t n = g.num_nodes();
    BetweennessResult result;
    result.values.assign(n, 0.0);
    if (n < 3) {
        result.degenerate = true;
        return result;
    }
    if (threads == 0) {
        const unsigned hw = std::thread::hardware_concurrency();
        threads = hw == 0 ? 1 : hw;
    }
    threads = std::min<unsigned>(threads, static_cast<unsigned>(n));

    std::vector<std::vector<double>> partial(threads, std::vector<double>(n, 0.0));
    auto worker = [&](unsigned t) {
        std::vector<NodeId> order;
        order.reserve(n);
        std::vector<std::int64_t> dist(n);
        std::vector<double> sigma(n), delta(n);
        // Static block partition keeps the per-thread accumulation order fixed.
        const std::size_t lo = n * t / threads;
        const std::size_t hi = n * (t + 1) / threads;
        for (std::size_t s = lo; s < hi; ++s)
            brandes_source(g, static_cast<NodeId>(s), partial[t], order, dist, sigma, delta);
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }
    // Combine partials in thread order; each source's pair (s,t) is counted
    // twice by the undirected accumulation, and normalization is (n-1)(n-2)/2.
    const double scale = 1.0 / (static_cast<double>(n - 1) * static_cast<double>(n - 2));
    for (unsigned t = 0; t < threads; ++t)
        for (std::size_t i = 0; i < n; ++i) result.values[i] += partial[t][i];
    for (double& v : result.values) v *= scale;
    return result;
}

HighBetweennessDegree high_betweenness_mean_degree(const Graph& g, double tau) {
    if (tau < 0.0 || tau > 1.0) throw ValidationError("tau must lie in [0,1]");
    const BetweennessResult bc = betweenness(g);
    HighBetweennessDegree out;
    double total = 0.0;
    for (NodeId i = 0; i < g.num_nodes(); ++i) {
        if (bc.values[i] > tau) {
            total += static_cast<double>(g.degree(i));
            ++out.qualifying;
        }
    }
    if (out.qualifying > 0) out.mean_degree = total / static_cast<double>(out.qualifying);
    return out;
}

double average_clustering(const Graph& g) {
    if (g.is_directed())
        throw ValidationError("clustering is defined here for undirected graphs only");
    const std::size_t n = g.num_nodes();
    if (n == 0) return 0.0;
    double total = 0.0;
    for (NodeId i = 0; i < n; ++i) {
        const auto nbrs = g.neighbors(i);
        const std::size_t z = nbrs.size();
        if (z < 2) continue;
        std::size_t links = 0;
        for (std::size_t a = 0; a < z; ++a) {
            const auto na = g.neighbors(nbrs[a]);
            for (std::size_t b = a + 1; b < z; ++b)
                links += std::binary_search(na.begin(), na.end(), nbrs[b]) ? 1 : 0;
        }
        total += 2.0 * static_cast<double>(links) /
                 (static_cast<double>(z) * static_cast<double>(z - 1));
    }
    return total / static_cast<double>(n);
}

} // namespace casclab
