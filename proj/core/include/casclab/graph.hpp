#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace casclab {

using NodeId = std::uint32_t;

struct Edge {
    NodeId u = 0;
    NodeId v = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
};

struct Point {
    double x = 0.0;
    double y = 0.0;
};

/// Immutable simple graph in CSR form. Undirected graphs store each edge in
/// both adjacency rows; directed graphs keep separate out- and in-rows.
/// Safe to share across threads after construction.
class Graph {
public:
    /// Validates and builds. Rejects out-of-range endpoints, self-loops and
    /// duplicate edges (unordered duplicates for undirected graphs).
    static Graph build(std::size_t n, std::span<const Edge> edges, bool directed,
                       std::optional<std::vector<Point>> positions = std::nullopt);

    std::size_t num_nodes() const { return n_; }
    std::size_t num_edges() const { return e_; }
    bool is_directed() const { return directed_; }

    /// Out-neighbors (all neighbors for undirected graphs), sorted ascending.
    std::span<const NodeId> neighbors(NodeId i) const {
        return {adj_.data() + offsets_[i], adj_.data() + offsets_[i + 1]};
    }
    /// In-neighbors; identical to neighbors() for undirected graphs.
    std::span<const NodeId> in_neighbors(NodeId i) const {
        if (!directed_) return neighbors(i);
        return {in_adj_.data() + in_offsets_[i], in_adj_.data() + in_offsets_[i + 1]};
    }

    /// Degree convention for directed graphs: out-degree.
    std::size_t degree(NodeId i) const;
    std::size_t in_degree(NodeId i) const {
        return directed_ ? in_offsets_[i + 1] - in_offsets_[i] : degree(i);
    }

    /// 2e/n for undirected graphs, e/n (mean out-degree) for directed.
    double mean_degree() const;

    bool has_positions() const { return !positions_.empty(); }
    std::span<const Point> positions() const { return positions_; }

    /// Canonical edge list: u < v for undirected, sorted lexicographically.
    std::vector<Edge> edge_list() const;

private:
    Graph() = default;
    std::size_t n_ = 0;
    std::size_t e_ = 0;
    bool directed_ = false;
    std::vector<std::size_t> offsets_;
    std::vector<NodeId> adj_;
    std::vector<std::size_t> in_offsets_;
    std::vector<NodeId> in_adj_;
    std::vector<Point> positions_;
};

struct ComponentPartition {
    std::vector<std::uint32_t> component_id;
    std::vector<std::size_t> sizes;
    std::size_t giant_size = 0;
};

/// Connected components; directed graphs are treated as weakly connected.
ComponentPartition components(const Graph& g);

struct BetweennessResult {
    std::vector<double> values;
    /// Set when n < 3 and the pair normalization is undefined (all zeros returned).
    bool degenerate = false;
};

/// Exact shortest-path betweenness (Brandes), normalized by (n-1)(n-2)/2.
/// Parallelizes over source nodes; accumulation order is fixed for a given
/// thread count, so results are deterministic. threads = 0 picks a default.
BetweennessResult betweenness(const Graph& g, unsigned threads = 0);

struct HighBetweennessDegree {
    /// Mean degree over nodes with betweenness > tau; empty when none qualify.
    std::optional<double> mean_degree;
    std::size_t qualifying = 0;
};

HighBetweennessDegree high_betweenness_mean_degree(const Graph& g, double tau);

/// Mean local clustering coefficient; nodes of degree < 2 contribute 0.
double average_clustering(const Graph& g);

} // namespace casclab
