#include "casclab/graph_io.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "casclab/errors.hpp"

namespace casclab {

void write_edge_list(std::ostream& os, const Graph& g) {
    os << "# n=" << g.num_nodes() << " directed=" << (g.is_directed() ? 1 : 0) << "\n";
    for (const Edge& e : g.edge_list()) os << e.u << " " << e.v << "\n";
}

void write_positions(std::ostream& os, const Graph& g) {
    if (!g.has_positions()) throw ValidationError("graph has no positions");
    char buf[80];
    const auto pos = g.positions();
    for (std::size_t i = 0; i < pos.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%zu %.17g %.17g\n", i, pos[i].x, pos[i].y);
        os << buf;
    }
}

namespace {
std::ofstream open_out(const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw ValidationError("cannot open for writing: " + path);
    return os;
}
} // namespace

void write_edge_list_file(const std::string& path, const Graph& g) {
    auto os = open_out(path);
    write_edge_list(os, g);
}

void write_positions_file(const std::string& path, const Graph& g) {
    auto os = open_out(path);
    write_positions(os, g);
}

Graph read_edge_list(std::istream& is) {
    std::string line;
    bool have_header = false;
    std::size_t n = 0;
    bool directed = false;
    std::vector<Edge> edges;
    NodeId max_node = 0;
    bool any_edge = false;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::size_t hn = 0;
            int hd = 0;
            if (std::sscanf(line.c_str(), "# n=%zu directed=%d", &hn, &hd) == 2) {
                n = hn;
                directed = hd != 0;
                have_header = true;
            }
            continue;
        }
        std::istringstream ls(line);
        std::uint64_t u = 0, v = 0;
        if (!(ls >> u >> v)) throw ValidationError("malformed edge line: " + line);
        edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v)});
        max_node = std::max({max_node, static_cast<NodeId>(u), static_cast<NodeId>(v)});
        any_edge = true;
    }
    if (!have_header) n = any_edge ? static_cast<std::size_t>(max_node) + 1 : 0;
    return Graph::build(n, edges, directed);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw ValidationError("cannot open: " + path);
    return read_edge_list(is);
}

Graph read_edge_list_file(const std::string& path, const std::string& positions_path) {
    Graph g = read_edge_list_file(path);
    std::ifstream ps(positions_path, std::ios::binary);
    if (!ps) throw ValidationError("cannot open: " + positions_path);
    std::vector<Point> pos(g.num_nodes());
    std::vector<bool> seen(g.num_nodes(), false);
    std::string line;
    while (std::getline(ps, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::size_t i = 0;
        Point p;
        if (!(ls >> i >> p.x >> p.y)) throw ValidationError("malformed position line: " + line);
        if (i >= g.num_nodes()) throw ValidationError("position index out of range: " + line);
        pos[i] = p;
        seen[i] = true;
    }
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (!seen[i]) throw ValidationError("missing position for node " + std::to_string(i));
    return Graph::build(g.num_nodes(), g.edge_list(), g.is_directed(), std::move(pos));
}

} // namespace casclab
