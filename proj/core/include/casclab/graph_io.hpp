#pragma once

#include <iosfwd>
#include <string>

#include "casclab/graph.hpp"

namespace casclab {

/// Edge-list format: optional header "# n=<n> directed=<0|1>", then one
/// "u v" pair per line (0-based). Positions format: one "i x y" per line.

void write_edge_list(std::ostream& os, const Graph& g);
void write_positions(std::ostream& os, const Graph& g);

void write_edge_list_file(const std::string& path, const Graph& g);
void write_positions_file(const std::string& path, const Graph& g);

/// Reads the header when present; otherwise n is inferred as max endpoint + 1
/// and the graph is taken as undirected.
Graph read_edge_list(std::istream& is);
Graph read_edge_list_file(const std::string& path);
Graph read_edge_list_file(const std::string& path, const std::string& positions_path);

} // namespace casclab
