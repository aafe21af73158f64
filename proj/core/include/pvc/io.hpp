#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "pvc/graph.hpp"
#include "pvc/hypergraph.hpp"

namespace pvc {

// `p phg n m` followed by m lines `e i1 i2 ...`. The first `c` line, if any,
// becomes the hypergraph name. Vertices are 1-based on disk.
Hypergraph read_phg(std::istream& in);
Hypergraph read_phg_file(const std::filesystem::path& path);
void write_phg(std::ostream& out, const Hypergraph& h);
std::string to_phg_string(const Hypergraph& h);

// `p edge n m` followed by m lines `e u v`.
Graph read_edge_graph(std::istream& in);
Graph read_edge_graph_file(const std::filesystem::path& path);
void write_edge_graph(std::ostream& out, const Graph& g);

// `l v level`, one line per vertex. Returned levels are indexed by 0-based vertex.
std::vector<int> read_levels(std::istream& in, int num_vertices);
std::vector<int> read_levels_file(const std::filesystem::path& path, int num_vertices);
void write_levels(std::ostream& out, const std::vector<int>& levels);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace pvc
