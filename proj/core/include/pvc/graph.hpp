#pragma once

#include <span>
#include <utility>
#include <vector>

namespace pvc {

using Edge = std::pair<int, int>;

// Simple undirected graph with sorted adjacency lists. Vertices are 0-based.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int num_vertices);

  // Rejects self-loops, parallel edges and out-of-range endpoints.
  static Graph from_edges(int num_vertices, std::span<const Edge> edges);

  int num_vertices() const noexcept { return static_cast<int>(adjacency_.size()); }
  int num_edges() const noexcept { return num_edges_; }
  std::span<const int> neighbors(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  int max_degree() const;
  bool has_edge(int u, int v) const;

  // All edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  // Subgraph induced by `vertices`; vertex i of the result is vertices[i].
  Graph induced(std::span<const int> vertices) const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<std::vector<int>> adjacency_;
  int num_edges_ = 0;
};

// Connected components, each sorted, ordered by smallest member.
std::vector<std::vector<int>> connected_components(const Graph& g);

// True iff the graph admits a proper 2-coloring.
bool is_bipartite(const Graph& g);

Graph complement(const Graph& g);

}  // namespace pvc
