#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pvc/graph.hpp"
#include "pvc/vertex_set.hpp"

namespace pvc {

// A hypergraph H = (X, E): a vertex count and an ordered list of hyperedges.
// Edge order is preserved by every operation; duplicate edges are kept until
// remove_twins is called. Instances are immutable after construction.
class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(int num_vertices, std::vector<VertexSet> edges, std::string name = {});

  int num_vertices() const noexcept { return n_; }
  int num_edges() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<VertexSet>& edges() const noexcept { return edges_; }
  const VertexSet& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }
  const std::string& name() const noexcept { return name_; }

  // Words per mask; the flat view is what the hot loops read.
  std::size_t words() const noexcept { return words_; }
  std::span<const std::uint64_t> edge_words(int e) const {
    return {flat_.data() + static_cast<std::size_t>(e) * words_, words_};
  }

  // Indices of the edges containing v, ascending.
  std::span<const int> incident_edges(int v) const {
    const auto b = static_cast<std::size_t>(inc_offsets_[static_cast<std::size_t>(v)]);
    const auto e = static_cast<std::size_t>(inc_offsets_[static_cast<std::size_t>(v) + 1]);
    return {inc_.data() + b, e - b};
  }
  int degree(int v) const { return static_cast<int>(incident_edges(v).size()); }

  VertexSet empty_set() const { return VertexSet(static_cast<std::size_t>(n_)); }

  // Same vertex count and identical incidence matrix; the name is ignored.
  bool operator==(const Hypergraph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  std::vector<VertexSet> edges_;
  std::string name_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> flat_;
  std::vector<int> inc_offsets_{0};
  std::vector<int> inc_;
};

// Builds a hypergraph from 1-based vertex lists, validating every index.
Hypergraph build_hypergraph(int num_vertices, const std::vector<std::vector<int>>& edges,
                            std::string name = {});

// Distinct traces e ∩ C over all edges, ordered by first occurrence.
struct TraceProfile {
  VertexSet solution;
  std::vector<VertexSet> traces;
  std::vector<int> representatives;  // lowest edge index realizing each trace
  std::vector<int> class_of_edge;    // edge index -> position in `traces`

  int class_count() const noexcept { return static_cast<int>(traces.size()); }
};

TraceProfile trace_profile(const Hypergraph& h, const VertexSet& solution);

// Number of distinct traces; same as trace_profile(h, c).class_count().
int count_classes(const Hypergraph& h, const VertexSet& solution);

// True iff C induces all 2^|C| traces.
bool is_shattered(const Hypergraph& h, const VertexSet& solution);

struct TwinReduction {
  Hypergraph reduced;
  std::vector<int> vertex_map;  // reduced vertex -> original vertex
  std::vector<int> edge_map;    // reduced edge -> original edge
};

// Keeps the lowest-indexed member of every group of twin edges and of every
// group of twin vertices. The result is twin-free.
TwinReduction remove_twins(const Hypergraph& h);

std::optional<std::pair<int, int>> find_twin_edges(const Hypergraph& h);
std::optional<std::pair<int, int>> find_twin_vertices(const Hypergraph& h);
bool is_twin_free(const Hypergraph& h);

// Transposed incidence matrix: edge x of the dual holds vertex e iff x ∈ e.
Hypergraph dual(const Hypergraph& h);

// Edge i is the closed neighborhood N[v_i].
Hypergraph neighborhood_hypergraph(const Graph& g);

int max_degree(const Hypergraph& h);
int distinct_edge_count(const Hypergraph& h);

// Vertices renumbered as the members of `subset` (ascending), every edge
// replaced by its trace on `subset`. Duplicates are kept.
Hypergraph restrict_to(const Hypergraph& h, const VertexSet& subset);

}  // namespace pvc
