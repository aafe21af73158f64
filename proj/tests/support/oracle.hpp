#pragma once

// Deliberately naive reference implementations. Nothing here shares code with
// the solvers beyond the instance types; sets are sorted int vectors.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "pvc/graph.hpp"
#include "pvc/hypergraph.hpp"

namespace oracle {

using Set = std::vector<int>;

inline std::vector<Set> edge_lists(const pvc::Hypergraph& h) {
  std::vector<Set> out;
  for (const auto& e : h.edges()) {
    Set s;
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e.test(v)) s.push_back(static_cast<int>(v));
    }
    out.push_back(s);
  }
  return out;
}

inline int classes(const std::vector<Set>& edges, const Set& c) {
  std::set<Set> traces;
  for (const auto& e : edges) {
    Set t;
    std::set_intersection(e.begin(), e.end(), c.begin(), c.end(), std::back_inserter(t));
    traces.insert(t);
  }
  return static_cast<int>(traces.size());
}

inline int classes(const pvc::Hypergraph& h, const Set& c) { return classes(edge_lists(h), c); }

// All subsets of {0..n-1} of size r, via bit masks (n <= 25).
inline std::vector<Set> subsets(int n, int r) {
  std::vector<Set> out;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if (__builtin_popcount(mask) != r) continue;
    Set s;
    for (int v = 0; v < n; ++v) {
      if (mask >> v & 1U) s.push_back(v);
    }
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline int max_classes(const pvc::Hypergraph& h, int k) {
  const auto edges = edge_lists(h);
  int best = 0;
  for (const auto& c : subsets(h.num_vertices(), k)) best = std::max(best, classes(edges, c));
  return best;
}

inline bool shattered(const std::vector<Set>& edges, const Set& c) {
  return classes(edges, c) == (1 << c.size());
}

inline int vc_dimension(const pvc::Hypergraph& h) {
  const auto edges = edge_lists(h);
  if (edges.empty()) return 0;
  int best = 0;
  for (int d = 1; d <= h.num_vertices(); ++d) {
    bool any = false;
    for (const auto& c : subsets(h.num_vertices(), d)) {
      if (shattered(edges, c)) {
        any = true;
        break;
      }
    }
    if (any) best = d;
  }
  return best;
}

// Minimum distinguishing transversal size; -1 when twin edges make it impossible.
inline int min_dt(const pvc::Hypergraph& h) {
  const auto edges = edge_lists(h);
  const int m = static_cast<int>(edges.size());
  for (int k = 0; k <= h.num_vertices(); ++k) {
    for (const auto& c : subsets(h.num_vertices(), k)) {
      if (classes(edges, c) == m) return k;
    }
  }
  return -1;
}

inline int double_hits(const std::vector<Set>& edges, const Set& c) {
  int hits = 0;
  for (const auto& e : edges) {
    Set t;
    std::set_intersection(e.begin(), e.end(), c.begin(), c.end(), std::back_inserter(t));
    hits += t.size() >= 2;
  }
  return hits;
}

inline int max_double_hits(const pvc::Hypergraph& h, int k) {
  const auto edges = edge_lists(h);
  int best = 0;
  for (const auto& c : subsets(h.num_vertices(), k)) best = std::max(best, double_hits(edges, c));
  return best;
}

inline bool is_clique(const pvc::Graph& g, const Set& c) {
  for (std::size_t a = 0; a < c.size(); ++a) {
    for (std::size_t b = a + 1; b < c.size(); ++b) {
      if (!g.has_edge(c[a], c[b])) return false;
    }
  }
  return true;
}

inline bool has_clique(const pvc::Graph& g, int k) {
  for (const auto& c : subsets(g.num_vertices(), k)) {
    if (is_clique(g, c)) return true;
  }
  return false;
}

inline int max_vertex_cover(const pvc::Graph& g, int k) {
  int best = 0;
  for (const auto& c : subsets(g.num_vertices(), k)) {
    int covered = 0;
    for (auto [u, v] : g.edges()) {
      covered += std::binary_search(c.begin(), c.end(), u) || std::binary_search(c.begin(), c.end(), v);
    }
    best = std::max(best, covered);
  }
  return best;
}

// Uniform random hypergraph; each incidence present with probability p.
inline pvc::Hypergraph random_hypergraph(std::mt19937_64& rng, int n, int m, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<pvc::VertexSet> edges;
  for (int e = 0; e < m; ++e) {
    pvc::VertexSet s(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      if (coin(rng)) s.set(static_cast<std::size_t>(v));
    }
    edges.push_back(s);
  }
  return pvc::Hypergraph(n, edges);
}

inline pvc::Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<pvc::Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return pvc::Graph::from_edges(n, edges);
}

inline pvc::Graph grid(int rows, int cols) {
  std::vector<pvc::Edge> edges;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const int v = r * cols + c;
      if (c + 1 < cols) edges.emplace_back(v, v + 1);
      if (r + 1 < rows) edges.emplace_back(v, v + cols);
    }
  }
  return pvc::Graph::from_edges(rows * cols, edges);
}

inline pvc::Graph path(int n) {
  std::vector<pvc::Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return pvc::Graph::from_edges(n, edges);
}

inline pvc::Graph complete(int n) {
  std::vector<pvc::Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return pvc::Graph::from_edges(n, edges);
}

inline pvc::Graph cycle(int n) {
  std::vector<pvc::Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(std::min(v, (v + 1) % n), std::max(v, (v + 1) % n));
  return pvc::Graph::from_edges(n, edges);
}

}  // namespace oracle
