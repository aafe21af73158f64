#include "generators.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "pvc/errors.hpp"

namespace pvc::gen {

bool coin(Rng& rng, double p) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

Hypergraph random_hypergraph(Rng& rng, int n, int m, double density) {
  std::vector<VertexSet> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (int e = 0; e < m; ++e) {
    VertexSet s(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      if (coin(rng, density)) s.set(static_cast<std::size_t>(v));
    }
    edges.push_back(std::move(s));
  }
  return Hypergraph(n, std::move(edges));
}

Hypergraph random_twin_free_hypergraph(int n, int m, double density, std::uint64_t seed,
                                       int max_attempts) {
  if (n < 0 || m < 0) throw InputError("n and m must be nonnegative");
  if (n > kMaxVertices) throw CapacityError("n=" + std::to_string(n) + " exceeds " + std::to_string(kMaxVertices));
  if (!(density >= 0.0 && density <= 1.0)) throw InputError("density must lie in [0, 1]");
  Rng rng(seed);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    Hypergraph h = random_hypergraph(rng, n, m, density);
    if (is_twin_free(h)) return h;
  }
  throw InputError("no twin-free hypergraph with n=" + std::to_string(n) + " m=" + std::to_string(m) +
                   " after " + std::to_string(max_attempts) + " attempts");
}

Graph random_graph(Rng& rng, int n, double p) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng, p)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph random_cubic(int n, std::uint64_t seed, int* attempts) {
  if (n < 4 || n % 2 != 0) throw InputError("cubic graphs need an even n >= 4, got " + std::to_string(n));
  if (n > kMaxVertices) throw CapacityError("n=" + std::to_string(n) + " exceeds " + std::to_string(kMaxVertices));
  Rng rng(seed);
  std::vector<int> points(static_cast<std::size_t>(3 * n));
  for (int tries = 1;; ++tries) {
    std::iota(points.begin(), points.end(), 0);
    std::shuffle(points.begin(), points.end(), rng);
    std::vector<Edge> edges;
    bool simple = true;
    for (std::size_t i = 0; i < points.size() && simple; i += 2) {
      int u = points[i] / 3;
      int v = points[i + 1] / 3;
      if (u == v) {
        simple = false;
        break;
      }
      if (u > v) std::swap(u, v);
      edges.emplace_back(u, v);
    }
    if (simple) {
      std::sort(edges.begin(), edges.end());
      simple = std::adjacent_find(edges.begin(), edges.end()) == edges.end();
    }
    if (simple) {
      if (attempts) *attempts = tries;
      return Graph::from_edges(n, edges);
    }
  }
}

Graph grid(int rows, int cols) {
  if (rows < 1 || cols < 1) throw InputError("grid dimensions must be positive");
  if (static_cast<long long>(rows) * cols > kMaxVertices) throw CapacityError("grid exceeds the vertex limit");
  std::vector<Edge> edges;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const int v = r * cols + c;
      if (c + 1 < cols) edges.emplace_back(v, v + 1);
      if (r + 1 < rows) edges.emplace_back(v, v + cols);
    }
  }
  return Graph::from_edges(rows * cols, edges);
}

LeveledPlanarGraph leveled_grid(int rows, int cols) {
  const Graph g = grid(rows, cols);
  std::vector<int> outer;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (r == 0 || c == 0 || r == rows - 1 || c == cols - 1) outer.push_back(r * cols + c);
    }
  }
  return compute_levels(g, outer);
}

}  // namespace pvc::gen
