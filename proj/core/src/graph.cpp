#include "pvc/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "pvc/errors.hpp"
#include "pvc/vertex_set.hpp"

namespace pvc {

Graph::Graph(int num_vertices) {
  if (num_vertices < 0) throw InputError("negative vertex count");
  if (num_vertices > kMaxVertices) {
    throw CapacityError("graph has " + std::to_string(num_vertices) +
                        " vertices; the limit is " + std::to_string(kMaxVertices));
  }
  adjacency_.resize(static_cast<std::size_t>(num_vertices));
}

Graph Graph::from_edges(int num_vertices, std::span<const Edge> edges) {
  Graph g(num_vertices);
  std::size_t pos = 0;
  for (auto [u, v] : edges) {
    ++pos;
    if (u < 0 || v < 0 || u >= num_vertices || v >= num_vertices) {
      throw InputError("edge #" + std::to_string(pos) + " has an endpoint out of range");
    }
    if (u == v) throw InputError("edge #" + std::to_string(pos) + " is a self-loop");
    g.adjacency_[static_cast<std::size_t>(u)].push_back(v);
    g.adjacency_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (std::size_t v = 0; v < g.adjacency_.size(); ++v) {
    auto& adj = g.adjacency_[v];
    std::sort(adj.begin(), adj.end());
    if (auto it = std::adjacent_find(adj.begin(), adj.end()); it != adj.end()) {
      throw InputError("parallel edge between vertices " + std::to_string(v + 1) + " and " +
                       std::to_string(*it + 1));
    }
  }
  g.num_edges_ = static_cast<int>(edges.size());
  return g;
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& adj : adjacency_) best = std::max(best, static_cast<int>(adj.size()));
  return best;
}

bool Graph::has_edge(int u, int v) const {
  const auto adj = neighbors(u);
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(num_edges_));
  for (int u = 0; u < num_vertices(); ++u) {
    for (int v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::induced(std::span<const int> vertices) const {
  std::vector<int> local(adjacency_.size(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    local[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
  }
  Graph sub(static_cast<int>(vertices.size()));
  int count = 0;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (int w : neighbors(vertices[i])) {
      const int j = local[static_cast<std::size_t>(w)];
      if (j >= 0) {
        sub.adjacency_[i].push_back(j);
        ++count;
      }
    }
    std::sort(sub.adjacency_[i].begin(), sub.adjacency_[i].end());
  }
  sub.num_edges_ = count / 2;
  return sub;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<int> comp(static_cast<std::size_t>(g.num_vertices()), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < g.num_vertices(); ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::queue<int> frontier;
    frontier.push(s);
    comp[static_cast<std::size_t>(s)] = id;
    while (!frontier.empty()) {
      const int u = frontier.front();
      frontier.pop();
      out.back().push_back(u);
      for (int w : g.neighbors(u)) {
        if (comp[static_cast<std::size_t>(w)] < 0) {
          comp[static_cast<std::size_t>(w)] = id;
          frontier.push(w);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> color(static_cast<std::size_t>(g.num_vertices()), -1);
  for (int s = 0; s < g.num_vertices(); ++s) {
    if (color[static_cast<std::size_t>(s)] >= 0) continue;
    color[static_cast<std::size_t>(s)] = 0;
    std::queue<int> frontier;
    frontier.push(s);
    while (!frontier.empty()) {
      const int u = frontier.front();
      frontier.pop();
      for (int w : g.neighbors(u)) {
        auto& cw = color[static_cast<std::size_t>(w)];
        if (cw < 0) {
          cw = 1 - color[static_cast<std::size_t>(u)];
          frontier.push(w);
        } else if (cw == color[static_cast<std::size_t>(u)]) {
          return false;
        }
      }
    }
  }
  return true;
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (int u = 0; u < g.num_vertices(); ++u) {
    for (int v = u + 1; v < g.num_vertices(); ++v) {
      if (!g.has_edge(u, v)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(g.num_vertices(), edges);
}

}  // namespace pvc
