#include "pvc/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "pvc/errors.hpp"

namespace pvc {

namespace {

void check_solution(const Hypergraph& h, const VertexSet& c) {
  if (c.size() != static_cast<std::size_t>(h.num_vertices())) {
    throw InputError("vertex set has universe " + std::to_string(c.size()) +
                     " but the hypergraph has " + std::to_string(h.num_vertices()) +
                     " vertices");
  }
}

std::vector<std::uint64_t> solution_words(const Hypergraph& h, const VertexSet& c) {
  std::vector<std::uint64_t> words(h.words(), 0);
  boost::to_block_range(c, words.begin());
  return words;
}

// Traces of every edge, flattened m x words.
std::vector<std::uint64_t> flat_traces(const Hypergraph& h, const VertexSet& c) {
  const auto sol = solution_words(h, c);
  const std::size_t w = h.words();
  std::vector<std::uint64_t> out(static_cast<std::size_t>(h.num_edges()) * w);
  for (int e = 0; e < h.num_edges(); ++e) {
    const auto ew = h.edge_words(e);
    for (std::size_t i = 0; i < w; ++i) out[static_cast<std::size_t>(e) * w + i] = ew[i] & sol[i];
  }
  return out;
}

// Edge indices sorted by trace, ties by index.
std::vector<int> order_by_trace(const std::vector<std::uint64_t>& flat, std::size_t w, int m) {
  std::vector<int> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  auto key = [&](int e) { return flat.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(e) * w); };
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const auto cmp = std::lexicographical_compare_three_way(key(a), key(a) + static_cast<std::ptrdiff_t>(w),
                                                            key(b), key(b) + static_cast<std::ptrdiff_t>(w));
    return cmp == 0 ? a < b : cmp < 0;
  });
  return order;
}

bool same_trace(const std::vector<std::uint64_t>& flat, std::size_t w, int a, int b) {
  return std::equal(flat.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(a) * w),
                    flat.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(a + 1) * w),
                    flat.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(b) * w));
}

// Groups of equal sets; each group sorted ascending, groups ordered by first member.
std::vector<std::vector<int>> equal_groups(const std::vector<VertexSet>& sets) {
  std::vector<int> order(sets.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return sets[static_cast<std::size_t>(a)] < sets[static_cast<std::size_t>(b)];
  });
  std::vector<std::vector<int>> groups;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i == 0 || sets[static_cast<std::size_t>(order[i])] != sets[static_cast<std::size_t>(order[i - 1])]) {
      groups.emplace_back();
    }
    groups.back().push_back(order[i]);
  }
  std::sort(groups.begin(), groups.end());
  return groups;
}

std::vector<VertexSet> columns(const Hypergraph& h) {
  std::vector<VertexSet> cols;
  cols.reserve(static_cast<std::size_t>(h.num_vertices()));
  for (int v = 0; v < h.num_vertices(); ++v) {
    VertexSet col(static_cast<std::size_t>(h.num_edges()));
    for (int e : h.incident_edges(v)) col.set(static_cast<std::size_t>(e));
    cols.push_back(std::move(col));
  }
  return cols;
}

}  // namespace

Hypergraph::Hypergraph(int num_vertices, std::vector<VertexSet> edges, std::string name)
    : n_(num_vertices), edges_(std::move(edges)), name_(std::move(name)) {
  if (n_ < 0) throw InputError("negative vertex count");
  if (n_ > kMaxVertices) {
    throw CapacityError("hypergraph has " + std::to_string(n_) + " vertices; the limit is " +
                        std::to_string(kMaxVertices));
  }
  words_ = (static_cast<std::size_t>(n_) + 63) / 64;
  if (words_ == 0) words_ = 1;
  flat_.assign(edges_.size() * words_, 0);
  std::vector<int> degree(static_cast<std::size_t>(n_), 0);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (edges_[e].size() != static_cast<std::size_t>(n_)) {
      throw InputError("edge #" + std::to_string(e + 1) + " has universe " +
                       std::to_string(edges_[e].size()) + ", expected " + std::to_string(n_));
    }
    boost::to_block_range(edges_[e], flat_.begin() + static_cast<std::ptrdiff_t>(e * words_));
    for (auto v = edges_[e].find_first(); v != VertexSet::npos; v = edges_[e].find_next(v)) ++degree[v];
  }
  inc_offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
  for (int v = 0; v < n_; ++v) {
    inc_offsets_[static_cast<std::size_t>(v) + 1] =
        inc_offsets_[static_cast<std::size_t>(v)] + degree[static_cast<std::size_t>(v)];
  }
  inc_.assign(static_cast<std::size_t>(inc_offsets_.back()), 0);
  std::vector<int> fill(inc_offsets_.begin(), inc_offsets_.end() - 1);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    for (auto v = edges_[e].find_first(); v != VertexSet::npos; v = edges_[e].find_next(v)) {
      inc_[static_cast<std::size_t>(fill[v]++)] = static_cast<int>(e);
    }
  }
}

Hypergraph build_hypergraph(int num_vertices, const std::vector<std::vector<int>>& edges,
                            std::string name) {
  if (num_vertices < 0) throw InputError("negative vertex count");
  if (num_vertices > kMaxVertices) {
    throw CapacityError("hypergraph has " + std::to_string(num_vertices) +
                        " vertices; the limit is " + std::to_string(kMaxVertices));
  }
  std::vector<VertexSet> sets;
  sets.reserve(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    VertexSet s(static_cast<std::size_t>(num_vertices));
    for (int v : edges[e]) {
      if (v < 1 || v > num_vertices) {
        throw InputError("edge #" + std::to_string(e + 1) + ": vertex " + std::to_string(v) +
                         " out of range 1.." + std::to_string(num_vertices));
      }
      s.set(static_cast<std::size_t>(v - 1));
    }
    sets.push_back(std::move(s));
  }
  return Hypergraph(num_vertices, std::move(sets), std::move(name));
}

TraceProfile trace_profile(const Hypergraph& h, const VertexSet& solution) {
  check_solution(h, solution);
  const std::size_t w = h.words();
  const int m = h.num_edges();
  const auto flat = flat_traces(h, solution);
  const auto order = order_by_trace(flat, w, m);

  // Group equal traces; the first member of each sorted group is its lowest edge.
  std::vector<int> group_of(static_cast<std::size_t>(m), -1);
  std::vector<int> group_rep;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i == 0 || !same_trace(flat, w, order[i], order[i - 1])) group_rep.push_back(order[i]);
    group_of[static_cast<std::size_t>(order[i])] = static_cast<int>(group_rep.size()) - 1;
  }
  std::vector<int> by_rep(group_rep.size());
  std::iota(by_rep.begin(), by_rep.end(), 0);
  std::sort(by_rep.begin(), by_rep.end(), [&](int a, int b) {
    return group_rep[static_cast<std::size_t>(a)] < group_rep[static_cast<std::size_t>(b)];
  });
  std::vector<int> rank(group_rep.size());
  for (std::size_t i = 0; i < by_rep.size(); ++i) rank[static_cast<std::size_t>(by_rep[i])] = static_cast<int>(i);

  TraceProfile p;
  p.solution = solution;
  p.class_of_edge.resize(static_cast<std::size_t>(m));
  for (int e = 0; e < m; ++e) {
    p.class_of_edge[static_cast<std::size_t>(e)] = rank[static_cast<std::size_t>(group_of[static_cast<std::size_t>(e)])];
  }
  for (int g : by_rep) {
    const int rep = group_rep[static_cast<std::size_t>(g)];
    p.representatives.push_back(rep);
    p.traces.push_back(h.edge(rep) & solution);
  }
  return p;
}

int count_classes(const Hypergraph& h, const VertexSet& solution) {
  check_solution(h, solution);
  const int m = h.num_edges();
  if (m == 0) return 0;
  const std::size_t w = h.words();
  auto flat = flat_traces(h, solution);
  if (w == 1) {
    std::sort(flat.begin(), flat.end());
    return static_cast<int>(std::unique(flat.begin(), flat.end()) - flat.begin());
  }
  const auto order = order_by_trace(flat, w, m);
  int count = 1;
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (!same_trace(flat, w, order[i], order[i - 1])) ++count;
  }
  return count;
}

bool is_shattered(const Hypergraph& h, const VertexSet& solution) {
  const auto size = solution.count();
  if (size >= 31) return false;
  return static_cast<std::uint64_t>(count_classes(h, solution)) == (std::uint64_t{1} << size);
}

std::optional<std::pair<int, int>> find_twin_edges(const Hypergraph& h) {
  for (const auto& g : equal_groups(h.edges())) {
    if (g.size() > 1) return std::pair{g[0], g[1]};
  }
  return std::nullopt;
}

std::optional<std::pair<int, int>> find_twin_vertices(const Hypergraph& h) {
  for (const auto& g : equal_groups(columns(h))) {
    if (g.size() > 1) return std::pair{g[0], g[1]};
  }
  return std::nullopt;
}

bool is_twin_free(const Hypergraph& h) {
  return !find_twin_edges(h) && !find_twin_vertices(h);
}

TwinReduction remove_twins(const Hypergraph& h) {
  TwinReduction out;
  for (const auto& g : equal_groups(h.edges())) out.edge_map.push_back(g.front());
  std::sort(out.edge_map.begin(), out.edge_map.end());

  // Columns over the surviving edges only; twin edges never separate vertices.
  std::vector<VertexSet> cols;
  cols.reserve(static_cast<std::size_t>(h.num_vertices()));
  for (int v = 0; v < h.num_vertices(); ++v) {
    VertexSet col(out.edge_map.size());
    for (std::size_t i = 0; i < out.edge_map.size(); ++i) {
      if (h.edge(out.edge_map[i]).test(static_cast<std::size_t>(v))) col.set(i);
    }
    cols.push_back(std::move(col));
  }
  for (const auto& g : equal_groups(cols)) out.vertex_map.push_back(g.front());
  std::sort(out.vertex_map.begin(), out.vertex_map.end());

  const int n2 = static_cast<int>(out.vertex_map.size());
  std::vector<VertexSet> edges;
  edges.reserve(out.edge_map.size());
  for (int e : out.edge_map) {
    VertexSet s(static_cast<std::size_t>(n2));
    for (int i = 0; i < n2; ++i) {
      if (h.edge(e).test(static_cast<std::size_t>(out.vertex_map[static_cast<std::size_t>(i)]))) {
        s.set(static_cast<std::size_t>(i));
      }
    }
    edges.push_back(std::move(s));
  }
  out.reduced = Hypergraph(n2, std::move(edges), h.name());
  return out;
}

Hypergraph dual(const Hypergraph& h) {
  std::vector<VertexSet> edges;
  edges.reserve(static_cast<std::size_t>(h.num_vertices()));
  for (int v = 0; v < h.num_vertices(); ++v) {
    VertexSet s(static_cast<std::size_t>(h.num_edges()));
    for (int e : h.incident_edges(v)) s.set(static_cast<std::size_t>(e));
    edges.push_back(std::move(s));
  }
  return Hypergraph(h.num_edges(), std::move(edges), h.name());
}

Hypergraph neighborhood_hypergraph(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<VertexSet> edges;
  edges.reserve(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    VertexSet s(static_cast<std::size_t>(n));
    s.set(static_cast<std::size_t>(v));
    for (int w : g.neighbors(v)) s.set(static_cast<std::size_t>(w));
    edges.push_back(std::move(s));
  }
  return Hypergraph(n, std::move(edges));
}

int max_degree(const Hypergraph& h) {
  int best = 0;
  for (int v = 0; v < h.num_vertices(); ++v) best = std::max(best, h.degree(v));
  return best;
}

int distinct_edge_count(const Hypergraph& h) {
  return static_cast<int>(equal_groups(h.edges()).size());
}

Hypergraph restrict_to(const Hypergraph& h, const VertexSet& subset) {
  check_solution(h, subset);
  const auto keep = members(subset);
  std::vector<VertexSet> edges;
  edges.reserve(static_cast<std::size_t>(h.num_edges()));
  for (const auto& e : h.edges()) {
    VertexSet s(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) {
      if (e.test(static_cast<std::size_t>(keep[i]))) s.set(i);
    }
    edges.push_back(std::move(s));
  }
  return Hypergraph(static_cast<int>(keep.size()), std::move(edges), h.name());
}

}  // namespace pvc
