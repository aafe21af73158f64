#include "pvc/planar.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <optional>
#include <queue>
#include <stdexcept>

#include "partition.hpp"
#include "pvc/combinatorics.hpp"
#include "pvc/errors.hpp"
#include "pvc/hypergraph.hpp"
#include "pvc/parallel.hpp"

namespace pvc {

namespace {

void check_epsilon(double epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw InputError("epsilon must be positive");
}

std::string describe(const std::vector<int>& comp) {
  std::string s = "{";
  for (std::size_t i = 0; i < comp.size() && i < 8; ++i) {
    if (i) s += ',';
    s += std::to_string(comp[i] + 1);
  }
  if (comp.size() > 8) s += ",...";
  return s + "} (" + std::to_string(comp.size()) + " vertices)";
}

// Classes with a nonempty trace: all classes minus the one of undominated vertices.
int nonempty_classes(const Hypergraph& nh, const Graph& g, const VertexSet& s) {
  int classes = count_classes(nh, s);
  for (int v = 0; v < g.num_vertices(); ++v) {
    bool hit = s.test(static_cast<std::size_t>(v));
    for (int w : g.neighbors(v)) hit = hit || s.test(static_cast<std::size_t>(w));
    if (!hit) return classes - 1;
  }
  return classes;
}

std::vector<int> vertices_in_levels(const LeveledPlanarGraph& lg, int lo, int hi) {
  std::vector<int> out;
  for (int v = 0; v < lg.graph.num_vertices(); ++v) {
    const int l = lg.level[static_cast<std::size_t>(v)];
    if (l >= lo && l <= hi) out.push_back(v);
  }
  return out;
}

std::vector<std::vector<int>> components_of(const Graph& g, const std::vector<int>& keep) {
  const Graph sub = g.induced(keep);
  auto comps = connected_components(sub);
  for (auto& c : comps) {
    for (int& v : c) v = keep[static_cast<std::size_t>(v)];
  }
  return comps;
}

}  // namespace

LeveledPlanarGraph make_leveled(Graph g, std::vector<int> level) {
  const int n = g.num_vertices();
  if (static_cast<int>(level.size()) != n) {
    throw InputError("level list has " + std::to_string(level.size()) + " entries for " +
                     std::to_string(n) + " vertices");
  }
  int t = 0;
  for (int v = 0; v < n; ++v) {
    if (level[static_cast<std::size_t>(v)] < 1) {
      throw InputError("vertex " + std::to_string(v + 1) + " has level below 1");
    }
    t = std::max(t, level[static_cast<std::size_t>(v)]);
  }
  std::vector<char> seen(static_cast<std::size_t>(t) + 1, 0);
  for (int l : level) seen[static_cast<std::size_t>(l)] = 1;
  for (int l = 1; l <= t; ++l) {
    if (!seen[static_cast<std::size_t>(l)]) throw InputError("level " + std::to_string(l) + " is empty");
  }
  for (auto [u, v] : g.edges()) {
    if (std::abs(level[static_cast<std::size_t>(u)] - level[static_cast<std::size_t>(v)]) > 1) {
      throw InputError("edge " + std::to_string(u + 1) + "-" + std::to_string(v + 1) +
                       " joins levels more than one apart");
    }
  }
  return LeveledPlanarGraph{std::move(g), std::move(level), t};
}

LeveledPlanarGraph compute_levels(const Graph& g, std::span<const int> outer_face) {
  const int n = g.num_vertices();
  std::vector<int> level(static_cast<std::size_t>(n), 0);
  std::queue<int> frontier;
  for (int v : outer_face) {
    if (v < 0 || v >= n) throw InputError("outer face vertex " + std::to_string(v + 1) + " out of range");
    if (level[static_cast<std::size_t>(v)] == 0) {
      level[static_cast<std::size_t>(v)] = 1;
      frontier.push(v);
    }
  }
  if (n > 0 && frontier.empty()) throw InputError("outer face is empty");
  while (!frontier.empty()) {
    const int u = frontier.front();
    frontier.pop();
    for (int w : g.neighbors(u)) {
      if (level[static_cast<std::size_t>(w)] == 0) {
        level[static_cast<std::size_t>(w)] = level[static_cast<std::size_t>(u)] + 1;
        frontier.push(w);
      }
    }
  }
  for (int v = 0; v < n; ++v) {
    if (level[static_cast<std::size_t>(v)] == 0) {
      throw InputError("vertex " + std::to_string(v + 1) + " is not connected to the outer face");
    }
  }
  return make_leveled(g, std::move(level));
}

ComponentTable component_exact_solver(const Graph& sub, int k_max, std::uint64_t ceiling) {
  const int size = sub.num_vertices();
  const int top = std::min(k_max, size);
  std::uint64_t work = 0;
  for (int y = 0; y <= top; ++y) {
    const std::uint64_t c = binomial(size, y);
    work = (c == kSaturated || work > kSaturated - c) ? kSaturated : work + c;
  }
  if (work > ceiling) {
    throw CapacityError("component needs " + std::to_string(work) +
                        " candidate sets, above the ceiling of " + std::to_string(ceiling));
  }
  const Hypergraph nh = neighborhood_hypergraph(sub);
  ComponentTable table;
  table.component.resize(static_cast<std::size_t>(size));
  for (int v = 0; v < size; ++v) table.component[static_cast<std::size_t>(v)] = v;
  table.best.assign(static_cast<std::size_t>(top) + 1, 0);
  table.witness.assign(static_cast<std::size_t>(top) + 1, {});
  for (int y = 1; y <= top; ++y) {
    int best = -1;
    std::vector<int> arg;
    for_each_combination(size, y, [&](const std::vector<int>& pick) {
      const int value = nonempty_classes(nh, sub, make_set(size, pick));
      if (value > best) {
        best = value;
        arg = pick;
      }
      return true;
    });
    // "At most y": keep the smaller set when it is at least as good.
    if (best > table.best[static_cast<std::size_t>(y) - 1]) {
      table.best[static_cast<std::size_t>(y)] = best;
      table.witness[static_cast<std::size_t>(y)] = arg;
    } else {
      table.best[static_cast<std::size_t>(y)] = table.best[static_cast<std::size_t>(y) - 1];
      table.witness[static_cast<std::size_t>(y)] = table.witness[static_cast<std::size_t>(y) - 1];
    }
  }
  return table;
}

KnapsackResult knapsack_combine(const std::vector<ComponentTable>& tables, int k) {
  if (k < 0) throw InputError("budget must be nonnegative");
  const std::size_t q = tables.size();
  const auto width = static_cast<std::size_t>(k) + 1;
  // suffix[i][y]: best total from tables i.. with budget y.
  std::vector<std::vector<int>> suffix(q + 1, std::vector<int>(width, 0));
  for (std::size_t i = q; i-- > 0;) {
    const auto& best = tables[i].best;
    const int cap = static_cast<int>(best.size()) - 1;
    for (int y = 0; y <= k; ++y) {
      int value = -1;
      for (int x = 0; x <= std::min(y, cap); ++x) {
        value = std::max(value, best[static_cast<std::size_t>(x)] + suffix[i + 1][static_cast<std::size_t>(y - x)]);
      }
      suffix[i][static_cast<std::size_t>(y)] = value;
    }
  }
  KnapsackResult out;
  out.value = q == 0 ? 0 : suffix[0][static_cast<std::size_t>(k)];
  out.allocation.assign(q, 0);
  int y = k;
  for (std::size_t i = 0; i < q; ++i) {
    const auto& best = tables[i].best;
    const int cap = std::min(y, static_cast<int>(best.size()) - 1);
    for (int x = cap; x >= 0; --x) {
      if (best[static_cast<std::size_t>(x)] + suffix[i + 1][static_cast<std::size_t>(y - x)] ==
          suffix[i][static_cast<std::size_t>(y)]) {
        out.allocation[i] = x;
        y -= x;
        break;
      }
    }
  }
  return out;
}

BakerMaxResult baker_max_partial_vc(const LeveledPlanarGraph& lg, int k, double epsilon,
                                    const SolveOptions& opts) {
  check_epsilon(epsilon);
  const Graph& g = lg.graph;
  const int n = g.num_vertices();
  if (k < 0 || k > n) throw InputError("budget k=" + std::to_string(k) + " outside 0.." + std::to_string(n));
  const Hypergraph nh = neighborhood_hypergraph(g);
  const int lambda = 2 + static_cast<int>(std::ceil(3.0 / epsilon));
  const int residues = lambda + 1;

  struct Candidate {
    VertexSet witness;
    int value = -1;
    int dp_value = 0;
  };
  std::vector<Candidate> per_residue(static_cast<std::size_t>(residues));
  parallel_for(static_cast<std::size_t>(residues), opts.threads, [&](std::size_t i) {
    std::vector<int> keep;
    for (int v = 0; v < n; ++v) {
      if (lg.level[static_cast<std::size_t>(v)] % (lambda + 1) != static_cast<int>(i)) keep.push_back(v);
    }
    std::vector<ComponentTable> tables;
    for (const auto& comp : components_of(g, keep)) {
      ComponentTable table;
      try {
        table = component_exact_solver(g.induced(comp), k, opts.ceiling);
      } catch (const CapacityError& e) {
        throw CapacityError("component " + describe(comp) + ": " + e.what());
      }
      table.component = comp;
      for (auto& w : table.witness) {
        for (int& v : w) v = comp[static_cast<std::size_t>(v)];
      }
      tables.push_back(std::move(table));
    }
    const KnapsackResult pack = knapsack_combine(tables, k);
    Candidate c;
    c.witness = nh.empty_set();
    for (std::size_t q = 0; q < tables.size(); ++q) {
      for (int v : tables[q].witness[static_cast<std::size_t>(pack.allocation[q])]) c.witness.set(static_cast<std::size_t>(v));
    }
    detail::pad_to(c.witness, k);
    c.value = count_classes(nh, c.witness);
    c.dp_value = pack.value;
    per_residue[i] = std::move(c);
  });

  BakerMaxResult out;
  out.residues_tried = residues;
  int best = 0;
  for (int i = 1; i < residues; ++i) {
    if (per_residue[static_cast<std::size_t>(i)].value > per_residue[static_cast<std::size_t>(best)].value) best = i;
  }
  const Candidate& win = per_residue[static_cast<std::size_t>(best)];
  out.residue = best;
  out.dp_value = win.dp_value;
  out.result.k = k;
  out.result.method = "baker";
  out.result.witness = win.witness;
  out.result.value = win.value;
  out.result.upper_bound = upper_bound_classes(nh, k);
  out.result.claimed_ratio = ratio_of(out.result.upper_bound, out.result.value);
  return out;
}

BakerMinResult baker_min_distinguishing(const LeveledPlanarGraph& lg, double epsilon,
                                        const SolveOptions& opts) {
  check_epsilon(epsilon);
  const auto t0 = std::chrono::steady_clock::now();
  const Graph& g = lg.graph;
  const int n = g.num_vertices();
  const Hypergraph nh = neighborhood_hypergraph(g);
  if (const auto twins = find_twin_edges(nh)) {
    throw InputError("vertices " + std::to_string(twins->first + 1) + " and " +
                     std::to_string(twins->second + 1) + " have equal closed neighborhoods");
  }
  const int lambda = static_cast<int>(std::ceil(2.0 / epsilon));
  const int t = lg.t;

  struct Candidate {
    std::optional<VertexSet> witness;
    std::uint64_t enumerated = 0;
  };
  std::vector<Candidate> per_residue(static_cast<std::size_t>(lambda));
  parallel_for(static_cast<std::size_t>(lambda), opts.threads, [&](std::size_t idx) {
    const int i = static_cast<int>(idx);
    std::vector<std::pair<int, int>> slabs;
    for (int j = -1; j * lambda + i <= t; ++j) {
      const int lo = std::max(1, j * lambda + i);
      const int hi = std::min(t, (j + 1) * lambda + i + 1);
      if (lo > hi) continue;
      slabs.emplace_back(lo, hi);
    }
    std::vector<std::pair<int, int>> kept;
    for (const auto& s : slabs) {
      const bool subsumed = std::any_of(slabs.begin(), slabs.end(), [&](const auto& o) {
        return o != s && o.first <= s.first && s.second <= o.second;
      });
      if (!subsumed && std::find(kept.begin(), kept.end(), s) == kept.end()) kept.push_back(s);
    }

    Candidate c;
    SolveOptions inner = opts;
    inner.threads = 1;
    if (kept.size() == 1 && kept[0].first == 1 && kept[0].second == t) {
      const SolveResult whole = min_distinguishing_transversal(nh, inner);
      c.witness = whole.witness;
      c.enumerated = whole.enumerated;
      per_residue[idx] = std::move(c);
      return;
    }
    VertexSet uni = nh.empty_set();
    for (const auto& [lo, hi] : kept) {
      for (const auto& comp : components_of(g, vertices_in_levels(lg, lo, hi))) {
        // Separate every pair and dominate every vertex: min transversal of the
        // component's closed neighborhoods plus one empty edge.
        const Graph sub = g.induced(comp);
        const Hypergraph local = neighborhood_hypergraph(sub);
        std::vector<VertexSet> edges = local.edges();
        edges.emplace_back(local.num_vertices());
        const Hypergraph with_empty(local.num_vertices(), std::move(edges));
        if (find_twin_edges(with_empty)) {
          per_residue[idx] = Candidate{};
          return;
        }
        SolveResult part;
        try {
          part = min_distinguishing_transversal(with_empty, inner);
        } catch (const CapacityError& e) {
          throw CapacityError("slab component " + describe(comp) + ": " + e.what());
        }
        c.enumerated += part.enumerated;
        for (int v : members(part.witness)) uni.set(static_cast<std::size_t>(comp[static_cast<std::size_t>(v)]));
      }
    }
    c.witness = uni;
    per_residue[idx] = std::move(c);
  });

  BakerMinResult out;
  out.residues_tried = lambda;
  int best = -1;
  for (int i = 0; i < lambda; ++i) {
    const auto& c = per_residue[static_cast<std::size_t>(i)];
    if (!c.witness) {
      ++out.residues_skipped;
      continue;
    }
    if (best < 0 || c.witness->count() < per_residue[static_cast<std::size_t>(best)].witness->count()) best = i;
  }
  if (best < 0) {
    throw InputError("every residue has a slab whose closed neighborhoods contain twins");
  }
  const auto& win = per_residue[static_cast<std::size_t>(best)];
  if (count_classes(nh, *win.witness) != n) {
    throw std::logic_error("slab union does not distinguish all closed neighborhoods");
  }
  out.residue = best;
  out.result.problem = Problem::kMinDistinguishingTransversal;
  out.result.witness = *win.witness;
  out.result.value = static_cast<int>(win.witness->count());
  out.result.k = out.result.value;
  out.result.decided = true;
  for (const auto& c : per_residue) out.result.enumerated += c.enumerated;
  out.result.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

}  // namespace pvc
