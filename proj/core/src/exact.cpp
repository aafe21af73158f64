#include "pvc/exact.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <climits>
#include <functional>
#include <stdexcept>

#include "partition.hpp"
#include "pvc/combinatorics.hpp"
#include "pvc/errors.hpp"
#include "pvc/parallel.hpp"

namespace pvc {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void check_budget(const Hypergraph& h, int k) {
  if (k < 0 || k > h.num_vertices()) {
    throw InputError("budget k=" + std::to_string(k) + " outside 0.." +
                     std::to_string(h.num_vertices()));
  }
}

void check_ceiling(int n, int k, std::uint64_t ceiling) {
  const std::uint64_t total = binomial(n, k);
  if (total > ceiling) {
    throw CapacityError("C(" + std::to_string(n) + "," + std::to_string(k) + ") = " +
                        (total == kSaturated ? std::string("overflow") : std::to_string(total)) +
                        " candidate sets exceeds the ceiling of " + std::to_string(ceiling));
  }
}

struct TaskResult {
  int best = -1;
  std::vector<int> witness;
  std::uint64_t enumerated = 0;
  bool hit = false;
};

// Branch and bound over k-subsets in lexicographic order. One task per first
// element; each task is self-contained so results do not depend on scheduling.
class KSetSearch {
 public:
  KSetSearch(const Hypergraph& h, int k) : h_(h), n_(h.num_vertices()), k_(k), m_(h.num_edges()) {
    deg_.resize(static_cast<std::size_t>(n_));
    cap_.resize(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) {
      deg_[static_cast<std::size_t>(v)] = h.degree(v);
      cap_[static_cast<std::size_t>(v)] = std::min(h.degree(v), m_ - h.degree(v));
    }
    top_cap_ = suffix_top(cap_);
    top_deg_ = suffix_top(deg_);
  }

  // Maximize: finds the first set beating `floor`. Decide: the first set reaching `floor + 1`.
  TaskResult run(int first, int floor, bool stop_at_first) const {
    State st{detail::ClassPartition(h_), {}, 0, floor, stop_at_first};
    st.chosen.reserve(static_cast<std::size_t>(k_));
    TaskResult out;
    descend(st, first, first, out);
    out.best = st.best;
    return out;
  }

 private:
  struct State {
    detail::ClassPartition part;
    std::vector<int> chosen;
    int degsum;
    int best;
    bool stop_at_first;
  };

  std::vector<int> suffix_top(const std::vector<int>& values) const {
    const auto stride = static_cast<std::size_t>(k_ + 1);
    std::vector<int> table((static_cast<std::size_t>(n_) + 1) * stride, 0);
    std::vector<int> top;  // descending, at most k entries
    for (int x = n_ - 1; x >= 0; --x) {
      const int val = values[static_cast<std::size_t>(x)];
      top.insert(std::upper_bound(top.begin(), top.end(), val, std::greater<>()), val);
      if (static_cast<int>(top.size()) > k_) top.pop_back();
      int acc = 0;
      for (int r = 1; r <= k_; ++r) {
        if (r <= static_cast<int>(top.size())) acc += top[static_cast<std::size_t>(r - 1)];
        table[static_cast<std::size_t>(x) * stride + static_cast<std::size_t>(r)] = acc;
      }
    }
    return table;
  }

  int top(const std::vector<int>& table, int x, int r) const {
    return table[static_cast<std::size_t>(x) * static_cast<std::size_t>(k_ + 1) + static_cast<std::size_t>(r)];
  }

  // Upper bound on any completion that draws the remaining r vertices from [x, n).
  int bound(const State& st, int x, int r) const {
    const int cur = st.part.count();
    long long ub = static_cast<long long>(cur) + top(top_cap_, x, r);
    ub = std::min<long long>(ub, 1 + (k_ + st.degsum + top(top_deg_, x, r)) / 2);
    ub = std::min<long long>(ub, m_);
    if (r < 31) ub = std::min<long long>(ub, static_cast<long long>(cur) << r);
    return static_cast<int>(ub);
  }

  // Returns true when the search should stop.
  bool descend(State& st, int from, int to, TaskResult& out) const {
    const int s = static_cast<int>(st.chosen.size());
    const int r = k_ - s;
    const int last = std::min(to, n_ - r);
    for (int x = from; x <= last; ++x) {
      if (bound(st, x, r) <= st.best) break;
      if (r == 1) {
        if (st.part.count() + cap_[static_cast<std::size_t>(x)] <= st.best) continue;
        ++out.enumerated;
        const int value = st.part.count() + st.part.gain(x);
        if (value > st.best) {
          st.best = value;
          out.witness = st.chosen;
          out.witness.push_back(x);
          out.hit = true;
          if (st.stop_at_first) return true;
        }
        continue;
      }
      st.part.add(x);
      st.chosen.push_back(x);
      st.degsum += deg_[static_cast<std::size_t>(x)];
      const bool stop = descend(st, x + 1, n_ - 1, out);
      st.degsum -= deg_[static_cast<std::size_t>(x)];
      st.chosen.pop_back();
      st.part.undo();
      if (stop) return true;
    }
    return false;
  }

  const Hypergraph& h_;
  int n_;
  int k_;
  int m_;
  std::vector<int> deg_;
  std::vector<int> cap_;
  std::vector<int> top_cap_;
  std::vector<int> top_deg_;
};

VertexSet to_set(int n, const std::vector<int>& vs) { return make_set(n, vs); }

struct SearchOutcome {
  std::optional<VertexSet> witness;
  int value = 0;
  std::uint64_t enumerated = 0;
};

// Core of both the max and the decision solvers; `h` must be edge-deduplicated.
// Maximize: returns the first optimal set, seeded with a greedy lower bound.
// Decide: returns the first set with at least `target` classes.
SearchOutcome search_k_sets(const Hypergraph& h, int k, std::optional<int> target,
                            const SolveOptions& opts) {
  const int n = h.num_vertices();
  SearchOutcome out;
  if (k == 0 || h.num_edges() == 0) {
    const VertexSet empty_k = [&] {
      VertexSet s = h.empty_set();
      detail::pad_to(s, k);
      return s;
    }();
    out.value = count_classes(h, empty_k);
    out.enumerated = 1;
    if (!target || out.value >= *target) out.witness = empty_k;
    return out;
  }
  check_ceiling(n, k, opts.ceiling);

  const KSetSearch search(h, k);
  int floor = 0;
  if (target) {
    floor = *target - 1;
  } else {
    const VertexSet greedy = detail::greedy_grow(h, h.empty_set(), k);
    floor = count_classes(h, greedy) - 1;
  }

  const int tasks = n - k + 1;
  std::vector<TaskResult> results(static_cast<std::size_t>(tasks));
  std::atomic<int> winner{INT_MAX};
  parallel_for(static_cast<std::size_t>(tasks), opts.threads, [&](std::size_t t) {
    if (target && static_cast<int>(t) > winner.load()) return;
    results[t] = search.run(static_cast<int>(t), floor, target.has_value());
    if (target && results[t].hit) {
      int cur = winner.load();
      while (static_cast<int>(t) < cur && !winner.compare_exchange_weak(cur, static_cast<int>(t))) {
      }
    }
  });

  int best_task = -1;
  int best_value = floor;
  for (int t = 0; t < tasks; ++t) {
    const auto& r = results[static_cast<std::size_t>(t)];
    if (target && best_task >= 0) break;
    out.enumerated += r.enumerated;
    if (r.hit && r.best > best_value) {
      best_value = r.best;
      best_task = t;
    }
  }
  if (best_task >= 0) {
    out.witness = to_set(n, results[static_cast<std::size_t>(best_task)].witness);
    out.value = best_value;
  }
  return out;
}

}  // namespace

std::string_view problem_tag(Problem p) {
  switch (p) {
    case Problem::kPartialVcDecision: return "partial-vc-decision";
    case Problem::kMaxPartialVc: return "max-partial-vc";
    case Problem::kVcDimension: return "vc-dimension";
    case Problem::kMinDistinguishingTransversal: return "min-distinguishing-transversal";
  }
  return "unknown";
}

std::optional<VertexSet> find_k_set_with_classes(const Hypergraph& h, int k, int target,
                                                 const SolveOptions& opts,
                                                 std::uint64_t* enumerated) {
  check_budget(h, k);
  const Hypergraph hd = detail::dedupe_edges(h);
  const auto res = search_k_sets(hd, k, target, opts);
  if (enumerated) *enumerated += res.enumerated;
  return res.witness;
}

SolveResult solve_max_partial_vc(const Hypergraph& h, int k, const SolveOptions& opts) {
  const auto t0 = Clock::now();
  check_budget(h, k);
  const Hypergraph hd = detail::dedupe_edges(h);
  auto res = search_k_sets(hd, k, std::nullopt, opts);
  SolveResult out;
  out.problem = Problem::kMaxPartialVc;
  out.k = k;
  if (!res.witness) throw std::logic_error("search lost the greedy lower bound");
  out.witness = *res.witness;
  out.value = count_classes(h, out.witness);
  out.enumerated = res.enumerated;
  out.elapsed_ms = ms_since(t0);
  return out;
}

SolveResult solve_partial_vc_decision(const Hypergraph& h, int k, int ell,
                                      const SolveOptions& opts) {
  const auto t0 = Clock::now();
  check_budget(h, k);
  if (ell < 0) throw InputError("class target ell must be nonnegative");
  SolveResult out;
  out.problem = Problem::kPartialVcDecision;
  out.k = k;
  out.ell = ell;

  auto finish = [&](bool yes, VertexSet witness, std::string reason) {
    out.decided = yes;
    out.witness = std::move(witness);
    out.value = count_classes(h, out.witness);
    out.reason = std::move(reason);
    out.elapsed_ms = ms_since(t0);
    return out;
  };

  VertexSet first_k = h.empty_set();
  detail::pad_to(first_k, k);
  if (ell == 0) return finish(true, first_k, "trivial");
  if (static_cast<std::uint64_t>(ell) > std::min<std::uint64_t>(pow2(k), static_cast<std::uint64_t>(distinct_edge_count(h)))) {
    return finish(false, h.empty_set(), "cap");
  }
  if (k < ell) {
    const Hypergraph hd = detail::dedupe_edges(h);
    auto res = search_k_sets(hd, k, ell, opts);
    out.enumerated = res.enumerated;
    if (res.witness) return finish(true, *res.witness, "enumeration");
    return finish(false, h.empty_set(), "enumeration");
  }

  // k >= ell: the greedy on the twin-free reduction reaches min(m', budget + 1).
  const TwinReduction red = remove_twins(h);
  const Hypergraph& hr = red.reduced;
  if (hr.num_edges() < ell) return finish(false, h.empty_set(), "distinct-edges");
  const int budget = std::min(ell - 1, hr.num_vertices());
  const VertexSet picked = detail::greedy_grow(hr, hr.empty_set(), budget);
  VertexSet witness = h.empty_set();
  for (int v : members(picked)) witness.set(static_cast<std::size_t>(red.vertex_map[static_cast<std::size_t>(v)]));
  detail::pad_to(witness, k);
  if (count_classes(h, witness) < ell) {
    throw std::logic_error("greedy fell short of its guarantee");
  }
  return finish(true, witness, "greedy");
}

std::optional<VertexSet> find_shattered_set(const Hypergraph& h, int d, const SolveOptions& opts,
                                            std::uint64_t* enumerated) {
  if (d < 0) throw InputError("dimension must be nonnegative");
  const Hypergraph hd = detail::dedupe_edges(h);
  const int m = hd.num_edges();
  if (m == 0) return std::nullopt;
  if (d == 0) return hd.empty_set();
  if (d >= 31 || (1 << d) > m || d > hd.num_vertices()) return std::nullopt;

  const int half = 1 << (d - 1);
  std::vector<int> cand;
  for (int v = 0; v < hd.num_vertices(); ++v) {
    if (hd.degree(v) >= half && m - hd.degree(v) >= half) cand.push_back(v);
  }
  const int c = static_cast<int>(cand.size());
  if (c < d) return std::nullopt;
  check_ceiling(c, d, opts.ceiling);

  struct Task {
    std::vector<int> found;
    std::uint64_t nodes = 0;
    bool hit = false;
  };
  auto run = [&](int first) {
    Task task;
    detail::ClassPartition part(hd);
    std::vector<int> chosen;
    std::function<bool(int, int)> dfs = [&](int from, int to) {
      const int s = static_cast<int>(chosen.size());
      for (int i = from; i <= std::min(to, c - (d - s)); ++i) {
        const int v = cand[static_cast<std::size_t>(i)];
        ++task.nodes;
        if (!part.splits_all(v)) continue;
        if (s + 1 == d) {
          chosen.push_back(v);
          task.found = chosen;
          task.hit = true;
          return true;
        }
        part.add(v);
        // Each class must still hold enough edges to split d - s - 1 more times.
        if (part.min_class_size() >= (1 << (d - s - 1))) {
          chosen.push_back(v);
          if (dfs(i + 1, c - 1)) return true;
          chosen.pop_back();
        }
        part.undo();
      }
      return false;
    };
    dfs(first, first);
    return task;
  };

  const int tasks = c - d + 1;
  std::vector<Task> results(static_cast<std::size_t>(tasks));
  std::atomic<int> winner{INT_MAX};
  parallel_for(static_cast<std::size_t>(tasks), opts.threads, [&](std::size_t t) {
    if (static_cast<int>(t) > winner.load()) return;
    results[t] = run(static_cast<int>(t));
    if (results[t].hit) {
      int cur = winner.load();
      while (static_cast<int>(t) < cur && !winner.compare_exchange_weak(cur, static_cast<int>(t))) {
      }
    }
  });
  for (const auto& r : results) {
    if (enumerated) *enumerated += r.nodes;
    if (r.hit) return make_set(hd.num_vertices(), r.found);
  }
  return std::nullopt;
}

SolveResult vc_dimension(const Hypergraph& h, const SolveOptions& opts) {
  const auto t0 = Clock::now();
  SolveResult out;
  out.problem = Problem::kVcDimension;
  out.witness = h.empty_set();
  const int m = distinct_edge_count(h);
  for (int d = 1; d < 31 && (1 << d) <= m; ++d) {
    auto found = find_shattered_set(h, d, opts, &out.enumerated);
    if (!found) break;
    out.witness = *found;
    out.value = d;
  }
  out.decided = true;
  out.elapsed_ms = ms_since(t0);
  return out;
}

SolveResult min_distinguishing_transversal(const Hypergraph& h, const SolveOptions& opts) {
  const auto t0 = Clock::now();
  if (const auto twins = find_twin_edges(h)) {
    throw InputError("edges #" + std::to_string(twins->first + 1) + " and #" +
                     std::to_string(twins->second + 1) +
                     " are twins; no vertex set can separate them");
  }
  SolveResult out;
  out.problem = Problem::kMinDistinguishingTransversal;
  out.witness = h.empty_set();
  const int m = h.num_edges();
  if (m > 1) {
    int k = 0;
    while ((std::uint64_t{1} << k) < static_cast<std::uint64_t>(m)) ++k;
    for (; k <= h.num_vertices(); ++k) {
      auto found = search_k_sets(h, k, m, opts);
      out.enumerated += found.enumerated;
      if (found.witness) {
        out.witness = *found.witness;
        break;
      }
    }
  }
  out.value = static_cast<int>(out.witness.count());
  out.decided = true;
  out.k = out.value;
  out.elapsed_ms = ms_since(t0);
  return out;
}

}  // namespace pvc
