#include "pvc/approx.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

#include "partition.hpp"
#include "pvc/combinatorics.hpp"
#include "pvc/errors.hpp"
#include "pvc/exact.hpp"
#include "pvc/parallel.hpp"

namespace pvc {

namespace {

void check_k(const Hypergraph& h, int k) {
  if (k < 0 || k > h.num_vertices()) {
    throw InputError("budget k=" + std::to_string(k) + " outside 0.." +
                     std::to_string(h.num_vertices()));
  }
}

std::vector<VertexSet> distinct_edges(const Hypergraph& h) {
  std::vector<VertexSet> f = h.edges();
  std::sort(f.begin(), f.end());
  f.erase(std::unique(f.begin(), f.end()), f.end());
  return f;
}

// One step of the shifting argument, carried out until `need` reaches 0.
VertexSet split_traces(std::vector<VertexSet> family, std::vector<int> remaining, int need) {
  VertexSet chosen(family.empty() ? 0 : family.front().size());
  while (need > 0) {
    const int x = remaining.front();
    remaining.erase(remaining.begin());
    const int n_rem = static_cast<int>(remaining.size());
    const auto xs = static_cast<std::size_t>(x);

    std::vector<VertexSet> without;  // F0: projections
    std::vector<VertexSet> both;     // F1: A with A and A+x both present
    without.reserve(family.size());
    for (const auto& a : family) {
      VertexSet p = a;
      p.reset(xs);
      without.push_back(std::move(p));
    }
    std::sort(without.begin(), without.end());
    for (std::size_t i = 0; i + 1 < without.size(); ++i) {
      if (without[i] == without[i + 1]) both.push_back(without[i]);
    }
    without.erase(std::unique(without.begin(), without.end()), without.end());

    if (static_cast<std::uint64_t>(both.size()) > sauer_sum(n_rem, need - 2)) {
      chosen.set(xs);
      family = std::move(both);
      --need;
    } else {
      family = std::move(without);
    }
  }
  return chosen;
}

}  // namespace

Ratio ratio_of(int upper_bound, int value) {
  return Ratio(upper_bound, std::max(value, 1));
}

ShatterCertificate certify_shattered(const Hypergraph& h, const VertexSet& s) {
  const auto mem = members(s);
  const int d = static_cast<int>(mem.size());
  if (d >= 31) throw CapacityError("certificate dimension too large");
  ShatterCertificate cert;
  cert.shattered = s;
  cert.dimension = d;
  cert.trace_witnesses.assign(std::size_t{1} << d, -1);
  for (int e = 0; e < h.num_edges(); ++e) {
    std::size_t mask = 0;
    for (int i = 0; i < d; ++i) {
      if (h.edge(e).test(static_cast<std::size_t>(mem[static_cast<std::size_t>(i)]))) mask |= std::size_t{1} << i;
    }
    if (cert.trace_witnesses[mask] < 0) cert.trace_witnesses[mask] = e;
  }
  if (std::find(cert.trace_witnesses.begin(), cert.trace_witnesses.end(), -1) !=
      cert.trace_witnesses.end()) {
    throw std::logic_error("set " + format_members(s) + " is not shattered");
  }
  return cert;
}

bool verify_certificate(const Hypergraph& h, const ShatterCertificate& cert) {
  const auto mem = members(cert.shattered);
  if (static_cast<int>(mem.size()) != cert.dimension || cert.dimension >= 31) return false;
  if (cert.trace_witnesses.size() != (std::size_t{1} << cert.dimension)) return false;
  for (std::size_t mask = 0; mask < cert.trace_witnesses.size(); ++mask) {
    const int e = cert.trace_witnesses[mask];
    if (e < 0 || e >= h.num_edges()) return false;
    for (int i = 0; i < cert.dimension; ++i) {
      const bool in_edge = h.edge(e).test(static_cast<std::size_t>(mem[static_cast<std::size_t>(i)]));
      if (in_edge != (((mask >> i) & 1U) != 0)) return false;
    }
  }
  return true;
}

int upper_bound_classes(const Hypergraph& h, int k, std::optional<int> vc_bound) {
  const std::uint64_t m = static_cast<std::uint64_t>(distinct_edge_count(h));
  std::uint64_t ub = std::min(pow2(k), m);
  const std::uint64_t delta = static_cast<std::uint64_t>(max_degree(h));
  ub = std::min<std::uint64_t>(ub, static_cast<std::uint64_t>(k) * (delta + 1) / 2 + 1);
  if (vc_bound) ub = std::min(ub, sauer_sum(k, *vc_bound));
  return static_cast<int>(ub);
}

ApproxResult greedy_classes(const Hypergraph& h, int k) {
  check_k(h, k);
  if (const auto e = find_twin_edges(h)) {
    throw InputError("greedy needs a twin-free hypergraph; edges #" + std::to_string(e->first + 1) +
                     " and #" + std::to_string(e->second + 1) + " are equal");
  }
  if (const auto v = find_twin_vertices(h)) {
    throw InputError("greedy needs a twin-free hypergraph; vertices " + std::to_string(v->first + 1) +
                     " and " + std::to_string(v->second + 1) + " are twins");
  }
  ApproxResult out;
  out.k = k;
  out.method = "greedy";
  out.witness = detail::greedy_grow(h, h.empty_set(), k);
  out.value = count_classes(h, out.witness);
  out.upper_bound = upper_bound_classes(h, k);
  out.claimed_ratio = ratio_of(out.upper_bound, out.value);
  return out;
}

ApproxResult approx_max_partial_vc(const Hypergraph& h, int k, std::optional<int> vc_bound) {
  check_k(h, k);
  const TwinReduction red = remove_twins(h);
  const Hypergraph& hr = red.reduced;
  const int k_eff = std::min(k, hr.num_vertices());
  const VertexSet picked = detail::greedy_grow(hr, hr.empty_set(), k_eff);

  ApproxResult out;
  out.k = k;
  out.method = "greedy";
  out.witness = h.empty_set();
  for (int v : members(picked)) out.witness.set(static_cast<std::size_t>(red.vertex_map[static_cast<std::size_t>(v)]));
  detail::pad_to(out.witness, k);
  out.value = count_classes(h, out.witness);
  // Twin vertices never add classes, so the optimum of h at k equals that of hr at k_eff.
  out.upper_bound = upper_bound_classes(hr, k_eff, vc_bound);
  out.claimed_ratio = ratio_of(out.upper_bound, out.value);
  return out;
}

ShatterCertificate extract_shattered(const Hypergraph& h, int d) {
  if (d < 0) throw InputError("dimension must be nonnegative");
  auto family = distinct_edges(h);
  const int n = h.num_vertices();
  if (static_cast<std::uint64_t>(family.size()) <= sauer_sum(n, d - 1)) {
    throw InputError("Sauer threshold not exceeded: " + std::to_string(family.size()) +
                     " distinct edges, need more than " + std::to_string(sauer_sum(n, d - 1)));
  }
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
  VertexSet s = split_traces(std::move(family), std::move(order), d);
  if (s.size() == 0) s = h.empty_set();
  return certify_shattered(h, s);
}

ShatterCertificate approx_max_vc_dimension(const Hypergraph& h, int threads) {
  const int md = distinct_edge_count(h);
  const int n = h.num_vertices();
  int k_hi = 0;
  while (k_hi + 1 <= n && k_hi + 1 < 31 && (1 << (k_hi + 1)) <= md) ++k_hi;
  if (md == 0) return ShatterCertificate{h.empty_set(), 0, {}};
  if (k_hi == 0) return certify_shattered(h, h.empty_set());

  std::vector<ApproxResult> sweep(static_cast<std::size_t>(k_hi) + 1);
  parallel_for(static_cast<std::size_t>(k_hi), threads, [&](std::size_t i) {
    sweep[i + 1] = approx_max_partial_vc(h, static_cast<int>(i) + 1);
  });
  int k0 = 0;
  for (int k = 1; k <= k_hi; ++k) {
    if (2LL * sweep[static_cast<std::size_t>(k)].value >= (1LL << k)) k0 = k;
  }
  VertexSet best = h.empty_set();
  if (k0 > 0) {
    const VertexSet& x = sweep[static_cast<std::size_t>(k0)].witness;
    const Hypergraph restricted = restrict_to(h, x);
    const auto f = static_cast<std::uint64_t>(distinct_edge_count(restricted));
    int d = 0;
    while (d + 1 <= k0 && f > sauer_sum(k0, d)) ++d;
    if (d > 0) {
      const auto local = extract_shattered(restricted, d);
      const auto xs = members(x);
      for (int v : members(local.shattered)) best.set(static_cast<std::size_t>(xs[static_cast<std::size_t>(v)]));
    }
  }
  // Grow by single vertices while the set stays shattered.
  for (bool grew = true; grew;) {
    grew = false;
    for (int v = 0; v < n; ++v) {
      if (best.test(static_cast<std::size_t>(v))) continue;
      VertexSet trial = best;
      trial.set(static_cast<std::size_t>(v));
      if (is_shattered(h, trial)) {
        best = std::move(trial);
        grew = true;
        break;
      }
    }
  }
  const int dim = static_cast<int>(best.count());
  if (binomial(n, dim + 1) <= 1'000'000) {
    SolveOptions opts;
    opts.threads = threads;
    if (auto higher = find_shattered_set(h, dim + 1, opts)) best = *higher;
  }
  return certify_shattered(h, best);
}

int double_hit_count(const Hypergraph& h, const VertexSet& c) {
  int hits = 0;
  for (const auto& e : h.edges()) {
    if ((e & c).count() >= 2) ++hits;
  }
  return hits;
}

ApproxResult greedy_partial_double_hitting(const Hypergraph& h, int k) {
  check_k(h, k);
  const int n = h.num_vertices();
  std::vector<int> cnt(static_cast<std::size_t>(h.num_edges()), 0);
  VertexSet chosen = h.empty_set();
  int size = 0;

  auto take = [&](int v) {
    chosen.set(static_cast<std::size_t>(v));
    ++size;
    for (int e : h.incident_edges(v)) ++cnt[static_cast<std::size_t>(e)];
  };
  auto single_gain = [&](int v) {
    int g = 0;
    for (int e : h.incident_edges(v)) g += cnt[static_cast<std::size_t>(e)] == 1;
    return g;
  };

  while (size < k) {
    int g1 = 0;
    int best_v = -1;
    std::vector<int> gain1(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
      if (chosen.test(static_cast<std::size_t>(v))) continue;
      gain1[static_cast<std::size_t>(v)] = single_gain(v);
      if (gain1[static_cast<std::size_t>(v)] > g1) {
        g1 = gain1[static_cast<std::size_t>(v)];
        best_v = v;
      }
    }
    int g2 = 0;
    std::pair<int, int> best_pair{-1, -1};
    if (size + 2 <= k) {
      // Pairs that share an untouched edge; any other pair gains at most 2*g1.
      // shared[0]: untouched edges holding both; shared[1]: singly hit edges
      // holding both, which gain1 counted twice.
      std::map<std::pair<int, int>, std::array<int, 2>> together;
      for (int pass = 0; pass < 2; ++pass) {
        for (int e = 0; e < h.num_edges(); ++e) {
          if (cnt[static_cast<std::size_t>(e)] != pass) continue;
          std::vector<int> free;
          for (int v : members(h.edge(e))) {
            if (!chosen.test(static_cast<std::size_t>(v))) free.push_back(v);
          }
          for (std::size_t i = 0; i < free.size(); ++i) {
            for (std::size_t j = i + 1; j < free.size(); ++j) {
              if (pass == 0) {
                ++together[{free[i], free[j]}][0];
              } else if (auto it = together.find({free[i], free[j]}); it != together.end()) {
                ++it->second[1];
              }
            }
          }
        }
      }
      for (const auto& [uv, shared] : together) {
        const int g = shared[0] - shared[1] + gain1[static_cast<std::size_t>(uv.first)] +
                      gain1[static_cast<std::size_t>(uv.second)];
        if (g > g2) {
          g2 = g;
          best_pair = uv;
        }
      }
    }
    if (best_pair.first >= 0 && g2 > 2 * g1) {
      take(best_pair.first);
      take(best_pair.second);
    } else if (best_v >= 0) {
      take(best_v);
    } else {
      break;
    }
  }
  detail::pad_to(chosen, k);

  ApproxResult out;
  out.k = k;
  out.method = "double-hitting";
  out.witness = chosen;
  out.value = double_hit_count(h, chosen);
  int big = 0;
  for (const auto& e : h.edges()) big += e.count() >= 2;
  out.upper_bound = big;
  if (!find_four_cycle(h)) {
    out.upper_bound = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(big), binomial(k, 2)));
  }
  out.claimed_ratio = ratio_of(out.upper_bound, out.value);
  return out;
}

std::optional<std::pair<int, int>> find_four_cycle(const Hypergraph& h) {
  for (int e = 0; e < h.num_edges(); ++e) {
    if (h.edge(e).count() < 2) continue;
    for (int f = e + 1; f < h.num_edges(); ++f) {
      if ((h.edge(e) & h.edge(f)).count() >= 2) return std::pair{e, f};
    }
  }
  return std::nullopt;
}

ApproxResult approx_via_double_hitting(const Hypergraph& h, int k) {
  check_k(h, k);
  if (const auto bad = find_four_cycle(h)) {
    throw InputError("edges #" + std::to_string(bad->first + 1) + " and #" +
                     std::to_string(bad->second + 1) +
                     " share two vertices; the incidence graph has a 4-cycle");
  }
  const ApproxResult by_classes = approx_max_partial_vc(h, k);
  const ApproxResult by_pairs = greedy_partial_double_hitting(h, k);
  const int pair_classes = count_classes(h, by_pairs.witness);

  ApproxResult out;
  out.k = k;
  out.method = "double-hitting";
  if (pair_classes > by_classes.value) {
    out.witness = by_pairs.witness;
    out.value = pair_classes;
  } else {
    out.witness = by_classes.witness;
    out.value = by_classes.value;
  }
  // Without 4-cycles a vertex pair lies in at most one edge, so traces of size
  // at least two number at most min(#edges of size >= 2, C(k, 2)).
  int big = 0;
  for (const auto& e : h.edges()) big += e.count() >= 2;
  const std::uint64_t pairs = std::min<std::uint64_t>(static_cast<std::uint64_t>(big), binomial(k, 2));
  const std::uint64_t chain = pairs + static_cast<std::uint64_t>(k) + 1;
  out.upper_bound = static_cast<int>(std::min<std::uint64_t>(
      static_cast<std::uint64_t>(upper_bound_classes(h, k)), chain));
  out.claimed_ratio = ratio_of(out.upper_bound, out.value);
  return out;
}

}  // namespace pvc
