#include "pvc/reductions.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "pvc/combinatorics.hpp"
#include "pvc/errors.hpp"

namespace pvc {

namespace {

constexpr int kGadgetSize = 12;

// Neighborhoods of the eight auxiliary gadget vertices, as f-indices.
const std::vector<std::vector<int>> kAuxiliary = {
    {3}, {1, 2}, {0, 2}, {1, 3}, {0, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2, 3},
};

std::string k_text(int k) { return std::to_string(k); }

void check_vertices(const Graph& g, const std::vector<int>& vs, std::string_view what) {
  for (int v : vs) {
    if (v < 0 || v >= g.num_vertices()) {
      throw InputError(std::string(what) + " vertex " + std::to_string(v + 1) + " out of range");
    }
  }
}

}  // namespace

std::string_view kind_tag(ReductionKind kind) {
  switch (kind) {
    case ReductionKind::kCliqueToVcdim: return "clique-to-vcdim";
    case ReductionKind::kIsToDt: return "is-to-dt";
    case ReductionKind::kMpvcToMpvcd: return "mpvc-to-mpvcd";
  }
  return "unknown";
}

std::string_view variant_tag(CliqueVariant variant) {
  switch (variant) {
    case CliqueVariant::kBipartite: return "bipartite";
    case CliqueVariant::kSplit: return "split";
    case CliqueVariant::kCoBipartite: return "co-bipartite";
  }
  return "unknown";
}

ReductionKind parse_kind(std::string_view tag) {
  for (auto k : {ReductionKind::kCliqueToVcdim, ReductionKind::kIsToDt, ReductionKind::kMpvcToMpvcd}) {
    if (kind_tag(k) == tag) return k;
  }
  throw InputError("unknown reduction '" + std::string(tag) + "'");
}

CliqueVariant parse_variant(std::string_view tag) {
  for (auto v : {CliqueVariant::kBipartite, CliqueVariant::kSplit, CliqueVariant::kCoBipartite}) {
    if (variant_tag(v) == tag) return v;
  }
  throw InputError("unknown variant '" + std::string(tag) + "'");
}

int clique_x_vertex(int u, int i, int k) { return u * k + (i - 1); }

ReductionCertificate clique_to_vcdim(const Graph& g, int k, CliqueVariant variant) {
  if (k <= 3) throw InputError("clique size k must exceed 3, got " + std::to_string(k));
  const int n = g.num_vertices();
  if (n < k) throw InputError("graph has fewer than k vertices");
  if (k >= 20) throw CapacityError("clique size k=" + std::to_string(k) + " needs 2^k extra vertices");

  const int nx = n * k;
  std::vector<Edge> edges;
  int next = nx;
  for (auto [u, v] : g.edges()) {
    for (int i = 1; i <= k; ++i) {
      for (int j = 1; j <= k; ++j) {
        edges.emplace_back(clique_x_vertex(u, i, k), next);
        edges.emplace_back(clique_x_vertex(v, j, k), next);
        ++next;
      }
    }
  }
  for (int mask = 0; mask < (1 << k); ++mask) {
    if (__builtin_popcount(static_cast<unsigned>(mask)) == 2) continue;
    for (int i = 1; i <= k; ++i) {
      if (!((mask >> (i - 1)) & 1)) continue;
      for (int u = 0; u < n; ++u) edges.emplace_back(clique_x_vertex(u, i, k), next);
    }
    ++next;
  }
  const int total = next;
  if (total > kMaxVertices) {
    throw CapacityError("clique reduction would build " + std::to_string(total) + " vertices");
  }
  if (variant != CliqueVariant::kBipartite) {
    for (int a = 0; a < nx; ++a) {
      for (int b = a + 1; b < nx; ++b) edges.emplace_back(a, b);
    }
  }
  if (variant == CliqueVariant::kCoBipartite) {
    for (int a = nx; a < total; ++a) {
      for (int b = a + 1; b < total; ++b) edges.emplace_back(a, b);
    }
  }

  ReductionCertificate cert;
  cert.kind = ReductionKind::kCliqueToVcdim;
  cert.variant = variant;
  cert.source = g;
  cert.k = k;
  cert.target_graph = Graph::from_edges(total, edges);
  cert.target = neighborhood_hypergraph(*cert.target_graph);
  cert.k_prime = k;
  cert.forward_map = "clique {v_1..v_k} -> {(v_i, i)}";
  cert.identity = "clique(G," + k_text(k) + ") <=> vcdim(G') >= " + k_text(k);
  return cert;
}

ReductionCertificate is_to_disting_transversal(const Graph& g, int s) {
  const int n = g.num_vertices();
  if (s < 0 || s > n) throw InputError("independent set size outside 0.." + std::to_string(n));
  const auto gedges = g.edges();
  const int nv = n + static_cast<int>(gedges.size());
  std::vector<VertexSet> edges;
  for (std::size_t e = 0; e < gedges.size(); ++e) {
    const int xe = n + static_cast<int>(e);
    edges.push_back(make_set(nv, {gedges[e].first, gedges[e].second, xe}));
    edges.push_back(make_set(nv, {xe}));
  }
  edges.emplace_back(static_cast<std::size_t>(nv));

  ReductionCertificate cert;
  cert.kind = ReductionKind::kIsToDt;
  cert.source = g;
  cert.k = s;
  cert.target = Hypergraph(nv, std::move(edges));
  cert.k_prime = nv - s;
  cert.forward_map = "independent set I -> X minus {x_v : v in I}";
  cert.identity = "alpha(G) >= " + k_text(s) + " <=> min_dt(H) <= " + k_text(cert.k_prime);
  return cert;
}

int gadget_vertex(int v, int j) { return kGadgetSize * v + j; }

ReductionCertificate mpvc_to_mpvcd(const Graph& g, int k) {
  const int n = g.num_vertices();
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) != 3) {
      throw InputError("graph is not cubic: vertex " + std::to_string(v + 1) + " has degree " +
                       std::to_string(g.degree(v)));
    }
  }
  if (k < 0 || k > n) throw InputError("cover budget outside 0.." + std::to_string(n));
  const auto gedges = g.edges();
  const int total = kGadgetSize * n + static_cast<int>(gedges.size());
  if (total > kMaxVertices) throw CapacityError("gadget graph would exceed the vertex limit");

  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) {
    for (std::size_t a = 0; a < kAuxiliary.size(); ++a) {
      for (int f : kAuxiliary[a]) edges.emplace_back(gadget_vertex(v, f), gadget_vertex(v, 4 + static_cast<int>(a)));
    }
    for (int j = 0; j < 3; ++j) edges.emplace_back(gadget_vertex(v, j), gadget_vertex(v, j + 1));
  }
  auto rank = [&](int v, int w) {
    const auto nb = g.neighbors(v);
    return static_cast<int>(std::lower_bound(nb.begin(), nb.end(), w) - nb.begin());
  };
  for (std::size_t e = 0; e < gedges.size(); ++e) {
    const auto [u, v] = gedges[e];
    const int mid = kGadgetSize * n + static_cast<int>(e);
    edges.emplace_back(gadget_vertex(u, rank(u, v)), mid);
    edges.emplace_back(gadget_vertex(v, rank(v, u)), mid);
  }

  ReductionCertificate cert;
  cert.kind = ReductionKind::kMpvcToMpvcd;
  cert.source = g;
  cert.k = k;
  cert.target_graph = Graph::from_edges(total, edges);
  cert.target = neighborhood_hypergraph(*cert.target_graph);
  cert.k_prime = 4 * k;
  cert.forward_map = "cover S -> union of F_v over v in S";
  cert.identity = "opt(G'," + k_text(4 * k) + ") = opt(G," + k_text(k) + ") + " +
                  std::to_string(12 * k + 1);
  return cert;
}

VertexSet forward_clique(const ReductionCertificate& cert, const std::vector<int>& clique) {
  check_vertices(cert.source, clique, "clique");
  VertexSet out = cert.target.empty_set();
  for (std::size_t i = 0; i < clique.size(); ++i) {
    out.set(static_cast<std::size_t>(clique_x_vertex(clique[i], static_cast<int>(i) + 1, cert.k)));
  }
  return out;
}

VertexSet forward_independent_set(const ReductionCertificate& cert, const std::vector<int>& independent) {
  check_vertices(cert.source, independent, "independent set");
  VertexSet out = cert.target.empty_set();
  out.set();
  for (int v : independent) out.reset(static_cast<std::size_t>(v));
  return out;
}

VertexSet forward_cover(const ReductionCertificate& cert, const std::vector<int>& cover) {
  check_vertices(cert.source, cover, "cover");
  VertexSet out = cert.target.empty_set();
  for (int v : cover) {
    for (int j = 0; j < 4; ++j) out.set(static_cast<std::size_t>(gadget_vertex(v, j)));
  }
  return out;
}

std::vector<int> back_map_cover(const ReductionCertificate& cert, const VertexSet& target_solution) {
  const int n = cert.source.num_vertices();
  std::vector<int> load(static_cast<std::size_t>(n), 0);
  for (int x : members(target_solution)) {
    if (x < kGadgetSize * n) ++load[static_cast<std::size_t>(x / kGadgetSize)];
  }
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return load[static_cast<std::size_t>(a)] > load[static_cast<std::size_t>(b)];
  });
  order.resize(static_cast<std::size_t>(std::min(cert.k, n)));
  std::sort(order.begin(), order.end());
  return order;
}

bool has_clique(const Graph& g, int k) {
  if (k <= 1) return g.num_vertices() >= k;
  bool found = false;
  for_each_combination(g.num_vertices(), k, [&](const std::vector<int>& c) {
    for (std::size_t a = 0; a < c.size(); ++a) {
      for (std::size_t b = a + 1; b < c.size(); ++b) {
        if (!g.has_edge(c[a], c[b])) return true;
      }
    }
    found = true;
    return false;
  });
  return found;
}

bool has_independent_set(const Graph& g, int s) { return has_clique(complement(g), s); }

int covered_edges(const Graph& g, const std::vector<int>& chosen) {
  std::vector<char> in(static_cast<std::size_t>(g.num_vertices()), 0);
  for (int v : chosen) in[static_cast<std::size_t>(v)] = 1;
  int count = 0;
  for (auto [u, v] : g.edges()) count += in[static_cast<std::size_t>(u)] || in[static_cast<std::size_t>(v)];
  return count;
}

int max_partial_vertex_cover(const Graph& g, int k) {
  int best = 0;
  for_each_combination(g.num_vertices(), k, [&](const std::vector<int>& c) {
    best = std::max(best, covered_edges(g, c));
    return true;
  });
  return best;
}

VerifyOutcome verify_reduction(const ReductionCertificate& cert, const SolveOptions& opts) {
  VerifyOutcome out;
  switch (cert.kind) {
    case ReductionKind::kCliqueToVcdim: {
      if (binomial(cert.source.num_vertices(), cert.k) > opts.ceiling) {
        throw CapacityError("source clique search exceeds the ceiling");
      }
      const bool source = has_clique(cert.source, cert.k);
      const bool target = find_shattered_set(cert.target, cert.k_prime, opts).has_value();
      out.source_value = source;
      out.target_value = target;
      out.holds = source == target;
      out.detail = std::string("clique=") + (source ? "yes" : "no") + " shattered=" + (target ? "yes" : "no");
      break;
    }
    case ReductionKind::kIsToDt: {
      if (binomial(cert.source.num_vertices(), cert.k) > opts.ceiling) {
        throw CapacityError("source independent set search exceeds the ceiling");
      }
      const bool source = has_independent_set(cert.source, cert.k);
      const SolveResult dt = min_distinguishing_transversal(cert.target, opts);
      out.source_value = source;
      out.target_value = dt.value;
      out.holds = source == (dt.value <= cert.k_prime);
      out.detail = std::string("independent=") + (source ? "yes" : "no") +
                   " min_dt=" + std::to_string(dt.value) + " k_prime=" + std::to_string(cert.k_prime);
      break;
    }
    case ReductionKind::kMpvcToMpvcd: {
      if (binomial(cert.source.num_vertices(), cert.k) > opts.ceiling) {
        throw CapacityError("source cover search exceeds the ceiling");
      }
      const int source = max_partial_vertex_cover(cert.source, cert.k);
      const SolveResult target = solve_max_partial_vc(cert.target, cert.k_prime, opts);
      out.source_value = source;
      out.target_value = target.value;
      out.holds = target.value == source + 12 * cert.k + 1;
      out.detail = "opt_source=" + std::to_string(source) + " opt_target=" + std::to_string(target.value);
      break;
    }
  }
  return out;
}

void write_certificate(std::ostream& out, const ReductionCertificate& cert) {
  out << "kind " << kind_tag(cert.kind) << '\n';
  out << "variant " << (cert.variant ? variant_tag(*cert.variant) : std::string_view("none")) << '\n';
  out << "k " << cert.k << '\n';
  out << "k_prime " << cert.k_prime << '\n';
  out << "identity " << cert.identity << '\n';
}

CertificateRecord read_certificate(std::istream& in) {
  CertificateRecord rec;
  std::string line;
  const char* expected[] = {"kind", "variant", "k", "k_prime", "identity"};
  for (const char* key : expected) {
    if (!std::getline(in, line)) throw InputError(std::string("certificate ends before '") + key + "'");
    const auto space = line.find(' ');
    const std::string head = line.substr(0, space);
    const std::string rest = space == std::string::npos ? std::string{} : line.substr(space + 1);
    if (head != key) throw InputError("certificate line '" + head + "', expected '" + key + "'");
    const std::string_view k = key;
    if (k == "kind") {
      rec.kind = parse_kind(rest);
    } else if (k == "variant") {
      if (rest != "none") rec.variant = parse_variant(rest);
    } else if (k == "k" || k == "k_prime") {
      int value = 0;
      std::istringstream num(rest);
      if (!(num >> value)) throw InputError("certificate field '" + head + "' is not an integer");
      (k == "k" ? rec.k : rec.k_prime) = value;
    } else {
      rec.identity = rest;
    }
  }
  return rec;
}

}  // namespace pvc
