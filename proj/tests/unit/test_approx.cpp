#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "pvc/approx.hpp"
#include "pvc/combinatorics.hpp"
#include "pvc/errors.hpp"
#include "pvc/exact.hpp"

using namespace pvc;

namespace {

Hypergraph power_set(int n) {
  std::vector<std::vector<int>> edges;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> e;
    for (int v = 0; v < n; ++v) {
      if (mask >> v & 1) e.push_back(v + 1);
    }
    edges.push_back(e);
  }
  return build_hypergraph(n, edges);
}

Hypergraph twin_free(std::mt19937_64& rng, int n, int m, double p) {
  return remove_twins(oracle::random_hypergraph(rng, n, m, p)).reduced;
}

// Random hypergraph in which two edges share at most one vertex.
Hypergraph linear_hypergraph(std::mt19937_64& rng, int n, int m, int max_size) {
  std::vector<VertexSet> edges;
  for (int attempt = 0; attempt < 50 * m && static_cast<int>(edges.size()) < m; ++attempt) {
    VertexSet e(static_cast<std::size_t>(n));
    const int size = static_cast<int>(rng() % static_cast<std::uint64_t>(max_size + 1));
    for (int i = 0; i < size; ++i) e.set(rng() % static_cast<std::uint64_t>(n));
    bool ok = true;
    for (const auto& f : edges) ok = ok && (e & f).count() <= 1;
    if (ok && (e.count() >= 2 || edges.size() % 3 == 0)) edges.push_back(e);
  }
  return Hypergraph(n, edges);
}

}  // namespace

TEST_CASE("greedy examples") {
  const auto single = build_hypergraph(1, {{1}});
  CHECK(greedy_classes(single, 0).value == 1);

  const auto p3 = neighborhood_hypergraph(oracle::path(3));
  const auto r = greedy_classes(p3, 2);
  CHECK(r.value == 3);
  CHECK(r.witness == make_set(3, {0, 2}));

  CHECK_THROWS_AS(greedy_classes(build_hypergraph(2, {{1}, {1}}), 1), InputError);
  CHECK_THROWS_AS(greedy_classes(build_hypergraph(2, {{1, 2}, {}}), 1), InputError);
}

TEST_CASE("greedy guarantee on twin-free hypergraphs") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const auto h = twin_free(rng, 3 + static_cast<int>(rng() % 12), 1 + static_cast<int>(rng() % 30), 0.4);
    const int n = h.num_vertices();
    for (int k = 0; k <= std::max(0, n - 1); ++k) {
      const auto r = greedy_classes(h, k);
      CHECK(r.value >= std::min(h.num_edges(), k + 1));
      CHECK(count_classes(h, r.witness) == r.value);
      CHECK(static_cast<int>(r.witness.count()) == k);
    }
  }
}

TEST_CASE("upper bound examples") {
  const auto delta3 = build_hypergraph(6, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {5}, {6}, {5, 6}, {}, {2}});
  REQUIRE(max_degree(delta3) == 3);
  CHECK(upper_bound_classes(delta3, 2) == 4);
  CHECK(upper_bound_classes(power_set(3), 3, 1) == 4);
  CHECK(upper_bound_classes(delta3, 0) == 1);
}

TEST_CASE("upper bound and ratio are sound") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 80; ++trial) {
    const auto h = oracle::random_hypergraph(rng, 3 + static_cast<int>(rng() % 7), 1 + static_cast<int>(rng() % 20), 0.4);
    const int vc = oracle::vc_dimension(h);
    for (int k = 0; k <= std::min(4, h.num_vertices()); ++k) {
      const int opt = oracle::max_classes(h, k);
      CHECK(upper_bound_classes(h, k) >= opt);
      CHECK(upper_bound_classes(h, k, vc) >= opt);
      const auto a = approx_max_partial_vc(h, k);
      CHECK(a.upper_bound >= opt);
      CHECK(count_classes(h, a.witness) == a.value);
      CHECK(static_cast<int>(a.witness.count()) == k);
      CHECK(Ratio(a.value) * a.claimed_ratio >= Ratio(opt));
      const int md = distinct_edge_count(h);
      const Ratio prop = std::max(Ratio(1), Ratio(static_cast<std::int64_t>(std::min<std::uint64_t>(pow2(k), static_cast<std::uint64_t>(md))), k + 1));
      CHECK(Ratio(a.value) * prop >= Ratio(opt));
    }
  }
}

TEST_CASE("matching: greedy is optimal") {
  const auto h = build_hypergraph(5, {{1}, {2}, {3}, {4}, {5}});
  for (int k = 0; k <= 4; ++k) {
    const auto a = approx_max_partial_vc(h, k);
    CHECK(a.claimed_ratio <= Ratio(1));
    CHECK(a.value == k + 1);
  }
  const auto two = approx_max_partial_vc(build_hypergraph(3, {{1}, {2}, {1, 3}}), 1);
  CHECK(two.value >= 2);
  CHECK(two.claimed_ratio == Ratio(1));
}

TEST_CASE("approx handles twins by reduction") {
  const auto k3 = neighborhood_hypergraph(oracle::complete(3));
  const auto a = approx_max_partial_vc(k3, 2);
  CHECK(a.value == 1);
  CHECK(a.witness.count() == 2);
  CHECK(a.upper_bound == 1);
}

TEST_CASE("shatter certificates") {
  const auto h = power_set(3);
  const auto cert = certify_shattered(h, make_set(3, {0, 2}));
  CHECK(cert.dimension == 2);
  CHECK(verify_certificate(h, cert));
  auto bad = cert;
  bad.trace_witnesses[3] = bad.trace_witnesses[0];
  CHECK_FALSE(verify_certificate(h, bad));
  CHECK_THROWS(certify_shattered(build_hypergraph(2, {{1}}), make_set(2, {0})));
}

TEST_CASE("extract_shattered examples") {
  const auto all = extract_shattered(power_set(3), 3);
  CHECK(all.shattered == make_set(3, {0, 1, 2}));
  CHECK(verify_certificate(power_set(3), all));

  const auto zero = extract_shattered(build_hypergraph(2, {{1}}), 0);
  CHECK(zero.dimension == 0);

  try {
    extract_shattered(build_hypergraph(3, {{1}, {2}}), 2);
    FAIL("expected an error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("Sauer threshold not exceeded") != std::string::npos);
  }
}

TEST_CASE("extract_shattered above the Sauer threshold") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const auto h = oracle::random_hypergraph(rng, n, 1 + static_cast<int>(rng() % 60), 0.5);
    const auto md = static_cast<std::uint64_t>(distinct_edge_count(h));
    for (int d = 0; d <= n && md > sauer_sum(n, d - 1); ++d) {
      const auto cert = extract_shattered(h, d);
      CHECK(cert.dimension >= d);
      CHECK(verify_certificate(h, cert));
      CHECK(oracle::shattered(oracle::edge_lists(h), members(cert.shattered)));
    }
  }
  // Six distinct edges on four vertices always shatter a pair.
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<VertexSet> edges;
    std::vector<int> masks(16);
    for (int i = 0; i < 16; ++i) masks[static_cast<std::size_t>(i)] = i;
    std::shuffle(masks.begin(), masks.end(), rng);
    for (int i = 0; i < 6; ++i) edges.emplace_back(4, static_cast<unsigned long>(masks[static_cast<std::size_t>(i)]));
    const Hypergraph h(4, edges);
    const auto cert = extract_shattered(h, 2);
    CHECK(cert.dimension >= 2);
    CHECK(is_shattered(h, cert.shattered));
  }
}

TEST_CASE("approximate vc dimension") {
  CHECK(approx_max_vc_dimension(build_hypergraph(3, {{1, 2}})).dimension == 0);
  std::vector<std::vector<int>> small{{}};
  for (int v = 1; v <= 5; ++v) small.push_back({v});
  const auto low = approx_max_vc_dimension(build_hypergraph(5, small));
  CHECK(low.dimension >= 1);
  CHECK(verify_certificate(build_hypergraph(5, small), low));

  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 60; ++trial) {
    const auto h = oracle::random_hypergraph(rng, 3 + static_cast<int>(rng() % 10), 1 + static_cast<int>(rng() % 40), 0.5);
    const auto cert = approx_max_vc_dimension(h);
    CHECK(verify_certificate(h, cert));
    CHECK(2 * cert.dimension >= oracle::vc_dimension(h));
    CHECK(approx_max_vc_dimension(h, 3).shattered == cert.shattered);
  }
}

TEST_CASE("double hitting examples") {
  CHECK(greedy_partial_double_hitting(build_hypergraph(2, {{1, 2}}), 2).value == 1);
  const auto tri = build_hypergraph(3, {{1, 2}, {2, 3}, {1, 3}});
  CHECK(greedy_partial_double_hitting(tri, 0).value == 0);
  CHECK(greedy_partial_double_hitting(tri, 1).value == 0);
  CHECK(greedy_partial_double_hitting(tri, 2).value == 1);
  CHECK(oracle::max_double_hits(tri, 2) == 1);
}

TEST_CASE("double hitting greedy is consistent") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 100; ++trial) {
    const auto h = oracle::random_hypergraph(rng, 3 + static_cast<int>(rng() % 8), 1 + static_cast<int>(rng() % 15), 0.4);
    for (int k = 0; k <= h.num_vertices(); ++k) {
      const auto r = greedy_partial_double_hitting(h, k);
      CHECK(static_cast<int>(r.witness.count()) == k);
      CHECK(r.value == oracle::double_hits(oracle::edge_lists(h), members(r.witness)));
      CHECK(r.value <= oracle::max_double_hits(h, k));
      CHECK(r.upper_bound >= oracle::max_double_hits(h, k));
    }
  }
  // Every pair shares an edge: the greedy reaches floor(k/2).
  const auto k6 = build_hypergraph(6, [] {
    std::vector<std::vector<int>> e;
    for (int u = 1; u <= 6; ++u) {
      for (int v = u + 1; v <= 6; ++v) e.push_back({u, v});
    }
    return e;
  }());
  for (int k = 0; k <= 6; ++k) CHECK(greedy_partial_double_hitting(k6, k).value >= k / 2);
}

TEST_CASE("four cycles") {
  const auto bad = build_hypergraph(3, {{1, 2}, {1, 2, 3}});
  CHECK(find_four_cycle(bad) == std::optional<std::pair<int, int>>({0, 1}));
  CHECK_THROWS_AS(approx_via_double_hitting(bad, 2), InputError);

  const auto fano = build_hypergraph(7, {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 5, 6}});
  CHECK_FALSE(find_four_cycle(fano));
  CHECK_NOTHROW(approx_via_double_hitting(fano, 3));

  const auto c5 = neighborhood_hypergraph(oracle::cycle(5));
  CHECK(find_four_cycle(c5));
}

TEST_CASE("double hitting transfer on 4-cycle-free input") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    const auto h = linear_hypergraph(rng, 4 + static_cast<int>(rng() % 6), 1 + static_cast<int>(rng() % 12), 4);
    REQUIRE_FALSE(find_four_cycle(h));
    const auto edges = oracle::edge_lists(h);
    for (int k = 0; k <= h.num_vertices(); ++k) {
      for (const auto& c : oracle::subsets(h.num_vertices(), k)) {
        CHECK(oracle::classes(edges, c) >= oracle::double_hits(edges, c));
      }
      const auto r = approx_via_double_hitting(h, k);
      const int opt = oracle::max_classes(h, k);
      CHECK(r.value == count_classes(h, r.witness));
      CHECK(r.upper_bound >= opt);
      CHECK(r.value * r.claimed_ratio >= Ratio(opt));
    }
  }
}

TEST_CASE("graph-shaped instances: class optimum against double hitting optimum") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = oracle::random_graph(rng, 4 + static_cast<int>(rng() % 6), 0.4);
    std::vector<VertexSet> edges;
    for (auto [u, v] : g.edges()) edges.push_back(make_set(g.num_vertices(), {u, v}));
    const Hypergraph h(g.num_vertices(), edges);
    for (int k = 0; k <= h.num_vertices(); ++k) {
      const int opt = oracle::max_classes(h, k);
      const int opt2 = oracle::max_double_hits(h, k);
      CHECK(opt <= opt2 + k + 1);
      if (k != 1) CHECK(opt <= 3 * opt2 + 1);
    }
  }
}
