#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "pvc/combinatorics.hpp"
#include "pvc/errors.hpp"
#include "pvc/exact.hpp"

using namespace pvc;

namespace {

Hypergraph subsets_up_to(int n, int size) {
  std::vector<std::vector<int>> edges;
  for (int mask = 0; mask < (1 << n); ++mask) {
    if (__builtin_popcount(static_cast<unsigned>(mask)) > size) continue;
    std::vector<int> e;
    for (int v = 0; v < n; ++v) {
      if (mask >> v & 1) e.push_back(v + 1);
    }
    edges.push_back(e);
  }
  return build_hypergraph(n, edges);
}

// Lexicographically first k-set reaching the oracle maximum.
std::vector<int> first_optimum(const Hypergraph& h, int k) {
  const int best = oracle::max_classes(h, k);
  for (const auto& c : oracle::subsets(h.num_vertices(), k)) {
    if (oracle::classes(h, c) == best) return c;
  }
  return {};
}

}  // namespace

TEST_CASE("decision on the path pair") {
  const auto p3 = neighborhood_hypergraph(oracle::path(3));
  const auto yes = solve_partial_vc_decision(p3, 1, 2);
  CHECK(yes.decided);
  CHECK(yes.witness == make_set(3, {0}));
  CHECK(yes.value >= 2);

  const auto p2 = neighborhood_hypergraph(oracle::path(2));
  const auto no = solve_partial_vc_decision(p2, 1, 2);
  CHECK_FALSE(no.decided);
  CHECK(no.reason == "cap");
}

TEST_CASE("decision with ell = 0 is always yes") {
  const auto h = build_hypergraph(4, {{1}, {2, 3}});
  const auto r = solve_partial_vc_decision(h, 2, 0);
  CHECK(r.decided);
  CHECK(r.witness.count() == 2);
}

TEST_CASE("max partial vc examples") {
  std::vector<std::vector<int>> all;
  for (int mask = 0; mask < 8; ++mask) {
    std::vector<int> e;
    for (int v = 0; v < 3; ++v) {
      if (mask >> v & 1) e.push_back(v + 1);
    }
    all.push_back(e);
  }
  CHECK(solve_max_partial_vc(build_hypergraph(3, all), 3).value == 8);
  CHECK(solve_max_partial_vc(subsets_up_to(4, 1), 2).value == 3);
  const auto k0 = solve_max_partial_vc(build_hypergraph(3, {{1}, {2}}), 0);
  CHECK(k0.value == 1);
  CHECK(k0.witness.none());
}

TEST_CASE("ceiling is enforced") {
  const auto h = build_hypergraph(30, {{1}, {2}, {3, 4}});
  SolveOptions opts;
  opts.ceiling = 1000;
  CHECK_THROWS_AS(solve_max_partial_vc(h, 5, opts), CapacityError);
  opts.ceiling = binomial(30, 5);
  CHECK_NOTHROW(solve_max_partial_vc(h, 5, opts));
}

TEST_CASE("vc dimension examples") {
  std::vector<std::vector<int>> all;
  for (int mask = 0; mask < 8; ++mask) {
    std::vector<int> e;
    for (int v = 0; v < 3; ++v) {
      if (mask >> v & 1) e.push_back(v + 1);
    }
    all.push_back(e);
  }
  CHECK(vc_dimension(build_hypergraph(3, all)).value == 3);
  CHECK(vc_dimension(subsets_up_to(5, 2)).value == 2);
  CHECK(vc_dimension(build_hypergraph(1, {{1}})).value == 0);
  const auto empty = vc_dimension(build_hypergraph(4, {}));
  CHECK(empty.value == 0);
  CHECK(empty.witness.none());
}

TEST_CASE("min distinguishing transversal examples") {
  CHECK(min_distinguishing_transversal(build_hypergraph(2, {{1, 2}})).value == 0);
  const auto two = min_distinguishing_transversal(build_hypergraph(1, {{}, {1}}));
  CHECK(two.value == 1);
  CHECK(two.witness == make_set(1, {0}));
  const auto p3 = min_distinguishing_transversal(neighborhood_hypergraph(oracle::path(3)));
  CHECK(p3.value == 2);
  CHECK(count_classes(neighborhood_hypergraph(oracle::path(3)), p3.witness) == 3);
  CHECK_THROWS_AS(min_distinguishing_transversal(build_hypergraph(2, {{1}, {1}})), InputError);
}

TEST_CASE("exact solvers agree with the oracle") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const int m = 1 + static_cast<int>(rng() % 14);
    const auto h = oracle::random_hypergraph(rng, n, m, 0.4);
    for (int k = 0; k <= n; ++k) {
      const auto r = solve_max_partial_vc(h, k);
      const int opt = oracle::max_classes(h, k);
      CHECK(r.value == opt);
      CHECK(count_classes(h, r.witness) == r.value);
      CHECK(static_cast<int>(r.witness.count()) == k);
      CHECK(members(r.witness) == first_optimum(h, k));
      for (int ell = 0; ell <= m + 1; ++ell) {
        const auto d = solve_partial_vc_decision(h, k, ell);
        CHECK(d.decided == (opt >= ell));
        if (d.decided) {
          CHECK(d.value >= ell);
          CHECK(static_cast<int>(d.witness.count()) == k);
        }
      }
    }
    const auto vc = vc_dimension(h);
    CHECK(vc.value == oracle::vc_dimension(h));
    CHECK(static_cast<int>(vc.witness.count()) == vc.value);
    if (m > 0) CHECK(is_shattered(h, vc.witness));

    int from_max = 0;
    for (int k = 1; k <= n; ++k) {
      if (oracle::max_classes(h, k) == (1 << k)) from_max = k;
    }
    CHECK(vc.value == from_max);

    if (!find_twin_edges(h)) {
      const auto dt = min_distinguishing_transversal(h);
      CHECK(dt.value == oracle::min_dt(h));
      CHECK(count_classes(h, dt.witness) == m);
    }
  }
}

TEST_CASE("vc dimension respects the Sauer bound") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 7;
    const auto h = oracle::random_hypergraph(rng, n, 40, 0.5);
    const auto m = static_cast<std::uint64_t>(distinct_edge_count(h));
    int sauer = 0;
    while (sauer + 1 <= n && m > sauer_sum(n, sauer)) ++sauer;
    CHECK(vc_dimension(h).value >= sauer);
  }
}

TEST_CASE("results do not depend on the thread count") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    const auto h = oracle::random_hypergraph(rng, 14, 25, 0.3);
    SolveOptions one;
    SolveOptions four;
    four.threads = 4;
    const auto a = solve_max_partial_vc(h, 4, one);
    const auto b = solve_max_partial_vc(h, 4, four);
    CHECK(a.witness == b.witness);
    CHECK(a.enumerated == b.enumerated);
    const auto c = solve_partial_vc_decision(h, 3, 7, one);
    const auto d = solve_partial_vc_decision(h, 3, 7, four);
    CHECK(c.decided == d.decided);
    CHECK(c.witness == d.witness);
    CHECK(c.enumerated == d.enumerated);
    CHECK(vc_dimension(h, one).witness == vc_dimension(h, four).witness);
  }
}

TEST_CASE("budget validation") {
  const auto h = build_hypergraph(3, {{1}});
  CHECK_THROWS_AS(solve_max_partial_vc(h, 4), InputError);
  CHECK_THROWS_AS(solve_partial_vc_decision(h, -1, 1), InputError);
  CHECK_THROWS_AS(solve_partial_vc_decision(h, 1, -1), InputError);
}
