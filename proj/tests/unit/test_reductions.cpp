#include <doctest.h>

#include <random>
#include <sstream>

#include "oracle.hpp"
#include "pvc/errors.hpp"
#include "pvc/reductions.hpp"

using namespace pvc;

namespace {

Graph k4() { return oracle::complete(4); }

// The 3-dimensional cube graph on 8 vertices.
Graph cube() {
  std::vector<Edge> edges;
  for (int v = 0; v < 8; ++v) {
    for (int b = 0; b < 3; ++b) {
      const int w = v ^ (1 << b);
      if (v < w) edges.emplace_back(v, w);
    }
  }
  return Graph::from_edges(8, edges);
}

bool all_intra_pairs(const Graph& g, int lo, int hi) {
  for (int a = lo; a < hi; ++a) {
    for (int b = a + 1; b < hi; ++b) {
      if (!g.has_edge(a, b)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("tags round trip") {
  for (auto k : {ReductionKind::kCliqueToVcdim, ReductionKind::kIsToDt, ReductionKind::kMpvcToMpvcd}) {
    CHECK(parse_kind(kind_tag(k)) == k);
  }
  for (auto v : {CliqueVariant::kBipartite, CliqueVariant::kSplit, CliqueVariant::kCoBipartite}) {
    CHECK(parse_variant(variant_tag(v)) == v);
  }
  CHECK_THROWS_AS(parse_kind("nope"), InputError);
  CHECK_THROWS_AS(parse_variant("tripartite"), InputError);
}

TEST_CASE("clique construction shape") {
  const auto g = oracle::cycle(5);
  const auto cert = clique_to_vcdim(g, 4, CliqueVariant::kBipartite);
  const int nx = 5 * 4;
  const int nf = 5 * 16 + 10;
  REQUIRE(cert.target_graph);
  CHECK(cert.target_graph->num_vertices() == nx + nf);
  CHECK(cert.k_prime == 4);
  CHECK(is_bipartite(*cert.target_graph));

  const auto split = clique_to_vcdim(g, 4, CliqueVariant::kSplit);
  CHECK(all_intra_pairs(*split.target_graph, 0, nx));
  CHECK_FALSE(is_bipartite(*split.target_graph));

  const auto co = clique_to_vcdim(g, 4, CliqueVariant::kCoBipartite);
  CHECK(all_intra_pairs(*co.target_graph, 0, nx));
  CHECK(all_intra_pairs(*co.target_graph, nx, nx + nf));
  CHECK(is_bipartite(complement(*co.target_graph)));

  CHECK_THROWS_AS(clique_to_vcdim(g, 3, CliqueVariant::kBipartite), InputError);
  CHECK_THROWS_AS(clique_to_vcdim(oracle::path(3), 4, CliqueVariant::kBipartite), InputError);
}

TEST_CASE("clique reduction examples") {
  for (auto variant : {CliqueVariant::kBipartite, CliqueVariant::kSplit, CliqueVariant::kCoBipartite}) {
    const auto yes = verify_reduction(clique_to_vcdim(oracle::complete(5), 4, variant));
    CHECK(yes.holds);
    CHECK(yes.source_value == 1);
    CHECK(yes.target_value == 1);

    const auto no = verify_reduction(clique_to_vcdim(oracle::cycle(5), 4, variant));
    CHECK(no.holds);
    CHECK(no.source_value == 0);
    CHECK(no.target_value == 0);
  }
}

TEST_CASE("forward completeness of cliques") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 8; ++trial) {
    const auto g = oracle::random_graph(rng, 5, 0.8);
    for (auto variant : {CliqueVariant::kBipartite, CliqueVariant::kSplit, CliqueVariant::kCoBipartite}) {
      const auto cert = clique_to_vcdim(g, 4, variant);
      for (const auto& c : oracle::subsets(5, 4)) {
        if (!oracle::is_clique(g, c)) continue;
        CHECK(is_shattered(cert.target, forward_clique(cert, c)));
      }
    }
  }
}

TEST_CASE("independent set reduction examples") {
  const auto edge = is_to_disting_transversal(oracle::path(2), 1);
  CHECK(edge.target.num_vertices() == 3);
  CHECK(edge.target.num_edges() == 3);
  CHECK(edge.k_prime == 2);
  CHECK(count_classes(edge.target, make_set(3, {2, 0})) == 3);
  CHECK(verify_reduction(edge).holds);

  const auto empty = is_to_disting_transversal(Graph(4), 4);
  CHECK(empty.target.num_edges() == 1);
  CHECK(empty.k_prime == 0);
  CHECK(min_distinguishing_transversal(empty.target).value == 0);
  CHECK(verify_reduction(empty).holds);

  const auto tri = is_to_disting_transversal(oracle::complete(3), 2);
  CHECK(tri.target.num_vertices() == 6);
  CHECK(tri.target.num_edges() == 7);
  CHECK(oracle::min_dt(tri.target) > tri.k_prime);
  const auto out = verify_reduction(tri);
  CHECK(out.holds);
  CHECK(out.source_value == 0);
}

TEST_CASE("independent set reduction identity") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = oracle::random_graph(rng, 2 + static_cast<int>(rng() % 5), 0.4);
    for (int s = 0; s <= g.num_vertices(); ++s) {
      const auto cert = is_to_disting_transversal(g, s);
      CHECK(cert.target.num_edges() == 2 * g.num_edges() + 1);
      const bool source = has_independent_set(g, s);
      const int dt = oracle::min_dt(cert.target);
      CHECK(source == (dt >= 0 && dt <= cert.k_prime));
      CHECK(verify_reduction(cert).holds);
      for (const auto& is : oracle::subsets(g.num_vertices(), s)) {
        if (!oracle::is_clique(complement(g), is)) continue;
        CHECK(count_classes(cert.target, forward_independent_set(cert, is)) == cert.target.num_edges());
        break;
      }
    }
  }
}

TEST_CASE("gadget reduction shape") {
  const auto cert = mpvc_to_mpvcd(k4(), 1);
  REQUIRE(cert.target_graph);
  CHECK(cert.target_graph->num_vertices() == 12 * 4 + 6);
  CHECK(cert.k_prime == 4);
  CHECK(max_degree(cert.target) == 8);  // closed neighborhoods: degree 7 plus the vertex itself
  int delta = 0;
  for (int v = 0; v < cert.target_graph->num_vertices(); ++v) delta = std::max(delta, cert.target_graph->degree(v));
  CHECK(delta == 7);

  const auto cube_cert = mpvc_to_mpvcd(cube(), 2);
  int cube_delta = 0;
  for (int v = 0; v < cube_cert.target_graph->num_vertices(); ++v) {
    cube_delta = std::max(cube_delta, cube_cert.target_graph->degree(v));
  }
  CHECK(cube_delta == 7);

  CHECK_THROWS_AS(mpvc_to_mpvcd(oracle::cycle(4), 1), InputError);
}

TEST_CASE("a gadget's special set splits the gadget into 12 classes") {
  const auto cert = mpvc_to_mpvcd(k4(), 1);
  for (int v = 0; v < 4; ++v) {
    const auto f = forward_cover(cert, {v});
    std::vector<VertexSet> traces;
    for (int j = 0; j < 12; ++j) traces.push_back(cert.target.edge(gadget_vertex(v, j)) & f);
    std::sort(traces.begin(), traces.end());
    traces.erase(std::unique(traces.begin(), traces.end()), traces.end());
    CHECK(traces.size() == 12);
  }
}

TEST_CASE("gadget reduction identity on K4") {
  const auto cert = mpvc_to_mpvcd(k4(), 1);
  CHECK(max_partial_vertex_cover(k4(), 1) == 3);
  const auto out = verify_reduction(cert);
  CHECK(out.holds);
  CHECK(out.source_value == 3);
  CHECK(out.target_value == 16);

  const auto forward = forward_cover(cert, {0});
  CHECK(count_classes(cert.target, forward) == 16);
  CHECK(back_map_cover(cert, forward) == std::vector<int>{0});

  auto tampered = cert;
  tampered.k_prime = 3;
  CHECK_FALSE(verify_reduction(tampered).holds);
}

TEST_CASE("verification refuses oversized inputs") {
  SolveOptions tight;
  tight.ceiling = 100;
  CHECK_THROWS_AS(verify_reduction(mpvc_to_mpvcd(k4(), 1), tight), CapacityError);
}

TEST_CASE("source-side brute force") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 7), 0.5);
    for (int k = 0; k <= g.num_vertices(); ++k) {
      CHECK(has_clique(g, k) == oracle::has_clique(g, k));
      CHECK(max_partial_vertex_cover(g, k) == oracle::max_vertex_cover(g, k));
    }
  }
}

TEST_CASE("certificate sidecar round trip") {
  const auto cert = clique_to_vcdim(oracle::complete(5), 4, CliqueVariant::kSplit);
  std::stringstream buf;
  write_certificate(buf, cert);
  const auto rec = read_certificate(buf);
  CHECK(rec.kind == ReductionKind::kCliqueToVcdim);
  CHECK(rec.variant == CliqueVariant::kSplit);
  CHECK(rec.k == 4);
  CHECK(rec.k_prime == 4);
  CHECK(rec.identity == cert.identity);

  std::stringstream none;
  write_certificate(none, is_to_disting_transversal(oracle::path(2), 1));
  CHECK(none.str().find("variant none\n") != std::string::npos);
  CHECK_FALSE(read_certificate(none).variant);

  std::istringstream broken("kind is-to-dt\nk 1\n");
  CHECK_THROWS_AS(read_certificate(broken), InputError);
}
