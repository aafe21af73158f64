#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pvc/exact.hpp"
#include "pvc/graph.hpp"
#include "pvc/hypergraph.hpp"

namespace pvc {

enum class ReductionKind { kCliqueToVcdim, kIsToDt, kMpvcToMpvcd };
enum class CliqueVariant { kBipartite, kSplit, kCoBipartite };

std::string_view kind_tag(ReductionKind kind);
std::string_view variant_tag(CliqueVariant variant);
ReductionKind parse_kind(std::string_view tag);
CliqueVariant parse_variant(std::string_view tag);

// A source instance, the instance built from it, and the relation between
// their optima that the construction promises.
struct ReductionCertificate {
  ReductionKind kind = ReductionKind::kCliqueToVcdim;
  std::optional<CliqueVariant> variant;
  Graph source;
  int k = 0;                          // source parameter (clique size, IS size, cover budget)
  std::optional<Graph> target_graph;  // set when the target is a neighborhood hypergraph
  Hypergraph target;
  int k_prime = 0;
  std::string forward_map;
  std::string identity;
};

// Target vertex (u, i) of the clique construction, i in 1..k.
int clique_x_vertex(int u, int i, int k);

// X = V x [k]; F holds one vertex per edge-and-index pair and one per L ⊆ [k]
// with |L| != 2. Requires k > 3.
ReductionCertificate clique_to_vcdim(const Graph& g, int k, CliqueVariant variant);

// Hypergraph on {x_v} then {x_e}; per graph edge e = uv the edges
// {x_u, x_v, x_e} and {x_e}, then one empty edge. k' = |X| - s.
ReductionCertificate is_to_disting_transversal(const Graph& g, int s);

// Gadget vertex j (0-based, 0..3 are f^1..f^4) of source vertex v.
int gadget_vertex(int v, int j);

// Twelve-vertex gadget per vertex of a cubic graph, once-subdivided edges
// attached to f^1..f^3 by sorted-neighbor rank. k' = 4k.
ReductionCertificate mpvc_to_mpvcd(const Graph& g, int k);

// Solution transport.
VertexSet forward_clique(const ReductionCertificate& cert, const std::vector<int>& clique);
VertexSet forward_independent_set(const ReductionCertificate& cert, const std::vector<int>& independent);
VertexSet forward_cover(const ReductionCertificate& cert, const std::vector<int>& cover);
// The k gadgets holding the most solution vertices (lowest index on ties).
std::vector<int> back_map_cover(const ReductionCertificate& cert, const VertexSet& target_solution);

// Brute-force helpers on the source side.
bool has_clique(const Graph& g, int k);
bool has_independent_set(const Graph& g, int s);
int max_partial_vertex_cover(const Graph& g, int k);
int covered_edges(const Graph& g, const std::vector<int>& chosen);

struct VerifyOutcome {
  bool holds = false;
  std::int64_t source_value = 0;
  std::int64_t target_value = 0;
  std::string detail;
};

// Solves both sides exactly and checks the identity recorded in the certificate.
VerifyOutcome verify_reduction(const ReductionCertificate& cert, const SolveOptions& opts = {});

// Sidecar text: kind, variant, k, k_prime, identity, one per line.
void write_certificate(std::ostream& out, const ReductionCertificate& cert);

struct CertificateRecord {
  ReductionKind kind = ReductionKind::kCliqueToVcdim;
  std::optional<CliqueVariant> variant;
  int k = 0;
  int k_prime = 0;
  std::string identity;
};

CertificateRecord read_certificate(std::istream& in);

}  // namespace pvc
