#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "pvc/hypergraph.hpp"

namespace pvc {

using Ratio = boost::rational<std::int64_t>;

struct ApproxResult {
  VertexSet witness;
  int value = 0;        // class count of the witness (double-hit count for the 2HS greedy)
  int upper_bound = 0;  // certified bound on the optimum
  Ratio claimed_ratio{1};
  std::string method;
  int k = 0;
};

// upper_bound / max(value, 1).
Ratio ratio_of(int upper_bound, int value);

// `shattered` with one realizing edge per subset. Subset bit i refers to the
// i-th smallest member of `shattered`.
struct ShatterCertificate {
  VertexSet shattered;
  int dimension = 0;
  std::vector<int> trace_witnesses;
};

// Builds the certificate for a set already known to be shattered; throws otherwise.
ShatterCertificate certify_shattered(const Hypergraph& h, const VertexSet& s);
bool verify_certificate(const Hypergraph& h, const ShatterCertificate& cert);

// Adds, one at a time, the vertex giving the most classes (lowest index on ties).
// Needs a twin-free hypergraph; returns at least min(m, k + 1) classes.
ApproxResult greedy_classes(const Hypergraph& h, int k);

// min(2^k, m, floor(k(Δ+1)/2) + 1, and sum_{i<=d} C(k, i) when d is given).
int upper_bound_classes(const Hypergraph& h, int k, std::optional<int> vc_bound = std::nullopt);

// Twin reduction, greedy, and the tightest bound above as certificate.
ApproxResult approx_max_partial_vc(const Hypergraph& h, int k,
                                   std::optional<int> vc_bound = std::nullopt);

// Deterministic trace splitting. Requires more than sum_{i<d} C(n, i) distinct edges.
ShatterCertificate extract_shattered(const Hypergraph& h, int d);

// Shattered set of at least half the VC dimension, found through the partial
// problem: greedy sweep over k, then extraction inside the best witness.
ShatterCertificate approx_max_vc_dimension(const Hypergraph& h, int threads = 1);

// Number of edges holding at least two vertices of c.
int double_hit_count(const Hypergraph& h, const VertexSet& c);

// Greedy for Max Partial Double Hitting Set; takes a pair only when it beats
// twice the best single vertex. No ratio is claimed.
ApproxResult greedy_partial_double_hitting(const Hypergraph& h, int k);

// Two distinct edges sharing at least two vertices, i.e. a 4-cycle in the
// incidence graph.
std::optional<std::pair<int, int>> find_four_cycle(const Hypergraph& h);

// Better of the class greedy and the double-hitting greedy on 4-cycle-free input.
ApproxResult approx_via_double_hitting(const Hypergraph& h, int k);

}  // namespace pvc
