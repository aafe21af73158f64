#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "pvc/hypergraph.hpp"

namespace pvc {

enum class Problem {
  kPartialVcDecision,
  kMaxPartialVc,
  kVcDimension,
  kMinDistinguishingTransversal,
};

std::string_view problem_tag(Problem p);

struct SolveOptions {
  int threads = 1;                        // 0: available parallelism
  std::uint64_t ceiling = 100'000'000;    // refuse C(n, k) above this
};

struct SolveResult {
  Problem problem = Problem::kMaxPartialVc;
  VertexSet witness;
  int value = 0;
  bool decided = false;
  int k = -1;
  int ell = -1;
  double elapsed_ms = 0.0;
  std::uint64_t enumerated = 0;
  std::string reason;  // how a decision was reached: cap, greedy, enumeration
};

// Is there a k-set inducing at least ell classes? Enumerates when k < ell,
// otherwise answers through the greedy on the twin-reduced instance.
SolveResult solve_partial_vc_decision(const Hypergraph& h, int k, int ell,
                                      const SolveOptions& opts = {});

// Largest class count over all k-sets. The witness is the lexicographically
// first optimal k-set.
SolveResult solve_max_partial_vc(const Hypergraph& h, int k, const SolveOptions& opts = {});

// Lexicographically first shattered d-set, if any.
std::optional<VertexSet> find_shattered_set(const Hypergraph& h, int d,
                                            const SolveOptions& opts = {},
                                            std::uint64_t* enumerated = nullptr);

SolveResult vc_dimension(const Hypergraph& h, const SolveOptions& opts = {});

// Smallest vertex set separating every pair of edges. Twin edges are an error.
SolveResult min_distinguishing_transversal(const Hypergraph& h, const SolveOptions& opts = {});

// Lexicographically first k-set with at least `target` classes, or nullopt.
// Exposed for the planar and reduction modules.
std::optional<VertexSet> find_k_set_with_classes(const Hypergraph& h, int k, int target,
                                                 const SolveOptions& opts = {},
                                                 std::uint64_t* enumerated = nullptr);

}  // namespace pvc
