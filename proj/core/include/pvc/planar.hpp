#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pvc/approx.hpp"
#include "pvc/exact.hpp"
#include "pvc/graph.hpp"

namespace pvc {

// A graph with an outerplanarity level per vertex (1-based, contiguous, and
// differing by at most one along every edge).
struct LeveledPlanarGraph {
  Graph graph;
  std::vector<int> level;  // indexed by 0-based vertex
  int t = 0;               // deepest level
};

// Validates the level invariants.
LeveledPlanarGraph make_leveled(Graph g, std::vector<int> level);

// Level 1 is the given outer face; deeper levels follow breadth-first distance
// from it, which matches face peeling on grids, cycles with chords, trees and
// the other families the generators produce.
LeveledPlanarGraph compute_levels(const Graph& g, std::span<const int> outer_face);

// best[y]: most nonempty classes inside the component using at most y vertices.
struct ComponentTable {
  std::vector<int> component;             // global vertex ids
  std::vector<int> best;                  // length min(k_max, |component|) + 1
  std::vector<std::vector<int>> witness;  // global ids, one per budget
};

ComponentTable component_exact_solver(const Graph& sub, int k_max,
                                      std::uint64_t ceiling = 100'000'000);

struct KnapsackResult {
  int value = 0;
  std::vector<int> allocation;  // budget per table
};

// Group knapsack over the tables; among optimal allocations, earlier tables
// take as much budget as possible.
KnapsackResult knapsack_combine(const std::vector<ComponentTable>& tables, int k);

struct BakerMaxResult {
  ApproxResult result;  // value is the whole-graph class count of the witness
  int residue = 0;
  int dp_value = 0;     // summed nonempty classes from the tables
  int residues_tried = 0;
};

BakerMaxResult baker_max_partial_vc(const LeveledPlanarGraph& lg, int k, double epsilon,
                                    const SolveOptions& opts = {});

struct BakerMinResult {
  SolveResult result;
  int residue = 0;
  int residues_tried = 0;
  int residues_skipped = 0;  // a slab component had twin neighborhoods
};

BakerMinResult baker_min_distinguishing(const LeveledPlanarGraph& lg, double epsilon,
                                        const SolveOptions& opts = {});

}  // namespace pvc
