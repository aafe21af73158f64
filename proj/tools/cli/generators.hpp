#pragma once

#include <cstdint>
#include <random>

#include "pvc/graph.hpp"
#include "pvc/hypergraph.hpp"
#include "pvc/planar.hpp"

namespace pvc::gen {

using Rng = std::mt19937_64;

// True with probability p, from one 53-bit draw.
bool coin(Rng& rng, double p);

// Hypergraph with m distinct edges and pairwise distinct vertex columns; each
// incidence is present with probability `density`. Resamples until twin-free
// and gives up with an InputError after `max_attempts`.
Hypergraph random_twin_free_hypergraph(int n, int m, double density, std::uint64_t seed,
                                       int max_attempts = 10'000);

// Uniform incidences, twins allowed.
Hypergraph random_hypergraph(Rng& rng, int n, int m, double density);

Graph random_graph(Rng& rng, int n, double p);

// Pairing model: 3n points matched at random, retried until the multigraph is
// simple. About e^2 attempts are expected. `attempts` receives the count used.
Graph random_cubic(int n, std::uint64_t seed, int* attempts = nullptr);

Graph grid(int rows, int cols);

// Grid with levels peeled from the boundary.
LeveledPlanarGraph leveled_grid(int rows, int cols);

}  // namespace pvc::gen
