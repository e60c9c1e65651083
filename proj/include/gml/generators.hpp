#pragma once

#include <cstdint>

#include "gml/instance.hpp"

namespace gml {

// The g x g grid. Vertex (r,c) has id r*g + c; row-major edge order, the
// edge to the right of a vertex preceding the edge below it.
Graph make_grid(int g);

// A (kappa+2) x (kappa+2) grid with kappa pendant vertices, one attached to
// each first-column vertex of rows 1..kappa. A is the first row minus its
// corners, B the last row minus its corners, X the pendants.
Instance make_pendant_grid(int kappa);

// Uniform d-regular simple graph on vertices 0..n-1 via the pairing model,
// resampled until simple. Deterministic for a fixed seed.
Graph make_random_regular(int n, int d, std::uint64_t seed);

// kappa disjoint paths with len edges each, A the left endpoints, B the
// right ones, plus one pendant X vertex per path attached at a seeded
// interior position. rungs extra edges join consecutive paths at seeded
// columns. len >= 2.
Instance make_path_bundle(int kappa, int len, int rungs, std::uint64_t seed);

// A d-regular host decorated for the dichotomy: disjoint seeded samples of
// kappa vertices for A and B, and kappa pendants attached to further
// distinct vertices for X. Requires n >= 3*kappa.
Instance make_decorated_regular(int n, int d, int kappa, std::uint64_t seed);

}  // namespace gml
