#pragma once

#include <cstdint>
#include <optional>

#include "gml/linkage.hpp"

namespace gml {

enum class WLStatus { kVerifiedExact, kVerifiedSampled, kRefuted };

// Evidence for a refutation. t1/t2 are the violating terminal subsets and
// demand/achieved the routing deficit. Edge-cut variants also carry the
// whole-graph partition (side_x, side_y) crossed by fewer than demand
// edges; node variants carry the vertex separator instead.
struct WLWitness {
  std::vector<VertexId> t1, t2;
  std::vector<VertexId> side_x, side_y;
  std::vector<VertexId> vertex_cut;
  std::vector<EdgeId> edge_cut;
  int demand = 0;
  int achieved = 0;
};

struct WellLinkedVerdict {
  WLStatus status = WLStatus::kVerifiedExact;
  int trials = 0;  // pairs actually tested
  std::optional<WLWitness> witness;

  bool holds() const { return status != WLStatus::kRefuted; }
};

struct WLOptions {
  // Exhaustive pair enumeration up to this terminal count, seeded sampling
  // beyond it. A violated instance always has an equal-size violating pair,
  // so only those are enumerated.
  int cap = 12;
  int samples = 200;
  int bipartitions = 16;
  std::uint64_t seed = 1;
  // check_linked enumerates across two sets; total subset pairs are capped
  // separately since the sides multiply.
  long long pair_budget = 20000;
};

// T is node-well-linked: every pair of disjoint equal-size subsets of T is
// joined by that many fully node-disjoint paths.
WellLinkedVerdict check_node_well_linked(const Graph& g,
                                         const std::vector<VertexId>& T,
                                         const WLOptions& opts = {});

// Edge variant: demand met by edge-disjoint paths.
WellLinkedVerdict check_edge_well_linked(const Graph& g,
                                         const std::vector<VertexId>& T,
                                         const WLOptions& opts = {});

// Weak variant: demands are clipped at w_hat, so only subsets of size at
// most w_hat can refute and sampling stays cheap.
WellLinkedVerdict check_weak_well_linked(const Graph& g,
                                         const std::vector<VertexId>& T,
                                         int w_hat,
                                         const WLOptions& opts = {});

// (A,B) is linked: every equal-size subset pair across the two sides is
// joined by that many node-disjoint paths. A and B must be disjoint.
WellLinkedVerdict check_linked(const Graph& g, const std::vector<VertexId>& A,
                               const std::vector<VertexId>& B,
                               const WLOptions& opts = {});

}  // namespace gml
