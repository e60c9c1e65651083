#pragma once

#include <optional>
#include <set>

#include "gml/path.hpp"

namespace gml {

// Disjoint-path maximum together with its matching minimum separator; the
// two certify each other and value == paths.size() == separator size.
struct LinkageResult {
  int value = 0;
  PathFamily paths;
  std::vector<VertexId> vertex_cut;  // node variant only
  std::vector<EdgeId> edge_cut;      // edge variant only
};

// Fully vertex-disjoint A-B paths (endpoints included); a vertex in A∩B
// yields a single-vertex path. Deleting vertex_cut separates A from B.
LinkageResult max_node_disjoint_paths(const Graph& g,
                                      const std::vector<VertexId>& A,
                                      const std::vector<VertexId>& B);

// Edge-disjoint A-B paths; endpoints may be shared between paths. Requires
// A and B disjoint. Deleting edge_cut separates A from B.
LinkageResult max_edge_disjoint_paths(const Graph& g,
                                      const std::vector<VertexId>& A,
                                      const std::vector<VertexId>& B);

// Exactly demand fully node-disjoint A-B paths minimizing the number of
// used edges outside free_edges (those cost nothing); nullopt when the
// graph cannot carry that many. Paths come out ordered by start vertex.
std::optional<PathFamily> route_cheapest(const Graph& g,
                                         const std::vector<VertexId>& A,
                                         const std::vector<VertexId>& B,
                                         int demand,
                                         const std::set<EdgeId>& free_edges);

}  // namespace gml
