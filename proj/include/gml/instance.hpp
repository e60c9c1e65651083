#pragma once

#include "gml/graph.hpp"

namespace gml {

// Terminal sets for a dichotomy instance. A and B are the two ends the long
// path families run between; X is a set of degree-one anchor vertices.
struct TerminalSets {
  std::vector<VertexId> A, B, X;
};

struct Instance {
  Graph graph;
  TerminalSets sets;
};

}  // namespace gml
