#pragma once

// Small named graphs shared across test binaries.

#include <utility>
#include <vector>

#include "gml/graph.hpp"

namespace fixtures {

using gml::Graph;
using gml::VertexId;

inline Graph star(int leaves) {
  std::vector<VertexId> vs{0};
  std::vector<std::pair<VertexId, VertexId>> es;
  for (int i = 1; i <= leaves; ++i) {
    vs.push_back(i);
    es.emplace_back(0, i);
  }
  return Graph::build(vs, es);
}

inline Graph triangle() { return Graph::build({0, 1, 2}, {{0, 1}, {1, 2}, {0, 2}}); }

inline Graph parallel_pair() { return Graph::build({0, 1}, {{0, 1}, {0, 1}}); }

inline Graph path_graph(int n) {
  std::vector<VertexId> vs;
  std::vector<std::pair<VertexId, VertexId>> es;
  for (int i = 0; i < n; ++i) {
    vs.push_back(i);
    if (i) es.emplace_back(i - 1, i);
  }
  return Graph::build(vs, es);
}

inline Graph cycle(int n) {
  std::vector<VertexId> vs;
  std::vector<std::pair<VertexId, VertexId>> es;
  for (int i = 0; i < n; ++i) {
    vs.push_back(i);
    es.emplace_back(i, (i + 1) % n);
  }
  return Graph::build(vs, es);
}

inline Graph complete(int n) {
  std::vector<VertexId> vs;
  std::vector<std::pair<VertexId, VertexId>> es;
  for (int i = 0; i < n; ++i) {
    vs.push_back(i);
    for (int j = 0; j < i; ++j) es.emplace_back(j, i);
  }
  return Graph::build(vs, es);
}

inline Graph complete_bipartite(int a, int b) {
  std::vector<VertexId> vs;
  std::vector<std::pair<VertexId, VertexId>> es;
  for (int i = 0; i < a + b; ++i) vs.push_back(i);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) es.emplace_back(i, a + j);
  return Graph::build(vs, es);
}

// Two K4 blocks sharing vertex 3: the classic cut-vertex host.
inline Graph two_blocks() {
  std::vector<std::pair<VertexId, VertexId>> es;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < i; ++j) es.emplace_back(j, i);
  for (int i = 3; i < 7; ++i)
    for (int j = 3; j < i; ++j) es.emplace_back(j, i);
  return Graph::build({0, 1, 2, 3, 4, 5, 6}, es);
}

// Two K4 blocks joined by a single bridge edge 3-4.
inline Graph barbell() {
  std::vector<std::pair<VertexId, VertexId>> es;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < i; ++j) {
      es.emplace_back(j, i);
      es.emplace_back(j + 4, i + 4);
    }
  es.emplace_back(3, 4);
  return Graph::build({0, 1, 2, 3, 4, 5, 6, 7}, es);
}

inline Graph petersen() {
  std::vector<std::pair<VertexId, VertexId>> es;
  for (int i = 0; i < 5; ++i) {
    es.emplace_back(i, (i + 1) % 5);       // outer cycle
    es.emplace_back(i, i + 5);             // spokes
    es.emplace_back(i + 5, (i + 2) % 5 + 5);  // inner pentagram
  }
  std::vector<VertexId> vs;
  for (int i = 0; i < 10; ++i) vs.push_back(i);
  return Graph::build(vs, es);
}

}  // namespace fixtures
