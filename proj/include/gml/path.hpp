#pragma once

#include "gml/graph.hpp"

namespace gml {

// A simple path in a host graph: pairwise-distinct vertices, consecutive
// pairs joined by the listed edges. A single vertex is a valid path of
// length zero. The empty path is a distinct degenerate state used for
// segments that happen to contain no vertex; it is never represented as a
// zero-length sequence by accident, only constructed explicitly.
struct Path {
  std::vector<VertexId> verts;
  std::vector<EdgeId> edges;  // size == verts.size() - 1, or empty

  static Path empty() { return Path{}; }
  static Path single(VertexId v) { return Path{{v}, {}}; }

  bool is_empty() const { return verts.empty(); }
  int length() const { return static_cast<int>(edges.size()); }

  VertexId a() const;  // first vertex
  VertexId b() const;  // last vertex

  bool contains(VertexId v) const;
  int index_of(VertexId v) const;  // -1 if absent

  Path reversed() const;
  Path subpath(int i, int j) const;  // inclusive positions, i <= j

  // Joins two paths sharing exactly the junction vertex this->b() == o.a().
  Path concat(const Path& o) const;

  friend bool operator==(const Path& x, const Path& y) {
    return x.verts == y.verts && x.edges == y.edges;
  }
};

// Empty result means structurally sound in g; otherwise a description of
// the first problem found.
std::optional<std::string> check_path(const Graph& g, const Path& p);

enum class Disjointness {
  kNodeDisjoint,
  kEdgeDisjoint,
  // Pairwise node-disjoint, and no internal vertex lies in apart_from.
  kInternallyDisjointFrom,
};

struct PathFamily {
  std::vector<Path> paths;
  Disjointness mode = Disjointness::kNodeDisjoint;
  std::vector<VertexId> apart_from;

  int size() const { return static_cast<int>(paths.size()); }
};

struct FamilyViolation {
  std::string message;
  int path_a = -1;
  int path_b = -1;
  VertexId vertex = -1;
  EdgeId edge = -1;
};

// Single pass over vertex and edge occurrence counts.
std::optional<FamilyViolation> check_family(const Graph& g,
                                            const PathFamily& f);

// Vertices touched by any path of the family (sorted, deduplicated).
std::vector<VertexId> family_vertices(const PathFamily& f);
std::vector<EdgeId> family_edges(const PathFamily& f);

Contraction contract_path_to_vertex(const Graph& g, const Path& p);

// Union of the given families as a subgraph of the host; single-vertex
// paths contribute isolated vertices.
Graph union_graph(const Graph& host, const std::vector<const PathFamily*>& fams);

}  // namespace gml
