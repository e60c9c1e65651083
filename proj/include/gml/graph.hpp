#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace gml {

using VertexId = int;
using EdgeId = int;

struct Edge {
  VertexId u = -1;
  VertexId v = -1;

  VertexId other(VertexId w) const { return w == u ? v : u; }
  bool touches(VertexId w) const { return w == u || w == v; }
};

struct IncidentEdge {
  VertexId to;
  EdgeId id;

  friend bool operator<(const IncidentEdge& a, const IncidentEdge& b) {
    return a.to != b.to ? a.to < b.to : a.id < b.id;
  }
  friend bool operator==(const IncidentEdge& a, const IncidentEdge& b) {
    return a.to == b.to && a.id == b.id;
  }
};

struct Contraction;

// Undirected multigraph with stable vertex and edge ids. All operations are
// pure: subgraphs and contractions return new graphs and keep surviving ids
// unchanged, so paths and terminal sets can be carried across derived graphs
// without translation. Parallel edges are kept (each with its own id);
// self-loops are rejected at construction and dropped by contraction.
class Graph {
 public:
  Graph() = default;

  // Edge ids are assigned densely, 0..m-1, in input order.
  static Graph build(const std::vector<VertexId>& vertices,
                     const std::vector<std::pair<VertexId, VertexId>>& edges);

  // Caller supplies edge ids; used when deriving graphs from existing ones.
  static Graph build_with_ids(
      const std::vector<VertexId>& vertices,
      const std::vector<std::tuple<EdgeId, VertexId, VertexId>>& edges);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  std::vector<VertexId> vertices() const;  // ascending
  std::vector<EdgeId> edge_ids() const;    // ascending

  bool has_vertex(VertexId v) const { return adj_.count(v) > 0; }
  bool has_edge(EdgeId e) const { return edges_.count(e) > 0; }
  const Edge& edge(EdgeId e) const;
  int degree(VertexId v) const;
  const std::vector<IncidentEdge>& incident(VertexId v) const;  // sorted

  // Lowest edge id joining u and v, if any.
  std::optional<EdgeId> find_edge(VertexId u, VertexId v) const;

  Graph induced(const std::vector<VertexId>& vs) const;

  // Subgraph consisting of exactly these edges, their endpoints, and any
  // extra isolated vertices. Ids are retained.
  Graph edge_subgraph(const std::vector<EdgeId>& es,
                      const std::vector<VertexId>& extra_vertices = {}) const;

  bool connected() const;
  std::vector<VertexId> component_of(VertexId v) const;
  std::vector<std::vector<VertexId>> components() const;

  // Identifies the endpoints of e into the lower of the two vertex ids.
  Contraction contract_edge(EdgeId e) const;

  // Identifies each group into its lowest member. Groups must be disjoint
  // subsets of V; singleton and empty groups are allowed and do nothing.
  Contraction contract_groups(
      const std::vector<std::vector<VertexId>>& groups) const;

 private:
  std::map<VertexId, std::vector<IncidentEdge>> adj_;
  std::map<EdgeId, Edge> edges_;
};

struct Contraction {
  Graph graph;
  VertexId kept = -1;  // survivor of a single-edge contraction
  // Maps every vertex that changed id to its new id.
  std::map<VertexId, VertexId> vertex_map;
  std::vector<EdgeId> dropped_edges;  // edges that became loops

  VertexId image(VertexId v) const {
    auto it = vertex_map.find(v);
    return it == vertex_map.end() ? v : it->second;
  }
};

}  // namespace gml
