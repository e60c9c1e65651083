#pragma once

// Independent brute-force reference implementations used to pin down
// expected values in tests. Exponential on purpose; only run on graphs with
// a handful of vertices.

#include <algorithm>
#include <set>
#include <vector>

#include "gml/graph.hpp"

namespace oracle {

using gml::EdgeId;
using gml::Graph;
using gml::VertexId;

// All vertex-simple paths from `from` whose only B vertex is the last one,
// avoiding `blocked`. Truncating at the first B hit loses no packing value.
inline void collect_paths(const Graph& g, VertexId from,
                          const std::set<VertexId>& b,
                          std::set<VertexId>& blocked,
                          std::vector<VertexId>& cur,
                          std::vector<std::vector<VertexId>>& out) {
  cur.push_back(from);
  blocked.insert(from);
  if (b.count(from)) {
    out.push_back(cur);
  } else {
    for (const auto& inc : g.incident(from))
      if (!blocked.count(inc.to))
        collect_paths(g, inc.to, b, blocked, cur, out);
  }
  blocked.erase(from);
  cur.pop_back();
}

inline int max_node_disjoint_rec(const Graph& g,
                                 const std::vector<VertexId>& a, size_t idx,
                                 const std::set<VertexId>& b,
                                 std::set<VertexId>& used) {
  if (idx == a.size()) return 0;
  if (used.count(a[idx]))
    return max_node_disjoint_rec(g, a, idx + 1, b, used);
  int best = max_node_disjoint_rec(g, a, idx + 1, b, used);
  std::vector<std::vector<VertexId>> paths;
  std::vector<VertexId> cur;
  collect_paths(g, a[idx], b, used, cur, paths);
  for (const auto& p : paths) {
    for (VertexId v : p) used.insert(v);
    best = std::max(best,
                    1 + max_node_disjoint_rec(g, a, idx + 1, b, used));
    for (VertexId v : p) used.erase(v);
  }
  return best;
}

inline int max_node_disjoint_paths(const Graph& g, std::vector<VertexId> a,
                                   const std::vector<VertexId>& b) {
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  std::set<VertexId> bs(b.begin(), b.end());
  std::set<VertexId> used;
  return max_node_disjoint_rec(g, a, 0, bs, used);
}

// Edge-disjoint variant: paths stay vertex-simple individually but may
// share vertices across paths, so recursion tracks used edges and tries
// every start in A any number of times.
inline void collect_edge_paths(const Graph& g, VertexId from,
                               const std::set<VertexId>& b,
                               std::set<EdgeId>& used_edges,
                               std::set<VertexId>& on_path,
                               std::vector<EdgeId>& cur,
                               std::vector<std::vector<EdgeId>>& out) {
  if (b.count(from)) {
    out.push_back(cur);
    return;
  }
  for (const auto& inc : g.incident(from)) {
    if (used_edges.count(inc.id) || on_path.count(inc.to)) continue;
    used_edges.insert(inc.id);
    on_path.insert(inc.to);
    cur.push_back(inc.id);
    collect_edge_paths(g, inc.to, b, used_edges, on_path, cur, out);
    cur.pop_back();
    on_path.erase(inc.to);
    used_edges.erase(inc.id);
  }
}

inline int max_edge_disjoint_rec(const Graph& g,
                                 const std::vector<VertexId>& a, size_t idx,
                                 const std::set<VertexId>& b,
                                 std::set<EdgeId>& used) {
  if (idx == a.size()) return 0;
  int best = max_edge_disjoint_rec(g, a, idx + 1, b, used);
  std::vector<std::vector<EdgeId>> paths;
  std::vector<EdgeId> cur;
  std::set<VertexId> on_path{a[idx]};
  collect_edge_paths(g, a[idx], b, used, on_path, cur, paths);
  for (const auto& p : paths) {
    for (EdgeId e : p) used.insert(e);
    // Same start may carry further paths, so do not advance idx here.
    best = std::max(best, 1 + max_edge_disjoint_rec(g, a, idx, b, used));
    for (EdgeId e : p) used.erase(e);
  }
  return best;
}

inline int max_edge_disjoint_paths(const Graph& g, std::vector<VertexId> a,
                                   const std::vector<VertexId>& b) {
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  std::set<VertexId> bs(b.begin(), b.end());
  for (VertexId v : a)
    if (bs.count(v)) return -1;  // caller must keep sides disjoint
  std::set<EdgeId> used;
  return max_edge_disjoint_rec(g, a, 0, bs, used);
}

}  // namespace oracle
