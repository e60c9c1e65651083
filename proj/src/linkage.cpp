#include "gml/linkage.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "flow.hpp"

namespace gml {

namespace {

void check_terminals(const Graph& g, const std::vector<VertexId>& A,
                     const std::vector<VertexId>& B) {
  if (A.empty() || B.empty())
    throw std::invalid_argument("terminal set is empty");
  for (VertexId v : A)
    if (!g.has_vertex(v)) throw std::invalid_argument("A vertex not in graph");
  for (VertexId v : B)
    if (!g.has_vertex(v)) throw std::invalid_argument("B vertex not in graph");
}

std::vector<VertexId> sorted_unique(const std::vector<VertexId>& vs) {
  std::vector<VertexId> out = vs;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

LinkageResult max_node_disjoint_paths(const Graph& g,
                                      const std::vector<VertexId>& A,
                                      const std::vector<VertexId>& B) {
  check_terminals(g, A, B);
  std::vector<VertexId> verts = g.vertices();
  std::map<VertexId, int> rank;
  for (size_t i = 0; i < verts.size(); ++i)
    rank[verts[i]] = static_cast<int>(i);
  int n = static_cast<int>(verts.size());
  auto in_node = [&](VertexId v) { return 2 * rank.at(v); };
  auto out_node = [&](VertexId v) { return 2 * rank.at(v) + 1; };
  int s = 2 * n, t = 2 * n + 1;

  flow::Net net(2 * n + 2);
  // One unit of throughput per vertex; terminal attachments stay
  // uncapacitated so every minimum cut consists of split arcs alone and
  // therefore names a vertex set.
  for (VertexId v : verts) net.add_arc(in_node(v), out_node(v), 1);
  for (VertexId a : sorted_unique(A)) net.add_arc(s, in_node(a), flow::kInf);
  for (VertexId b : sorted_unique(B)) net.add_arc(out_node(b), t, flow::kInf);
  for (EdgeId e : g.edge_ids()) {
    const Edge& ed = g.edge(e);
    net.add_arc(out_node(ed.u), in_node(ed.v), 1, 0, e);
    net.add_arc(out_node(ed.v), in_node(ed.u), 1, 0, e);
  }

  LinkageResult res;
  res.value = net.max_flow(s, t);
  res.paths.mode = Disjointness::kNodeDisjoint;

  auto reach = net.residual_reachable(s);
  for (VertexId v : verts)
    if (reach[in_node(v)] && !reach[out_node(v)]) res.vertex_cut.push_back(v);

  auto vertex_of = [&](int node) { return verts[node / 2]; };
  for (int unit = 0; unit < res.value; ++unit) {
    Path p;
    int cur = s;
    while (cur != t) {
      int picked = -1;
      for (int i : net.out(cur))
        if (net.arc(i).cap > 0 && net.arc(i).flow > 0) {
          picked = i;
          break;
        }
      if (picked < 0) throw std::logic_error("flow decomposition stuck");
      flow::Net::Arc& a = net.arc(picked);
      a.flow -= 1;
      if (cur != s && a.to != t) {
        if (cur % 2 == 0 && a.to == cur + 1)  // split arc: visit the vertex
          p.verts.push_back(vertex_of(cur));
        else if (a.orig >= 0)
          p.edges.push_back(a.orig);
      }
      cur = a.to;
    }
    res.paths.paths.push_back(std::move(p));
  }
  return res;
}

std::optional<PathFamily> route_cheapest(const Graph& g,
                                         const std::vector<VertexId>& A,
                                         const std::vector<VertexId>& B,
                                         int demand,
                                         const std::set<EdgeId>& free_edges) {
  check_terminals(g, A, B);
  std::vector<VertexId> verts = g.vertices();
  std::map<VertexId, int> rank;
  for (size_t i = 0; i < verts.size(); ++i)
    rank[verts[i]] = static_cast<int>(i);
  int n = static_cast<int>(verts.size());
  auto in_node = [&](VertexId v) { return 2 * rank.at(v); };
  auto out_node = [&](VertexId v) { return 2 * rank.at(v) + 1; };
  int s = 2 * n, t = 2 * n + 1;

  flow::Net net(2 * n + 2);
  for (VertexId v : verts) net.add_arc(in_node(v), out_node(v), 1);
  for (VertexId a : sorted_unique(A)) net.add_arc(s, in_node(a), flow::kInf);
  for (VertexId b : sorted_unique(B)) net.add_arc(out_node(b), t, flow::kInf);
  for (EdgeId e : g.edge_ids()) {
    const Edge& ed = g.edge(e);
    int cost = free_edges.count(e) ? 0 : 1;
    net.add_arc(out_node(ed.u), in_node(ed.v), 1, cost, e);
    net.add_arc(out_node(ed.v), in_node(ed.u), 1, cost, e);
  }

  long long total_cost = 0;
  if (net.min_cost_flow(s, t, demand, &total_cost) < demand)
    return std::nullopt;

  PathFamily fam;
  fam.mode = Disjointness::kNodeDisjoint;
  auto vertex_of = [&](int node) { return verts[node / 2]; };
  for (int unit = 0; unit < demand; ++unit) {
    Path p;
    int cur = s;
    while (cur != t) {
      int picked = -1;
      for (int i : net.out(cur))
        if (net.arc(i).cap > 0 && net.arc(i).flow > 0) {
          picked = i;
          break;
        }
      if (picked < 0) throw std::logic_error("flow decomposition stuck");
      flow::Net::Arc& a = net.arc(picked);
      a.flow -= 1;
      if (cur != s && a.to != t) {
        if (cur % 2 == 0 && a.to == cur + 1)
          p.verts.push_back(vertex_of(cur));
        else if (a.orig >= 0)
          p.edges.push_back(a.orig);
      }
      cur = a.to;
    }
    fam.paths.push_back(std::move(p));
  }
  return fam;
}

LinkageResult max_edge_disjoint_paths(const Graph& g,
                                      const std::vector<VertexId>& A,
                                      const std::vector<VertexId>& B) {
  check_terminals(g, A, B);
  std::set<VertexId> a_set(A.begin(), A.end());
  for (VertexId b : B)
    if (a_set.count(b))
      throw std::invalid_argument("edge variant needs disjoint terminals");

  std::vector<VertexId> verts = g.vertices();
  std::map<VertexId, int> rank;
  for (size_t i = 0; i < verts.size(); ++i)
    rank[verts[i]] = static_cast<int>(i);
  int n = static_cast<int>(verts.size());
  int s = n, t = n + 1;

  flow::Net net(n + 2);
  for (VertexId a : sorted_unique(A)) net.add_arc(s, rank.at(a), flow::kInf);
  for (VertexId b : sorted_unique(B)) net.add_arc(rank.at(b), t, flow::kInf);
  std::map<EdgeId, std::pair<int, int>> edge_arcs;
  for (EdgeId e : g.edge_ids()) {
    const Edge& ed = g.edge(e);
    int i1 = net.add_arc(rank.at(ed.u), rank.at(ed.v), 1, 0, e);
    int i2 = net.add_arc(rank.at(ed.v), rank.at(ed.u), 1, 0, e);
    edge_arcs[e] = {i1, i2};
  }

  LinkageResult res;
  res.value = net.max_flow(s, t);
  res.paths.mode = Disjointness::kEdgeDisjoint;

  // A unit pushed both ways across one undirected edge is a no-op; cancel
  // before reading cuts or extracting paths.
  for (auto& [e, arcs] : edge_arcs) {
    auto& [i1, i2] = arcs;
    if (net.arc(i1).flow == 1 && net.arc(i2).flow == 1) {
      net.arc(i1).flow = net.arc(i1 ^ 1).flow = 0;
      net.arc(i2).flow = net.arc(i2 ^ 1).flow = 0;
    }
  }

  auto reach = net.residual_reachable(s);
  for (const auto& [e, arcs] : edge_arcs) {
    const Edge& ed = g.edge(e);
    if (reach[rank.at(ed.u)] != reach[rank.at(ed.v)])
      res.edge_cut.push_back(e);
  }

  for (int unit = 0; unit < res.value; ++unit) {
    Path p;
    std::map<VertexId, int> pos;
    int cur = s;
    while (cur != t) {
      int picked = -1;
      for (int i : net.out(cur))
        if (net.arc(i).cap > 0 && net.arc(i).flow > 0) {
          picked = i;
          break;
        }
      if (picked < 0) throw std::logic_error("flow decomposition stuck");
      flow::Net::Arc& a = net.arc(picked);
      a.flow -= 1;
      if (a.to == t) break;
      VertexId w = verts[a.to];
      auto it = pos.find(w);
      if (it != pos.end()) {
        // Loop in the unit's trail: drop it (the flow it carried is gone,
        // which only cancels a cycle) and continue from the revisit point.
        for (size_t k = it->second + 1; k < p.verts.size(); ++k)
          pos.erase(p.verts[k]);
        p.verts.resize(it->second + 1);
        p.edges.resize(it->second);
      } else if (cur == s) {
        pos[w] = 0;
        p.verts.push_back(w);
      } else {
        pos[w] = static_cast<int>(p.verts.size());
        p.verts.push_back(w);
        p.edges.push_back(a.orig);
      }
      cur = a.to;
    }
    res.paths.paths.push_back(std::move(p));
  }
  return res;
}

}  // namespace gml
