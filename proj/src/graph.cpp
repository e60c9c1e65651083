#include "gml/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace gml {

Graph Graph::build(const std::vector<VertexId>& vertices,
                   const std::vector<std::pair<VertexId, VertexId>>& edges) {
  std::vector<std::tuple<EdgeId, VertexId, VertexId>> with_ids;
  with_ids.reserve(edges.size());
  EdgeId next = 0;
  for (const auto& [u, v] : edges) with_ids.emplace_back(next++, u, v);
  return build_with_ids(vertices, with_ids);
}

Graph Graph::build_with_ids(
    const std::vector<VertexId>& vertices,
    const std::vector<std::tuple<EdgeId, VertexId, VertexId>>& edges) {
  Graph g;
  for (VertexId v : vertices) g.adj_[v];
  for (const auto& [id, u, v] : edges) {
    if (u == v) throw std::invalid_argument("self-loop rejected");
    if (!g.adj_.count(u) || !g.adj_.count(v))
      throw std::invalid_argument("edge endpoint not a listed vertex");
    if (g.edges_.count(id)) throw std::invalid_argument("duplicate edge id");
    g.edges_[id] = Edge{u, v};
    g.adj_[u].push_back({v, id});
    g.adj_[v].push_back({u, id});
  }
  for (auto& [v, inc] : g.adj_) std::sort(inc.begin(), inc.end());
  return g;
}

std::vector<VertexId> Graph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(adj_.size());
  for (const auto& [v, inc] : adj_) out.push_back(v);
  return out;
}

std::vector<EdgeId> Graph::edge_ids() const {
  std::vector<EdgeId> out;
  out.reserve(edges_.size());
  for (const auto& [e, ed] : edges_) out.push_back(e);
  return out;
}

const Edge& Graph::edge(EdgeId e) const {
  auto it = edges_.find(e);
  if (it == edges_.end()) throw std::out_of_range("no such edge id");
  return it->second;
}

int Graph::degree(VertexId v) const {
  return static_cast<int>(incident(v).size());
}

const std::vector<IncidentEdge>& Graph::incident(VertexId v) const {
  auto it = adj_.find(v);
  if (it == adj_.end()) throw std::out_of_range("no such vertex id");
  return it->second;
}

std::optional<EdgeId> Graph::find_edge(VertexId u, VertexId v) const {
  auto it = adj_.find(u);
  if (it == adj_.end()) return std::nullopt;
  std::optional<EdgeId> best;
  for (const auto& inc : it->second)
    if (inc.to == v && (!best || inc.id < *best)) best = inc.id;
  return best;
}

Graph Graph::induced(const std::vector<VertexId>& vs) const {
  std::set<VertexId> keep(vs.begin(), vs.end());
  for (VertexId v : keep)
    if (!adj_.count(v)) throw std::invalid_argument("induced: unknown vertex");
  std::vector<std::tuple<EdgeId, VertexId, VertexId>> es;
  for (const auto& [id, ed] : edges_)
    if (keep.count(ed.u) && keep.count(ed.v)) es.emplace_back(id, ed.u, ed.v);
  return build_with_ids({keep.begin(), keep.end()}, es);
}

Graph Graph::edge_subgraph(const std::vector<EdgeId>& es,
                           const std::vector<VertexId>& extra_vertices) const {
  std::set<VertexId> vs(extra_vertices.begin(), extra_vertices.end());
  for (VertexId v : vs)
    if (!adj_.count(v)) throw std::invalid_argument("edge_subgraph: unknown vertex");
  std::vector<std::tuple<EdgeId, VertexId, VertexId>> keep;
  std::set<EdgeId> seen;
  for (EdgeId e : es) {
    if (!seen.insert(e).second) continue;
    const Edge& ed = edge(e);
    keep.emplace_back(e, ed.u, ed.v);
    vs.insert(ed.u);
    vs.insert(ed.v);
  }
  std::sort(keep.begin(), keep.end());
  return build_with_ids({vs.begin(), vs.end()}, keep);
}

bool Graph::connected() const {
  if (adj_.empty()) return true;
  return static_cast<int>(component_of(adj_.begin()->first).size()) ==
         vertex_count();
}

std::vector<VertexId> Graph::component_of(VertexId v) const {
  if (!adj_.count(v)) throw std::out_of_range("no such vertex id");
  std::set<VertexId> seen{v};
  std::queue<VertexId> q;
  q.push(v);
  while (!q.empty()) {
    VertexId w = q.front();
    q.pop();
    for (const auto& inc : incident(w))
      if (seen.insert(inc.to).second) q.push(inc.to);
  }
  return {seen.begin(), seen.end()};
}

std::vector<std::vector<VertexId>> Graph::components() const {
  std::set<VertexId> left;
  for (const auto& [v, inc] : adj_) left.insert(v);
  std::vector<std::vector<VertexId>> out;
  while (!left.empty()) {
    auto comp = component_of(*left.begin());
    for (VertexId v : comp) left.erase(v);
    out.push_back(std::move(comp));
  }
  return out;
}

Contraction Graph::contract_edge(EdgeId e) const {
  const Edge& ed = edge(e);
  Contraction c = contract_groups({{ed.u, ed.v}});
  c.kept = std::min(ed.u, ed.v);
  return c;
}

Contraction Graph::contract_groups(
    const std::vector<std::vector<VertexId>>& groups) const {
  std::map<VertexId, VertexId> rep;
  for (const auto& grp : groups) {
    if (grp.empty()) continue;
    VertexId lo = *std::min_element(grp.begin(), grp.end());
    for (VertexId v : grp) {
      if (!adj_.count(v))
        throw std::invalid_argument("contract_groups: unknown vertex");
      if (rep.count(v)) throw std::invalid_argument("contract_groups: overlap");
      rep[v] = lo;
    }
  }
  auto image = [&](VertexId v) {
    auto it = rep.find(v);
    return it == rep.end() ? v : it->second;
  };

  Contraction c;
  std::set<VertexId> vs;
  for (const auto& [v, inc] : adj_) vs.insert(image(v));
  std::vector<std::tuple<EdgeId, VertexId, VertexId>> es;
  for (const auto& [id, ed] : edges_) {
    VertexId u = image(ed.u), v = image(ed.v);
    if (u == v)
      c.dropped_edges.push_back(id);
    else
      es.emplace_back(id, u, v);
  }
  c.graph = build_with_ids({vs.begin(), vs.end()}, es);
  for (const auto& [v, r] : rep)
    if (v != r) c.vertex_map[v] = r;
  return c;
}

}  // namespace gml
