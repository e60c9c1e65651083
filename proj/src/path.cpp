#include "gml/path.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace gml {

VertexId Path::a() const {
  if (verts.empty()) throw std::logic_error("endpoint of empty path");
  return verts.front();
}

VertexId Path::b() const {
  if (verts.empty()) throw std::logic_error("endpoint of empty path");
  return verts.back();
}

bool Path::contains(VertexId v) const { return index_of(v) >= 0; }

int Path::index_of(VertexId v) const {
  for (size_t i = 0; i < verts.size(); ++i)
    if (verts[i] == v) return static_cast<int>(i);
  return -1;
}

Path Path::reversed() const {
  Path r = *this;
  std::reverse(r.verts.begin(), r.verts.end());
  std::reverse(r.edges.begin(), r.edges.end());
  return r;
}

Path Path::subpath(int i, int j) const {
  if (i < 0 || j >= static_cast<int>(verts.size()) || i > j)
    throw std::out_of_range("subpath positions");
  Path s;
  s.verts.assign(verts.begin() + i, verts.begin() + j + 1);
  s.edges.assign(edges.begin() + i, edges.begin() + j);
  return s;
}

Path Path::concat(const Path& o) const {
  if (is_empty()) return o;
  if (o.is_empty()) return *this;
  if (b() != o.a()) throw std::invalid_argument("concat: junction mismatch");
  Path r = *this;
  r.verts.insert(r.verts.end(), o.verts.begin() + 1, o.verts.end());
  r.edges.insert(r.edges.end(), o.edges.begin(), o.edges.end());
  std::set<VertexId> seen(r.verts.begin(), r.verts.end());
  if (seen.size() != r.verts.size())
    throw std::invalid_argument("concat: result revisits a vertex");
  return r;
}

std::optional<std::string> check_path(const Graph& g, const Path& p) {
  if (p.is_empty()) {
    if (!p.edges.empty()) return "empty path with edges";
    return std::nullopt;
  }
  if (p.edges.size() + 1 != p.verts.size())
    return "edge count does not match vertex count";
  std::set<VertexId> seen;
  for (VertexId v : p.verts) {
    if (!g.has_vertex(v)) return "path vertex not in graph";
    if (!seen.insert(v).second) return "repeated vertex on path";
  }
  for (size_t i = 0; i < p.edges.size(); ++i) {
    if (!g.has_edge(p.edges[i])) return "path edge not in graph";
    const Edge& e = g.edge(p.edges[i]);
    VertexId u = p.verts[i], v = p.verts[i + 1];
    if (!((e.u == u && e.v == v) || (e.u == v && e.v == u)))
      return "edge does not join consecutive path vertices";
  }
  std::set<EdgeId> es(p.edges.begin(), p.edges.end());
  if (es.size() != p.edges.size()) return "repeated edge on path";
  return std::nullopt;
}

std::optional<FamilyViolation> check_family(const Graph& g,
                                            const PathFamily& f) {
  std::map<VertexId, int> vert_owner;   // vertex -> first path using it
  std::map<VertexId, int> inner_owner;  // internal vertices only
  std::map<EdgeId, int> edge_owner;
  std::set<VertexId> apart(f.apart_from.begin(), f.apart_from.end());

  for (int i = 0; i < f.size(); ++i) {
    const Path& p = f.paths[i];
    if (auto err = check_path(g, p))
      return FamilyViolation{"path " + std::to_string(i) + ": " + *err, i};

    for (size_t k = 0; k < p.verts.size(); ++k) {
      VertexId v = p.verts[k];
      bool internal = k > 0 && k + 1 < p.verts.size();
      if (f.mode == Disjointness::kNodeDisjoint ||
          f.mode == Disjointness::kInternallyDisjointFrom) {
        auto [it, fresh] = vert_owner.emplace(v, i);
        if (!fresh && it->second != i)
          return FamilyViolation{"vertex shared by two paths", it->second, i, v};
      }
      if (f.mode == Disjointness::kInternallyDisjointFrom && internal &&
          apart.count(v))
        return FamilyViolation{"internal vertex lies in the excluded set", i,
                               -1, v};
      if (internal) inner_owner.emplace(v, i);
    }
    for (EdgeId e : p.edges) {
      auto [it, fresh] = edge_owner.emplace(e, i);
      if (!fresh && it->second != i)
        return FamilyViolation{"edge shared by two paths", it->second, i, -1, e};
    }
  }
  return std::nullopt;
}

std::vector<VertexId> family_vertices(const PathFamily& f) {
  std::set<VertexId> s;
  for (const Path& p : f.paths) s.insert(p.verts.begin(), p.verts.end());
  return {s.begin(), s.end()};
}

std::vector<EdgeId> family_edges(const PathFamily& f) {
  std::set<EdgeId> s;
  for (const Path& p : f.paths) s.insert(p.edges.begin(), p.edges.end());
  return {s.begin(), s.end()};
}

Contraction contract_path_to_vertex(const Graph& g, const Path& p) {
  if (p.is_empty())
    throw std::invalid_argument("cannot contract the empty path");
  if (auto err = check_path(g, p))
    throw std::invalid_argument("contract_path_to_vertex: " + *err);
  auto c = g.contract_groups({p.verts});
  c.kept = *std::min_element(p.verts.begin(), p.verts.end());
  return c;
}

Graph union_graph(const Graph& host,
                  const std::vector<const PathFamily*>& fams) {
  std::set<EdgeId> es;
  std::set<VertexId> vs;
  for (const PathFamily* f : fams) {
    for (const Path& p : f->paths) {
      es.insert(p.edges.begin(), p.edges.end());
      vs.insert(p.verts.begin(), p.verts.end());
    }
  }
  return host.edge_subgraph({es.begin(), es.end()}, {vs.begin(), vs.end()});
}

}  // namespace gml
