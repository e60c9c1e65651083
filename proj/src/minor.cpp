#include "gml/minor.hpp"

#include <algorithm>
#include <set>

namespace gml {

namespace {

MinorReport violation(std::string condition, std::string message,
                      std::vector<VertexId> wv = {},
                      std::vector<EdgeId> we = {}) {
  MinorReport r;
  r.ok = false;
  r.condition = std::move(condition);
  r.message = std::move(message);
  r.witness_vertices = std::move(wv);
  r.witness_edges = std::move(we);
  return r;
}

}  // namespace

MinorReport validate_minor_model(const Graph& host, const Graph& pattern,
                                 const MinorModel& model) {
  for (VertexId pv : pattern.vertices()) {
    auto it = model.vertex_image.find(pv);
    if (it == model.vertex_image.end())
      return violation("vertex-image-missing",
                       "pattern vertex has no image", {pv});
    const auto& img = it->second;
    if (img.empty())
      return violation("vertex-image-empty", "image is empty", {pv});
    for (VertexId hv : img)
      if (!host.has_vertex(hv))
        return violation("vertex-image-unknown",
                         "image vertex not in host", {pv, hv});
    Graph sub = host.induced(img);
    if (!sub.connected())
      return violation("vertex-image-disconnected",
                       "image does not induce a connected subgraph", {pv});
  }

  std::map<VertexId, VertexId> owner;  // host vertex -> pattern vertex
  for (const auto& [pv, img] : model.vertex_image)
    for (VertexId hv : img) {
      auto [it, fresh] = owner.emplace(hv, pv);
      if (!fresh && it->second != pv)
        return violation("vertex-images-overlap",
                         "host vertex lies in two images",
                         {it->second, pv, hv});
    }

  auto in_image = [&](VertexId hv, VertexId pv) {
    auto it = owner.find(hv);
    return it != owner.end() && it->second == pv;
  };

  std::map<VertexId, EdgeId> inner_owner;  // internal host vertex -> pattern edge
  for (EdgeId pe : pattern.edge_ids()) {
    auto it = model.edge_image.find(pe);
    if (it == model.edge_image.end())
      return violation("edge-image-missing", "pattern edge has no image", {},
                       {pe});
    const Path& p = it->second;
    if (p.is_empty())
      return violation("edge-image-invalid", "image path is empty", {}, {pe});
    if (auto err = check_path(host, p))
      return violation("edge-image-invalid", *err, {}, {pe});

    const Edge& e = pattern.edge(pe);
    bool fwd = in_image(p.a(), e.u) && in_image(p.b(), e.v);
    bool bwd = in_image(p.a(), e.v) && in_image(p.b(), e.u);
    if (!(fwd || bwd))
      return violation("edge-image-wrong-ends",
                       "path endpoints not in the two endpoint images",
                       {e.u, e.v}, {pe});
    if (p.length() == 0)
      return violation("edge-image-wrong-ends",
                       "single-vertex path cannot join two disjoint images",
                       {e.u, e.v}, {pe});

    for (size_t k = 1; k + 1 < p.verts.size(); ++k) {
      VertexId hv = p.verts[k];
      if (owner.count(hv))
        return violation("edge-image-hits-vertex-image",
                         "internal path vertex lies in a vertex image",
                         {hv, owner.at(hv)}, {pe});
      auto [oit, fresh] = inner_owner.emplace(hv, pe);
      if (!fresh)
        return violation("edge-images-overlap",
                         "two paths share an internal vertex", {hv},
                         {oit->second, pe});
    }
  }

  return MinorReport{};
}

}  // namespace gml
