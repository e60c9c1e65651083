#pragma once

#include <map>

#include "gml/path.hpp"

namespace gml {

// Embedding of a pattern graph into a host: vertex images are disjoint
// connected subgraphs, edge images are paths between the right images that
// stay internally clear of every vertex image and of each other.
struct MinorModel {
  std::map<VertexId, std::vector<VertexId>> vertex_image;
  std::map<EdgeId, Path> edge_image;
};

struct MinorReport {
  bool ok = true;
  // One of: vertex-image-missing, vertex-image-empty, vertex-image-unknown,
  // vertex-image-disconnected, vertex-images-overlap, edge-image-missing,
  // edge-image-invalid, edge-image-wrong-ends, edge-image-hits-vertex-image,
  // edge-images-overlap. The first violated condition in this order wins.
  std::string condition;
  std::string message;
  std::vector<VertexId> witness_vertices;
  std::vector<EdgeId> witness_edges;
};

MinorReport validate_minor_model(const Graph& host, const Graph& pattern,
                                 const MinorModel& model);

}  // namespace gml
