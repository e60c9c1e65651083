#pragma once

#include <map>
#include <set>
#include <variant>

#include "gml/linkage.hpp"
#include "gml/pseudo_grid.hpp"
#include "gml/report.hpp"

namespace gml {

// A linkage R of |A| = |B| node-disjoint paths, each running from an A
// vertex to a distinct B vertex, plus an attached family Q of node-disjoint
// paths, each sharing at least one vertex with the linkage. The perfect
// variant additionally has every graph vertex on some linkage path.
struct UniqueLinkageInstance {
  Graph graph;
  std::vector<VertexId> A, B;
  PathFamily R;  // the (A,B)-linkage
  PathFamily Q;  // attachments
  int size() const { return R.size(); }
};

ValidationReport validate_unique_linkage_instance(
    const UniqueLinkageInstance& inst, bool require_perfect);

struct ReducedInstance {
  UniqueLinkageInstance inst;
  int shared_edge_contractions = 0;   // linkage/attachment edge collapses
  int off_linkage_contractions = 0;   // absorbed attachment-only vertices
  std::map<VertexId, VertexId> vertex_map;  // input id -> output id, changed only
};

// Contracts the union graph of `linkage` and `attached` until every vertex
// lies on the linkage and no linkage edge is shared with an attachment.
// First collapses every edge lying on both a linkage path and an attachment
// route, then absorbs every vertex that attachments visit off the linkage
// into a neighbor. `foreign_edges` marks edges of the attachments' full
// routes that the trimmed `attached` paths no longer cover; they count as
// shared for the collapse rule. Lowest candidate fires first, lower vertex
// id survives a contraction.
ReducedInstance reduce_to_perfect_unique_linkage(
    const Graph& h_union, const PathFamily& linkage, const PathFamily& attached,
    const std::set<EdgeId>& foreign_edges = {});

struct LinkageUniqueness {
  enum class Status { kUnique, kNotUnique, kUnverified };
  Status status = Status::kUnverified;
  PathFamily second;  // a different (A,B)-linkage when kNotUnique
  std::string note;
};

// Decides whether inst.R is the only (A,B)-linkage in inst.graph. Any other
// linkage must leave out some edge of R: with every non-terminal saturated,
// a linkage containing all of E(R) cannot fit an extra edge and so equals R.
// Hence deleting each R edge in turn and re-solving the routing is an exact
// test. Instances above vertex_cap are not swept and come back kUnverified.
LinkageUniqueness verify_unique_linkage(const UniqueLinkageInstance& inst,
                                        int vertex_cap = 64);

// Vertex order that is strictly increasing along every linkage path and
// whose prefix separators cut the graph: for every t, removing S_t (per
// path, the first vertex ranked >= t, or its last vertex) leaves no path
// between ranks below t and ranks at or above t.
struct Numbering {
  std::map<VertexId, int> mu;     // bijection onto 1..|V|
  std::vector<VertexId> by_rank;  // by_rank[i] has mu == i + 1
};

struct NumberingFailure {
  std::vector<VertexId> cycle;  // order conflict witnessing a second linkage
};

// Builds the order-constraint digraph (along-path pairs, plus for every
// graph edge {u,v} joining different paths an arc into v from each vertex
// preceding u on its path) and peels zero-indegree vertices, lowest id
// first. A cycle means the linkage was not unique.
std::variant<Numbering, NumberingFailure> rs_numbering(
    const UniqueLinkageInstance& inst);

// One vertex per linkage path: the first ranked >= t, else the last.
std::vector<VertexId> numbering_separator(const UniqueLinkageInstance& inst,
                                          const Numbering& nu, int t);

// Exhaustive check of both guarantees: per-path monotonicity, and for every
// t in 1..|V| the separator S_t disconnects low ranks from high ranks.
ValidationReport validate_numbering(const UniqueLinkageInstance& inst,
                                    const Numbering& nu);

// Cuts every linkage path into the same number of segments. markers[p]
// holds vertex positions on R.paths[p]: nondecreasing, starting at 0 and
// ending at the last position. Slice i spans strictly between markers i-1
// and i, so an attachment path belongs to slice i when every linkage vertex
// it touches falls strictly inside that window.
struct Slicing {
  std::vector<std::vector<int>> markers;
  int slices() const {
    return markers.empty() ? 0 : static_cast<int>(markers[0].size()) - 1;
  }
};

struct SliceFamilies {
  // segments[i][p]: the open stretch of R.paths[p] in slice i+1; the
  // explicit empty path when the window holds no vertex.
  std::vector<std::vector<Path>> segments;
  std::vector<std::vector<int>> members;  // per slice, indices into inst.Q
  int width = 0;                          // min over slices of member count
};

SliceFamilies slice_families(const UniqueLinkageInstance& inst,
                             const Slicing& s);

// Requires |Q| >= m_hat*w_hat + (m_hat+1)*|R|. Places the cut markers with
// m_hat-1 separator sweeps: the first stops when w_hat + |R| attachment
// paths fall cleanly below the separator, later ones when w_hat paths of
// the still-open last slice do. Every produced slice then carries at least
// w_hat attachment paths.
Slicing compute_slicing(const UniqueLinkageInstance& inst, int m_hat,
                        int w_hat);

ValidationReport validate_slicing(const UniqueLinkageInstance& inst,
                                  const Slicing& s, int min_width);

// Bounds for the leftover-segment sweep of case2_reslice. Zero derives the
// stated multiple of rho; fixtures override them to reach either branch at
// desk scale.
struct Case2Config {
  int hit_bound = 0;  // attachments meeting this many leftover segments are set aside (default 8*rho)
  int fanout = 0;     // cap on active attachments through one leftover segment (default 4*rho)
};

struct Case2Reslice {
  Slicing slicing;  // one marker row per input segment; rows of segments
                    // outside `retained` are trivial (all cuts at the end)
  std::vector<int> kept;      // active attachments avoiding every leftover segment
  UniqueLinkageInstance sub;  // retained segments + kept attachments
};

struct Case2Outcome {
  std::variant<Crossbar, Case2Reslice> value;
  int blocked = 0;  // active attachments meeting a leftover segment
  int heavy = 0;    // of those, meeting >= hit_bound leftover segments
  int light = 0;    // blocked - heavy
  bool is_crossbar() const { return value.index() == 0; }
};

// One slice of a wider slicing, handed over for refinement. `segments` are
// aligned with `spines` (segments[p] a subpath of spines[p], possibly
// empty); `retained` lists the segment indices that survived pruning, and
// `active` the attachment indices under consideration. Every active
// attachment must stay on segment vertices and end at its terminal vertex.
//
// When more than (rho-1)*(hit_bound-1)*fanout active attachments meet a
// non-retained ("leftover") segment each fewer than hit_bound times, rho
// sweep rounds each pick such an attachment, emit the spine owning one
// leftover segment it meets plus the attachment's tail from their last
// shared vertex, and delete every leftover segment the attachment meets
// along with every attachment touching those segments. That budget makes
// the rounds provably completable, and the result is a width-rho Crossbar.
//
// Otherwise the attachments avoiding all leftover segments are kept, the
// retained segments are re-sliced against them via compute_slicing (whose
// count precondition then applies), and the other rows get the trivial
// all-cuts-at-the-end marker row.
Case2Outcome case2_reslice(const Graph& host, const PathFamily& spines,
                           const PathFamily& segments,
                           const std::vector<int>& retained,
                           const PathFamily& attachments,
                           const std::vector<int>& active, int rho, int m_hat,
                           int w_hat, const Case2Config& cfg = {});

}  // namespace gml
