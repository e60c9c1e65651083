#pragma once

#include <functional>
#include <optional>
#include <set>

#include "gml/path.hpp"
#include "gml/report.hpp"

namespace gml {

// Outcome of thinning a segment family against an attachment family until
// the mutual intersection counts stabilize: every kept segment meets at
// least w_hat kept attachments, every kept attachment meets at least d_hat
// kept segments, and every dropped segment meets at most w_hat kept
// attachments. Two paths meet when they share a vertex; multiplicity does
// not matter. Indices refer to the input families.
struct IntersectingPair {
  std::vector<int> kept_segments;
  std::vector<int> dropped_segments;
  std::vector<int> kept_attachments;
  int w_hat = 0;
  int d_hat = 0;
  std::vector<int> segment_meets;     // aligned with kept_segments
  std::vector<int> attachment_meets;  // aligned with kept_attachments
};

// Deletes segments meeting fewer than w_hat live attachments and
// attachments meeting fewer than d_hat live segments until neither rule
// fires. The survivors form the unique maximal fixpoint, so rule order
// cannot change the result. Each attachment was lost to at least d_hat
// earlier segment deletions while each deleted segment released fewer than
// w_hat incidences, which caps attachment losses at
// |segments|*w_hat/d_hat; together with the size precondition at least
// half the attachments survive. Both bounds are asserted on every run.
// pre: both families internally node-disjoint; every attachment meets at
// least 2*d_hat segments; |attachments|*d_hat >= 2*|segments|*w_hat.
// Throws std::invalid_argument on precondition violations.
IntersectingPair prune_to_intersecting(const PathFamily& segments,
                                       const PathFamily& attachments,
                                       int w_hat, int d_hat);

ValidationReport validate_intersecting(const PathFamily& segments,
                                       const PathFamily& attachments,
                                       const IntersectingPair& pair);

// Answer of one well-linkedness probe on a cluster. A present `side` means
// the cluster splits there: fewer than min(w_hat, terminals inside,
// terminals outside) edges cross between `side` and the rest. `exhaustive`
// qualifies an absent side: true means every relevant terminal split was
// checked, false means the search sampled and may have missed a cut.
struct CutVerdict {
  std::optional<std::vector<VertexId>> side;
  bool exhaustive = false;
};

using CutOracle = std::function<CutVerdict(
    const Graph& cluster, const std::vector<VertexId>& terminals, int w_hat)>;

// Flow-based probe. A violating pair of terminal subsets shrinks to one
// with both sides of size at most w_hat (removing vertices only lowers the
// flow while the demand stays put), so sweeping those pairs, or all
// terminal bipartitions when that is cheaper, decides weak well-linkedness
// exactly. The sweep runs when it fits in work_cap max-flow calls, which
// keeps every cluster with at most a dozen terminals on the exact track;
// beyond that the probe tries structural candidates (component splits,
// bridge edges) and `samples` seeded random bipartitions, and a clean
// sweep is reported as non-exhaustive. w_hat = 1 needs no flows at all:
// it is plain connectivity among the terminals.
CutOracle make_default_cut_oracle(int work_cap = 5000, int samples = 64,
                                  unsigned seed = 1);

// One cell of a finished decomposition.
struct Cluster {
  std::vector<VertexId> verts;      // sorted
  std::vector<int> segments;        // input segment paths fully inside
  std::vector<VertexId> terminals;  // their endpoints, sorted, deduplicated
  int out_edges = 0;                // deleted edges with an endpoint here
  bool happy = false;               // holds at least d_hat segments
  bool exhaustive = false;          // final no-cut verdict was exhaustive
};

// Host split into vertex-disjoint clusters covering every vertex;
// `deleted` holds exactly the edges running between different clusters.
// Survivors are the segments contained in happy clusters; `destroyed`
// counts segments that lost an edge to `deleted`. `exhaustive` is the
// conjunction over clusters: false means the oracle sampled somewhere, so
// a kept cluster might not actually be well-linked. Downstream users
// surface that as an incomplete oracle rather than an error, since every
// bound asserted by the decomposition holds regardless.
struct ClusterDecomposition {
  std::vector<Cluster> clusters;
  std::set<EdgeId> deleted;
  std::vector<int> survivors;
  int destroyed = 0;
  bool exhaustive = true;
};

// Splits the host along oracle cuts until every cluster's terminal set
// looks w_hat-weakly well-linked, then flags the clusters still holding at
// least d_hat segments as happy. Deterministic: the largest violating
// cluster splits first, ties to the lowest vertex id. Every oracle cut is
// re-verified before use and a bad cut is a std::logic_error, as is any
// failure of the accounting, which holds independently of oracle
// completeness:
//   |deleted| <= (r-1)*w_hat for r final clusters;
//   clusters with out_edges < 4*w_hat number at least r/2, and each holds
//   at least 2*d_hat - 4*w_hat segments;
//   destroyed <= r*w_hat; |survivors| >= |segments|/4.
// pre: both families node-disjoint in the host; no empty segment; every
// segment meets >= 4*w_hat attachments; every attachment meets >= 2*d_hat
// segments; d_hat >= 8*w_hat.
ClusterDecomposition well_linked_decompose(const Graph& host,
                                           const PathFamily& segments,
                                           const PathFamily& attachments,
                                           int w_hat, int d_hat,
                                           const CutOracle& oracle);

// Recomputes every structural fact of `dec` from the host and the segment
// family alone: the vertex partition, the deleted-edge set, per-cluster
// membership, terminal and boundary counts, survivor and destroyed sets,
// the accounting bounds, and, through the oracle, that no happy cluster
// admits a refuting cut.
ValidationReport validate_decomposition(const Graph& host,
                                        const PathFamily& segments,
                                        int w_hat, int d_hat,
                                        const ClusterDecomposition& dec,
                                        const CutOracle& oracle);

// Geometric size class of clusters: class j holds sizes s with
// d*2^j <= 4*s < d*2^(j+1).
struct ClassGrouping {
  int cls = 0;
  std::vector<int> members;  // indices into the size list, ascending
  long long path_mass = 0;   // total size over members
};

// Buckets sizes into geometric classes and returns the class with the
// largest total size, ties to the lower class index. Every size must reach
// class 0 (4*size >= d) and fall below class_cap. Since each member stays
// under the class ceiling, the winner holds more than
// 4*path_mass/(d*2^(cls+1)) clusters; asserted.
ClassGrouping group_by_class(const std::vector<int>& sizes, int d,
                             int class_cap);

}  // namespace gml
