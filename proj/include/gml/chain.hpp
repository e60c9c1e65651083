#pragma once

#include <map>

#include "gml/pos.hpp"

namespace gml {

// A family of index sets over the ground set {0..ground-1}: sets[i] is
// sorted, repeat-free, and holds at least d_hat elements. w_hat is the
// overlap demanded of consecutive picks when chaining the family.
struct IndexSets {
  int ground = 0;
  std::vector<std::vector<int>> sets;
  int d_hat = 0;
  int w_hat = 0;

  int count() const { return static_cast<int>(sets.size()); }
};

// Strictly increasing positions into IndexSets::sets such that every two
// consecutive sets overlap in at least w_hat elements. shared[j] lists the
// full overlap of sets indices[j] and indices[j+1], sorted.
struct Chain {
  std::vector<int> indices;
  std::vector<std::vector<int>> shared;

  int length() const { return static_cast<int>(indices.size()); }
};

// ceil(M * d_hat / (2 * ground)): the chain length the peeling argument in
// find_chain can promise once the density hypotheses hold.
int chain_length_floor(const IndexSets& idx);

// Builds the longest chain the family supports. Overlap edges run from
// lower to higher positions; peeling the sources of that digraph layers
// the sets, every non-source has a predecessor one layer down, and walking
// those predecessors back from a deepest set yields a chain as long as the
// number of layers.
//
// With target_len = 0 the full walked chain is returned, whatever its
// length. A positive target_len asks for a promised length: the density
// hypotheses
//   ground >= 3 * w_hat,
//   d_hat^2 >= 4 * ground * w_hat,
//   count * d_hat >= 2 * ground * w_hat,
// are then required, target_len must not exceed chain_length_floor, and
// the result is truncated to exactly target_len links. Under the
// hypotheses any ceil(2*ground/d_hat) sets contain an overlapping pair, so
// no layer of the peeling holds more, the layer count reaches the floor,
// and a shorter walk is a logic_error.
//
// Throws std::invalid_argument on malformed input or, for positive
// target_len, missing hypotheses.
Chain find_chain(const IndexSets& idx, int target_len = 0);

// One link of a cluster chain: the cluster's vertex set, plus the spine
// segments it houses keyed by the index of the spine they were cut from.
struct ChainLink {
  std::vector<VertexId> cluster;
  std::map<int, Path> housed;
};

// Threads consecutive links into a weak path-of-sets of width w_hat. For
// each boundary the w_hat lowest spine indices housed on both sides are
// picked (the first link's own lowest spines seed the front, the last
// boundary repeats for the back): nails are the segment endpoints of those
// spines, and each connector runs along the spine itself, from the end of
// its segment in one link to the start of its segment in the next.
//
// Demands of the input, enforced by exact set arithmetic rather than
// trusted: every housed segment is a forward subpath of its spine lying
// inside its link's cluster, consecutive links share at least w_hat
// spines, segments of shared spines follow each other strictly along the
// spine, the nail sets of a link stay disjoint, and the connectors end up
// pairwise node-disjoint with interiors clear of every cluster. Violations
// throw std::invalid_argument naming the first offending link or spine.
PathOfSets assemble_weak_pos(const std::vector<ChainLink>& links,
                             const PathFamily& spines, int w_hat);

}  // namespace gml
