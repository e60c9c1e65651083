#pragma once

#include <cstdint>
#include <variant>

#include "gml/report.hpp"
#include "gml/well_linked.hpp"

namespace gml {

enum class PosStrength { kWeak, kStrong };

// A chain of disjoint connected clusters C_1..C_l with nail sets A_i, B_i
// of common size `width` inside each, consecutive clusters joined by width
// node-disjoint connector paths that stay internally clear of every
// cluster. Weak: A_i ∪ B_i is edge-well-linked in its cluster. Strong: A_i
// and B_i are each node-well-linked and the pair is linked.
struct PathOfSets {
  std::vector<std::vector<VertexId>> clusters;
  std::vector<std::vector<VertexId>> A, B;
  std::vector<PathFamily> connectors;  // connectors[i]: B_i -> A_{i+1}
  int width = 0;
  PosStrength strength = PosStrength::kWeak;

  int length() const { return static_cast<int>(clusters.size()); }
};

// Every failed clause is reported; well-linkedness clauses carry the
// verdict method so sampled verifications are distinguishable.
ValidationReport validate_pos(const Graph& g, const PathOfSets& p,
                              const WLOptions& wl = {});

// A strong path-of-sets with one hair per cluster: a disjoint connected
// cluster S_i holding a node-well-linked anchor set Y_i, reached from
// X_i ⊆ C_i (clear of the nails, linked with A_i) by width node-disjoint
// paths that avoid all clusters internally.
struct HairyPathOfSets {
  PathOfSets base;
  std::vector<std::vector<VertexId>> hair_clusters;  // S_i
  std::vector<std::vector<VertexId>> X;              // in C_i
  std::vector<std::vector<VertexId>> Y;              // in S_i
  std::vector<PathFamily> hair_links;                // X_i -> Y_i
};

ValidationReport validate_hairy_pos(const Graph& g, const HairyPathOfSets& h,
                                    const WLOptions& wl = {});

// Chosen sub-nails for one odd-position cluster.
struct StitchPick {
  std::vector<VertexId> A_sub, B_sub;
};

struct StitchError {
  std::string message;
  int cluster = -1;  // index into the input chain
  std::vector<VertexId> separator;
};

// Halves the chain: keeps the odd-position clusters with the given
// sub-nails and reroutes connectors through the even clusters, whose
// linked nail pairs supply the required node-disjoint crossings. picks[j]
// addresses cluster 2j (0-based); all picks share one size w' <= width.
std::variant<PathOfSets, StitchError> stitch(
    const Graph& g, const PathOfSets& p, const std::vector<StitchPick>& picks);

struct BoostConfig {
  int delta = 4;  // degree target driving the first shrink ratio
  // First shrink: ceil(width * num1 / den1) with den1 = 10*delta when 0.
  int num1 = 3, den1 = 0;
  // Final keep: floor(w'' * num2 / den2).
  int num2 = 1, den2 = 8;
  int retries = 24;
  std::uint64_t seed = 1;
  WLOptions wl;
};

struct BoostError {
  std::string message;
  int cluster = -1;
};

// Upgrades a weak chain to a strong one of smaller width by re-nailing
// every cluster with node-well-linked subsets found by seeded
// select-and-verify, then trimming connectors to match. Width underflow
// (the shrink arithmetic hitting zero) is reported as an error, not
// silently clamped.
std::variant<PathOfSets, BoostError> boost_to_strong(
    const Graph& g, const PathOfSets& weak, const BoostConfig& cfg = {});

}  // namespace gml
