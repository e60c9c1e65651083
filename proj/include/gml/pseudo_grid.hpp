#pragma once

#include <variant>

#include "gml/linkage.hpp"
#include "gml/report.hpp"

namespace gml {

// Paired perfect linkages out of A: P[i] runs from an A vertex to B, Q[i]
// runs from the same A vertex to X. Each family is node-disjoint on its
// own, but P paths may cross Q paths freely.
struct WitnessPaths {
  PathFamily P, Q;
  int size() const { return P.size(); }
};

// Routes |A| disjoint paths A->B and A->X and pairs them by origin.
// Throws std::invalid_argument when either side cannot carry |A| paths.
WitnessPaths initial_witnesses(const Graph& h, const std::vector<VertexId>& A,
                               const std::vector<VertexId>& B,
                               const std::vector<VertexId>& X);

// Number of distinct edges used by the two families together.
int witness_union_edges(const WitnessPaths& w);

// Alternately reroutes each family by cost, treating edges already used by
// the other family as free, until the union edge count stops dropping.
// The result is locally minimal: no whole-family reroute can shrink it.
WitnessPaths select_min_edge_witnesses(const Graph& h,
                                       const std::vector<VertexId>& A,
                                       const std::vector<VertexId>& B,
                                       const std::vector<VertexId>& X,
                                       WitnessPaths start);

ValidationReport validate_witnesses(const Graph& h,
                                    const std::vector<VertexId>& A,
                                    const std::vector<VertexId>& B,
                                    const std::vector<VertexId>& X,
                                    const WitnessPaths& w);

// Spine paths A->B, each carrying one cross path that leaves it from a
// single shared vertex and reaches X without touching any other spine.
struct Crossbar {
  PathFamily P_star;  // pairwise fully disjoint, A->B
  PathFamily Q_star;  // Q_star[i] meets P_star[i] only in Q_star[i].a()
  int width() const { return P_star.size(); }
};

ValidationReport validate_crossbar(const Graph& h,
                                   const std::vector<VertexId>& A,
                                   const std::vector<VertexId>& B,
                                   const std::vector<VertexId>& X,
                                   const Crossbar& cb);

// Depth-many disjoint layers of spine indices, at most rho spines each,
// plus ceil(kappa/4) tails of surviving cross paths. The tails avoid every
// surviving spine entirely, and per layer all but at most 2*rho tails
// touch one of its spines.
struct PseudoGrid {
  int rho = 0;
  std::vector<std::vector<int>> layers;  // indices into the witness P family
  std::vector<Path> tails;
  std::vector<int> tail_owner;  // witness index per tail

  int depth() const { return static_cast<int>(layers.size()); }
};

ValidationReport validate_pseudo_grid(const Graph& h,
                                      const std::vector<VertexId>& X,
                                      const WitnessPaths& w,
                                      const PseudoGrid& pg);

using DichotomyResult = std::variant<Crossbar, PseudoGrid>;

// Runs depth rounds of contract-and-route: each round contracts every
// surviving spine to a point and routes from those points to X. A round
// reaching rho disjoint routes is turned into a crossbar; otherwise its
// blocking separator carves one layer off the spine set. Requires
// 1 <= depth <= kappa/(2*rho) so enough spines survive all rounds.
DichotomyResult build_pseudo_grid_or_crossbar(const Graph& h,
                                              const std::vector<VertexId>& X,
                                              const WitnessPaths& w, int rho,
                                              int depth);

}  // namespace gml
