#pragma once

#include <optional>

#include "gml/chain.hpp"
#include "gml/minor.hpp"
#include "gml/pseudo_grid.hpp"
#include "gml/slicing.hpp"

namespace gml {

// Knobs of the full routing dichotomy. The defaults are desk-scale; the
// command line layers its presets on top. With `adapt` set, stages shrink
// their demands to what the instance at hand supports and say so in the
// trace; without it the configured values are binding and a stage that
// cannot meet them drops its slice or stalls the run.
struct PipelineConfig {
  int rho = 2;          // crossbar width the carving aims for
  int depth = 0;        // carving rounds; 0 takes the cap kappa/(2*rho)
  int slices = 4;       // target slice count of the first slicing
  int slice_width = 4;  // attachment paths promised to every slice
  int thin_w = 4;       // per-slice thinning: meets a segment must keep
  int thin_d = 8;       // per-slice thinning: meets an attachment must keep
  int wld_w = 1;        // well-linkedness width of the cluster carving
  int wld_d = 8;        // segments a cluster must house to stay in play
  int chain_w = 1;      // nail width of the assembled chain
  int pos_length = 4;   // cap on the assembled chain length
  // A slice is dense when kept_segments * type1_den >= spines * type1_num.
  int type1_num = 1, type1_den = 2;
  int case2_slices = 2;   // sub-slices a sparse slice is recut into
  int case2_width = 0;    // attachment floor per sub-slice; 0 = slice_width
  int class_cap = 48;     // geometric size classes considered
  Case2Config case2;      // sweep bounds of the sparse-slice recut
  BoostConfig boost;      // weak-to-strong conversion
  WLOptions wl;           // certificate validation options
  int oracle_cap = 5000;  // max-flow budget of the cut oracle
  int oracle_samples = 64;
  int uniqueness_cap = 200;  // exact second-routing sweep, in vertices
  unsigned seed = 1;
  bool adapt = true;
};

// What happened inside one slice (sub >= 0: one sub-slice of a recut).
struct SliceLedger {
  int slice = 0;
  int sub = -1;
  int segments = 0;
  int attachments = 0;
  int thin_w = 0, thin_d = 0;
  int kept_segments = 0, kept_attachments = 0;
  bool dense = false;
  int wld_w = 0, wld_d = 0;  // zero while the carving did not run
  int clusters = 0, happy = 0;
  bool oracle_exhaustive = true;
  std::string note;  // why the slice dropped out, when it did
};

enum class PipelineOutcome {
  kCrossbar,   // validated crossbar certificate
  kStrongPos,  // validated strong path-of-sets
  kWeakPos,    // validated weak path-of-sets; the boost failed
  kStalled,    // no certificate; `stall` names the stage that gave out
};

// Everything a run produced, kept as far as it got. The certificate is
// `crossbar` or `pos` per `outcome`; the rest is the provenance trail.
struct PipelineRun {
  PipelineOutcome outcome = PipelineOutcome::kStalled;
  std::optional<Crossbar> crossbar;
  bool crossbar_reduced = false;  // certificate lives in `reduced`, not h
  std::optional<PathOfSets> pos;
  std::optional<BoostError> boost_error;
  std::string stall;

  std::optional<WitnessPaths> witnesses;
  std::optional<PseudoGrid> grid;
  std::vector<int> spine_of;    // witness path behind each instance spine
  std::vector<int> kept_tails;  // tails that touch every carved layer
  std::optional<Graph> union_host;
  std::optional<ReducedInstance> reduced;
  std::optional<Slicing> slicing;
  std::vector<SliceLedger> ledger;
  bool case1 = false;
  std::optional<IndexSets> sets;
  std::optional<Chain> chain;
  std::vector<int> link_slice;  // governing slice of every chain link
  std::vector<std::string> trace;

  bool certified() const { return outcome != PipelineOutcome::kStalled; }
};

// Runs the dichotomy end to end on (h, A, B, X): carve a crossbar or a
// layered spine system, trim the cross paths to tails, contract to a
// perfect unique-linkage instance, slice it, thin every slice to an
// intersecting pair, and depending on how many slices stay dense either
// carve well-linked clusters per dense slice (grouping them by size class)
// or recut the sparse slices, then chain the clusters and assemble a weak
// path-of-sets, boosted to strong when the width arithmetic allows.
//
// Every certificate is validated before it is returned; a validator
// refusing one is a std::logic_error carrying its report. A boost that
// fails leaves the validated weak chain as the certificate. Runs that die
// earlier come back kStalled with the stage artifacts and the reason.
//
// pre: |A| = |B| = |X| >= 1, pairwise disjoint, X all degree one, and both
// witness linkages (A to B, A to X) routable; std::invalid_argument
// otherwise.
PipelineRun crossbar_or_pos(const Graph& h, const std::vector<VertexId>& A,
                            const std::vector<VertexId>& B,
                            const std::vector<VertexId>& X,
                            const PipelineConfig& cfg = {});

// Branch sets of the contraction that produced `red` from the union graph
// it was built on: every reduced vertex maps to the input vertices that
// were folded into it, every surviving edge to itself. Together with
// validate_minor_model this certifies the reduced instance as a minor of
// the union host.
MinorModel reduction_minor_model(const Graph& h_union,
                                 const ReducedInstance& red);

}  // namespace gml
