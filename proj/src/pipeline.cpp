#include "gml/pipeline.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <variant>

#include "gml/decomposition.hpp"

namespace gml {

namespace {

template <class... Ts>
std::string cat(Ts&&... parts) {
  std::ostringstream s;
  (s << ... << parts);
  return s.str();
}

void check_config(const PipelineConfig& cfg) {
  auto need = [](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(cat("config: ", what));
  };
  need(cfg.rho >= 1, "rho must be positive");
  need(cfg.depth >= 0, "depth must not be negative");
  need(cfg.slices >= 1 && cfg.slice_width >= 1, "slicing targets must be positive");
  need(cfg.thin_w >= 1 && cfg.thin_d >= 1, "thinning demands must be positive");
  need(cfg.wld_w >= 1 && cfg.wld_d >= 1, "carving demands must be positive");
  need(cfg.chain_w >= 1, "chain width must be positive");
  need(cfg.pos_length >= 1, "chain length cap must be positive");
  need(cfg.type1_num >= 1 && cfg.type1_den >= 1, "density ratio must be positive");
  need(cfg.case2_slices >= 1, "sub-slice count must be positive");
  need(cfg.class_cap >= 1 && cfg.class_cap <= 60, "class cap out of range");
}

// One slice (or sub-slice) after thinning, ready for cluster carving.
struct SliceData {
  int slice = 0;
  int sub = -1;
  bool alive = false;
  bool dense = false;
  std::vector<int> spine_ids;  // per kept segment: instance spine position
  PathFamily segs;
  std::vector<int> att_ids;  // per kept attachment: instance Q position
  PathFamily atts;
  std::vector<int> seg_meets, att_meets;
  int ledger_row = -1;
};

// A happy cluster promoted to a chain candidate.
struct Candidate {
  int slice = 0;
  int sub = -1;
  std::vector<int> s_set;
  ChainLink link;
  int wld_w = 0;
  int wld_d = 0;
};

int meets_of(const Path& p, const std::map<VertexId, int>& owner,
             std::set<int>& scratch) {
  scratch.clear();
  for (VertexId v : p.verts) {
    auto it = owner.find(v);
    if (it != owner.end()) scratch.insert(it->second);
  }
  return static_cast<int>(scratch.size());
}

// Thins the families of one slice to an intersecting pair. Returns whether
// the slice stays alive; the ledger row records what happened either way.
bool thin_slice(const PipelineConfig& cfg, int n_spines,
                std::vector<int> spine_ids, PathFamily segs,
                std::vector<int> att_ids, PathFamily atts, SliceLedger& row,
                SliceData& out) {
  row.segments = segs.size();
  row.attachments = atts.size();
  if (segs.size() == 0 || atts.size() == 0) {
    row.note = "nothing to thin";
    return false;
  }

  std::map<VertexId, int> seg_owner;
  for (int si = 0; si < segs.size(); ++si)
    for (VertexId v : segs.paths[si].verts) seg_owner[v] = si;
  int min_att_meet = segs.size();
  std::set<int> scratch;
  for (const Path& q : atts.paths)
    min_att_meet = std::min(min_att_meet, meets_of(q, seg_owner, scratch));

  int d_t = cfg.thin_d, w_t = cfg.thin_w;
  if (cfg.adapt) {
    d_t = std::min(d_t, min_att_meet / 2);
    long long cap = static_cast<long long>(atts.size()) * d_t /
                    (2LL * segs.size());
    w_t = std::min<long long>(w_t, cap);
    if (d_t < 1 || w_t < 1) {
      row.note = cat("thinning unreachable: attachments meet as few as ",
                     min_att_meet, " segments");
      return false;
    }
  }
  row.thin_w = w_t;
  row.thin_d = d_t;

  IntersectingPair pr;
  try {
    pr = prune_to_intersecting(segs, atts, w_t, d_t);
  } catch (const std::invalid_argument& e) {
    row.note = cat("thinning refused: ", e.what());
    return false;
  }
  ValidationReport rep = validate_intersecting(segs, atts, pr);
  if (!rep.ok)
    throw std::logic_error(cat("thinning self-check: ", rep.summary()));

  row.kept_segments = static_cast<int>(pr.kept_segments.size());
  row.kept_attachments = static_cast<int>(pr.kept_attachments.size());
  if (pr.kept_segments.empty()) {
    row.note = "thinning kept no segment";
    return false;
  }
  row.dense = static_cast<long long>(row.kept_segments) * cfg.type1_den >=
              static_cast<long long>(n_spines) * cfg.type1_num;

  out.dense = row.dense;
  for (int si : pr.kept_segments) {
    out.spine_ids.push_back(spine_ids[si]);
    out.segs.paths.push_back(segs.paths[si]);
  }
  for (int qi : pr.kept_attachments) {
    out.att_ids.push_back(att_ids[qi]);
    out.atts.paths.push_back(atts.paths[qi]);
  }
  out.seg_meets = pr.segment_meets;
  out.att_meets = pr.attachment_meets;
  out.alive = true;
  return true;
}

// Carves the thinned slice into well-linked clusters and promotes its
// happy clusters (all of them, or only the one housing the most segments)
// to chain candidates.
void carve_slice(const PipelineConfig& cfg, const Graph& g,
                 const CutOracle& oracle, const SliceData& sd,
                 SliceLedger& row, bool best_only,
                 std::vector<Candidate>& cands,
                 std::vector<std::string>& trace) {
  int min_seg = sd.seg_meets.empty() ? 0 : *std::min_element(
                                               sd.seg_meets.begin(),
                                               sd.seg_meets.end());
  int min_att = sd.att_meets.empty() ? 0 : *std::min_element(
                                               sd.att_meets.begin(),
                                               sd.att_meets.end());
  int d_w = cfg.wld_d, w_w = cfg.wld_w;
  if (cfg.adapt) {
    d_w = std::min(d_w, min_att / 2);
    w_w = std::min({w_w, min_seg / 4, d_w / 8});
  }
  if (w_w < 1 || d_w < 8 * w_w) {
    row.note = cat("carving unreachable: segment meets ", min_seg,
                   ", attachment meets ", min_att);
    return;
  }

  Graph host = union_graph(g, {&sd.segs, &sd.atts});
  ClusterDecomposition dec;
  try {
    dec = well_linked_decompose(host, sd.segs, sd.atts, w_w, d_w, oracle);
  } catch (const std::invalid_argument& e) {
    row.note = cat("carving refused: ", e.what());
    return;
  }
  row.wld_w = w_w;
  row.wld_d = d_w;
  row.clusters = static_cast<int>(dec.clusters.size());
  row.oracle_exhaustive = dec.exhaustive;

  int best = -1;
  long long best_size = -1;
  std::vector<Candidate> local;
  for (const Cluster& c : dec.clusters) {
    if (!c.happy) continue;
    ++row.happy;
    Candidate cand;
    cand.slice = sd.slice;
    cand.sub = sd.sub;
    cand.wld_w = w_w;
    cand.wld_d = d_w;
    for (int si : c.segments) {
      cand.s_set.push_back(sd.spine_ids[si]);
      cand.link.housed[sd.spine_ids[si]] = sd.segs.paths[si];
    }
    std::sort(cand.s_set.begin(), cand.s_set.end());

    // The carving can leave attachment shards that lost their segment
    // links; the chain only ever uses the component around the nails.
    std::vector<std::vector<VertexId>> comps = g.induced(c.verts).components();
    int home = -1;
    for (size_t ci = 0; ci < comps.size(); ++ci) {
      std::set<VertexId> in(comps[ci].begin(), comps[ci].end());
      bool all = true, any = false;
      for (VertexId t : c.terminals)
        if (in.count(t))
          any = true;
        else
          all = false;
      if (any && !all)
        throw std::logic_error("cluster terminals split across components");
      if (all) home = static_cast<int>(ci);
    }
    if (home < 0) throw std::logic_error("cluster lost its terminals");
    cand.link.cluster = comps[home];
    std::sort(cand.link.cluster.begin(), cand.link.cluster.end());
    if (cand.link.cluster.size() < c.verts.size())
      trace.push_back(cat("slice ", sd.slice,
                          sd.sub >= 0 ? cat(".", sd.sub) : std::string(),
                          ": trimmed a cluster to its nail component (",
                          cand.link.cluster.size(), " of ", c.verts.size(),
                          " vertices)"));

    if (static_cast<long long>(cand.s_set.size()) > best_size) {
      best_size = static_cast<long long>(cand.s_set.size());
      best = static_cast<int>(local.size());
    }
    local.push_back(std::move(cand));
  }
  if (local.empty()) {
    if (row.note.empty()) row.note = "no cluster kept enough segments";
    return;
  }
  if (best_only)
    cands.push_back(std::move(local[best]));
  else
    for (Candidate& c : local) cands.push_back(std::move(c));
}

}  // namespace

MinorModel reduction_minor_model(const Graph& h_union,
                                 const ReducedInstance& red) {
  auto resolve = [&](VertexId v) {
    while (true) {
      auto it = red.vertex_map.find(v);
      if (it == red.vertex_map.end() || it->second == v) return v;
      v = it->second;
    }
  };
  MinorModel model;
  for (VertexId v : h_union.vertices())
    model.vertex_image[resolve(v)].push_back(v);
  for (EdgeId e : red.inst.graph.edge_ids()) {
    const Edge& host_edge = h_union.edge(e);
    const Edge& pat_edge = red.inst.graph.edge(e);
    VertexId hu = host_edge.u, hv = host_edge.v;
    if (resolve(hu) != pat_edge.u) std::swap(hu, hv);
    if (resolve(hu) != pat_edge.u || resolve(hv) != pat_edge.v)
      throw std::logic_error("surviving edge contradicts the vertex map");
    model.edge_image[e] = Path{{hu, hv}, {e}};
  }
  return model;
}

PipelineRun crossbar_or_pos(const Graph& h, const std::vector<VertexId>& A,
                            const std::vector<VertexId>& B,
                            const std::vector<VertexId>& X,
                            const PipelineConfig& cfg) {
  check_config(cfg);
  int kappa = static_cast<int>(A.size());
  if (kappa < 1 || static_cast<int>(B.size()) != kappa ||
      static_cast<int>(X.size()) != kappa)
    throw std::invalid_argument("terminal sets must share one positive size");
  {
    std::set<VertexId> seen;
    for (const auto* side : {&A, &B, &X})
      for (VertexId v : *side) {
        if (!h.has_vertex(v))
          throw std::invalid_argument("terminal outside the graph");
        if (!seen.insert(v).second)
          throw std::invalid_argument("terminal sets overlap");
      }
    for (VertexId v : X)
      if (h.degree(v) != 1)
        throw std::invalid_argument("every free terminal must have degree one");
  }

  PipelineRun run;
  auto note = [&](std::string s) { run.trace.push_back(std::move(s)); };
  auto stalled = [&](std::string why) {
    run.stall = std::move(why);
    note(cat("stalled: ", run.stall));
  };

  // Witness linkages, rerouted to a locally minimal edge union.
  WitnessPaths w = initial_witnesses(h, A, B, X);
  int raw_edges = witness_union_edges(w);
  w = select_min_edge_witnesses(h, A, B, X, std::move(w));
  note(cat("witnesses: union of ", witness_union_edges(w), " edges (from ",
           raw_edges, ")"));
  {
    ValidationReport rep = validate_witnesses(h, A, B, X, w);
    if (!rep.ok)
      throw std::logic_error(cat("witness check: ", rep.summary()));
  }
  run.witnesses = w;

  // Carve rounds: a crossbar ends the run on the spot.
  int max_depth = kappa / (2 * cfg.rho);
  if (max_depth < 1) {
    stalled(cat("instance of size ", kappa,
                " cannot feed the layer budget rho=", cfg.rho));
    return run;
  }
  int depth = cfg.depth > 0 ? cfg.depth : max_depth;
  if (depth > max_depth) {
    if (!cfg.adapt) {
      stalled(cat("depth ", depth, " exceeds the cap ", max_depth));
      return run;
    }
    note(cat("depth clamped to ", max_depth, " (asked ", depth, ")"));
    depth = max_depth;
  }
  DichotomyResult dich =
      build_pseudo_grid_or_crossbar(h, X, run.witnesses.value(), cfg.rho, depth);
  if (std::holds_alternative<Crossbar>(dich)) {
    Crossbar cb = std::get<Crossbar>(std::move(dich));
    ValidationReport rep = validate_crossbar(h, A, B, X, cb);
    if (!rep.ok)
      throw std::logic_error(cat("crossbar certificate: ", rep.summary()));
    note(cat("crossbar of width ", cb.width(), " carved directly"));
    run.crossbar = std::move(cb);
    run.outcome = PipelineOutcome::kCrossbar;
    return run;
  }
  {
    PseudoGrid pg = std::get<PseudoGrid>(std::move(dich));
    ValidationReport rep = validate_pseudo_grid(h, X, run.witnesses.value(), pg);
    if (!rep.ok)
      throw std::logic_error(cat("layer system: ", rep.summary()));
    note(cat("layered spines: ", pg.depth(), " layers, ", pg.tails.size(),
             " tails"));
    run.grid = std::move(pg);
  }

  // Spines and the tails that cross every layer become the linkage
  // instance; everything off those paths is contracted away.
  const PseudoGrid& pg = run.grid.value();
  const WitnessPaths& wit = run.witnesses.value();
  for (const auto& layer : pg.layers)
    run.spine_of.insert(run.spine_of.end(), layer.begin(), layer.end());
  std::sort(run.spine_of.begin(), run.spine_of.end());
  PathFamily spines;
  for (int p : run.spine_of) spines.paths.push_back(wit.P.paths[p]);

  std::vector<std::set<VertexId>> layer_verts;
  for (const auto& layer : pg.layers) {
    std::set<VertexId> verts;
    for (int p : layer)
      verts.insert(wit.P.paths[p].verts.begin(), wit.P.paths[p].verts.end());
    layer_verts.push_back(std::move(verts));
  }
  PathFamily tails;
  std::set<EdgeId> foreign;
  for (size_t t = 0; t < pg.tails.size(); ++t) {
    const Path& tail = pg.tails[t];
    bool everywhere = true;
    for (const auto& verts : layer_verts) {
      bool hit = false;
      for (VertexId v : tail.verts)
        if (verts.count(v)) {
          hit = true;
          break;
        }
      if (!hit) {
        everywhere = false;
        break;
      }
    }
    if (!everywhere) continue;
    run.kept_tails.push_back(static_cast<int>(t));
    tails.paths.push_back(tail);
    const Path& full = wit.Q.paths[pg.tail_owner[t]];
    std::set<EdgeId> covered(tail.edges.begin(), tail.edges.end());
    for (EdgeId e : full.edges)
      if (!covered.count(e)) foreign.insert(e);
  }
  note(cat("tails crossing every layer: ", tails.size(), " of ",
           pg.tails.size()));
  if (tails.size() == 0) {
    stalled("no tail crosses every layer");
    return run;
  }

  run.union_host = union_graph(h, {&spines, &tails});
  ReducedInstance red = reduce_to_perfect_unique_linkage(
      run.union_host.value(), spines, tails, foreign);
  {
    ValidationReport rep = validate_unique_linkage_instance(red.inst, true);
    if (!rep.ok)
      throw std::logic_error(cat("reduced instance: ", rep.summary()));
  }
  note(cat("reduced: ", red.inst.graph.vertex_count(), " vertices, ",
           red.shared_edge_contractions, " edge collapses, ",
           red.off_linkage_contractions, " absorptions"));
  run.reduced = std::move(red);
  const UniqueLinkageInstance& inst = run.reduced->inst;

  LinkageUniqueness uniq = verify_unique_linkage(inst, cfg.uniqueness_cap);
  if (uniq.status == LinkageUniqueness::Status::kNotUnique) {
    stalled("the reduced linkage is not unique; no slice order exists");
    return run;
  }
  note(cat("uniqueness: ", uniq.note));
  if (std::holds_alternative<NumberingFailure>(rs_numbering(inst))) {
    stalled("no slice order: the ordering constraints cycle");
    return run;
  }

  // First slicing.
  int n_spines = inst.size();
  int n_atts = inst.Q.size();
  int m = cfg.slices, width = cfg.slice_width;
  if (cfg.adapt) {
    m = std::min(m, (n_atts - n_spines) / (width + n_spines));
    if (m < 1) {
      m = 1;
      width = n_atts - 2 * n_spines;
    }
    if (width < 1) {
      stalled(cat("too few attachments to slice: ", n_atts, " tails over ",
                  n_spines, " spines"));
      return run;
    }
    if (m != cfg.slices || width != cfg.slice_width)
      note(cat("slicing clamped to ", m, " slices of width ", width));
  } else if (n_atts < m * width + (m + 1) * n_spines) {
    stalled(cat("too few attachments for ", m, " slices of width ", width));
    return run;
  }
  Slicing slicing = compute_slicing(inst, m, width);
  {
    ValidationReport rep = validate_slicing(inst, slicing, width);
    if (!rep.ok) throw std::logic_error(cat("slicing: ", rep.summary()));
  }
  run.slicing = slicing;
  SliceFamilies fams = slice_families(inst, slicing);
  m = slicing.slices();
  note(cat("sliced into ", m, " slices, narrowest carries ", fams.width,
           " attachments"));

  // Thin every slice down to an intersecting pair.
  std::vector<SliceData> slices(m);
  int dense_count = 0;
  for (int i = 0; i < m; ++i) {
    SliceLedger row;
    row.slice = i;
    std::vector<int> spine_ids, att_ids;
    PathFamily segs, atts;
    for (int p = 0; p < n_spines; ++p)
      if (!fams.segments[i][p].is_empty()) {
        spine_ids.push_back(p);
        segs.paths.push_back(fams.segments[i][p]);
      }
    for (int qi : fams.members[i]) {
      att_ids.push_back(qi);
      atts.paths.push_back(inst.Q.paths[qi]);
    }
    slices[i].slice = i;
    if (thin_slice(cfg, n_spines, std::move(spine_ids), std::move(segs),
                   std::move(att_ids), std::move(atts), row, slices[i]))
      dense_count += slices[i].dense ? 1 : 0;
    slices[i].ledger_row = static_cast<int>(run.ledger.size());
    run.ledger.push_back(std::move(row));
  }
  run.case1 = 2 * dense_count >= m;
  note(cat(dense_count, " of ", m, " slices dense; taking the ",
           run.case1 ? "dense-slice" : "recut", " route"));

  // Cluster carving. The dense route keeps every happy cluster of every
  // dense slice; the recut route keeps one cluster per slice, subdividing
  // sparse slices first and bailing out to a crossbar when a recut finds
  // one.
  const CutOracle oracle =
      make_default_cut_oracle(cfg.oracle_cap, cfg.oracle_samples, cfg.seed);
  std::vector<Candidate> cands;
  for (int i = 0; i < m; ++i) {
    SliceData& sd = slices[i];
    if (!sd.alive) continue;
    if (run.case1) {
      if (sd.dense)
        carve_slice(cfg, inst.graph, oracle, sd, run.ledger[sd.ledger_row],
                    false, cands, run.trace);
      continue;
    }
    if (sd.dense) {
      carve_slice(cfg, inst.graph, oracle, sd, run.ledger[sd.ledger_row],
                  true, cands, run.trace);
      continue;
    }

    // Recut one sparse slice.
    PathFamily seg_row;
    seg_row.paths = fams.segments[i];
    int w2 = cfg.case2_width > 0 ? cfg.case2_width : cfg.slice_width;
    Case2Outcome out;
    try {
      out = case2_reslice(inst.graph, inst.R, seg_row, sd.spine_ids, inst.Q,
                          sd.att_ids, cfg.rho, cfg.case2_slices, w2,
                          cfg.case2);
    } catch (const std::invalid_argument& e) {
      run.ledger[sd.ledger_row].note = cat("recut refused: ", e.what());
      continue;
    }
    if (out.is_crossbar()) {
      Crossbar cb = std::get<Crossbar>(std::move(out.value));
      std::vector<VertexId> x_red;
      for (const Path& q : inst.Q.paths) x_red.push_back(q.b());
      std::sort(x_red.begin(), x_red.end());
      x_red.erase(std::unique(x_red.begin(), x_red.end()), x_red.end());
      ValidationReport rep =
          validate_crossbar(inst.graph, inst.A, inst.B, x_red, cb);
      if (!rep.ok)
        throw std::logic_error(cat("recut crossbar: ", rep.summary()));
      note(cat("slice ", i, " recut found a crossbar of width ", cb.width(),
               " in the reduced instance (", out.blocked,
               " blocked attachments)"));
      run.crossbar = std::move(cb);
      run.crossbar_reduced = true;
      run.outcome = PipelineOutcome::kCrossbar;
      return run;
    }

    const Case2Reslice& rs = std::get<Case2Reslice>(out.value);
    Slicing sub_slicing;
    for (int p : sd.spine_ids)
      sub_slicing.markers.push_back(rs.slicing.markers[p]);
    {
      ValidationReport rep = validate_slicing(rs.sub, sub_slicing, w2);
      if (!rep.ok) throw std::logic_error(cat("recut slicing: ", rep.summary()));
    }
    SliceFamilies sub_fams = slice_families(rs.sub, sub_slicing);
    note(cat("slice ", i, " recut into ", sub_slicing.slices(),
             " sub-slices over ", rs.sub.size(), " retained segments (",
             rs.kept.size(), " attachments kept)"));
    for (int k = 0; k < sub_slicing.slices(); ++k) {
      SliceLedger row;
      row.slice = i;
      row.sub = k;
      SliceData sub;
      sub.slice = i;
      sub.sub = k;
      std::vector<int> spine_ids, att_ids;
      PathFamily segs, atts;
      for (int r = 0; r < rs.sub.size(); ++r)
        if (!sub_fams.segments[k][r].is_empty()) {
          spine_ids.push_back(sd.spine_ids[r]);
          segs.paths.push_back(sub_fams.segments[k][r]);
        }
      for (int mi : sub_fams.members[k]) {
        att_ids.push_back(rs.kept[mi]);
        atts.paths.push_back(rs.sub.Q.paths[mi]);
      }
      if (thin_slice(cfg, n_spines, std::move(spine_ids), std::move(segs),
                     std::move(att_ids), std::move(atts), row, sub))
        carve_slice(cfg, inst.graph, oracle, sub, row, true, cands,
                    run.trace);
      run.ledger.push_back(std::move(row));
    }
  }

  if (cands.empty()) {
    stalled("no slice produced a well-linked cluster");
    return run;
  }

  // Candidate selection: the dense route keeps the heaviest geometric size
  // class, the recut route keeps its one-per-slice picks as they are.
  std::vector<int> chosen;
  if (run.case1) {
    std::vector<int> sizes;
    int d_floor = cands[0].wld_d;
    for (const Candidate& c : cands) d_floor = std::min(d_floor, c.wld_d);
    for (const Candidate& c : cands)
      sizes.push_back(static_cast<int>(c.s_set.size()));
    ClassGrouping grp = group_by_class(sizes, 4 * d_floor, cfg.class_cap);
    chosen = grp.members;
    note(cat("size class ", grp.cls, " wins: ", chosen.size(), " clusters, ",
             grp.path_mass, " housed segments"));
  } else {
    chosen.resize(cands.size());
    for (size_t i = 0; i < cands.size(); ++i) chosen[i] = static_cast<int>(i);
  }

  // Chain hypotheses, clamped to what the candidates support.
  IndexSets idx;
  idx.ground = n_spines;
  idx.d_hat = static_cast<int>(cands[chosen[0]].s_set.size());
  int w_cap = cfg.chain_w;
  for (int ci : chosen) {
    idx.sets.push_back(cands[ci].s_set);
    idx.d_hat = std::min(idx.d_hat, static_cast<int>(cands[ci].s_set.size()));
    w_cap = std::min(w_cap, cands[ci].wld_w);
  }
  long long nn = idx.ground, dd = idx.d_hat, mm = idx.count();
  long long w_fit = std::min({static_cast<long long>(w_cap), nn / 3,
                              dd * dd / (4 * nn), mm * dd / (2 * nn)});
  if (w_fit < 1) {
    stalled(cat("chain hypotheses unreachable: ", mm, " clusters of floor ",
                dd, " over ", nn, " spines"));
    return run;
  }
  if (!cfg.adapt && w_fit < cfg.chain_w) {
    stalled(cat("chain hypotheses fail at width ", cfg.chain_w));
    return run;
  }
  idx.w_hat = static_cast<int>(w_fit);
  run.sets = idx;
  int target = std::min(cfg.pos_length, chain_length_floor(idx));
  Chain chain = find_chain(idx, target);
  run.chain = chain;
  for (int pos : chain.indices) run.link_slice.push_back(cands[chosen[pos]].slice);
  note(cat("chain of ", chain.length(), " clusters at width ", idx.w_hat,
           " (floor ", chain_length_floor(idx), ")"));

  // Assemble the weak chain and try to boost it.
  std::vector<ChainLink> links;
  for (int pos : chain.indices) links.push_back(cands[chosen[pos]].link);
  PathOfSets weak;
  try {
    weak = assemble_weak_pos(links, inst.R, idx.w_hat);
  } catch (const std::invalid_argument& e) {
    stalled(cat("assembly: ", e.what()));
    return run;
  }
  {
    ValidationReport rep = validate_pos(inst.graph, weak, cfg.wl);
    if (!rep.ok)
      throw std::logic_error(cat("assembled chain: ", rep.summary()));
  }
  run.pos = weak;

  auto boosted = boost_to_strong(inst.graph, weak, cfg.boost);
  if (std::holds_alternative<PathOfSets>(boosted)) {
    PathOfSets strong = std::get<PathOfSets>(std::move(boosted));
    ValidationReport rep = validate_pos(inst.graph, strong, cfg.wl);
    if (!rep.ok)
      throw std::logic_error(cat("boosted chain: ", rep.summary()));
    note(cat("boosted to a strong chain of width ", strong.width));
    run.pos = std::move(strong);
    run.outcome = PipelineOutcome::kStrongPos;
  } else {
    run.boost_error = std::get<BoostError>(std::move(boosted));
    note(cat("boost failed (", run.boost_error->message,
             "); keeping the weak chain"));
    run.outcome = PipelineOutcome::kWeakPos;
  }
  return run;
}

}  // namespace gml
