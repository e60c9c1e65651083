#include "gml/pos.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace gml {

namespace {

std::string at_cluster(int i) {
  std::ostringstream s;
  s << "cluster " << i << ": ";
  return s.str();
}

bool subset_of(const std::vector<VertexId>& small,
               const std::set<VertexId>& big) {
  for (VertexId v : small)
    if (!big.count(v)) return false;
  return true;
}

bool all_distinct(const std::vector<VertexId>& vs) {
  std::set<VertexId> s(vs.begin(), vs.end());
  return s.size() == vs.size();
}

void describe_verdict(ValidationReport& rep, const WellLinkedVerdict& v,
                      const std::string& what) {
  if (!v.holds()) {
    std::ostringstream s;
    s << what << " refuted (demand " << v.witness->demand << ", achieved "
      << v.witness->achieved << ")";
    rep.fail(s.str());
  }
}

}  // namespace

ValidationReport validate_pos(const Graph& g, const PathOfSets& p,
                              const WLOptions& wl) {
  ValidationReport rep;
  int l = p.length();
  if (l < 1) {
    rep.fail("no clusters");
    return rep;
  }
  if (static_cast<int>(p.A.size()) != l || static_cast<int>(p.B.size()) != l)
    rep.fail("nail arrays do not match cluster count");
  if (static_cast<int>(p.connectors.size()) != l - 1)
    rep.fail("connector family count is not length-1");
  if (p.width < 1) rep.fail("width must be positive");
  if (!rep.ok) return rep;

  std::map<VertexId, int> owner;
  std::set<VertexId> all_cluster_verts;
  for (int i = 0; i < l; ++i) {
    if (p.clusters[i].empty()) {
      rep.fail(at_cluster(i) + "empty");
      continue;
    }
    bool sound = true;
    for (VertexId v : p.clusters[i]) {
      if (!g.has_vertex(v)) {
        rep.fail(at_cluster(i) + "vertex not in graph");
        sound = false;
        break;
      }
      auto [it, fresh] = owner.emplace(v, i);
      if (!fresh && it->second != i) {
        rep.fail(at_cluster(i) + "overlaps cluster " +
                 std::to_string(it->second));
        sound = false;
        break;
      }
      all_cluster_verts.insert(v);
    }
    if (sound && !g.induced(p.clusters[i]).connected())
      rep.fail(at_cluster(i) + "not connected");
  }
  if (!rep.ok) return rep;

  for (int i = 0; i < l; ++i) {
    std::set<VertexId> cl(p.clusters[i].begin(), p.clusters[i].end());
    if (static_cast<int>(p.A[i].size()) != p.width)
      rep.fail(at_cluster(i) + "|A| != width");
    if (static_cast<int>(p.B[i].size()) != p.width)
      rep.fail(at_cluster(i) + "|B| != width");
    if (!all_distinct(p.A[i]) || !all_distinct(p.B[i]))
      rep.fail(at_cluster(i) + "repeated nail");
    if (!subset_of(p.A[i], cl) || !subset_of(p.B[i], cl))
      rep.fail(at_cluster(i) + "nail outside its cluster");
    std::set<VertexId> a(p.A[i].begin(), p.A[i].end());
    for (VertexId v : p.B[i])
      if (a.count(v)) rep.fail(at_cluster(i) + "A and B share a nail");
  }

  // Connector structure: every family has exactly width paths running from
  // all of B_i onto all of A_{i+1}, and the union of all connectors is
  // node-disjoint and internally clear of every cluster.
  PathFamily combined;
  combined.mode = Disjointness::kInternallyDisjointFrom;
  combined.apart_from.assign(all_cluster_verts.begin(),
                             all_cluster_verts.end());
  for (int i = 0; i + 1 < l; ++i) {
    const PathFamily& fam = p.connectors[i];
    if (fam.size() != p.width) {
      rep.fail("connector " + std::to_string(i) + ": has " +
               std::to_string(fam.size()) + " paths, width is " +
               std::to_string(p.width));
      continue;
    }
    std::set<VertexId> starts, ends;
    for (const Path& path : fam.paths) {
      if (path.is_empty()) {
        rep.fail("connector " + std::to_string(i) + ": empty path");
        continue;
      }
      starts.insert(path.a());
      ends.insert(path.b());
      combined.paths.push_back(path);
    }
    std::set<VertexId> want_b(p.B[i].begin(), p.B[i].end());
    std::set<VertexId> want_a(p.A[i + 1].begin(), p.A[i + 1].end());
    if (starts != want_b)
      rep.fail("connector " + std::to_string(i) +
               ": starts do not cover B exactly");
    if (ends != want_a)
      rep.fail("connector " + std::to_string(i) +
               ": ends do not cover next A exactly");
  }
  if (auto viol = check_family(g, combined))
    rep.fail("connectors: " + viol->message);

  // Well-linkedness only makes sense once the structure is sound; the
  // checkers expect terminals inside the cluster and disjoint sides.
  if (!rep.ok) return rep;

  for (int i = 0; i < l; ++i) {
    Graph cg = g.induced(p.clusters[i]);
    if (p.strength == PosStrength::kWeak) {
      std::vector<VertexId> t = p.A[i];
      t.insert(t.end(), p.B[i].begin(), p.B[i].end());
      describe_verdict(rep, check_edge_well_linked(cg, t, wl),
                       at_cluster(i) + "A∪B edge-well-linkedness");
    } else {
      describe_verdict(rep, check_node_well_linked(cg, p.A[i], wl),
                       at_cluster(i) + "A node-well-linkedness");
      describe_verdict(rep, check_node_well_linked(cg, p.B[i], wl),
                       at_cluster(i) + "B node-well-linkedness");
      describe_verdict(rep, check_linked(cg, p.A[i], p.B[i], wl),
                       at_cluster(i) + "(A,B) linkedness");
    }
  }
  return rep;
}

ValidationReport validate_hairy_pos(const Graph& g, const HairyPathOfSets& h,
                                    const WLOptions& wl) {
  ValidationReport rep;
  if (h.base.strength != PosStrength::kStrong)
    rep.fail("base chain not marked strong");
  rep.merge(validate_pos(g, h.base, wl), "base: ");
  int l = h.base.length();
  if (static_cast<int>(h.hair_clusters.size()) != l ||
      static_cast<int>(h.X.size()) != l ||
      static_cast<int>(h.Y.size()) != l ||
      static_cast<int>(h.hair_links.size()) != l) {
    rep.fail("hair arrays do not match chain length");
    return rep;
  }
  if (!rep.ok) return rep;

  std::set<VertexId> forbidden;  // all base clusters
  for (const auto& c : h.base.clusters) forbidden.insert(c.begin(), c.end());

  std::map<VertexId, int> hair_owner;
  std::set<VertexId> all_hair_verts;
  for (int i = 0; i < l; ++i) {
    if (h.hair_clusters[i].empty()) {
      rep.fail("hair " + std::to_string(i) + ": empty");
      continue;
    }
    bool sound = true;
    for (VertexId v : h.hair_clusters[i]) {
      if (!g.has_vertex(v)) {
        rep.fail("hair " + std::to_string(i) + ": vertex not in graph");
        sound = false;
        break;
      }
      if (forbidden.count(v)) {
        rep.fail("hair " + std::to_string(i) + ": overlaps a base cluster");
        sound = false;
        break;
      }
      auto [it, fresh] = hair_owner.emplace(v, i);
      if (!fresh && it->second != i) {
        rep.fail("hair " + std::to_string(i) + ": overlaps hair " +
                 std::to_string(it->second));
        sound = false;
        break;
      }
      all_hair_verts.insert(v);
    }
    if (sound && !g.induced(h.hair_clusters[i]).connected())
      rep.fail("hair " + std::to_string(i) + ": not connected");
  }
  if (!rep.ok) return rep;

  for (int i = 0; i < l; ++i) {
    std::set<VertexId> hs(h.hair_clusters[i].begin(),
                          h.hair_clusters[i].end());
    std::set<VertexId> cl(h.base.clusters[i].begin(),
                          h.base.clusters[i].end());
    if (h.Y[i].empty() || !subset_of(h.Y[i], hs))
      rep.fail("hair " + std::to_string(i) + ": Y not inside the hair");
    if (static_cast<int>(h.X[i].size()) != h.base.width)
      rep.fail("hair " + std::to_string(i) + ": |X| != width");
    if (!subset_of(h.X[i], cl) || !all_distinct(h.X[i]))
      rep.fail("hair " + std::to_string(i) + ": X not inside the cluster");
    for (VertexId v : h.X[i]) {
      bool in_a = std::count(h.base.A[i].begin(), h.base.A[i].end(), v) > 0;
      bool in_b = std::count(h.base.B[i].begin(), h.base.B[i].end(), v) > 0;
      if (in_a || in_b)
        rep.fail("hair " + std::to_string(i) + ": X touches a nail");
    }
  }
  if (!rep.ok) return rep;

  for (int i = 0; i < l; ++i) {
    describe_verdict(rep,
                     check_node_well_linked(g.induced(h.hair_clusters[i]),
                                            h.Y[i], wl),
                     "hair " + std::to_string(i) + ": Y node-well-linkedness");
    describe_verdict(rep,
                     check_linked(g.induced(h.base.clusters[i]), h.base.A[i],
                                  h.X[i], wl),
                     "hair " + std::to_string(i) + ": (A,X) linkedness");
  }

  // Hair links: per hair, width node-disjoint X_i -> Y_i paths; globally
  // the hair links and the base connectors stay pairwise node-disjoint and
  // internally clear of every cluster and hair.
  PathFamily combined;
  combined.mode = Disjointness::kInternallyDisjointFrom;
  combined.apart_from.assign(forbidden.begin(), forbidden.end());
  combined.apart_from.insert(combined.apart_from.end(),
                             all_hair_verts.begin(), all_hair_verts.end());
  for (int i = 0; i < l; ++i) {
    const PathFamily& fam = h.hair_links[i];
    if (fam.size() != h.base.width) {
      rep.fail("hair links " + std::to_string(i) + ": wrong count");
      continue;
    }
    std::set<VertexId> starts;
    std::set<VertexId> ys(h.Y[i].begin(), h.Y[i].end());
    for (const Path& path : fam.paths) {
      if (path.is_empty()) {
        rep.fail("hair links " + std::to_string(i) + ": empty path");
        continue;
      }
      starts.insert(path.a());
      if (!ys.count(path.b()))
        rep.fail("hair links " + std::to_string(i) + ": end not in Y");
      combined.paths.push_back(path);
    }
    std::set<VertexId> want(h.X[i].begin(), h.X[i].end());
    if (starts != want)
      rep.fail("hair links " + std::to_string(i) +
               ": starts do not cover X exactly");
  }
  for (const PathFamily& fam : h.base.connectors)
    for (const Path& path : fam.paths) combined.paths.push_back(path);
  if (auto viol = check_family(g, combined))
    rep.fail("hair links and connectors: " + viol->message);

  return rep;
}

std::variant<PathOfSets, StitchError> stitch(
    const Graph& g, const PathOfSets& p,
    const std::vector<StitchPick>& picks) {
  int l = p.length();
  int out_l = (l + 1) / 2;
  if (static_cast<int>(picks.size()) != out_l)
    return StitchError{"need one pick per odd-position cluster", -1, {}};
  int w_out = static_cast<int>(picks[0].A_sub.size());
  for (int j = 0; j < out_l; ++j) {
    const auto& pk = picks[j];
    if (static_cast<int>(pk.A_sub.size()) != w_out ||
        static_cast<int>(pk.B_sub.size()) != w_out)
      return StitchError{"pick sizes differ", 2 * j, {}};
    if (w_out < 1) return StitchError{"empty pick", 2 * j, {}};
    if (!all_distinct(pk.A_sub) || !all_distinct(pk.B_sub))
      return StitchError{"repeated vertex in pick", 2 * j, {}};
    std::set<VertexId> a(p.A[2 * j].begin(), p.A[2 * j].end());
    std::set<VertexId> b(p.B[2 * j].begin(), p.B[2 * j].end());
    if (!subset_of(pk.A_sub, a) || !subset_of(pk.B_sub, b))
      return StitchError{"pick not a subset of its nail set", 2 * j, {}};
  }

  PathOfSets out;
  out.width = w_out;
  out.strength = p.strength;
  for (int j = 0; j < out_l; ++j) {
    out.clusters.push_back(p.clusters[2 * j]);
    out.A.push_back(picks[j].A_sub);
    out.B.push_back(picks[j].B_sub);
  }

  for (int j = 0; j + 1 < out_l; ++j) {
    int mid = 2 * j + 1;
    std::set<VertexId> from(picks[j].B_sub.begin(), picks[j].B_sub.end());
    std::set<VertexId> to(picks[j + 1].A_sub.begin(),
                          picks[j + 1].A_sub.end());

    std::map<VertexId, const Path*> left_by_end;  // A_mid vertex -> path
    std::vector<VertexId> xs;
    for (const Path& path : p.connectors[2 * j].paths)
      if (from.count(path.a())) {
        left_by_end[path.b()] = &path;
        xs.push_back(path.b());
      }
    std::map<VertexId, const Path*> right_by_start;  // B_mid vertex -> path
    std::vector<VertexId> ys;
    for (const Path& path : p.connectors[mid].paths)
      if (to.count(path.b())) {
        right_by_start[path.a()] = &path;
        ys.push_back(path.a());
      }
    if (static_cast<int>(xs.size()) != w_out ||
        static_cast<int>(ys.size()) != w_out)
      return StitchError{"connector endpoints do not match the picks", mid, {}};

    Graph mid_graph = g.induced(p.clusters[mid]);
    LinkageResult link = max_node_disjoint_paths(mid_graph, xs, ys);
    if (link.value < w_out) {
      StitchError err;
      err.message = "middle cluster cannot route the picked width";
      err.cluster = mid;
      err.separator = link.vertex_cut;
      return err;
    }

    PathFamily stitched;
    stitched.mode = Disjointness::kNodeDisjoint;
    for (const Path& q : link.paths.paths) {
      const Path* lhs = left_by_end.at(q.a());
      const Path* rhs = right_by_start.at(q.b());
      stitched.paths.push_back(lhs->concat(q).concat(*rhs));
    }
    out.connectors.push_back(std::move(stitched));
  }
  return out;
}

namespace {

// Select-and-verify: stratified first, then seeded shuffles, accepting the
// first candidate whose node-well-linkedness verdict holds.
std::optional<std::vector<VertexId>> find_wl_subset(
    const Graph& cluster_graph, std::vector<VertexId> pool, int k,
    int retries, std::uint64_t seed, const WLOptions& wl) {
  if (k < 1 || k > static_cast<int>(pool.size())) return std::nullopt;
  std::sort(pool.begin(), pool.end());
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt <= retries; ++attempt) {
    std::vector<VertexId> cand;
    if (attempt == 0) {
      double step = static_cast<double>(pool.size()) / k;
      for (int i = 0; i < k; ++i)
        cand.push_back(pool[static_cast<size_t>(i * step)]);
    } else {
      std::vector<VertexId> shuffled = pool;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      cand.assign(shuffled.begin(), shuffled.begin() + k);
      std::sort(cand.begin(), cand.end());
    }
    if (check_node_well_linked(cluster_graph, cand, wl).holds()) return cand;
  }
  return std::nullopt;
}

}  // namespace

std::variant<PathOfSets, BoostError> boost_to_strong(const Graph& g,
                                                     const PathOfSets& weak,
                                                     const BoostConfig& cfg) {
  int l = weak.length();
  int w = weak.width;
  int den1 = cfg.den1 > 0 ? cfg.den1 : 10 * cfg.delta;
  auto shrink = [&](int x) { return (x * cfg.num1 + den1 - 1) / den1; };
  int w1 = shrink(w);
  int w2 = shrink(w1);
  int wt = w2 * cfg.num2 / cfg.den2;
  if (wt < 1) {
    std::ostringstream s;
    s << "width underflow: " << w << " -> " << w1 << " -> " << w2 << " -> "
      << wt << " (ratios " << cfg.num1 << "/" << den1 << " twice, then "
      << cfg.num2 << "/" << cfg.den2 << ")";
    return BoostError{s.str()};
  }
  if (w1 > w || w2 > w1 || wt > w2)
    return BoostError{"shrink ratios must not increase the width"};

  std::vector<Graph> cluster_graphs;
  cluster_graphs.reserve(l);
  for (int i = 0; i < l; ++i) cluster_graphs.push_back(g.induced(weak.clusters[i]));

  BoostError last{"boost never ran", -1};
  for (int attempt = 0; attempt <= cfg.retries; ++attempt) {
    std::uint64_t seed = cfg.seed + 0x100000001ULL * attempt;
    PathOfSets out;
    out.width = wt;
    out.strength = PosStrength::kStrong;
    out.clusters = weak.clusters;
    out.A.assign(l, {});
    out.B.assign(l, {});
    out.connectors.clear();

    bool failed = false;
    auto give_up = [&](int cluster, const std::string& msg) {
      last = BoostError{msg, cluster};
      failed = true;
    };

    // Gap pass: for every consecutive pair, shrink B_i to a
    // node-well-linked core, follow its connectors, shrink the landing set
    // inside the next cluster, and keep the first wt survivors.
    for (int i = 0; i + 1 < l && !failed; ++i) {
      auto tb = find_wl_subset(cluster_graphs[i], weak.B[i], w1, cfg.retries,
                               seed ^ (2 * i + 1), cfg.wl);
      if (!tb) {
        give_up(i, "no node-well-linked B core found");
        break;
      }
      std::set<VertexId> tbs(tb->begin(), tb->end());
      std::vector<const Path*> followed;
      std::vector<VertexId> landing;
      for (const Path& path : weak.connectors[i].paths)
        if (tbs.count(path.a())) {
          followed.push_back(&path);
          landing.push_back(path.b());
        }
      auto ta = find_wl_subset(cluster_graphs[i + 1], landing, w2,
                               cfg.retries, seed ^ (2 * i + 2), cfg.wl);
      if (!ta) {
        give_up(i + 1, "no node-well-linked landing core found");
        break;
      }
      std::set<VertexId> tas(ta->begin(), ta->end());
      PathFamily kept;
      kept.mode = Disjointness::kNodeDisjoint;
      for (const Path* path : followed) {
        if (!tas.count(path->b())) continue;
        if (kept.size() == wt) break;
        kept.paths.push_back(*path);
      }
      if (kept.size() != wt) {
        give_up(i, "not enough surviving connectors");
        break;
      }
      for (const Path& path : kept.paths) {
        out.B[i].push_back(path.a());
        out.A[i + 1].push_back(path.b());
      }
      out.connectors.push_back(std::move(kept));
    }
    if (failed) continue;

    // End pass: fresh nails for the outermost sides.
    auto ta1 = find_wl_subset(cluster_graphs[0], weak.A[0], w1, cfg.retries,
                              seed ^ 0x51ULL, cfg.wl);
    if (!ta1) {
      last = BoostError{"no node-well-linked A core in the first cluster", 0};
      continue;
    }
    out.A[0].assign(ta1->begin(), ta1->begin() + wt);
    auto tbl = find_wl_subset(cluster_graphs[l - 1], weak.B[l - 1], w1,
                              cfg.retries, seed ^ 0x52ULL, cfg.wl);
    if (!tbl) {
      last = BoostError{"no node-well-linked B core in the last cluster",
                        l - 1};
      continue;
    }
    out.B[l - 1].assign(tbl->begin(), tbl->begin() + wt);

    for (int i = 0; i < l && !failed; ++i) {
      std::set<VertexId> a(out.A[i].begin(), out.A[i].end());
      bool clash = false;
      for (VertexId v : out.B[i]) clash |= a.count(v) > 0;
      if (clash) {
        give_up(i, "new nails collide");
        break;
      }
      auto verdict = check_linked(cluster_graphs[i], out.A[i], out.B[i],
                                  cfg.wl);
      if (!verdict.holds()) {
        give_up(i, "new nails not linked");
        break;
      }
    }
    if (failed) continue;
    return out;
  }
  return last;
}

}  // namespace gml
