#include "gml/slicing.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace gml {

namespace {

std::set<VertexId> family_vertex_set(const PathFamily& f) {
  std::set<VertexId> s;
  for (const Path& p : f.paths) s.insert(p.verts.begin(), p.verts.end());
  return s;
}

std::set<EdgeId> family_edge_set(const PathFamily& f) {
  std::set<EdgeId> s;
  for (const Path& p : f.paths) s.insert(p.edges.begin(), p.edges.end());
  return s;
}

// Applies a single edge contraction to a path: a path carrying the edge
// loses the dropped endpoint of the merged pair, any other path just has
// the dropped vertex renamed.
void rewrite_after_contraction(Path& p, EdgeId e, VertexId kept,
                               VertexId dropped) {
  auto it = std::find(p.edges.begin(), p.edges.end(), e);
  if (it != p.edges.end()) {
    size_t k = static_cast<size_t>(it - p.edges.begin());
    p.edges.erase(it);
    if (p.verts[k] == dropped)
      p.verts.erase(p.verts.begin() + static_cast<long>(k));
    else
      p.verts.erase(p.verts.begin() + static_cast<long>(k) + 1);
    return;
  }
  for (VertexId& v : p.verts)
    if (v == dropped) v = kept;
}

struct Reducer {
  Graph g;
  std::vector<Path> rs, qs;
  std::set<EdgeId> link_edges, att_edges;
  std::map<VertexId, VertexId> placement;  // input id -> current id

  void contract(EdgeId e) {
    const Edge& ed = g.edge(e);
    VertexId u = ed.u, v = ed.v;
    Contraction con = g.contract_edge(e);
    if (con.dropped_edges.size() != 1)
      throw std::logic_error(
          "contraction dropped an edge besides the contracted one; the input "
          "was not a clean union of simple paths");
    VertexId kept = con.kept;
    VertexId dropped = (u == kept) ? v : u;
    g = std::move(con.graph);
    for (Path& p : rs) rewrite_after_contraction(p, e, kept, dropped);
    for (Path& p : qs) rewrite_after_contraction(p, e, kept, dropped);
    link_edges.erase(e);
    att_edges.erase(e);
    for (auto& [orig, cur] : placement)
      if (cur == dropped) cur = kept;
  }
};

// Rank lookup tables shared by the numbering and slicing routines. Only
// meaningful for perfect instances, where every vertex lies on exactly one
// linkage path.
struct PathIndex {
  std::map<VertexId, std::pair<int, int>> at;  // vertex -> (path, position)

  explicit PathIndex(const UniqueLinkageInstance& inst) {
    for (int p = 0; p < inst.R.size(); ++p) {
      const auto& vs = inst.R.paths[p].verts;
      for (int k = 0; k < static_cast<int>(vs.size()); ++k) {
        if (!at.emplace(vs[k], std::make_pair(p, k)).second)
          throw std::invalid_argument(
              "linkage paths share a vertex; not a node-disjoint linkage");
      }
    }
    if (static_cast<int>(at.size()) != inst.graph.vertex_count())
      throw std::invalid_argument(
          "some graph vertex lies on no linkage path; instance is not "
          "perfect");
  }
};

// Per-path separator positions for threshold t: the first position whose
// rank reaches t, else the last position.
std::vector<int> separator_positions(const UniqueLinkageInstance& inst,
                                     const Numbering& nu, int t) {
  std::vector<int> pos(inst.R.size());
  for (int p = 0; p < inst.R.size(); ++p) {
    const auto& vs = inst.R.paths[p].verts;
    int hit = static_cast<int>(vs.size()) - 1;
    for (int k = 0; k < static_cast<int>(vs.size()); ++k)
      if (nu.mu.at(vs[k]) >= t) {
        hit = k;
        break;
      }
    pos[p] = hit;
  }
  return pos;
}

}  // namespace

ValidationReport validate_unique_linkage_instance(
    const UniqueLinkageInstance& inst, bool require_perfect) {
  ValidationReport rep;
  int n = inst.size();
  if (static_cast<int>(inst.A.size()) != n ||
      static_cast<int>(inst.B.size()) != n)
    rep.fail("terminal side sizes disagree with the linkage size");

  auto check = [&](const PathFamily& f, const char* name) {
    PathFamily copy = f;
    copy.mode = Disjointness::kNodeDisjoint;
    if (auto viol = check_family(inst.graph, copy))
      rep.fail(std::string(name) + ": " + viol->message);
  };
  check(inst.R, "linkage");
  check(inst.Q, "attachments");
  if (!rep.ok) return rep;

  std::set<VertexId> a_set(inst.A.begin(), inst.A.end());
  std::set<VertexId> b_set(inst.B.begin(), inst.B.end());
  if (static_cast<int>(a_set.size()) != n)
    rep.fail("duplicate vertex on side A");
  if (static_cast<int>(b_set.size()) != n)
    rep.fail("duplicate vertex on side B");
  std::set<VertexId> starts, ends;
  for (const Path& r : inst.R.paths) {
    starts.insert(r.a());
    ends.insert(r.b());
  }
  if (starts != a_set) rep.fail("linkage starts do not match side A");
  if (ends != b_set) rep.fail("linkage ends do not match side B");

  std::set<VertexId> on_linkage = family_vertex_set(inst.R);
  for (int qi = 0; qi < inst.Q.size(); ++qi) {
    const Path& q = inst.Q.paths[qi];
    bool meets = std::any_of(q.verts.begin(), q.verts.end(), [&](VertexId v) {
      return on_linkage.count(v) > 0;
    });
    if (!meets)
      rep.fail("attachment " + std::to_string(qi) +
               " never touches the linkage");
  }

  if (require_perfect) {
    for (VertexId v : inst.graph.vertices())
      if (!on_linkage.count(v)) {
        rep.fail("vertex " + std::to_string(v) + " lies on no linkage path");
        break;
      }
  }
  return rep;
}

ReducedInstance reduce_to_perfect_unique_linkage(
    const Graph& h_union, const PathFamily& linkage,
    const PathFamily& attached, const std::set<EdgeId>& foreign_edges) {
  {
    PathFamily l = linkage, a = attached;
    l.mode = Disjointness::kNodeDisjoint;
    a.mode = Disjointness::kNodeDisjoint;
    if (auto viol = check_family(h_union, l))
      throw std::invalid_argument("linkage family invalid: " + viol->message);
    if (auto viol = check_family(h_union, a))
      throw std::invalid_argument("attachment family invalid: " +
                                  viol->message);
  }
  {
    std::set<EdgeId> covered = family_edge_set(linkage);
    const std::set<EdgeId> att = family_edge_set(attached);
    covered.insert(att.begin(), att.end());
    if (static_cast<int>(covered.size()) != h_union.edge_count())
      throw std::invalid_argument(
          "graph has edges outside the given paths; pass their union");
    std::set<VertexId> touched = family_vertex_set(linkage);
    const std::set<VertexId> qv = family_vertex_set(attached);
    touched.insert(qv.begin(), qv.end());
    if (static_cast<int>(touched.size()) != h_union.vertex_count())
      throw std::invalid_argument(
          "graph has vertices outside the given paths; pass their union");
  }

  Reducer red;
  red.g = h_union;
  red.rs = linkage.paths;
  red.qs = attached.paths;
  red.link_edges = family_edge_set(linkage);
  red.att_edges = family_edge_set(attached);
  for (VertexId v : h_union.vertices()) red.placement[v] = v;

  ReducedInstance out;

  // Shared edges first: every linkage edge also ridden by an attachment
  // route collapses, lowest edge id each time.
  while (true) {
    EdgeId pick = -1;
    for (EdgeId e : red.link_edges)
      if (red.att_edges.count(e) || foreign_edges.count(e)) {
        pick = e;
        break;
      }
    if (pick < 0) break;
    red.contract(pick);
    ++out.shared_edge_contractions;
  }

  // Then absorb vertices the attachments visit off the linkage.
  while (true) {
    std::set<VertexId> on_linkage;
    for (const Path& r : red.rs)
      on_linkage.insert(r.verts.begin(), r.verts.end());
    VertexId cand = -1;
    for (const Path& q : red.qs)
      for (VertexId v : q.verts)
        if (!on_linkage.count(v) && (cand < 0 || v < cand)) cand = v;
    if (cand < 0) break;
    const auto& inc = red.g.incident(cand);
    if (inc.empty())
      throw std::invalid_argument(
          "attachment vertex " + std::to_string(cand) +
          " has no edges; the attachment never meets the linkage");
    EdgeId pick = inc[0].id;
    for (const IncidentEdge& ie : inc) pick = std::min(pick, ie.id);
    red.contract(pick);
    ++out.off_linkage_contractions;
  }

  out.inst.graph = std::move(red.g);
  out.inst.R.paths = std::move(red.rs);
  out.inst.R.mode = Disjointness::kNodeDisjoint;
  out.inst.Q.paths = std::move(red.qs);
  out.inst.Q.mode = Disjointness::kNodeDisjoint;
  for (const Path& r : out.inst.R.paths) {
    out.inst.A.push_back(r.a());
    out.inst.B.push_back(r.b());
  }
  for (const auto& [orig, cur] : red.placement)
    if (orig != cur) out.vertex_map[orig] = cur;

  ValidationReport rep = validate_unique_linkage_instance(out.inst, true);
  if (!rep.ok)
    throw std::logic_error("reduction produced a broken instance: " +
                           rep.summary());
  for (EdgeId e : family_edge_set(out.inst.R))
    if (family_edge_set(out.inst.Q).count(e) || foreign_edges.count(e))
      throw std::logic_error("a shared linkage edge survived the collapse");
  return out;
}

LinkageUniqueness verify_unique_linkage(const UniqueLinkageInstance& inst,
                                        int vertex_cap) {
  LinkageUniqueness res;
  if (inst.graph.vertex_count() > vertex_cap) {
    res.status = LinkageUniqueness::Status::kUnverified;
    res.note = "unverified (trusted by construction)";
    return res;
  }
  int n = inst.size();
  for (const Path& r : inst.R.paths) {
    for (EdgeId e : r.edges) {
      std::vector<EdgeId> rest;
      for (EdgeId other : inst.graph.edge_ids())
        if (other != e) rest.push_back(other);
      Graph cut = inst.graph.edge_subgraph(rest, inst.graph.vertices());
      LinkageResult link = max_node_disjoint_paths(cut, inst.A, inst.B);
      if (link.value == n) {
        res.status = LinkageUniqueness::Status::kNotUnique;
        res.second = link.paths;
        res.note = "a second linkage avoids edge " + std::to_string(e);
        return res;
      }
    }
  }
  res.status = LinkageUniqueness::Status::kUnique;
  return res;
}

std::variant<Numbering, NumberingFailure> rs_numbering(
    const UniqueLinkageInstance& inst) {
  PathIndex idx(inst);
  std::vector<VertexId> verts = inst.graph.vertices();
  std::map<VertexId, int> slot;
  for (int i = 0; i < static_cast<int>(verts.size()); ++i) slot[verts[i]] = i;
  int n = static_cast<int>(verts.size());

  std::vector<std::vector<int>> out(n), in(n);
  std::vector<int> indeg(n, 0);
  auto arc = [&](VertexId a, VertexId b) {
    int sa = slot[a], sb = slot[b];
    out[sa].push_back(sb);
    in[sb].push_back(sa);
    ++indeg[sb];
  };

  for (const Path& r : inst.R.paths)
    for (size_t i = 0; i < r.verts.size(); ++i)
      for (size_t j = i + 1; j < r.verts.size(); ++j)
        arc(r.verts[i], r.verts[j]);

  // A graph edge joining two paths forces everything strictly before either
  // endpoint on its own path to precede the other endpoint.
  for (EdgeId e : inst.graph.edge_ids()) {
    const Edge& ed = inst.graph.edge(e);
    auto [pu, ku] = idx.at.at(ed.u);
    auto [pv, kv] = idx.at.at(ed.v);
    if (pu == pv) continue;
    const auto& ru = inst.R.paths[pu].verts;
    const auto& rv = inst.R.paths[pv].verts;
    for (int k = 0; k < ku; ++k) arc(ru[k], ed.v);
    for (int k = 0; k < kv; ++k) arc(rv[k], ed.u);
  }

  std::set<VertexId> ready;
  for (int i = 0; i < n; ++i)
    if (indeg[i] == 0) ready.insert(verts[i]);
  Numbering nu;
  std::vector<bool> done(n, false);
  while (!ready.empty()) {
    VertexId v = *ready.begin();
    ready.erase(ready.begin());
    int s = slot[v];
    done[s] = true;
    nu.by_rank.push_back(v);
    nu.mu[v] = static_cast<int>(nu.by_rank.size());
    for (int t : out[s])
      if (--indeg[t] == 0 && !done[t]) ready.insert(verts[t]);
  }
  if (static_cast<int>(nu.by_rank.size()) == n) return nu;

  // Leftover vertices all keep an incoming arc; walking predecessors must
  // loop. Surface that loop as the witness.
  NumberingFailure fail;
  std::vector<int> stamp(n, -1);
  int cur = -1;
  for (int i = 0; i < n; ++i)
    if (!done[i]) {
      cur = i;
      break;
    }
  std::vector<int> walk;
  while (stamp[cur] < 0) {
    stamp[cur] = static_cast<int>(walk.size());
    walk.push_back(cur);
    int prev = -1;
    for (int s : in[cur])
      if (!done[s]) {
        prev = s;
        break;
      }
    cur = prev;
  }
  for (int i = stamp[cur]; i < static_cast<int>(walk.size()); ++i)
    fail.cycle.push_back(verts[walk[i]]);
  std::reverse(fail.cycle.begin(), fail.cycle.end());
  return fail;
}

std::vector<VertexId> numbering_separator(const UniqueLinkageInstance& inst,
                                          const Numbering& nu, int t) {
  std::vector<int> pos = separator_positions(inst, nu, t);
  std::vector<VertexId> sep;
  for (int p = 0; p < inst.R.size(); ++p)
    sep.push_back(inst.R.paths[p].verts[pos[p]]);
  return sep;
}

ValidationReport validate_numbering(const UniqueLinkageInstance& inst,
                                    const Numbering& nu) {
  ValidationReport rep;
  int n = inst.graph.vertex_count();
  if (static_cast<int>(nu.mu.size()) != n ||
      static_cast<int>(nu.by_rank.size()) != n) {
    rep.fail("rank table size does not match the vertex count");
    return rep;
  }
  std::vector<bool> seen(n + 1, false);
  for (const auto& [v, r] : nu.mu) {
    if (!inst.graph.has_vertex(v)) {
      rep.fail("ranked vertex " + std::to_string(v) + " is not in the graph");
      return rep;
    }
    if (r < 1 || r > n || seen[r]) {
      rep.fail("ranks are not a bijection onto 1..|V|");
      return rep;
    }
    seen[r] = true;
  }
  for (int i = 0; i < n; ++i)
    if (nu.mu.at(nu.by_rank[i]) != i + 1) {
      rep.fail("rank list disagrees with the rank map");
      return rep;
    }

  for (int p = 0; p < inst.R.size(); ++p) {
    const auto& vs = inst.R.paths[p].verts;
    for (size_t k = 0; k + 1 < vs.size(); ++k)
      if (nu.mu.at(vs[k]) >= nu.mu.at(vs[k + 1])) {
        rep.fail("ranks not increasing along linkage path " +
                 std::to_string(p));
        break;
      }
  }
  if (!rep.ok) return rep;

  for (int t = 1; t <= n; ++t) {
    std::vector<VertexId> sep = numbering_separator(inst, nu, t);
    std::set<VertexId> sep_set(sep.begin(), sep.end());
    if (static_cast<int>(sep_set.size()) != inst.R.size()) {
      rep.fail("separator at t=" + std::to_string(t) +
               " repeats a vertex across paths");
      continue;
    }
    // Flood from every low-ranked vertex outside the separator; reaching a
    // high-ranked vertex breaks the cut guarantee.
    std::set<VertexId> visited;
    std::queue<VertexId> bfs;
    for (VertexId v : inst.graph.vertices())
      if (nu.mu.at(v) < t && !sep_set.count(v)) {
        visited.insert(v);
        bfs.push(v);
      }
    bool leaked = false;
    while (!bfs.empty() && !leaked) {
      VertexId v = bfs.front();
      bfs.pop();
      for (const IncidentEdge& ie : inst.graph.incident(v)) {
        if (sep_set.count(ie.to) || visited.count(ie.to)) continue;
        if (nu.mu.at(ie.to) >= t) {
          leaked = true;
          break;
        }
        visited.insert(ie.to);
        bfs.push(ie.to);
      }
    }
    if (leaked)
      rep.fail("separator at t=" + std::to_string(t) +
               " does not cut low ranks from high ranks");
  }
  return rep;
}

SliceFamilies slice_families(const UniqueLinkageInstance& inst,
                             const Slicing& s) {
  PathIndex idx(inst);
  int m = s.slices();
  SliceFamilies fam;
  fam.segments.assign(m, {});
  fam.members.assign(m, {});
  for (int i = 1; i <= m; ++i) {
    for (int p = 0; p < inst.R.size(); ++p) {
      int lo = s.markers[p][i - 1], hi = s.markers[p][i];
      if (hi - lo >= 2)
        fam.segments[i - 1].push_back(inst.R.paths[p].subpath(lo + 1, hi - 1));
      else
        fam.segments[i - 1].push_back(Path{});
    }
  }
  for (int qi = 0; qi < inst.Q.size(); ++qi) {
    const Path& q = inst.Q.paths[qi];
    for (int i = 1; i <= m; ++i) {
      bool inside = true;
      for (VertexId v : q.verts) {
        auto [p, k] = idx.at.at(v);
        if (k <= s.markers[p][i - 1] || k >= s.markers[p][i]) {
          inside = false;
          break;
        }
      }
      if (inside) {
        fam.members[i - 1].push_back(qi);
        break;
      }
    }
  }
  fam.width = inst.Q.size();
  for (const auto& ms : fam.members)
    fam.width = std::min(fam.width, static_cast<int>(ms.size()));
  if (m == 0) fam.width = 0;
  return fam;
}

Slicing compute_slicing(const UniqueLinkageInstance& inst, int m_hat,
                        int w_hat) {
  int n_paths = inst.size();
  if (m_hat < 1 || w_hat < 1)
    throw std::invalid_argument("slice count and width must be positive");
  if (inst.Q.size() < m_hat * w_hat + (m_hat + 1) * n_paths) {
    std::ostringstream os;
    os << "need at least " << m_hat * w_hat + (m_hat + 1) * n_paths
       << " attachment paths for " << m_hat << " slices of width " << w_hat
       << "; got " << inst.Q.size();
    throw std::invalid_argument(os.str());
  }

  Slicing s;
  s.markers.assign(n_paths, {});
  for (int p = 0; p < n_paths; ++p)
    s.markers[p].push_back(0);
  if (m_hat == 1) {
    for (int p = 0; p < n_paths; ++p)
      s.markers[p].push_back(inst.R.paths[p].length());
    return s;
  }

  auto numbered = rs_numbering(inst);
  if (std::holds_alternative<NumberingFailure>(numbered))
    throw std::invalid_argument(
        "instance admits a second linkage (rank cycle found); slicing "
        "requires uniqueness");
  const Numbering& nu = std::get<Numbering>(numbered);
  PathIndex idx(inst);
  int n = inst.graph.vertex_count();

  // Rank of the lowest-ranked vertex on each attachment path.
  std::vector<int> q_min_rank(inst.Q.size());
  for (int qi = 0; qi < inst.Q.size(); ++qi) {
    int best = n + 1;
    for (VertexId v : inst.Q.paths[qi].verts)
      best = std::min(best, nu.mu.at(v));
    q_min_rank[qi] = best;
  }

  // Attachment paths cleanly below the threshold-t separator: touching no
  // separator vertex, with at least one vertex ranked under t.
  auto below = [&](int qi, int t, const std::vector<int>& sep_pos) {
    if (q_min_rank[qi] >= t) return false;
    for (VertexId v : inst.Q.paths[qi].verts) {
      auto [p, k] = idx.at.at(v);
      if (k == sep_pos[p]) return false;
    }
    return true;
  };

  // Paths confined strictly inside the still-open last window, which runs
  // from the latest marker to each path's end.
  std::vector<int> open(inst.Q.size());
  for (int qi = 0; qi < inst.Q.size(); ++qi) open[qi] = qi;
  auto shrink_open = [&](const std::vector<int>& last_marker) {
    std::vector<int> kept;
    for (int qi : open) {
      bool inside = true;
      for (VertexId v : inst.Q.paths[qi].verts) {
        auto [p, k] = idx.at.at(v);
        if (k <= last_marker[p] ||
            k >= static_cast<int>(inst.R.paths[p].verts.size()) - 1) {
          inside = false;
          break;
        }
      }
      if (inside) kept.push_back(qi);
    }
    return kept;
  };

  int t_prev = 0;
  std::vector<int> last_marker(n_paths, 0);
  for (int round = 1; round <= m_hat - 1; ++round) {
    int target = (round == 1) ? w_hat + n_paths : w_hat;
    if (static_cast<int>(open.size()) < target + n_paths)
      throw std::logic_error(
          "too few attachment paths remain in the open slice; the entry "
          "count guarantee failed");
    std::set<int> prev_members;
    int chosen = -1;
    for (int t = t_prev + 1; t <= n; ++t) {
      std::vector<int> sep_pos = separator_positions(inst, nu, t);
      std::set<int> members;
      for (int qi : open)
        if (below(qi, t, sep_pos)) members.insert(qi);
      if (!std::includes(members.begin(), members.end(), prev_members.begin(),
                         prev_members.end()))
        throw std::logic_error("cleanly-below family lost a path as the "
                               "separator advanced");
      if (static_cast<int>(members.size()) >
          static_cast<int>(prev_members.size()) + 1)
        throw std::logic_error(
            "cleanly-below family grew by more than one per rank step");
      if (round == 1 && t == 1 && !members.empty())
        throw std::logic_error(
            "separator at t=1 should sit at every path start");
      if (static_cast<int>(members.size()) == target) {
        chosen = t;
        for (int p = 0; p < n_paths; ++p) last_marker[p] = sep_pos[p];
        break;
      }
      prev_members = std::move(members);
    }
    if (chosen < 0)
      throw std::logic_error(
          "no separator admits the required cleanly-below count");
    t_prev = chosen;
    for (int p = 0; p < n_paths; ++p) s.markers[p].push_back(last_marker[p]);
    open = shrink_open(last_marker);
  }
  for (int p = 0; p < n_paths; ++p)
    s.markers[p].push_back(inst.R.paths[p].length());

  SliceFamilies fam = slice_families(inst, s);
  if (fam.width < w_hat)
    throw std::logic_error("final slicing is narrower than the guarantee");
  return s;
}

ValidationReport validate_slicing(const UniqueLinkageInstance& inst,
                                  const Slicing& s, int min_width) {
  ValidationReport rep;
  if (static_cast<int>(s.markers.size()) != inst.R.size()) {
    rep.fail("marker table size does not match the linkage");
    return rep;
  }
  int m = s.slices();
  if (m < 1) {
    rep.fail("slicing has no slices");
    return rep;
  }
  for (int p = 0; p < inst.R.size(); ++p) {
    const auto& ms = s.markers[p];
    if (static_cast<int>(ms.size()) != m + 1) {
      rep.fail("path " + std::to_string(p) +
               " has a marker count unlike the others");
      return rep;
    }
    int len = inst.R.paths[p].length();
    if (ms.front() != 0)
      rep.fail("path " + std::to_string(p) + " markers do not start at a()");
    if (ms.back() != len)
      rep.fail("path " + std::to_string(p) + " markers do not end at b()");
    for (int i = 0; i + 1 <= m; ++i)
      if (ms[i] > ms[i + 1] || ms[i] < 0 || ms[i + 1] > len) {
        rep.fail("path " + std::to_string(p) + " markers out of order");
        break;
      }
  }
  if (!rep.ok) return rep;

  SliceFamilies fam = slice_families(inst, s);
  std::set<int> assigned;
  for (const auto& ms : fam.members)
    for (int qi : ms)
      if (!assigned.insert(qi).second)
        rep.fail("attachment " + std::to_string(qi) +
                 " counted in two slices");
  if (fam.width < min_width)
    rep.fail("slicing width " + std::to_string(fam.width) +
             " is below the required " + std::to_string(min_width));
  return rep;
}

namespace {

bool is_subpath(const Path& whole, const Path& part) {
  if (part.is_empty()) return true;
  auto it =
      std::find(whole.verts.begin(), whole.verts.end(), part.verts.front());
  if (it == whole.verts.end()) return false;
  size_t k = it - whole.verts.begin();
  if (k + part.verts.size() > whole.verts.size()) return false;
  return std::equal(part.verts.begin(), part.verts.end(),
                    whole.verts.begin() + k);
}

bool paths_meet(const Path& a, const std::set<VertexId>& b) {
  for (VertexId v : a.verts)
    if (b.count(v)) return true;
  return false;
}

}  // namespace

Case2Outcome case2_reslice(const Graph& host, const PathFamily& spines,
                           const PathFamily& segments,
                           const std::vector<int>& retained,
                           const PathFamily& attachments,
                           const std::vector<int>& active, int rho, int m_hat,
                           int w_hat, const Case2Config& cfg) {
  const int n = spines.size();
  if (segments.size() != n)
    throw std::invalid_argument("segment count must match spine count");
  if (rho < 1) throw std::invalid_argument("crossbar width must be positive");

  auto check_indices = [](const std::vector<int>& idx, int limit,
                          const char* what) {
    int prev = -1;
    for (int i : idx) {
      if (i <= prev || i >= limit)
        throw std::invalid_argument(std::string(what) +
                                    " indices must be strictly increasing "
                                    "and in range");
      prev = i;
    }
  };
  check_indices(retained, n, "retained segment");
  check_indices(active, attachments.size(), "active attachment");

  {
    PathFamily sp = spines;
    sp.mode = Disjointness::kNodeDisjoint;
    if (auto viol = check_family(host, sp))
      throw std::invalid_argument("spines: " + viol->message);
  }
  for (int p = 0; p < n; ++p)
    if (!is_subpath(spines.paths[p], segments.paths[p]))
      throw std::invalid_argument("segment " + std::to_string(p) +
                                  " is not a subpath of its spine");

  std::set<int> retained_set(retained.begin(), retained.end());
  for (int p : retained)
    if (segments.paths[p].is_empty())
      throw std::invalid_argument("retained segment " + std::to_string(p) +
                                  " is empty");

  std::map<VertexId, int> owner;
  for (int p = 0; p < n; ++p)
    for (VertexId v : segments.paths[p].verts)
      if (!owner.emplace(v, p).second)
        throw std::invalid_argument("segments share vertex " +
                                    std::to_string(v));

  std::map<int, std::set<int>> met;  // active attachment -> segments it meets
  {
    std::set<VertexId> seen;
    for (int qi : active) {
      for (VertexId v : attachments.paths[qi].verts) {
        if (!seen.insert(v).second)
          throw std::invalid_argument("active attachments share vertex " +
                                      std::to_string(v));
        auto it = owner.find(v);
        if (it == owner.end())
          throw std::invalid_argument(
              "active attachment " + std::to_string(qi) +
              " leaves the slice segments at vertex " + std::to_string(v));
        met[qi].insert(it->second);
      }
    }
  }

  const int hit = cfg.hit_bound > 0 ? cfg.hit_bound : 8 * rho;
  const int fanout = cfg.fanout > 0 ? cfg.fanout : 4 * rho;

  std::map<int, int> through;  // leftover segment -> active attachments on it
  for (const auto& [qi, segs] : met)
    for (int s : segs)
      if (!retained_set.count(s)) ++through[s];
  for (const auto& [s, count] : through)
    if (count > fanout)
      throw std::invalid_argument(
          "leftover segment " + std::to_string(s) + " carries " +
          std::to_string(count) + " active attachments, cap " +
          std::to_string(fanout));

  Case2Outcome out;
  std::vector<int> light_set;
  for (int qi : active) {
    int hits = 0;
    for (int s : met[qi])
      if (!retained_set.count(s)) ++hits;
    if (hits == 0) continue;
    ++out.blocked;
    if (hits >= hit)
      ++out.heavy;
    else
      light_set.push_back(qi);
  }
  out.light = static_cast<int>(light_set.size());

  const long long entry_bound =
      static_cast<long long>(rho - 1) * (hit - 1) * fanout;
  if (out.light > entry_bound) {
    std::set<int> live_seg;
    for (int p = 0; p < n; ++p)
      if (!retained_set.count(p) && !segments.paths[p].is_empty())
        live_seg.insert(p);
    std::set<int> live_q(light_set.begin(), light_set.end());

    Crossbar cb;
    for (int round = 0; round < rho; ++round) {
      if (live_q.empty())
        throw std::logic_error(
            "crossbar sweep ran out of attachments; the entry bound should "
            "prevent this");
      int qi = *live_q.begin();
      int sg = -1;
      for (int s : met[qi])
        if (live_seg.count(s)) {
          sg = s;
          break;
        }
      if (sg < 0)
        throw std::logic_error(
            "live attachment meets no live leftover segment; the sweep "
            "deletions should prevent this");

      const Path& spine = spines.paths[sg];
      const Path& q = attachments.paths[qi];
      std::set<VertexId> sv(spine.verts.begin(), spine.verts.end());
      int cut = -1;
      for (int j = 0; j < static_cast<int>(q.verts.size()); ++j)
        if (sv.count(q.verts[j])) cut = j;
      cb.P_star.paths.push_back(spine);
      cb.Q_star.paths.push_back(
          q.subpath(cut, static_cast<int>(q.verts.size()) - 1));

      std::vector<int> swept;
      for (int s : met[qi])
        if (live_seg.count(s)) swept.push_back(s);
      if (static_cast<int>(swept.size()) > hit - 1)
        throw std::logic_error(
            "attachment from the light set meets too many leftover "
            "segments");
      std::set<int> swept_set(swept.begin(), swept.end());
      std::vector<int> dropped;
      for (int q2 : live_q) {
        for (int s : met[q2])
          if (swept_set.count(s)) {
            dropped.push_back(q2);
            break;
          }
      }
      if (dropped.size() > swept.size() * static_cast<size_t>(fanout))
        throw std::logic_error(
            "sweep round deleted more attachments than the per-segment cap "
            "allows");
      for (int s : swept) live_seg.erase(s);
      for (int q2 : dropped) live_q.erase(q2);

      // Both sweep invariants, re-established after every round: nothing
      // emitted touches a live leftover segment, its spine, or a live
      // attachment, and every live attachment still meets a live segment.
      for (int s : live_seg) {
        std::set<VertexId> seg_sv(spines.paths[s].verts.begin(),
                                  spines.paths[s].verts.end());
        for (const Path& p : cb.P_star.paths)
          if (paths_meet(p, seg_sv))
            throw std::logic_error(
                "emitted spine touches a spine owning a live leftover "
                "segment");
        for (const Path& p : cb.Q_star.paths)
          if (paths_meet(p, seg_sv))
            throw std::logic_error(
                "emitted tail touches a spine owning a live leftover "
                "segment");
      }
      for (int q2 : live_q) {
        std::set<VertexId> qv(attachments.paths[q2].verts.begin(),
                              attachments.paths[q2].verts.end());
        for (const Path& p : cb.P_star.paths)
          if (paths_meet(p, qv))
            throw std::logic_error(
                "emitted spine touches a live attachment");
        for (const Path& p : cb.Q_star.paths)
          if (paths_meet(p, qv))
            throw std::logic_error("emitted tail touches a live attachment");
        bool meets_live = false;
        for (int s : met[q2])
          if (live_seg.count(s)) {
            meets_live = true;
            break;
          }
        if (!meets_live)
          throw std::logic_error(
              "live attachment lost all its leftover segments without being "
              "dropped");
      }
    }
    out.value = std::move(cb);
    return out;
  }

  Case2Reslice rs;
  for (int qi : active) {
    bool clean = true;
    for (int s : met[qi])
      if (!retained_set.count(s)) {
        clean = false;
        break;
      }
    if (clean) rs.kept.push_back(qi);
  }
  for (int p : retained) {
    rs.sub.R.paths.push_back(segments.paths[p]);
    rs.sub.A.push_back(segments.paths[p].a());
    rs.sub.B.push_back(segments.paths[p].b());
  }
  for (int qi : rs.kept) rs.sub.Q.paths.push_back(attachments.paths[qi]);
  rs.sub.graph = union_graph(host, {&rs.sub.R, &rs.sub.Q});

  Slicing inner = compute_slicing(rs.sub, m_hat, w_hat);
  rs.slicing.markers.assign(n, {});
  int next = 0;
  for (int p = 0; p < n; ++p) {
    if (retained_set.count(p)) {
      rs.slicing.markers[p] = inner.markers[next++];
    } else {
      std::vector<int> row(m_hat + 1, segments.paths[p].length());
      row[0] = 0;
      rs.slicing.markers[p] = std::move(row);
    }
  }
  out.value = std::move(rs);
  return out;
}

}  // namespace gml
