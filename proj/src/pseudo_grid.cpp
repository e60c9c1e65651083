#include "gml/pseudo_grid.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gml {

namespace {

bool pairwise_disjoint_abx(ValidationReport& rep,
                           const std::vector<VertexId>& A,
                           const std::vector<VertexId>& B,
                           const std::vector<VertexId>& X) {
  std::set<VertexId> a(A.begin(), A.end());
  std::set<VertexId> b(B.begin(), B.end());
  for (VertexId v : B)
    if (a.count(v)) {
      rep.fail("A and B overlap");
      return false;
    }
  for (VertexId v : X)
    if (a.count(v) || b.count(v)) {
      rep.fail("X overlaps A or B");
      return false;
    }
  return true;
}

}  // namespace

WitnessPaths initial_witnesses(const Graph& h, const std::vector<VertexId>& A,
                               const std::vector<VertexId>& B,
                               const std::vector<VertexId>& X) {
  int kappa = static_cast<int>(A.size());
  LinkageResult ab = max_node_disjoint_paths(h, A, B);
  if (ab.value < kappa)
    throw std::invalid_argument("cannot route every start vertex to B");
  LinkageResult ax = max_node_disjoint_paths(h, A, X);
  if (ax.value < kappa)
    throw std::invalid_argument("cannot route every start vertex to X");

  WitnessPaths w;
  w.P = std::move(ab.paths);
  w.Q = std::move(ax.paths);
  auto by_start = [](const Path& x, const Path& y) { return x.a() < y.a(); };
  std::sort(w.P.paths.begin(), w.P.paths.end(), by_start);
  std::sort(w.Q.paths.begin(), w.Q.paths.end(), by_start);
  for (int i = 0; i < kappa; ++i)
    if (w.P.paths[i].a() != w.Q.paths[i].a())
      throw std::logic_error("perfect linkages disagree on their starts");
  return w;
}

int witness_union_edges(const WitnessPaths& w) {
  std::set<EdgeId> all;
  for (const Path& p : w.P.paths) all.insert(p.edges.begin(), p.edges.end());
  for (const Path& q : w.Q.paths) all.insert(q.edges.begin(), q.edges.end());
  return static_cast<int>(all.size());
}

WitnessPaths select_min_edge_witnesses(const Graph& h,
                                       const std::vector<VertexId>& A,
                                       const std::vector<VertexId>& B,
                                       const std::vector<VertexId>& X,
                                       WitnessPaths cur) {
  int kappa = cur.size();
  int best = witness_union_edges(cur);
  for (int pass = 0; pass < 100; ++pass) {
    std::set<EdgeId> eq;
    for (const Path& q : cur.Q.paths) eq.insert(q.edges.begin(), q.edges.end());
    auto new_p = route_cheapest(h, A, B, kappa, eq);
    if (!new_p) throw std::logic_error("reroute lost the A-B linkage");
    cur.P = std::move(*new_p);

    std::set<EdgeId> ep;
    for (const Path& p : cur.P.paths) ep.insert(p.edges.begin(), p.edges.end());
    auto new_q = route_cheapest(h, A, X, kappa, ep);
    if (!new_q) throw std::logic_error("reroute lost the A-X linkage");
    cur.Q = std::move(*new_q);

    int now = witness_union_edges(cur);
    if (now > best) throw std::logic_error("reroute grew the union");
    if (now == best) break;
    best = now;
  }
  // route_cheapest returns paths ordered by start, so index pairing is
  // origin pairing; double-check rather than assume.
  for (int i = 0; i < kappa; ++i)
    if (cur.P.paths[i].a() != cur.Q.paths[i].a())
      throw std::logic_error("rerouted linkages disagree on their starts");
  return cur;
}

ValidationReport validate_witnesses(const Graph& h,
                                    const std::vector<VertexId>& A,
                                    const std::vector<VertexId>& B,
                                    const std::vector<VertexId>& X,
                                    const WitnessPaths& w) {
  ValidationReport rep;
  if (!pairwise_disjoint_abx(rep, A, B, X)) return rep;
  int kappa = static_cast<int>(A.size());
  if (w.P.size() != kappa || w.Q.size() != kappa) {
    rep.fail("family sizes do not match |A|");
    return rep;
  }
  if (kappa == 0) {
    rep.fail("no witnesses");
    return rep;
  }

  PathFamily p = w.P;
  p.mode = Disjointness::kNodeDisjoint;
  if (auto viol = check_family(h, p)) rep.fail("spines: " + viol->message);
  PathFamily q = w.Q;
  q.mode = Disjointness::kNodeDisjoint;
  if (auto viol = check_family(h, q)) rep.fail("crosses: " + viol->message);
  if (!rep.ok) return rep;

  std::set<VertexId> a(A.begin(), A.end());
  std::set<VertexId> b(B.begin(), B.end());
  std::set<VertexId> x(X.begin(), X.end());
  std::set<VertexId> p_starts, p_ends, q_ends;
  for (int i = 0; i < kappa; ++i) {
    const Path& sp = w.P.paths[i];
    const Path& cr = w.Q.paths[i];
    if (sp.a() != cr.a()) rep.fail("pair " + std::to_string(i) +
                                   ": paths start at different vertices");
    if (!b.count(sp.b())) rep.fail("spine end not in B");
    if (!x.count(cr.b())) rep.fail("cross end not in X");
    p_starts.insert(sp.a());
    p_ends.insert(sp.b());
    q_ends.insert(cr.b());
    for (VertexId v : sp.verts)
      if (x.count(v)) rep.fail("spine touches X");
    int x_hits = 0;
    for (VertexId v : cr.verts) x_hits += x.count(v) ? 1 : 0;
    if (x_hits != 1) rep.fail("cross path must meet X exactly once");
  }
  if (p_starts != a) rep.fail("spines do not start on all of A");
  if (static_cast<int>(p_ends.size()) != kappa ||
      static_cast<int>(q_ends.size()) != kappa)
    rep.fail("path ends collide");
  return rep;
}

ValidationReport validate_crossbar(const Graph& h,
                                   const std::vector<VertexId>& A,
                                   const std::vector<VertexId>& B,
                                   const std::vector<VertexId>& X,
                                   const Crossbar& cb) {
  ValidationReport rep;
  if (!pairwise_disjoint_abx(rep, A, B, X)) return rep;
  int width = cb.width();
  if (width < 1) {
    rep.fail("empty crossbar");
    return rep;
  }
  if (cb.Q_star.size() != width) {
    rep.fail("cross path count does not match spine count");
    return rep;
  }

  PathFamily ps = cb.P_star;
  ps.mode = Disjointness::kNodeDisjoint;
  if (auto viol = check_family(h, ps)) rep.fail("spines: " + viol->message);
  PathFamily qs = cb.Q_star;
  qs.mode = Disjointness::kNodeDisjoint;
  if (auto viol = check_family(h, qs)) rep.fail("crosses: " + viol->message);
  if (!rep.ok) return rep;

  std::set<VertexId> a(A.begin(), A.end());
  std::set<VertexId> b(B.begin(), B.end());
  std::set<VertexId> x(X.begin(), X.end());
  std::vector<std::set<VertexId>> spine_verts(width);
  for (int i = 0; i < width; ++i) {
    const Path& sp = cb.P_star.paths[i];
    if (!a.count(sp.a()) || !b.count(sp.b()))
      rep.fail("spine " + std::to_string(i) + " does not run from A to B");
    spine_verts[i].insert(sp.verts.begin(), sp.verts.end());
  }
  for (int i = 0; i < width; ++i) {
    const Path& cr = cb.Q_star.paths[i];
    if (!x.count(cr.b()))
      rep.fail("cross " + std::to_string(i) + " does not end in X");
    for (int j = 0; j < width; ++j) {
      int shared = 0;
      VertexId at = -1;
      for (VertexId v : cr.verts)
        if (spine_verts[j].count(v)) {
          ++shared;
          at = v;
        }
      if (i == j) {
        if (shared != 1 || (at != cr.a() && at != cr.b()))
          rep.fail("cross " + std::to_string(i) +
                   " must meet its spine in exactly one endpoint");
      } else if (shared != 0) {
        rep.fail("cross " + std::to_string(i) + " touches spine " +
                 std::to_string(j));
      }
    }
  }
  return rep;
}

namespace {

// Case 1: lift one contracted route back to the host. The route's vertices
// are either host vertices or stand-ins for whole spines; the union of
// everything they represent is connected, holds a vertex of the chosen
// spine and a vertex of X, so a shortest escape from the spine exists and
// leaves it immediately.
Path lift_cross_path(const Graph& h, const std::set<VertexId>& carrier,
                     const std::set<VertexId>& spine,
                     const std::set<VertexId>& xset) {
  std::map<VertexId, std::pair<VertexId, EdgeId>> parent;
  std::deque<VertexId> queue;
  for (VertexId v : carrier)
    if (spine.count(v)) {
      parent.emplace(v, std::make_pair(-1, -1));
      queue.push_back(v);
    }
  VertexId hit = -1;
  while (!queue.empty() && hit < 0) {
    VertexId v = queue.front();
    queue.pop_front();
    for (const IncidentEdge& ie : h.incident(v)) {
      if (!carrier.count(ie.to) || spine.count(ie.to) || parent.count(ie.to))
        continue;
      parent.emplace(ie.to, std::make_pair(v, ie.id));
      if (xset.count(ie.to)) {
        hit = ie.to;
        break;
      }
      queue.push_back(ie.to);
    }
  }
  if (hit < 0) throw std::logic_error("contracted route does not lift");

  Path rev;
  rev.verts.push_back(hit);
  for (VertexId v = hit;;) {
    auto [pv, pe] = parent.at(v);
    if (pv < 0) break;
    rev.verts.push_back(pv);
    rev.edges.push_back(pe);
    v = pv;
  }
  return rev.reversed();
}

}  // namespace

DichotomyResult build_pseudo_grid_or_crossbar(const Graph& h,
                                              const std::vector<VertexId>& X,
                                              const WitnessPaths& w, int rho,
                                              int depth) {
  int kappa = w.size();
  if (rho < 1) throw std::invalid_argument("layer budget must be positive");
  if (depth < 1 || 2 * rho * depth > kappa) {
    std::ostringstream s;
    s << "depth must satisfy 1 <= depth <= kappa/(2 rho); got depth=" << depth
      << " kappa=" << kappa << " rho=" << rho;
    throw std::invalid_argument(s.str());
  }
  std::set<VertexId> xset(X.begin(), X.end());

  std::vector<bool> alive(kappa, true);
  std::vector<std::vector<int>> layers;
  std::set<VertexId> last_blockers;      // V_i of the final round
  std::set<VertexId> last_layer_verts;   // spine part of V_i

  for (int round = 0; round < depth; ++round) {
    std::vector<std::vector<VertexId>> groups;
    std::map<VertexId, int> rep_to_path;
    std::vector<VertexId> S;
    for (int p = 0; p < kappa; ++p) {
      if (!alive[p]) continue;
      const auto& pv = w.P.paths[p].verts;
      groups.push_back(pv);
      VertexId rep = *std::min_element(pv.begin(), pv.end());
      rep_to_path[rep] = p;
      S.push_back(rep);
    }
    Contraction con = h.contract_groups(groups);
    LinkageResult link = max_node_disjoint_paths(con.graph, S, X);

    if (link.value >= rho) {
      // Crossbar: keep the first rho routes, cut each back to its last
      // stand-in vertex, and expand that stand-in's spine into the route.
      Crossbar cb;
      for (int qi = 0; qi < rho; ++qi) {
        Path route = link.paths.paths[qi];
        int last = -1;
        for (size_t k = 0; k < route.verts.size(); ++k)
          if (rep_to_path.count(route.verts[k])) last = static_cast<int>(k);
        if (last < 0) throw std::logic_error("route misses every stand-in");
        route = route.subpath(last, route.length());
        int p = rep_to_path.at(route.a());

        std::set<VertexId> carrier;
        for (VertexId v : route.verts) {
          auto it = rep_to_path.find(v);
          if (it == rep_to_path.end())
            carrier.insert(v);
          else
            carrier.insert(w.P.paths[it->second].verts.begin(),
                           w.P.paths[it->second].verts.end());
        }
        std::set<VertexId> spine(w.P.paths[p].verts.begin(),
                                 w.P.paths[p].verts.end());
        cb.P_star.paths.push_back(w.P.paths[p]);
        cb.Q_star.paths.push_back(lift_cross_path(h, carrier, spine, xset));
      }
      return cb;
    }

    // Case 2: the separator names this round's layer; everything it blocks
    // must funnel through it, which the asserts below re-check.
    std::vector<int> layer;
    std::set<VertexId> blockers;
    std::set<VertexId> layer_verts;
    int off_spine = 0;
    for (VertexId v : link.vertex_cut) {
      auto it = rep_to_path.find(v);
      if (it != rep_to_path.end()) {
        layer.push_back(it->second);
        const auto& pv = w.P.paths[it->second].verts;
        blockers.insert(pv.begin(), pv.end());
        layer_verts.insert(pv.begin(), pv.end());
      } else {
        blockers.insert(v);
        ++off_spine;
      }
    }
    std::sort(layer.begin(), layer.end());
    for (int p : layer) alive[p] = false;

    std::set<VertexId> survivor_verts;
    for (int p = 0; p < kappa; ++p)
      if (alive[p])
        survivor_verts.insert(w.P.paths[p].verts.begin(),
                              w.P.paths[p].verts.end());
    int not_good = 0;
    for (int p = 0; p < kappa; ++p) {
      if (!alive[p]) continue;
      const Path& q = w.Q.paths[p];
      int last = -1;
      for (size_t k = 0; k < q.verts.size(); ++k)
        if (blockers.count(q.verts[k])) last = static_cast<int>(k);
      if (last < 0)
        throw std::logic_error("surviving cross path dodges the separator");
      if (!layer_verts.count(q.verts[last])) ++not_good;
      for (size_t k = last; k < q.verts.size(); ++k)
        if (survivor_verts.count(q.verts[k]))
          throw std::logic_error("cross tail touches a surviving spine");
    }
    if (not_good > off_spine)
      throw std::logic_error("more stray tails than off-spine blockers");

    layers.push_back(std::move(layer));
    last_blockers = std::move(blockers);
    last_layer_verts = std::move(layer_verts);
  }

  // Assemble: one tail per surviving cross path, from its last separator
  // hit of the final round to its X end; keep final-layer hitters first.
  PseudoGrid pg;
  pg.rho = rho;
  pg.layers = std::move(layers);
  std::vector<std::pair<int, Path>> good, stray;
  for (int p = 0; p < kappa; ++p) {
    if (!alive[p]) continue;
    const Path& q = w.Q.paths[p];
    int last = -1;
    for (size_t k = 0; k < q.verts.size(); ++k)
      if (last_blockers.count(q.verts[k])) last = static_cast<int>(k);
    Path tail = q.subpath(last, q.length());
    if (last_layer_verts.count(q.verts[last]))
      good.emplace_back(p, std::move(tail));
    else
      stray.emplace_back(p, std::move(tail));
  }
  int need = (kappa + 3) / 4;
  if (static_cast<int>(good.size() + stray.size()) < need)
    throw std::logic_error("too few surviving cross paths");
  for (auto& [p, tail] : good) {
    if (static_cast<int>(pg.tails.size()) == need) break;
    pg.tail_owner.push_back(p);
    pg.tails.push_back(std::move(tail));
  }
  for (auto& [p, tail] : stray) {
    if (static_cast<int>(pg.tails.size()) == need) break;
    pg.tail_owner.push_back(p);
    pg.tails.push_back(std::move(tail));
  }
  return pg;
}

namespace {

bool is_forward_subpath(const Path& whole, const Path& part) {
  if (part.is_empty() || whole.is_empty()) return false;
  int at = whole.index_of(part.a());
  if (at < 0) return false;
  if (at + static_cast<int>(part.verts.size()) >
      static_cast<int>(whole.verts.size()))
    return false;
  for (size_t k = 0; k < part.verts.size(); ++k)
    if (whole.verts[at + k] != part.verts[k]) return false;
  for (size_t k = 0; k < part.edges.size(); ++k)
    if (whole.edges[at + k] != part.edges[k]) return false;
  return true;
}

}  // namespace

ValidationReport validate_pseudo_grid(const Graph& h,
                                      const std::vector<VertexId>& X,
                                      const WitnessPaths& w,
                                      const PseudoGrid& pg) {
  ValidationReport rep;
  int kappa = w.size();
  if (pg.rho < 1) rep.fail("layer budget must be positive");
  if (pg.depth() < 1) rep.fail("no layers");
  if (!rep.ok) return rep;

  std::vector<int> owner(kappa, -1);
  for (int i = 0; i < pg.depth(); ++i) {
    if (static_cast<int>(pg.layers[i].size()) > pg.rho)
      rep.fail("layer " + std::to_string(i) + " too large");
    for (int p : pg.layers[i]) {
      if (p < 0 || p >= kappa) {
        rep.fail("layer spine index out of range");
        return rep;
      }
      if (owner[p] != -1)
        rep.fail("spine " + std::to_string(p) + " in two layers");
      owner[p] = i;
    }
  }

  int need = (kappa + 3) / 4;
  if (static_cast<int>(pg.tails.size()) != need ||
      pg.tail_owner.size() != pg.tails.size()) {
    rep.fail("tail count must be ceil(kappa/4)");
    return rep;
  }

  std::set<VertexId> xset(X.begin(), X.end());
  std::set<int> seen_owner;
  std::set<VertexId> survivor_verts;
  for (int p = 0; p < kappa; ++p)
    if (owner[p] == -1)
      survivor_verts.insert(w.P.paths[p].verts.begin(),
                            w.P.paths[p].verts.end());

  for (size_t t = 0; t < pg.tails.size(); ++t) {
    int p = pg.tail_owner[t];
    if (p < 0 || p >= kappa || owner[p] != -1) {
      rep.fail("tail owner must be a surviving spine");
      continue;
    }
    if (!seen_owner.insert(p).second) rep.fail("two tails share an owner");
    const Path& tail = pg.tails[t];
    if (!is_forward_subpath(w.Q.paths[p], tail))
      rep.fail("tail " + std::to_string(t) + " is not a cut of its cross path");
    int x_hits = 0;
    for (VertexId v : tail.verts) x_hits += xset.count(v) ? 1 : 0;
    if (x_hits != 1 || !xset.count(tail.b()))
      rep.fail("tail " + std::to_string(t) + " must end in X and meet it once");
    for (VertexId v : tail.verts)
      if (survivor_verts.count(v)) {
        rep.fail("tail " + std::to_string(t) + " touches a surviving spine");
        break;
      }
  }

  PathFamily tails;
  tails.paths = pg.tails;
  tails.mode = Disjointness::kNodeDisjoint;
  if (auto viol = check_family(h, tails)) rep.fail("tails: " + viol->message);

  for (int i = 0; i < pg.depth(); ++i) {
    std::set<VertexId> layer_verts;
    for (int p : pg.layers[i])
      layer_verts.insert(w.P.paths[p].verts.begin(),
                         w.P.paths[p].verts.end());
    int misses = 0;
    for (const Path& tail : pg.tails) {
      bool hit = false;
      for (VertexId v : tail.verts)
        if (layer_verts.count(v)) {
          hit = true;
          break;
        }
      if (!hit) ++misses;
    }
    if (misses > 2 * pg.rho)
      rep.fail("layer " + std::to_string(i) + ": " + std::to_string(misses) +
               " tails miss it (allowed " + std::to_string(2 * pg.rho) + ")");
  }
  return rep;
}

}  // namespace gml
