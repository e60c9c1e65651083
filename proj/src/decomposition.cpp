#include "gml/decomposition.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <random>
#include <stdexcept>
#include <tuple>

#include "gml/linkage.hpp"

namespace gml {
namespace {

std::map<VertexId, std::vector<int>> paths_by_vertex(const PathFamily& f) {
  std::map<VertexId, std::vector<int>> out;
  for (int i = 0; i < f.size(); ++i)
    for (VertexId v : f.paths[i].verts) out[v].push_back(i);
  return out;
}

// Duplicate vertex inside one family, across paths or within one path.
std::optional<std::string> family_overlap(const PathFamily& f) {
  std::map<VertexId, int> owner;
  for (int i = 0; i < f.size(); ++i)
    for (VertexId v : f.paths[i].verts) {
      auto [it, fresh] = owner.emplace(v, i);
      if (!fresh)
        return "vertex " + std::to_string(v) +
               (it->second == i
                    ? " repeats inside path " + std::to_string(i)
                    : " is shared by paths " + std::to_string(it->second) +
                          " and " + std::to_string(i));
    }
  return std::nullopt;
}

// For each path of a, the distinct paths of b sharing a vertex with it.
std::vector<std::vector<int>> meet_lists(const PathFamily& a,
                                         const PathFamily& b) {
  auto where = paths_by_vertex(b);
  std::vector<std::vector<int>> out(a.size());
  for (int i = 0; i < a.size(); ++i) {
    std::set<int> met;
    for (VertexId v : a.paths[i].verts) {
      auto it = where.find(v);
      if (it != where.end()) met.insert(it->second.begin(), it->second.end());
    }
    out[i].assign(met.begin(), met.end());
  }
  return out;
}

std::vector<VertexId> reachable_avoiding(const Graph& g,
                                         const std::vector<VertexId>& src,
                                         const std::set<EdgeId>& cut) {
  std::set<VertexId> seen(src.begin(), src.end());
  std::queue<VertexId> bfs;
  for (VertexId v : src) bfs.push(v);
  while (!bfs.empty()) {
    VertexId v = bfs.front();
    bfs.pop();
    for (const auto& ie : g.incident(v))
      if (!cut.count(ie.id) && seen.insert(ie.to).second) bfs.push(ie.to);
  }
  return {seen.begin(), seen.end()};
}

// Binomial coefficient, clamped to cap+1 once it exceeds cap.
long long binom_capped(int n, int k, long long cap) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > cap) return cap + 1;
  }
  return r;
}

// Number of unordered disjoint subset pairs with both sides of size 1..m,
// clamped to cap+1.
long long pair_sweep_cost(int k, int m, long long cap) {
  long long ordered = 0;
  for (int a = 1; a <= m; ++a)
    for (int b = 1; b <= m; ++b) {
      long long ca = binom_capped(k, a, 2 * cap);
      long long cb = binom_capped(k - a, b, 2 * cap);
      if (ca > 2 * cap || cb > 2 * cap) return cap + 1;
      ordered += ca * cb;
      if (ordered / 2 > cap) return cap + 1;
    }
  return ordered / 2;
}

template <class F>
void for_combinations(int n, int k, F&& fn) {
  if (k > n || k <= 0) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (fn(idx)) return;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int t = i + 1; t < k; ++t) idx[t] = idx[t - 1] + 1;
  }
}

// Flow check of one candidate terminal split; returns the refuting side
// when the split shows the terminals are not w_hat-weakly well-linked.
std::optional<std::vector<VertexId>> refute_split(
    const Graph& cluster, const std::vector<VertexId>& A,
    const std::vector<VertexId>& B, int w_hat) {
  int need = std::min({w_hat, static_cast<int>(A.size()),
                       static_cast<int>(B.size())});
  if (need <= 0) return std::nullopt;
  LinkageResult res = max_edge_disjoint_paths(cluster, A, B);
  if (res.value >= need) return std::nullopt;
  std::set<EdgeId> cut(res.edge_cut.begin(), res.edge_cut.end());
  return reachable_avoiding(cluster, A, cut);
}

std::vector<EdgeId> bridge_edges(const Graph& g) {
  std::map<VertexId, int> disc, low;
  std::vector<EdgeId> out;
  int timer = 0;
  for (VertexId root : g.vertices()) {
    if (disc.count(root)) continue;
    disc[root] = low[root] = timer++;
    // frame: vertex, edge used to enter it, next incident slot
    std::vector<std::tuple<VertexId, EdgeId, size_t>> st;
    st.emplace_back(root, -1, 0);
    while (!st.empty()) {
      VertexId v = std::get<0>(st.back());
      const auto& inc = g.incident(v);
      if (std::get<2>(st.back()) < inc.size()) {
        IncidentEdge ie = inc[std::get<2>(st.back())++];
        if (ie.id == std::get<1>(st.back())) continue;
        auto seen = disc.find(ie.to);
        if (seen == disc.end()) {
          disc[ie.to] = low[ie.to] = timer++;
          st.emplace_back(ie.to, ie.id, 0);
        } else {
          low[v] = std::min(low[v], seen->second);
        }
      } else {
        EdgeId in_e = std::get<1>(st.back());
        st.pop_back();
        if (!st.empty()) {
          VertexId p = std::get<0>(st.back());
          low[p] = std::min(low[p], low[v]);
          if (low[v] > disc[p]) out.push_back(in_e);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int count_in(const std::set<VertexId>& side,
             const std::vector<VertexId>& pts) {
  int n = 0;
  for (VertexId v : pts) n += side.count(v) ? 1 : 0;
  return n;
}

}  // namespace

IntersectingPair prune_to_intersecting(const PathFamily& segments,
                                       const PathFamily& attachments,
                                       int w_hat, int d_hat) {
  if (w_hat < 1 || d_hat < 1)
    throw std::invalid_argument("intersection demands must be positive");
  if (auto dup = family_overlap(segments))
    throw std::invalid_argument("segments not node-disjoint: " + *dup);
  if (auto dup = family_overlap(attachments))
    throw std::invalid_argument("attachments not node-disjoint: " + *dup);

  int ns = segments.size();
  int na = attachments.size();
  auto s_meets = meet_lists(segments, attachments);
  auto a_meets = meet_lists(attachments, segments);

  for (int j = 0; j < na; ++j)
    if (static_cast<int>(a_meets[j].size()) < 2 * d_hat)
      throw std::invalid_argument(
          "attachment " + std::to_string(j) + " meets " +
          std::to_string(a_meets[j].size()) + " segments; thinning needs " +
          std::to_string(2 * d_hat));
  if (static_cast<long long>(na) * d_hat < 2LL * ns * w_hat)
    throw std::invalid_argument(
        "too few attachments: " + std::to_string(na) + "*" +
        std::to_string(d_hat) + " < 2*" + std::to_string(ns) + "*" +
        std::to_string(w_hat));

  std::vector<char> live_s(ns, 1), live_a(na, 1);
  std::vector<int> deg_s(ns), deg_a(na);
  for (int i = 0; i < ns; ++i) deg_s[i] = static_cast<int>(s_meets[i].size());
  for (int j = 0; j < na; ++j) deg_a[j] = static_cast<int>(a_meets[j].size());

  // Lowest-index segment rule first, then lowest-index attachment rule.
  bool fired = true;
  while (fired) {
    fired = false;
    for (int i = 0; i < ns && !fired; ++i)
      if (live_s[i] && deg_s[i] < w_hat) {
        live_s[i] = 0;
        for (int j : s_meets[i])
          if (live_a[j]) --deg_a[j];
        fired = true;
      }
    if (fired) continue;
    for (int j = 0; j < na && !fired; ++j)
      if (live_a[j] && deg_a[j] < d_hat) {
        live_a[j] = 0;
        for (int i : a_meets[j])
          if (live_s[i]) --deg_s[i];
        fired = true;
      }
  }

  IntersectingPair out;
  out.w_hat = w_hat;
  out.d_hat = d_hat;
  for (int i = 0; i < ns; ++i)
    (live_s[i] ? out.kept_segments : out.dropped_segments).push_back(i);
  for (int j = 0; j < na; ++j)
    if (live_a[j]) out.kept_attachments.push_back(j);
  for (int i : out.kept_segments) out.segment_meets.push_back(deg_s[i]);
  for (int j : out.kept_attachments) out.attachment_meets.push_back(deg_a[j]);

  long long dropped_a = na - static_cast<long long>(out.kept_attachments.size());
  if (dropped_a * d_hat > static_cast<long long>(ns) * w_hat)
    throw std::logic_error(
        "more attachments dropped than the charging bound allows");
  if (2 * static_cast<long long>(out.kept_attachments.size()) < na)
    throw std::logic_error("attachment survivors fell below half");
  return out;
}

ValidationReport validate_intersecting(const PathFamily& segments,
                                       const PathFamily& attachments,
                                       const IntersectingPair& pair) {
  ValidationReport rep;
  int ns = segments.size();
  int na = attachments.size();
  if (pair.w_hat < 1 || pair.d_hat < 1) rep.fail("demands must be positive");

  auto indexed = [&rep](const std::vector<int>& ids, int limit,
                        const std::string& what) {
    for (size_t k = 0; k < ids.size(); ++k) {
      if (ids[k] < 0 || ids[k] >= limit)
        rep.fail(what + " index " + std::to_string(ids[k]) + " out of range");
      if (k > 0 && ids[k] <= ids[k - 1])
        rep.fail(what + " indices not strictly increasing");
    }
  };
  indexed(pair.kept_segments, ns, "kept segment");
  indexed(pair.dropped_segments, ns, "dropped segment");
  indexed(pair.kept_attachments, na, "kept attachment");
  if (static_cast<int>(pair.kept_segments.size() +
                       pair.dropped_segments.size()) != ns)
    rep.fail("kept and dropped segments do not partition the family");
  else {
    std::set<int> all(pair.kept_segments.begin(), pair.kept_segments.end());
    all.insert(pair.dropped_segments.begin(), pair.dropped_segments.end());
    if (static_cast<int>(all.size()) != ns)
      rep.fail("kept and dropped segments overlap");
  }
  if (!rep.ok) return rep;

  if (pair.segment_meets.size() != pair.kept_segments.size())
    rep.fail("segment count table misaligned");
  if (pair.attachment_meets.size() != pair.kept_attachments.size())
    rep.fail("attachment count table misaligned");
  if (!rep.ok) return rep;

  std::set<int> kept_s(pair.kept_segments.begin(), pair.kept_segments.end());
  std::set<int> kept_a(pair.kept_attachments.begin(),
                       pair.kept_attachments.end());
  auto s_meets = meet_lists(segments, attachments);
  auto a_meets = meet_lists(attachments, segments);
  auto live_count = [](const std::vector<int>& met, const std::set<int>& in) {
    int n = 0;
    for (int x : met) n += in.count(x) ? 1 : 0;
    return n;
  };

  for (size_t k = 0; k < pair.kept_segments.size(); ++k) {
    int i = pair.kept_segments[k];
    int c = live_count(s_meets[i], kept_a);
    if (c != pair.segment_meets[k])
      rep.fail("segment " + std::to_string(i) + " meets " + std::to_string(c) +
               " kept attachments, table says " +
               std::to_string(pair.segment_meets[k]));
    if (c < pair.w_hat)
      rep.fail("kept segment " + std::to_string(i) + " meets only " +
               std::to_string(c) + " kept attachments");
  }
  for (int i : pair.dropped_segments) {
    int c = live_count(s_meets[i], kept_a);
    if (c > pair.w_hat)
      rep.fail("dropped segment " + std::to_string(i) + " still meets " +
               std::to_string(c) + " kept attachments");
  }
  for (size_t k = 0; k < pair.kept_attachments.size(); ++k) {
    int j = pair.kept_attachments[k];
    int c = live_count(a_meets[j], kept_s);
    if (c != pair.attachment_meets[k])
      rep.fail("attachment " + std::to_string(j) + " meets " +
               std::to_string(c) + " kept segments, table says " +
               std::to_string(pair.attachment_meets[k]));
    if (c < pair.d_hat)
      rep.fail("kept attachment " + std::to_string(j) + " meets only " +
               std::to_string(c) + " kept segments");
  }
  if (2 * static_cast<long long>(pair.kept_attachments.size()) < na)
    rep.fail("fewer than half the attachments survived");
  long long dropped_a = na - static_cast<long long>(pair.kept_attachments.size());
  if (dropped_a * pair.d_hat > static_cast<long long>(ns) * pair.w_hat)
    rep.fail("attachment losses exceed the charging bound");
  return rep;
}

CutOracle make_default_cut_oracle(int work_cap, int samples, unsigned seed) {
  if (work_cap < 1) throw std::invalid_argument("work_cap must be positive");
  if (samples < 0) throw std::invalid_argument("samples must be nonnegative");
  return [work_cap, samples, seed](const Graph& cluster,
                                   const std::vector<VertexId>& terminals,
                                   int w_hat) -> CutVerdict {
    int k = static_cast<int>(terminals.size());
    if (w_hat < 1)
      throw std::invalid_argument("well-linkedness demand must be positive");
    if (k <= 1) return {std::nullopt, true};

    // A component holding some but not all terminals is a zero-edge cut.
    auto comps = cluster.components();
    if (comps.size() > 1) {
      std::set<VertexId> tset(terminals.begin(), terminals.end());
      for (const auto& comp : comps) {
        int inside = 0;
        for (VertexId v : comp) inside += tset.count(v) ? 1 : 0;
        if (inside > 0 && inside < k) return {comp, true};
      }
    }
    // All terminals share a component, so every singleton demand routes.
    if (w_hat == 1) return {std::nullopt, true};

    int m = std::min(w_hat, k - 1);
    long long pairs = pair_sweep_cost(k, m, work_cap);
    long long bips =
        k - 1 <= 40 ? (1LL << (k - 1)) - 1 : static_cast<long long>(work_cap) + 1;

    if (std::min(pairs, bips) <= work_cap) {
      std::optional<std::vector<VertexId>> found;
      if (pairs <= bips) {
        // Disjoint subset pairs with both sides of size at most w_hat.
        for (int a = 1; a <= m && !found; ++a)
          for_combinations(k, a, [&](const std::vector<int>& ia) {
            std::vector<VertexId> A;
            std::vector<int> rest;
            A.reserve(a);
            size_t p = 0;
            for (int t = 0; t < k; ++t) {
              if (p < ia.size() && ia[p] == t) {
                A.push_back(terminals[t]);
                ++p;
              } else {
                rest.push_back(t);
              }
            }
            for (int b = 1; b <= m && !found; ++b)
              for_combinations(
                  static_cast<int>(rest.size()), b,
                  [&](const std::vector<int>& ib) {
                    if (rest[ib[0]] < ia[0]) return false;  // mirrored pair
                    std::vector<VertexId> B;
                    B.reserve(b);
                    for (int t : ib) B.push_back(terminals[rest[t]]);
                    found = refute_split(cluster, A, B, w_hat);
                    return found.has_value();
                  });
            return found.has_value();
          });
      } else {
        for (long long mask = 0; mask + 1 < (1LL << (k - 1)) && !found;
             ++mask) {
          std::vector<VertexId> A{terminals[0]}, B;
          for (int t = 1; t < k; ++t)
            (mask >> (t - 1) & 1 ? A : B).push_back(terminals[t]);
          found = refute_split(cluster, A, B, w_hat);
        }
      }
      if (found) return {std::move(found), true};
      return {std::nullopt, true};
    }

    // Too many splits to sweep: structural candidates first, then seeded
    // random bipartitions. A miss here is not a certificate.
    std::set<VertexId> tset(terminals.begin(), terminals.end());
    if (w_hat >= 2) {
      for (EdgeId e : bridge_edges(cluster)) {
        std::vector<VertexId> side =
            reachable_avoiding(cluster, {cluster.edge(e).u}, {e});
        std::set<VertexId> sset(side.begin(), side.end());
        int tx = count_in(sset, terminals);
        if (1 < std::min(w_hat, std::min(tx, k - tx)))
          return {std::move(side), false};
      }
    }
    std::mt19937 rng(seed * 1000003u + static_cast<unsigned>(k) * 7919u +
                     static_cast<unsigned>(cluster.vertex_count()));
    for (int trial = 0; trial < samples; ++trial) {
      std::vector<VertexId> A, B;
      for (VertexId v : terminals) (rng() & 1 ? A : B).push_back(v);
      if (static_cast<int>(A.size()) < 2 || static_cast<int>(B.size()) < 2)
        continue;
      if (auto side = refute_split(cluster, A, B, w_hat))
        return {std::move(side), false};
    }
    return {std::nullopt, false};
  };
}

ClusterDecomposition well_linked_decompose(const Graph& host,
                                           const PathFamily& segments,
                                           const PathFamily& attachments,
                                           int w_hat, int d_hat,
                                           const CutOracle& oracle) {
  if (w_hat < 1)
    throw std::invalid_argument("well-linkedness demand must be positive");
  if (d_hat < 8 * w_hat)
    throw std::invalid_argument("need d_hat >= 8*w_hat; got " +
                                std::to_string(d_hat) + " vs " +
                                std::to_string(8 * w_hat));
  if (segments.size() == 0) throw std::invalid_argument("no segments");
  for (int i = 0; i < segments.size(); ++i)
    if (segments.paths[i].is_empty())
      throw std::invalid_argument("segment " + std::to_string(i) +
                                  " is empty");
  PathFamily sf{segments.paths, Disjointness::kNodeDisjoint, {}};
  if (auto bad = check_family(host, sf))
    throw std::invalid_argument("segments: " + bad->message);
  PathFamily af{attachments.paths, Disjointness::kNodeDisjoint, {}};
  if (auto bad = check_family(host, af))
    throw std::invalid_argument("attachments: " + bad->message);

  auto s_meets = meet_lists(segments, attachments);
  auto a_meets = meet_lists(attachments, segments);
  for (int i = 0; i < segments.size(); ++i)
    if (static_cast<int>(s_meets[i].size()) < 4 * w_hat)
      throw std::invalid_argument(
          "segment " + std::to_string(i) + " meets " +
          std::to_string(s_meets[i].size()) + " attachments; need " +
          std::to_string(4 * w_hat));
  for (int j = 0; j < attachments.size(); ++j)
    if (static_cast<int>(a_meets[j].size()) < 2 * d_hat)
      throw std::invalid_argument(
          "attachment " + std::to_string(j) + " meets " +
          std::to_string(a_meets[j].size()) + " segments; need " +
          std::to_string(2 * d_hat));

  struct Part {
    std::vector<VertexId> verts;  // sorted
    bool certified = false;
    bool exhaustive = false;
  };
  std::vector<Part> parts;
  parts.push_back({host.vertices(), false, false});
  std::set<EdgeId> deleted;

  auto segments_in = [&](const std::vector<VertexId>& verts) {
    std::set<VertexId> vs(verts.begin(), verts.end());
    std::vector<int> found;
    for (int i = 0; i < segments.size(); ++i) {
      const auto& pv = segments.paths[i].verts;
      if (std::all_of(pv.begin(), pv.end(),
                      [&](VertexId v) { return vs.count(v) > 0; }))
        found.push_back(i);
    }
    return found;
  };
  auto endpoints_of = [&](const std::vector<int>& segs) {
    std::set<VertexId> pts;
    for (int i : segs) {
      pts.insert(segments.paths[i].a());
      pts.insert(segments.paths[i].b());
    }
    return std::vector<VertexId>(pts.begin(), pts.end());
  };

  while (true) {
    int pick = -1;
    for (int i = 0; i < static_cast<int>(parts.size()); ++i) {
      if (parts[i].certified) continue;
      if (pick < 0 ||
          parts[i].verts.size() > parts[pick].verts.size() ||
          (parts[i].verts.size() == parts[pick].verts.size() &&
           parts[i].verts.front() < parts[pick].verts.front()))
        pick = i;
    }
    if (pick < 0) break;

    Part& part = parts[pick];
    Graph cluster = host.induced(part.verts);
    std::vector<int> segs = segments_in(part.verts);
    CutVerdict verdict = oracle(cluster, endpoints_of(segs), w_hat);
    if (!verdict.side) {
      part.certified = true;
      part.exhaustive = verdict.exhaustive;
      continue;
    }

    std::set<VertexId> x(verdict.side->begin(), verdict.side->end());
    std::set<VertexId> all(part.verts.begin(), part.verts.end());
    if (x.empty() || x.size() >= all.size())
      throw std::logic_error("cut oracle returned a degenerate side");
    for (VertexId v : x)
      if (!all.count(v))
        throw std::logic_error("cut oracle side leaves the cluster");

    std::vector<EdgeId> cross;
    for (EdgeId e : cluster.edge_ids()) {
      const Edge& ed = cluster.edge(e);
      if (x.count(ed.u) != x.count(ed.v)) cross.push_back(e);
    }
    std::vector<VertexId> terms = endpoints_of(segs);
    int tx = count_in(x, terms);
    int ty = static_cast<int>(terms.size()) - tx;
    if (static_cast<int>(cross.size()) >= std::min({w_hat, tx, ty}))
      throw std::logic_error("cut oracle returned a non-violating cut");

    std::vector<VertexId> xs(x.begin(), x.end()), ys;
    for (VertexId v : part.verts)
      if (!x.count(v)) ys.push_back(v);
    if (segments_in(xs).empty() || segments_in(ys).empty())
      throw std::logic_error(
          "split produced a side with no segment; refuting cuts cannot");
    deleted.insert(cross.begin(), cross.end());
    parts[pick] = {std::move(xs), false, false};
    parts.push_back({std::move(ys), false, false});
  }

  std::sort(parts.begin(), parts.end(), [](const Part& a, const Part& b) {
    return a.verts.front() < b.verts.front();
  });

  ClusterDecomposition dec;
  dec.deleted = deleted;
  int r = static_cast<int>(parts.size());
  std::map<VertexId, int> home;
  for (int c = 0; c < r; ++c) {
    Cluster cl;
    cl.verts = parts[c].verts;
    cl.segments = segments_in(cl.verts);
    cl.terminals = endpoints_of(cl.segments);
    cl.happy = static_cast<int>(cl.segments.size()) >= d_hat;
    cl.exhaustive = parts[c].exhaustive;
    for (VertexId v : cl.verts) home[v] = c;
    dec.clusters.push_back(std::move(cl));
  }
  for (EdgeId e : deleted) {
    const Edge& ed = host.edge(e);
    if (home.at(ed.u) == home.at(ed.v))
      throw std::logic_error("deleted edge lies inside a cluster");
    ++dec.clusters[home.at(ed.u)].out_edges;
    ++dec.clusters[home.at(ed.v)].out_edges;
  }

  std::vector<int> containers(segments.size(), 0);
  for (const Cluster& cl : dec.clusters)
    for (int i : cl.segments) ++containers[i];
  for (int i = 0; i < segments.size(); ++i) {
    bool hit = std::any_of(segments.paths[i].edges.begin(),
                           segments.paths[i].edges.end(),
                           [&](EdgeId e) { return deleted.count(e) > 0; });
    if (hit) ++dec.destroyed;
    if (hit == (containers[i] == 1) || containers[i] > 1)
      throw std::logic_error(
          "a segment must be destroyed or lie in exactly one cluster");
  }
  for (const Cluster& cl : dec.clusters)
    if (cl.happy)
      dec.survivors.insert(dec.survivors.end(), cl.segments.begin(),
                           cl.segments.end());
  std::sort(dec.survivors.begin(), dec.survivors.end());
  dec.exhaustive = std::all_of(dec.clusters.begin(), dec.clusters.end(),
                               [](const Cluster& c) { return c.exhaustive; });

  if (static_cast<long long>(deleted.size()) >
      static_cast<long long>(r - 1) * w_hat)
    throw std::logic_error("deleted more edges than the split budget");
  int small_boundary = 0;
  for (const Cluster& cl : dec.clusters) {
    if (cl.out_edges >= 4 * w_hat) continue;
    ++small_boundary;
    if (static_cast<int>(cl.segments.size()) < 2 * d_hat - 4 * w_hat)
      throw std::logic_error(
          "small-boundary cluster holds too few segments");
  }
  if (2 * small_boundary < r)
    throw std::logic_error(
        "fewer than half the clusters have a small boundary");
  if (dec.destroyed > static_cast<long long>(r) * w_hat)
    throw std::logic_error("destroyed more segments than the cut budget");
  if (4 * static_cast<long long>(dec.survivors.size()) < segments.size())
    throw std::logic_error("survivor count fell below a quarter");
  return dec;
}

ValidationReport validate_decomposition(const Graph& host,
                                        const PathFamily& segments,
                                        int w_hat, int d_hat,
                                        const ClusterDecomposition& dec,
                                        const CutOracle& oracle) {
  ValidationReport rep;
  if (w_hat < 1 || d_hat < 8 * w_hat) rep.fail("bad parameters");
  if (dec.clusters.empty()) rep.fail("no clusters");
  if (!rep.ok) return rep;

  std::map<VertexId, int> home;
  for (int c = 0; c < static_cast<int>(dec.clusters.size()); ++c) {
    const auto& vs = dec.clusters[c].verts;
    if (vs.empty()) rep.fail("cluster " + std::to_string(c) + " is empty");
    if (!std::is_sorted(vs.begin(), vs.end()))
      rep.fail("cluster " + std::to_string(c) + " vertices not sorted");
    for (VertexId v : vs) {
      if (!host.has_vertex(v))
        rep.fail("cluster " + std::to_string(c) + " vertex " +
                 std::to_string(v) + " not in the host");
      else if (!home.emplace(v, c).second)
        rep.fail("vertex " + std::to_string(v) + " lies in two clusters");
    }
  }
  if (home.size() != static_cast<size_t>(host.vertex_count()))
    rep.fail("clusters do not cover the host");
  if (!rep.ok) return rep;

  for (EdgeId e : host.edge_ids()) {
    const Edge& ed = host.edge(e);
    bool crossing = home.at(ed.u) != home.at(ed.v);
    if (crossing != (dec.deleted.count(e) > 0))
      rep.fail(std::string("edge ") + std::to_string(e) +
               (crossing ? " crosses clusters but is not deleted"
                         : " is deleted but lies inside a cluster"));
  }
  for (EdgeId e : dec.deleted)
    if (!host.has_edge(e))
      rep.fail("deleted edge " + std::to_string(e) + " not in the host");

  int r = static_cast<int>(dec.clusters.size());
  std::vector<int> survivors;
  int destroyed = 0;
  std::vector<int> containers(segments.size(), 0);
  for (int c = 0; c < r; ++c) {
    const Cluster& cl = dec.clusters[c];
    std::set<VertexId> vs(cl.verts.begin(), cl.verts.end());
    std::vector<int> segs;
    for (int i = 0; i < segments.size(); ++i) {
      const auto& pv = segments.paths[i].verts;
      if (!pv.empty() && std::all_of(pv.begin(), pv.end(), [&](VertexId v) {
            return vs.count(v) > 0;
          }))
        segs.push_back(i);
    }
    if (segs != cl.segments)
      rep.fail("cluster " + std::to_string(c) + " segment list is wrong");
    for (int i : segs) ++containers[i];
    std::set<VertexId> pts;
    for (int i : segs) {
      pts.insert(segments.paths[i].a());
      pts.insert(segments.paths[i].b());
    }
    if (std::vector<VertexId>(pts.begin(), pts.end()) != cl.terminals)
      rep.fail("cluster " + std::to_string(c) + " terminal list is wrong");
    int out = 0;
    for (EdgeId e : dec.deleted)
      if (host.has_edge(e) && (vs.count(host.edge(e).u) > 0) !=
                                  (vs.count(host.edge(e).v) > 0))
        ++out;
    if (out != cl.out_edges)
      rep.fail("cluster " + std::to_string(c) + " boundary count is " +
               std::to_string(out) + ", recorded " +
               std::to_string(cl.out_edges));
    if (cl.happy != (static_cast<int>(segs.size()) >= d_hat))
      rep.fail("cluster " + std::to_string(c) + " happy flag is wrong");
    if (cl.happy)
      survivors.insert(survivors.end(), segs.begin(), segs.end());
  }
  for (int i = 0; i < segments.size(); ++i) {
    bool hit = std::any_of(
        segments.paths[i].edges.begin(), segments.paths[i].edges.end(),
        [&](EdgeId e) { return dec.deleted.count(e) > 0; });
    destroyed += hit ? 1 : 0;
    if (hit == (containers[i] == 1) || containers[i] > 1)
      rep.fail("segment " + std::to_string(i) +
               " is neither destroyed nor housed exactly once");
  }
  std::sort(survivors.begin(), survivors.end());
  if (survivors != dec.survivors) rep.fail("survivor list is wrong");
  if (destroyed != dec.destroyed)
    rep.fail("destroyed count is " + std::to_string(destroyed) +
             ", recorded " + std::to_string(dec.destroyed));

  if (static_cast<long long>(dec.deleted.size()) >
      static_cast<long long>(r - 1) * w_hat)
    rep.fail("deleted edges exceed the split budget");
  int small_boundary = 0;
  for (const Cluster& cl : dec.clusters) {
    if (cl.out_edges >= 4 * w_hat) continue;
    ++small_boundary;
    if (static_cast<int>(cl.segments.size()) < 2 * d_hat - 4 * w_hat)
      rep.fail("small-boundary cluster holds too few segments");
  }
  if (2 * small_boundary < r)
    rep.fail("fewer than half the clusters have a small boundary");
  if (destroyed > static_cast<long long>(r) * w_hat)
    rep.fail("destroyed count exceeds the cut budget");
  if (4 * static_cast<long long>(survivors.size()) <
      static_cast<long long>(segments.size()))
    rep.fail("survivors fell below a quarter of the segments");

  for (int c = 0; c < r; ++c) {
    const Cluster& cl = dec.clusters[c];
    if (!cl.happy) continue;
    CutVerdict v = oracle(host.induced(cl.verts), cl.terminals, w_hat);
    if (v.side)
      rep.fail("happy cluster " + std::to_string(c) +
               " admits a refuting cut");
  }
  return rep;
}

ClassGrouping group_by_class(const std::vector<int>& sizes, int d,
                             int class_cap) {
  if (d < 1) throw std::invalid_argument("class base must be positive");
  if (class_cap < 1) throw std::invalid_argument("need at least one class");
  if (sizes.empty()) throw std::invalid_argument("no cluster sizes");

  std::vector<int> cls(sizes.size());
  for (size_t i = 0; i < sizes.size(); ++i) {
    if (4LL * sizes[i] < d)
      throw std::invalid_argument("size " + std::to_string(sizes[i]) +
                                  " falls below the class floor " +
                                  std::to_string(d) + "/4");
    int j = 0;
    while (4LL * sizes[i] >= (static_cast<long long>(d) << (j + 1))) ++j;
    if (j >= class_cap)
      throw std::invalid_argument("size " + std::to_string(sizes[i]) +
                                  " needs class " + std::to_string(j) +
                                  ", beyond the cap " +
                                  std::to_string(class_cap));
    cls[i] = j;
  }

  std::vector<long long> mass(class_cap, 0);
  for (size_t i = 0; i < sizes.size(); ++i) mass[cls[i]] += sizes[i];
  int best = 0;
  for (int j = 1; j < class_cap; ++j)
    if (mass[j] > mass[best]) best = j;

  ClassGrouping out;
  out.cls = best;
  out.path_mass = mass[best];
  for (size_t i = 0; i < sizes.size(); ++i)
    if (cls[i] == best) out.members.push_back(static_cast<int>(i));

  if (static_cast<long long>(out.members.size()) *
          (static_cast<long long>(d) << (best + 1)) <=
      4 * out.path_mass)
    throw std::logic_error("class member count fell below the mass bound");
  return out;
}

}  // namespace gml
