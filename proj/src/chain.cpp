#include "gml/chain.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gml {

namespace {

int overlap_size(const std::vector<int>& a, const std::vector<int>& b) {
  size_t i = 0, j = 0;
  int n = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j])
      ++i;
    else if (b[j] < a[i])
      ++j;
    else
      ++n, ++i, ++j;
  }
  return n;
}

std::vector<int> overlap(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

void check_index_sets(const IndexSets& idx) {
  if (idx.ground < 1) throw std::invalid_argument("empty ground set");
  if (idx.w_hat < 1) throw std::invalid_argument("overlap demand must be positive");
  if (idx.d_hat < 1) throw std::invalid_argument("set size floor must be positive");
  if (idx.sets.empty()) throw std::invalid_argument("no sets");
  for (int i = 0; i < idx.count(); ++i) {
    const auto& s = idx.sets[i];
    if (static_cast<int>(s.size()) < idx.d_hat) {
      std::ostringstream msg;
      msg << "set " << i << " holds " << s.size() << " elements, floor is "
          << idx.d_hat;
      throw std::invalid_argument(msg.str());
    }
    for (size_t k = 0; k < s.size(); ++k) {
      if (s[k] < 0 || s[k] >= idx.ground)
        throw std::invalid_argument("set element outside the ground set");
      if (k > 0 && s[k] <= s[k - 1])
        throw std::invalid_argument("set not sorted or has repeats");
    }
  }
}

}  // namespace

int chain_length_floor(const IndexSets& idx) {
  long long m = idx.count();
  long long num = m * idx.d_hat;
  long long den = 2LL * idx.ground;
  return static_cast<int>((num + den - 1) / den);
}

Chain find_chain(const IndexSets& idx, int target_len) {
  check_index_sets(idx);
  long long n = idx.ground, d = idx.d_hat, w = idx.w_hat, m = idx.count();
  if (target_len > 0) {
    std::ostringstream msg;
    if (n < 3 * w)
      msg << "ground " << n << " below 3*w = " << 3 * w;
    else if (d * d < 4 * n * w)
      msg << "d^2 = " << d * d << " below 4*n*w = " << 4 * n * w;
    else if (m * d < 2 * n * w)
      msg << "m*d = " << m * d << " below 2*n*w = " << 2 * n * w;
    else if (target_len > chain_length_floor(idx))
      msg << "target length " << target_len << " exceeds the floor "
          << chain_length_floor(idx);
    if (!msg.str().empty()) throw std::invalid_argument(msg.str());
  }

  // Peel: level[i] = 1 + deepest overlapping predecessor. Since positions
  // only look backwards the single left-to-right sweep is the peeling.
  int count = idx.count();
  std::vector<int> level(count, 1);
  for (int j = 0; j < count; ++j)
    for (int i = 0; i < j; ++i)
      if (overlap_size(idx.sets[i], idx.sets[j]) >= idx.w_hat)
        level[j] = std::max(level[j], level[i] + 1);

  int height = 0, deepest = -1;
  for (int i = 0; i < count; ++i)
    if (level[i] > height) height = level[i], deepest = i;
  if (target_len > 0 && height < chain_length_floor(idx))
    throw std::logic_error("peeling came out shorter than its floor");

  std::vector<int> walk{deepest};
  for (int lev = level[deepest] - 1; lev >= 1; --lev) {
    int next = -1;
    for (int i = 0; i < walk.back() && next < 0; ++i)
      if (level[i] == lev &&
          overlap_size(idx.sets[i], idx.sets[walk.back()]) >= idx.w_hat)
        next = i;
    if (next < 0) throw std::logic_error("peeled set lost its predecessor");
    walk.push_back(next);
  }
  std::reverse(walk.begin(), walk.end());
  if (target_len > 0) walk.resize(target_len);

  Chain chain;
  chain.indices = std::move(walk);
  for (size_t j = 0; j + 1 < chain.indices.size(); ++j)
    chain.shared.push_back(
        overlap(idx.sets[chain.indices[j]], idx.sets[chain.indices[j + 1]]));
  return chain;
}

namespace {

[[noreturn]] void bad_link(int link, const std::string& why) {
  std::ostringstream msg;
  msg << "link " << link << ": " << why;
  throw std::invalid_argument(msg.str());
}

// Position of the segment's first vertex on its spine, after verifying the
// segment really is a forward cut of the spine.
int anchor_on_spine(const Path& spine, const Path& seg, int link, int p) {
  std::ostringstream where;
  where << "spine " << p << " segment";
  if (seg.is_empty()) bad_link(link, where.str() + " is empty");
  int at = spine.index_of(seg.a());
  if (at < 0 || at + static_cast<int>(seg.verts.size()) >
                    static_cast<int>(spine.verts.size()))
    bad_link(link, where.str() + " does not start on the spine");
  for (size_t k = 0; k < seg.verts.size(); ++k)
    if (spine.verts[at + k] != seg.verts[k])
      bad_link(link, where.str() + " strays from the spine");
  for (size_t k = 0; k < seg.edges.size(); ++k)
    if (spine.edges[at + k] != seg.edges[k])
      bad_link(link, where.str() + " uses edges off the spine");
  return at;
}

std::vector<int> housed_spines(const ChainLink& link) {
  std::vector<int> out;
  out.reserve(link.housed.size());
  for (const auto& [p, seg] : link.housed) out.push_back(p);
  return out;  // map order is already ascending
}

}  // namespace

PathOfSets assemble_weak_pos(const std::vector<ChainLink>& links,
                             const PathFamily& spines, int w_hat) {
  if (w_hat < 1) throw std::invalid_argument("width must be positive");
  if (links.empty()) throw std::invalid_argument("no links");
  int l = static_cast<int>(links.size());

  // Per-link bookkeeping: segments are forward cuts of real spines and lie
  // inside their cluster; clusters never share a vertex.
  std::vector<std::map<int, int>> seg_pos(l);  // spine -> start index
  std::set<VertexId> all_cluster_verts;
  for (int j = 0; j < l; ++j) {
    const ChainLink& link = links[j];
    if (link.cluster.empty()) bad_link(j, "empty cluster");
    if (link.housed.empty()) bad_link(j, "houses no segment");
    std::set<VertexId> cl(link.cluster.begin(), link.cluster.end());
    for (VertexId v : cl)
      if (!all_cluster_verts.insert(v).second)
        bad_link(j, "cluster shares a vertex with an earlier link");
    for (const auto& [p, seg] : link.housed) {
      if (p < 0 || p >= spines.size()) bad_link(j, "housed spine out of range");
      seg_pos[j][p] = anchor_on_spine(spines.paths[p], seg, j, p);
      for (VertexId v : seg.verts)
        if (!cl.count(v)) {
          std::ostringstream why;
          why << "spine " << p << " segment leaves the cluster";
          bad_link(j, why.str());
        }
    }
  }

  // Boundary picks: the w_hat lowest spines shared by consecutive links.
  std::vector<std::vector<int>> T(l + 1);
  for (int j = 0; j < l; ++j) {
    std::vector<int> pool =
        j == 0 ? housed_spines(links[0])
               : overlap(housed_spines(links[j - 1]), housed_spines(links[j]));
    if (static_cast<int>(pool.size()) < w_hat) {
      std::ostringstream why;
      why << "shares only " << pool.size() << " spines with link " << j - 1
          << ", width needs " << w_hat;
      bad_link(j, why.str());
    }
    pool.resize(w_hat);
    T[j] = std::move(pool);
  }
  T[l] = T[l - 1];

  PathOfSets pos;
  pos.width = w_hat;
  pos.strength = PosStrength::kWeak;
  for (int j = 0; j < l; ++j) {
    std::vector<VertexId> a, b;
    for (int p : T[j]) a.push_back(links[j].housed.at(p).a());
    for (int p : T[j + 1]) b.push_back(links[j].housed.at(p).b());
    std::set<VertexId> seen(a.begin(), a.end());
    if (seen.size() != a.size()) bad_link(j, "front nails collide");
    for (VertexId v : b)
      if (!seen.insert(v).second) bad_link(j, "front and back nails collide");
    std::vector<VertexId> cl = links[j].cluster;
    std::sort(cl.begin(), cl.end());
    cl.erase(std::unique(cl.begin(), cl.end()), cl.end());
    pos.clusters.push_back(std::move(cl));
    pos.A.push_back(std::move(a));
    pos.B.push_back(std::move(b));
  }

  // Connectors ride the shared spines between consecutive segments.
  for (int j = 0; j + 1 < l; ++j) {
    PathFamily fam;
    for (int p : T[j + 1]) {
      const Path& here = links[j].housed.at(p);
      int from = seg_pos[j].at(p) + here.length();
      int to = seg_pos[j + 1].at(p);
      if (from >= to) {
        std::ostringstream why;
        why << "spine " << p << " segment does not advance into link "
            << j + 1;
        bad_link(j, why.str());
      }
      fam.paths.push_back(spines.paths[p].subpath(from, to));
    }
    pos.connectors.push_back(std::move(fam));
  }

  // The recipe promises disjointness; verify it outright instead of
  // leaving it to the caller's validation pass.
  std::set<VertexId> used;
  for (const PathFamily& fam : pos.connectors)
    for (const Path& c : fam.paths)
      for (size_t k = 0; k < c.verts.size(); ++k) {
        if (!used.insert(c.verts[k]).second)
          throw std::invalid_argument("connectors collide");
        if (k > 0 && k + 1 < c.verts.size() &&
            all_cluster_verts.count(c.verts[k]))
          throw std::invalid_argument("connector runs back into a cluster");
      }
  return pos;
}

}  // namespace gml
