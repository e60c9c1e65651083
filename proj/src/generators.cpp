#include "gml/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace gml {

Graph make_grid(int g) {
  if (g < 1) throw std::invalid_argument("grid size must be positive");
  std::vector<VertexId> vs(static_cast<size_t>(g) * g);
  std::iota(vs.begin(), vs.end(), 0);
  std::vector<std::pair<VertexId, VertexId>> es;
  for (int r = 0; r < g; ++r)
    for (int c = 0; c < g; ++c) {
      int v = r * g + c;
      if (c + 1 < g) es.emplace_back(v, v + 1);
      if (r + 1 < g) es.emplace_back(v, v + g);
    }
  return Graph::build(vs, es);
}

Instance make_pendant_grid(int kappa) {
  if (kappa < 1) throw std::invalid_argument("kappa must be positive");
  int side = kappa + 2;
  std::vector<VertexId> vs(static_cast<size_t>(side) * side);
  std::iota(vs.begin(), vs.end(), 0);
  std::vector<std::pair<VertexId, VertexId>> es;
  for (int r = 0; r < side; ++r)
    for (int c = 0; c < side; ++c) {
      int v = r * side + c;
      if (c + 1 < side) es.emplace_back(v, v + 1);
      if (r + 1 < side) es.emplace_back(v, v + side);
    }
  Instance inst;
  int base = side * side;
  for (int i = 0; i < kappa; ++i) {
    VertexId pendant = base + i;
    vs.push_back(pendant);
    es.emplace_back((i + 1) * side, pendant);
    inst.sets.X.push_back(pendant);
  }
  inst.graph = Graph::build(vs, es);
  for (int c = 1; c <= kappa; ++c) {
    inst.sets.A.push_back(c);
    inst.sets.B.push_back((side - 1) * side + c);
  }
  return inst;
}

Graph make_random_regular(int n, int d, std::uint64_t seed) {
  if (n < 1 || d < 1 || n <= d || (n * d) % 2 != 0)
    throw std::invalid_argument("bad regular graph parameters");
  std::mt19937_64 rng(seed);
  std::vector<VertexId> vs(n);
  std::iota(vs.begin(), vs.end(), 0);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<int> stubs(static_cast<size_t>(n) * d);
    for (int v = 0; v < n; ++v)
      for (int k = 0; k < d; ++k) stubs[static_cast<size_t>(v) * d + k] = v;
    std::shuffle(stubs.begin(), stubs.end(), rng);
    std::set<std::pair<int, int>> seen;
    std::vector<std::pair<VertexId, VertexId>> es;
    bool ok = true;
    for (size_t i = 0; i + 1 < stubs.size(); i += 2) {
      int u = stubs[i], v = stubs[i + 1];
      if (u == v || !seen.insert(std::minmax(u, v)).second) {
        ok = false;
        break;
      }
      es.emplace_back(u, v);
    }
    if (ok) {
      std::sort(es.begin(), es.end(), [](const auto& a, const auto& b) {
        auto ka = std::minmax(a.first, a.second);
        auto kb = std::minmax(b.first, b.second);
        return ka < kb;
      });
      return Graph::build(vs, es);
    }
  }
  throw std::runtime_error("pairing model failed to produce a simple graph");
}

Instance make_path_bundle(int kappa, int len, int rungs, std::uint64_t seed) {
  if (kappa < 1 || len < 2) throw std::invalid_argument("bad bundle parameters");
  std::mt19937_64 rng(seed);
  Instance inst;
  std::vector<VertexId> vs;
  std::vector<std::pair<VertexId, VertexId>> es;
  int stride = len + 1;
  for (int i = 0; i < kappa; ++i) {
    int base = i * stride;
    for (int k = 0; k <= len; ++k) vs.push_back(base + k);
    for (int k = 0; k < len; ++k) es.emplace_back(base + k, base + k + 1);
    inst.sets.A.push_back(base);
    inst.sets.B.push_back(base + len);
  }
  int pend_base = kappa * stride;
  std::uniform_int_distribution<int> pos(1, len - 1);
  for (int i = 0; i < kappa; ++i) {
    VertexId pendant = pend_base + i;
    vs.push_back(pendant);
    es.emplace_back(i * stride + pos(rng), pendant);
    inst.sets.X.push_back(pendant);
  }
  std::set<std::pair<VertexId, VertexId>> used(es.begin(), es.end());
  std::uniform_int_distribution<int> row(0, kappa - 2);
  for (int r = 0; r < rungs && kappa >= 2; ++r) {
    for (int tries = 0; tries < 100; ++tries) {
      int i = row(rng), k = pos(rng);
      std::pair<VertexId, VertexId> e{i * stride + k, (i + 1) * stride + k};
      if (used.insert(e).second) {
        es.push_back(e);
        break;
      }
    }
  }
  inst.graph = Graph::build(vs, es);
  return inst;
}

Instance make_decorated_regular(int n, int d, int kappa, std::uint64_t seed) {
  if (kappa < 1 || n < 3 * kappa)
    throw std::invalid_argument("host too small for the requested terminals");
  Instance inst;
  Graph core = make_random_regular(n, d, seed);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  inst.sets.A.assign(order.begin(), order.begin() + kappa);
  inst.sets.B.assign(order.begin() + kappa, order.begin() + 2 * kappa);
  std::sort(inst.sets.A.begin(), inst.sets.A.end());
  std::sort(inst.sets.B.begin(), inst.sets.B.end());

  std::vector<VertexId> vs = core.vertices();
  std::vector<std::tuple<EdgeId, VertexId, VertexId>> es;
  for (EdgeId e : core.edge_ids())
    es.emplace_back(e, core.edge(e).u, core.edge(e).v);
  EdgeId next_edge = core.edge_count();
  for (int i = 0; i < kappa; ++i) {
    VertexId pendant = n + i;
    vs.push_back(pendant);
    es.emplace_back(next_edge++, order[2 * kappa + i], pendant);
    inst.sets.X.push_back(pendant);
  }
  inst.graph = Graph::build_with_ids(vs, es);
  return inst;
}

}  // namespace gml
