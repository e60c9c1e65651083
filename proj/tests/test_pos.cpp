#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>

#include "doctest.h"
#include "gml/pos.hpp"

using namespace gml;

namespace {

Path edge_path(const Graph& g, VertexId u, VertexId v) {
  auto e = g.find_edge(u, v);
  REQUIRE(e.has_value());
  return Path{{u, v}, {*e}};
}

struct Chain {
  Graph g;
  PathOfSets pos;
};

// l cliques of size m at id bases 0, 100, 200, ...; nails A_i = first w ids,
// B_i = next w; consecutive clusters joined by a perfect matching of single
// edges B_i[j] -> A_{i+1}[j].
Chain make_clique_chain(int l, int m, int w) {
  REQUIRE(m >= 2 * w);
  REQUIRE(m <= 90);
  std::vector<VertexId> verts;
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int i = 0; i < l; ++i) {
    int base = 100 * i;
    for (int v = 0; v < m; ++v) verts.push_back(base + v);
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b) edges.push_back({base + a, base + b});
  }
  for (int i = 0; i + 1 < l; ++i)
    for (int j = 0; j < w; ++j)
      edges.push_back({100 * i + w + j, 100 * (i + 1) + j});
  Graph g = Graph::build(verts, edges);

  PathOfSets pos;
  pos.width = w;
  pos.strength = PosStrength::kStrong;
  for (int i = 0; i < l; ++i) {
    int base = 100 * i;
    std::vector<VertexId> cl, a, b;
    for (int v = 0; v < m; ++v) cl.push_back(base + v);
    for (int j = 0; j < w; ++j) a.push_back(base + j);
    for (int j = 0; j < w; ++j) b.push_back(base + w + j);
    pos.clusters.push_back(cl);
    pos.A.push_back(a);
    pos.B.push_back(b);
  }
  for (int i = 0; i + 1 < l; ++i) {
    PathFamily fam;
    for (int j = 0; j < w; ++j)
      fam.paths.push_back(edge_path(g, 100 * i + w + j, 100 * (i + 1) + j));
    pos.connectors.push_back(fam);
  }
  return {std::move(g), std::move(pos)};
}

bool mentions(const ValidationReport& rep, const std::string& needle) {
  for (const auto& f : rep.failures)
    if (f.find(needle) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("clique chain validates strong and weak") {
  Chain c = make_clique_chain(3, 8, 2);
  CHECK(validate_pos(c.g, c.pos).ok);
  c.pos.strength = PosStrength::kWeak;
  CHECK(validate_pos(c.g, c.pos).ok);
}

TEST_CASE("structural failures are reported") {
  Chain base = make_clique_chain(3, 8, 2);

  SUBCASE("nail array sizes") {
    PathOfSets p = base.pos;
    p.A.pop_back();
    auto rep = validate_pos(base.g, p);
    CHECK_FALSE(rep.ok);
    CHECK(mentions(rep, "nail arrays"));
  }
  SUBCASE("wrong nail count in one cluster") {
    PathOfSets p = base.pos;
    p.A[1].pop_back();
    auto rep = validate_pos(base.g, p);
    CHECK_FALSE(rep.ok);
    CHECK(mentions(rep, "|A| != width"));
  }
  SUBCASE("overlapping clusters") {
    PathOfSets p = base.pos;
    p.clusters[1].push_back(p.clusters[0][0]);
    auto rep = validate_pos(base.g, p);
    CHECK_FALSE(rep.ok);
    CHECK(mentions(rep, "overlaps"));
  }
  SUBCASE("nail outside its cluster") {
    PathOfSets p = base.pos;
    p.B[0][0] = p.clusters[1][7];
    auto rep = validate_pos(base.g, p);
    CHECK_FALSE(rep.ok);
    CHECK(mentions(rep, "outside"));
  }
  SUBCASE("shared nail") {
    PathOfSets p = base.pos;
    p.B[0][0] = p.A[0][0];
    auto rep = validate_pos(base.g, p);
    CHECK_FALSE(rep.ok);
    CHECK(mentions(rep, "share"));
  }
  SUBCASE("disconnected cluster") {
    // Two far-apart vertices of different cliques cannot be one cluster,
    // but keep sizes legal by swapping a vertex across.
    PathOfSets p = base.pos;
    std::swap(p.clusters[0][7], p.clusters[2][7]);
    auto rep = validate_pos(base.g, p);
    CHECK_FALSE(rep.ok);
    CHECK(mentions(rep, "not connected"));
  }
}

TEST_CASE("connector violations are reported") {
  Chain base = make_clique_chain(3, 8, 2);

  SUBCASE("duplicated connector path") {
    PathOfSets p = base.pos;
    p.connectors[0].paths[1] = p.connectors[0].paths[0];
    auto rep = validate_pos(base.g, p);
    CHECK_FALSE(rep.ok);
    CHECK(mentions(rep, "connector"));
  }
  SUBCASE("connector dipping through a cluster") {
    // Reroute one connector through an interior vertex of cluster 0.
    PathOfSets p = base.pos;
    Path detour = edge_path(base.g, 6, 2).concat(edge_path(base.g, 2, 100));
    p.connectors[0].paths[0] = detour;
    auto rep = validate_pos(base.g, p);
    CHECK_FALSE(rep.ok);
    CHECK(mentions(rep, "connectors:"));
  }
  SUBCASE("missing endpoint coverage") {
    PathOfSets p = base.pos;
    // Start both connector paths at the same B vertex's clique-mate.
    p.connectors[0].paths[0] = edge_path(base.g, 2, 100);
    p.connectors[0].paths[1] = edge_path(base.g, 3, 101);
    p.B[0] = {2, 4};
    auto rep = validate_pos(base.g, p);
    CHECK_FALSE(rep.ok);
    CHECK(mentions(rep, "starts do not cover"));
  }
}

TEST_CASE("star cluster passes weak but fails strong") {
  // Center 0, leaves 1..4. Leaves are edge-well-linked (paths may share
  // the center) but no two node-disjoint A-B paths exist.
  Graph g = Graph::build({0, 1, 2, 3, 4}, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  PathOfSets p;
  p.clusters = {{0, 1, 2, 3, 4}};
  p.A = {{1, 2}};
  p.B = {{3, 4}};
  p.width = 2;
  p.strength = PosStrength::kWeak;
  CHECK(validate_pos(g, p).ok);

  p.strength = PosStrength::kStrong;
  auto rep = validate_pos(g, p);
  CHECK_FALSE(rep.ok);
  CHECK(mentions(rep, "linkedness"));
  CHECK(mentions(rep, "achieved 1"));
}

TEST_CASE("stitch halves clique chains of every parity") {
  for (int l = 1; l <= 5; ++l) {
    CAPTURE(l);
    Chain c = make_clique_chain(l, 8, 3);
    REQUIRE(validate_pos(c.g, c.pos).ok);

    std::vector<StitchPick> picks;
    for (int j = 0; j < (l + 1) / 2; ++j) {
      StitchPick pk;
      pk.A_sub = {c.pos.A[2 * j][0], c.pos.A[2 * j][1]};
      pk.B_sub = {c.pos.B[2 * j][0], c.pos.B[2 * j][1]};
      picks.push_back(pk);
    }
    auto res = stitch(c.g, c.pos, picks);
    REQUIRE(std::holds_alternative<PathOfSets>(res));
    const PathOfSets& out = std::get<PathOfSets>(res);
    CHECK(out.length() == (l + 1) / 2);
    CHECK(out.width == 2);
    CHECK(out.strength == PosStrength::kStrong);
    for (int j = 0; j < out.length(); ++j)
      CHECK(out.clusters[j] == c.pos.clusters[2 * j]);
    CHECK(validate_pos(c.g, out).ok);
  }
}

TEST_CASE("stitch with width-one picks") {
  Chain c = make_clique_chain(4, 6, 2);
  std::vector<StitchPick> picks = {{{0}, {2}}, {{200}, {202}}};
  auto res = stitch(c.g, c.pos, picks);
  REQUIRE(std::holds_alternative<PathOfSets>(res));
  const PathOfSets& out = std::get<PathOfSets>(res);
  CHECK(out.length() == 2);
  CHECK(out.width == 1);
  CHECK(validate_pos(c.g, out).ok);
}

TEST_CASE("stitch surfaces the blocking separator") {
  // Middle cluster is a star: any two crossings collide at its center.
  Graph g = Graph::build(
      {0, 1, 2, 3, 10, 11, 12, 13, 20, 21, 22, 23},
      {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},      // K4
       {11, 10}, {11, 12}, {11, 13},                        // star, center 11
       {20, 21}, {20, 22}, {20, 23}, {21, 22}, {21, 23}, {22, 23},  // K4
       {2, 10}, {3, 13}, {11, 20}, {12, 21}});
  PathOfSets p;
  p.clusters = {{0, 1, 2, 3}, {10, 11, 12, 13}, {20, 21, 22, 23}};
  p.A = {{0, 1}, {10, 13}, {20, 21}};
  p.B = {{2, 3}, {11, 12}, {22, 23}};
  p.width = 2;
  p.strength = PosStrength::kWeak;
  PathFamily f0, f1;
  f0.paths = {edge_path(g, 2, 10), edge_path(g, 3, 13)};
  f1.paths = {edge_path(g, 11, 20), edge_path(g, 12, 21)};
  p.connectors = {f0, f1};

  std::vector<StitchPick> picks = {{{0, 1}, {2, 3}}, {{20, 21}, {22, 23}}};
  auto res = stitch(g, p, picks);
  REQUIRE(std::holds_alternative<StitchError>(res));
  const StitchError& err = std::get<StitchError>(res);
  CHECK(err.cluster == 1);
  CHECK(err.separator == std::vector<VertexId>{11});
}

TEST_CASE("stitch rejects malformed picks") {
  Chain c = make_clique_chain(3, 8, 2);
  SUBCASE("wrong pick count") {
    auto res = stitch(c.g, c.pos, {{{0}, {2}}});
    REQUIRE(std::holds_alternative<StitchError>(res));
  }
  SUBCASE("pick not inside the nails") {
    auto res = stitch(c.g, c.pos, {{{7}, {2}}, {{200}, {202}}});
    REQUIRE(std::holds_alternative<StitchError>(res));
    CHECK(std::get<StitchError>(res).cluster == 0);
  }
  SUBCASE("mismatched pick sizes") {
    auto res = stitch(c.g, c.pos, {{{0, 1}, {2, 3}}, {{200}, {202}}});
    REQUIRE(std::holds_alternative<StitchError>(res));
  }
}

TEST_CASE("boost underflow is an error, not a clamp") {
  Chain c = make_clique_chain(2, 10, 4);
  c.pos.strength = PosStrength::kWeak;
  auto res = boost_to_strong(c.g, c.pos);  // delta 4: 4 -> 1 -> 1 -> 0
  REQUIRE(std::holds_alternative<BoostError>(res));
  const BoostError& err = std::get<BoostError>(res);
  CHECK(err.message.find("underflow") != std::string::npos);
  CHECK(err.message.find("4 -> 1 -> 1 -> 0") != std::string::npos);
}

TEST_CASE("boost with workable ratios yields a strong chain") {
  Chain c = make_clique_chain(3, 12, 4);
  c.pos.strength = PosStrength::kWeak;
  BoostConfig cfg;
  cfg.num1 = 3;
  cfg.den1 = 4;  // 4 -> 3 -> 3
  cfg.num2 = 1;
  cfg.den2 = 1;  // keep all 3
  auto res = boost_to_strong(c.g, c.pos, cfg);
  REQUIRE(std::holds_alternative<PathOfSets>(res));
  const PathOfSets& out = std::get<PathOfSets>(res);
  CHECK(out.width == 3);
  CHECK(out.length() == 3);
  CHECK(out.strength == PosStrength::kStrong);
  CHECK(validate_pos(c.g, out).ok);

  // New nails come from the old ones and connectors shrink in place.
  for (int i = 0; i < 3; ++i) {
    for (VertexId v : out.A[i]) {
      const auto& pool = i == 0 ? c.pos.A[0] : c.pos.A[i];
      CHECK(std::count(pool.begin(), pool.end(), v) == 1);
    }
    for (VertexId v : out.B[i])
      CHECK(std::count(c.pos.B[i].begin(), c.pos.B[i].end(), v) == 1);
  }
  for (int i = 0; i < 2; ++i)
    for (const Path& q : out.connectors[i].paths) {
      bool from_original =
          std::count(c.pos.connectors[i].paths.begin(),
                     c.pos.connectors[i].paths.end(), q) == 1;
      CHECK(from_original);
    }

  auto again = boost_to_strong(c.g, c.pos, cfg);
  REQUIRE(std::holds_alternative<PathOfSets>(again));
  const PathOfSets& out2 = std::get<PathOfSets>(again);
  CHECK(out2.A == out.A);
  CHECK(out2.B == out.B);
  for (int i = 0; i < 2; ++i)
    CHECK(out2.connectors[i].paths == out.connectors[i].paths);
}

namespace {

struct HairyChain {
  Graph g;
  HairyPathOfSets h;
};

// Clique chain plus one K4 hair per cluster, anchored at ids 1000 + 10i,
// reached by single-edge links from cluster vertices clear of the nails.
HairyChain make_hairy_chain(int l, int m, int w) {
  REQUIRE(m >= 3 * w);
  std::vector<VertexId> verts;
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int i = 0; i < l; ++i) {
    int base = 100 * i;
    for (int v = 0; v < m; ++v) verts.push_back(base + v);
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b) edges.push_back({base + a, base + b});
    int hb = 1000 + 10 * i;
    for (int v = 0; v < 4; ++v) verts.push_back(hb + v);
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b) edges.push_back({hb + a, hb + b});
    for (int j = 0; j < w; ++j) edges.push_back({base + 2 * w + j, hb + j});
  }
  for (int i = 0; i + 1 < l; ++i)
    for (int j = 0; j < w; ++j)
      edges.push_back({100 * i + w + j, 100 * (i + 1) + j});
  Graph g = Graph::build(verts, edges);

  HairyPathOfSets h;
  h.base.width = w;
  h.base.strength = PosStrength::kStrong;
  for (int i = 0; i < l; ++i) {
    int base = 100 * i;
    int hb = 1000 + 10 * i;
    std::vector<VertexId> cl, a, b, hc, x, y;
    for (int v = 0; v < m; ++v) cl.push_back(base + v);
    for (int j = 0; j < w; ++j) {
      a.push_back(base + j);
      b.push_back(base + w + j);
      x.push_back(base + 2 * w + j);
      y.push_back(hb + j);
    }
    for (int v = 0; v < 4; ++v) hc.push_back(hb + v);
    h.base.clusters.push_back(cl);
    h.base.A.push_back(a);
    h.base.B.push_back(b);
    h.hair_clusters.push_back(hc);
    h.X.push_back(x);
    h.Y.push_back(y);
    PathFamily links;
    for (int j = 0; j < w; ++j)
      links.paths.push_back(edge_path(g, base + 2 * w + j, hb + j));
    h.hair_links.push_back(links);
  }
  for (int i = 0; i + 1 < l; ++i) {
    PathFamily fam;
    for (int j = 0; j < w; ++j)
      fam.paths.push_back(edge_path(g, 100 * i + w + j, 100 * (i + 1) + j));
    h.base.connectors.push_back(fam);
  }
  return {std::move(g), std::move(h)};
}

}  // namespace

TEST_CASE("hairy chain validates") {
  HairyChain c = make_hairy_chain(2, 8, 2);
  auto rep = validate_hairy_pos(c.g, c.h);
  CHECK(rep.ok);
}

TEST_CASE("hairy chain violations are reported") {
  SUBCASE("anchor entry overlapping a nail") {
    HairyChain c = make_hairy_chain(2, 8, 2);
    c.h.X[0][0] = c.h.base.A[0][0];
    auto rep = validate_hairy_pos(c.g, c.h);
    CHECK_FALSE(rep.ok);
    CHECK(mentions(rep, "X touches a nail"));
  }
  SUBCASE("hair overlapping a base cluster") {
    HairyChain c = make_hairy_chain(2, 8, 2);
    c.h.hair_clusters[1].push_back(c.h.base.clusters[0][7]);
    auto rep = validate_hairy_pos(c.g, c.h);
    CHECK_FALSE(rep.ok);
    CHECK(mentions(rep, "overlaps a base cluster"));
  }
  SUBCASE("hair link missing the anchor set") {
    HairyChain c = make_hairy_chain(2, 8, 2);
    c.h.Y[0] = {c.h.hair_clusters[0][2], c.h.hair_clusters[0][3]};
    auto rep = validate_hairy_pos(c.g, c.h);
    CHECK_FALSE(rep.ok);
    CHECK(mentions(rep, "end not in Y"));
  }
  SUBCASE("weak base is rejected outright") {
    HairyChain c = make_hairy_chain(2, 8, 2);
    c.h.base.strength = PosStrength::kWeak;
    auto rep = validate_hairy_pos(c.g, c.h);
    CHECK_FALSE(rep.ok);
    CHECK(mentions(rep, "not marked strong"));
  }
}
