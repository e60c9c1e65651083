#pragma once

#include <limits>
#include <vector>

#include "gml/graph.hpp"

namespace gml::flow {

constexpr int kInf = std::numeric_limits<int>::max() / 4;

// Unit-capacity flow network with optional arc costs. Arc order is fixed by
// insertion and every tie in either augmentation strategy breaks on arc or
// node index, so results are deterministic for a fixed construction
// sequence.
class Net {
 public:
  struct Arc {
    int to;
    int cap;
    int flow = 0;
    int cost = 0;
    EdgeId orig = -1;  // host edge this arc models, if any
  };

  explicit Net(int nodes) : head_(nodes) {}

  int add_node();
  int node_count() const { return static_cast<int>(head_.size()); }

  // Adds a forward arc and its zero-capacity reverse; returns the forward
  // arc index (reverse is index+1).
  int add_arc(int u, int v, int cap, int cost = 0, EdgeId orig = -1);

  const Arc& arc(int i) const { return arcs_[i]; }
  Arc& arc(int i) { return arcs_[i]; }
  const std::vector<int>& out(int u) const { return head_[u]; }

  // Shortest-augmenting-path max flow; optional ceiling on the units sent.
  int max_flow(int s, int t, int limit = kInf);

  // Successive shortest paths by cost (ties broken by node index);
  // returns units actually sent and accumulates their total cost.
  int min_cost_flow(int s, int t, int limit, long long* total_cost);

  // Nodes reachable from s through arcs with residual capacity.
  std::vector<bool> residual_reachable(int s) const;

 private:
  bool augment_bfs(int s, int t);
  bool augment_cheapest(int s, int t, long long* cost);
  void seed_potentials(int s);

  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> head_;
  std::vector<long long> potential_;
};

}  // namespace gml::flow
