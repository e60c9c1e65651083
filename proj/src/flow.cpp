#include "flow.hpp"

#include <algorithm>
#include <queue>
#include <utility>

namespace gml::flow {

int Net::add_node() {
  head_.emplace_back();
  return static_cast<int>(head_.size()) - 1;
}

int Net::add_arc(int u, int v, int cap, int cost, EdgeId orig) {
  int idx = static_cast<int>(arcs_.size());
  arcs_.push_back(Arc{v, cap, 0, cost, orig});
  arcs_.push_back(Arc{u, 0, 0, -cost, orig});
  head_[u].push_back(idx);
  head_[v].push_back(idx + 1);
  return idx;
}

bool Net::augment_bfs(int s, int t) {
  std::vector<int> via(node_count(), -1);
  std::vector<bool> seen(node_count(), false);
  seen[s] = true;
  std::queue<int> q;
  q.push(s);
  while (!q.empty() && !seen[t]) {
    int u = q.front();
    q.pop();
    for (int i : head_[u]) {
      const Arc& a = arcs_[i];
      if (a.cap - a.flow <= 0 || seen[a.to]) continue;
      seen[a.to] = true;
      via[a.to] = i;
      q.push(a.to);
    }
  }
  if (!seen[t]) return false;
  for (int v = t; v != s;) {
    int i = via[v];
    arcs_[i].flow += 1;
    arcs_[i ^ 1].flow -= 1;
    v = arcs_[i ^ 1].to;
  }
  return true;
}

int Net::max_flow(int s, int t, int limit) {
  int sent = 0;
  while (sent < limit && augment_bfs(s, t)) ++sent;
  return sent;
}

void Net::seed_potentials(int s) {
  potential_.assign(node_count(), 0);
  bool negative = false;
  for (const Arc& a : arcs_) {
    if (a.cap - a.flow > 0 && a.cost < 0) {
      negative = true;
      break;
    }
  }
  if (!negative) return;
  // Flow pushed outside min_cost_flow exposes negative reverse arcs; one
  // Bellman-Ford pass restores valid potentials before Dijkstra runs.
  std::vector<long long> dist(node_count(), kInf);
  dist[s] = 0;
  for (int round = 0; round < node_count(); ++round) {
    bool changed = false;
    for (int i = 0; i < static_cast<int>(arcs_.size()); ++i) {
      const Arc& a = arcs_[i];
      int u = arcs_[i ^ 1].to;
      if (a.cap - a.flow <= 0 || dist[u] >= kInf) continue;
      if (dist[u] + a.cost < dist[a.to]) {
        dist[a.to] = dist[u] + a.cost;
        changed = true;
      }
    }
    if (!changed) break;
  }
  for (int v = 0; v < node_count(); ++v)
    if (dist[v] < kInf) potential_[v] = dist[v];
}

bool Net::augment_cheapest(int s, int t, long long* cost) {
  // Dijkstra over reduced costs. The potentials keep every residual arc
  // nonnegative, so negative reverse arcs never stall the search, and ties
  // pop the smaller node index first: deterministic predecessors.
  std::vector<long long> dist(node_count(), kInf);
  std::vector<int> via(node_count(), -1);
  using Item = std::pair<long long, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> frontier;
  dist[s] = 0;
  frontier.emplace(0, s);
  while (!frontier.empty()) {
    auto [d, u] = frontier.top();
    frontier.pop();
    if (d > dist[u]) continue;
    for (int i : head_[u]) {
      const Arc& a = arcs_[i];
      if (a.cap - a.flow <= 0) continue;
      long long nd = d + a.cost + potential_[u] - potential_[a.to];
      if (nd < dist[a.to]) {
        dist[a.to] = nd;
        via[a.to] = i;
        frontier.emplace(nd, a.to);
      }
    }
  }
  if (dist[t] >= kInf) return false;
  long long real = dist[t] + potential_[t] - potential_[s];
  // Capping unreached nodes at dist[t] keeps reduced costs nonnegative on
  // every arc the residual graph can still expose.
  for (int v = 0; v < node_count(); ++v)
    potential_[v] += std::min(dist[v], dist[t]);
  for (int v = t; v != s;) {
    int i = via[v];
    arcs_[i].flow += 1;
    arcs_[i ^ 1].flow -= 1;
    v = arcs_[i ^ 1].to;
  }
  if (cost) *cost += real;
  return true;
}

int Net::min_cost_flow(int s, int t, int limit, long long* total_cost) {
  seed_potentials(s);
  int sent = 0;
  while (sent < limit && augment_cheapest(s, t, total_cost)) ++sent;
  return sent;
}

std::vector<bool> Net::residual_reachable(int s) const {
  std::vector<bool> seen(node_count(), false);
  seen[s] = true;
  std::queue<int> q;
  q.push(s);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int i : head_[u]) {
      const Arc& a = arcs_[i];
      if (a.cap - a.flow <= 0 || seen[a.to]) continue;
      seen[a.to] = true;
      q.push(a.to);
    }
  }
  return seen;
}

}  // namespace gml::flow
