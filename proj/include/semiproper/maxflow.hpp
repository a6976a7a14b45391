#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

namespace semiproper {

/// Dinic max-flow on a small dense-ish network.
class MaxFlow {
 public:
  explicit MaxFlow(int nodes) : adj_(nodes), level_(nodes), it_(nodes) {}

  /// Returns the index of the forward edge for later flow() queries.
  int add_edge(int from, int to, std::int64_t cap) {
    edges_.push_back({to, cap});
    adj_[from].push_back(static_cast<int>(edges_.size()) - 1);
    edges_.push_back({from, 0});
    adj_[to].push_back(static_cast<int>(edges_.size()) - 1);
    return static_cast<int>(edges_.size()) - 2;
  }

  std::int64_t run(int s, int t) {
    std::int64_t total = 0;
    while (bfs(s, t)) {
      std::fill(it_.begin(), it_.end(), 0);
      while (std::int64_t f = dfs(s, t, std::numeric_limits<std::int64_t>::max())) total += f;
    }
    return total;
  }

  /// Flow currently on forward edge `e`.
  std::int64_t flow(int e) const { return edges_[e ^ 1].cap; }

 private:
  struct E {
    int to;
    std::int64_t cap;
  };

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int id : adj_[v])
        if (edges_[id].cap > 0 && level_[edges_[id].to] < 0) {
          level_[edges_[id].to] = level_[v] + 1;
          q.push(edges_[id].to);
        }
    }
    return level_[t] >= 0;
  }

  std::int64_t dfs(int v, int t, std::int64_t f) {
    if (v == t) return f;
    for (std::size_t& i = it_[v]; i < adj_[v].size(); ++i) {
      int id = adj_[v][i];
      E& e = edges_[id];
      if (e.cap > 0 && level_[e.to] == level_[v] + 1) {
        if (std::int64_t got = dfs(e.to, t, std::min(f, e.cap))) {
          e.cap -= got;
          edges_[id ^ 1].cap += got;
          return got;
        }
      }
    }
    return 0;
  }

  std::vector<E> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> level_;
  std::vector<std::size_t> it_;
};

/// Feasible flow with lower and upper bounds on every edge, decided by the
/// standard reduction to one max-flow between a super source and sink.
class BoundedFlow {
 public:
  explicit BoundedFlow(int nodes) : nodes_(nodes), excess_(nodes, 0) {}

  int add_edge(int from, int to, std::int64_t lo, std::int64_t hi) {
    edges_.push_back({from, to, lo, hi});
    excess_[to] += lo;
    excess_[from] -= lo;
    return static_cast<int>(edges_.size()) - 1;
  }

  /// True iff a circulation respecting every [lo, hi] exists. Afterwards
  /// flow(e) reports a feasible value per edge.
  bool feasible() {
    for (const auto& e : edges_)
      if (e.lo > e.hi) return false;
    const int src = nodes_;
    const int snk = nodes_ + 1;
    MaxFlow mf(nodes_ + 2);
    ids_.clear();
    for (const auto& e : edges_) ids_.push_back(mf.add_edge(e.from, e.to, e.hi - e.lo));
    std::int64_t need = 0;
    for (int v = 0; v < nodes_; ++v) {
      if (excess_[v] > 0) {
        mf.add_edge(src, v, excess_[v]);
        need += excess_[v];
      } else if (excess_[v] < 0) {
        mf.add_edge(v, snk, -excess_[v]);
      }
    }
    bool ok = mf.run(src, snk) == need;
    flows_.assign(edges_.size(), 0);
    for (std::size_t i = 0; i < edges_.size(); ++i) flows_[i] = edges_[i].lo + mf.flow(ids_[i]);
    return ok;
  }

  std::int64_t flow(int e) const { return flows_[e]; }

 private:
  struct Edge {
    int from, to;
    std::int64_t lo, hi;
  };
  int nodes_;
  std::vector<std::int64_t> excess_;
  std::vector<Edge> edges_;
  std::vector<int> ids_;
  std::vector<std::int64_t> flows_;
};

}  // namespace semiproper
