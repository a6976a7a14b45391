#include "semiproper/decompose.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace semiproper {

namespace {

// Biconnected components of the component containing `root`, as edge-id
// lists in discovery order (iterative Hopcroft-Tarjan).
void biconnected_from(const Graph& g, Vertex root, std::vector<int>& disc, std::vector<int>& low,
                      int& timer, std::vector<std::vector<EdgeId>>& out) {
  struct Frame {
    Vertex v;
    EdgeId parent_edge;
    std::size_t next;
  };
  std::vector<Frame> stack{{root, -1, 0}};
  std::vector<EdgeId> edge_stack;
  disc[root] = low[root] = timer++;
  while (!stack.empty()) {
    Frame& f = stack.back();
    auto inc = g.incident(f.v);
    if (f.next < inc.size()) {
      auto [w, e] = inc[f.next++];
      if (e == f.parent_edge) continue;
      if (disc[w] < 0) {
        edge_stack.push_back(e);
        disc[w] = low[w] = timer++;
        stack.push_back({w, e, 0});
      } else if (disc[w] < disc[f.v]) {
        edge_stack.push_back(e);
        low[f.v] = std::min(low[f.v], disc[w]);
      }
      continue;
    }
    Frame done = f;
    stack.pop_back();
    if (stack.empty()) break;
    Vertex parent = stack.back().v;
    low[parent] = std::min(low[parent], low[done.v]);
    if (low[done.v] >= disc[parent]) {
      std::vector<EdgeId> block;
      while (true) {
        EdgeId e = edge_stack.back();
        edge_stack.pop_back();
        block.push_back(e);
        if (e == done.parent_edge) break;
      }
      std::sort(block.begin(), block.end());
      out.push_back(std::move(block));
    }
  }
}

}  // namespace

BlockForest block_forest(const Graph& g) {
  const int n = g.vertex_count();
  BlockForest forest;
  std::vector<int> disc(n, -1), low(n, 0);
  int timer = 0;
  std::vector<int> blocks_at(n, 0);

  for (Vertex r = 0; r < n; ++r) {
    if (disc[r] >= 0) continue;
    const int component = forest.component_count++;
    std::vector<Block> raw;
    if (g.degree(r) == 0) {
      disc[r] = timer++;
      Block b;
      b.vertices = {r};
      b.component = component;
      forest.blocks.push_back(std::move(b));
      continue;
    }
    std::vector<std::vector<EdgeId>> edge_lists;
    biconnected_from(g, r, disc, low, timer, edge_lists);
    for (auto& edges : edge_lists) {
      Block b;
      for (EdgeId e : edges) {
        b.vertices.push_back(g.edge(e).u);
        b.vertices.push_back(g.edge(e).v);
      }
      std::sort(b.vertices.begin(), b.vertices.end());
      b.vertices.erase(std::unique(b.vertices.begin(), b.vertices.end()), b.vertices.end());
      b.edges = std::move(edges);
      b.component = component;
      for (Vertex v : b.vertices) ++blocks_at[v];
      raw.push_back(std::move(b));
    }

    // Block-tree DFS from the first block containing r.
    std::vector<std::vector<int>> incident_blocks(n);
    for (int i = 0; i < static_cast<int>(raw.size()); ++i)
      for (Vertex v : raw[i].vertices) incident_blocks[v].push_back(i);
    std::vector<bool> visited(raw.size(), false);
    struct Frame {
      int block;
      std::size_t vertex_index;
      std::size_t neighbour_index;
    };
    int first = incident_blocks[r].front();
    visited[first] = true;
    forest.blocks.push_back(raw[first]);
    std::vector<Frame> stack{{first, 0, 0}};
    while (!stack.empty()) {
      Frame& f = stack.back();
      const Block& b = raw[f.block];
      if (f.vertex_index >= b.vertices.size()) {
        stack.pop_back();
        continue;
      }
      Vertex x = b.vertices[f.vertex_index];
      const auto& around = incident_blocks[x];
      if (f.neighbour_index >= around.size()) {
        ++f.vertex_index;
        f.neighbour_index = 0;
        continue;
      }
      int next = around[f.neighbour_index++];
      if (visited[next]) continue;
      visited[next] = true;
      raw[next].root = x;
      forest.blocks.push_back(raw[next]);
      stack.push_back({next, 0, 0});
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (blocks_at[v] >= 2) forest.cut_vertices.push_back(v);
  return forest;
}

std::vector<Vertex> cycle_order(const Graph& g, const Block& b, Vertex start) {
  if (!b.is_cycle()) throw std::invalid_argument("cycle_order on a non-cycle block");
  std::set<EdgeId> in_block(b.edges.begin(), b.edges.end());
  auto block_neighbours = [&](Vertex v) {
    std::vector<Vertex> out;
    for (auto [w, e] : g.incident(v))
      if (in_block.count(e)) out.push_back(w);
    std::sort(out.begin(), out.end());
    return out;
  };
  std::vector<Vertex> order{start};
  Vertex prev = start;
  Vertex cur = block_neighbours(start).front();
  while (cur != start) {
    order.push_back(cur);
    auto nb = block_neighbours(cur);
    Vertex next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  }
  return order;
}

namespace {

class Peeler {
 public:
  Peeler(const Graph& g, std::optional<Vertex> designated, std::int64_t budget)
      : g_(g), designated_(designated), budget_(budget), alive_(g.vertex_count(), true),
        degree_(g.vertex_count()) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) degree_[v] = g.degree(v);
  }

  bool run() { return search(); }

  std::vector<Ear> peeled;  // in removal order
  std::int64_t explored = 0;
  bool out_of_budget = false;

  const std::vector<bool>& alive() const { return alive_; }

 private:
  struct Chain {
    std::vector<Vertex> path;  // attachment, internals..., attachment
    Vertex lowest_internal;
  };

  std::vector<Chain> chains() const {
    std::vector<Chain> out;
    std::vector<bool> used(g_.vertex_count(), false);
    for (Vertex v = 0; v < g_.vertex_count(); ++v) {
      if (!alive_[v] || degree_[v] != 2 || used[v]) continue;
      std::vector<Vertex> alive_nb;
      for (auto [w, e] : g_.incident(v))
        if (alive_[w]) alive_nb.push_back(w);
      // Walk both ways until reaching vertices of degree >= 3.
      auto walk = [&](Vertex from, Vertex step) {
        std::vector<Vertex> seq;
        Vertex prev = from;
        Vertex cur = step;
        while (degree_[cur] == 2 && cur != v) {
          seq.push_back(cur);
          used[cur] = true;
          Vertex next = -1;
          for (auto [w, e] : g_.incident(cur))
            if (alive_[w] && w != prev) next = w;
          prev = cur;
          cur = next;
        }
        seq.push_back(cur);
        return seq;
      };
      used[v] = true;
      auto left = walk(v, alive_nb[0]);
      if (left.back() == v) continue;  // residual is a cycle
      auto right = walk(v, alive_nb[1]);
      std::vector<Vertex> path(left.rbegin(), left.rend());
      path.push_back(v);
      path.insert(path.end(), right.begin(), right.end());
      if (path.front() > path.back()) std::reverse(path.begin(), path.end());
      Vertex lowest = *std::min_element(path.begin() + 1, path.end() - 1);
      out.push_back({std::move(path), lowest});
    }
    std::sort(out.begin(), out.end(),
              [](const Chain& a, const Chain& b) { return a.lowest_internal < b.lowest_internal; });
    return out;
  }

  bool residual_is_cycle() const {
    for (Vertex v = 0; v < g_.vertex_count(); ++v)
      if (alive_[v] && degree_[v] != 2) return false;
    return true;
  }

  bool search() {
    if (++explored > budget_) {
      out_of_budget = true;
      return false;
    }
    if (residual_is_cycle()) return true;
    if (failed_.count(alive_)) return false;
    for (const Chain& c : chains()) {
      Vertex x = c.path.front();
      Vertex y = c.path.back();
      if (x == y || !g_.adjacent(x, y)) continue;
      if (designated_ && std::find(c.path.begin() + 1, c.path.end() - 1, *designated_) != c.path.end() - 1)
        continue;
      for (auto it = c.path.begin() + 1; it != c.path.end() - 1; ++it) alive_[*it] = false;
      --degree_[x];
      --degree_[y];
      peeled.push_back({c.path});
      if (search()) return true;
      peeled.pop_back();
      ++degree_[x];
      ++degree_[y];
      for (auto it = c.path.begin() + 1; it != c.path.end() - 1; ++it) alive_[*it] = true;
      if (out_of_budget) return false;
    }
    failed_.insert(alive_);
    return false;
  }

  const Graph& g_;
  std::optional<Vertex> designated_;
  std::int64_t budget_;
  std::vector<bool> alive_;
  std::vector<int> degree_;
  std::set<std::vector<bool>> failed_;
};

bool is_connected_min_degree_two(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 3) return false;
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) < 2) return false;
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (auto [w, e] : g.incident(v))
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
  }
  return count == n;
}

}  // namespace

PeelResult peel_ears(const Graph& block, std::optional<Vertex> designated, std::int64_t state_budget) {
  PeelResult result;
  if (!is_connected_min_degree_two(block)) {
    result.failure = "block is not 2-connected";
    return result;
  }
  if (designated && (*designated < 0 || *designated >= block.vertex_count())) {
    result.failure = "designated vertex out of range";
    return result;
  }
  Peeler peeler(block, designated, state_budget);
  bool ok = peeler.run();
  result.states_explored = peeler.explored;
  if (!ok) {
    result.failure = peeler.out_of_budget ? "peeling budget exhausted"
                                          : "no chain with adjacent attachments can be peeled";
    return result;
  }

  EarDecomposition d;
  d.designated = designated;
  Vertex start = designated.value_or(-1);
  if (start < 0) {
    for (Vertex v = 0; v < block.vertex_count(); ++v)
      if (peeler.alive()[v]) {
        start = v;
        break;
      }
  }
  // Walk the residual cycle.
  auto alive_neighbours = [&](Vertex v) {
    std::vector<Vertex> out;
    for (auto [w, e] : block.incident(v))
      if (peeler.alive()[w]) out.push_back(w);
    std::sort(out.begin(), out.end());
    return out;
  };
  d.base_cycle.push_back(start);
  Vertex prev = start;
  Vertex cur = alive_neighbours(start).front();
  while (cur != start) {
    d.base_cycle.push_back(cur);
    auto nb = alive_neighbours(cur);
    Vertex next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  }
  d.ears.assign(peeler.peeled.rbegin(), peeler.peeled.rend());
  result.decomposition = std::move(d);
  return result;
}

std::vector<std::pair<Vertex, Vertex>> replay_edges(const EarDecomposition& d) {
  std::vector<std::pair<Vertex, Vertex>> out;
  auto add = [&](Vertex a, Vertex b) { out.emplace_back(std::min(a, b), std::max(a, b)); };
  const auto& c = d.base_cycle;
  for (std::size_t i = 0; i < c.size(); ++i) add(c[i], c[(i + 1) % c.size()]);
  for (const Ear& ear : d.ears)
    for (std::size_t i = 0; i + 1 < ear.path.size(); ++i) add(ear.path[i], ear.path[i + 1]);
  std::sort(out.begin(), out.end());
  return out;
}

std::string_view class_name(ClassTag tag) {
  switch (tag) {
    case ClassTag::cactus: return "cactus";
    case ClassTag::ear_peelable: return "ear_peelable";
    case ClassTag::unsupported: return "unsupported";
  }
  return "unknown";
}

std::string_view block_kind_name(BlockKind kind) {
  switch (kind) {
    case BlockKind::isolated: return "isolated";
    case BlockKind::bridge: return "bridge";
    case BlockKind::cycle: return "cycle";
    case BlockKind::ear_peelable: return "ear_peelable";
    case BlockKind::unsupported: return "unsupported";
  }
  return "unknown";
}

GraphClass classify(const Graph& g) { return classify(g, block_forest(g)); }

GraphClass classify(const Graph& g, const BlockForest& forest) {
  GraphClass out;
  bool all_cactus = true;
  bool all_peelable = true;
  for (const Block& b : forest.blocks) {
    BlockClass bc{BlockKind::isolated, static_cast<int>(b.vertices.size()),
                  static_cast<int>(b.edges.size())};
    if (b.is_isolated()) {
      bc.kind = BlockKind::isolated;
    } else if (b.is_bridge()) {
      bc.kind = BlockKind::bridge;
    } else if (b.is_cycle()) {
      bc.kind = BlockKind::cycle;
    } else {
      all_cactus = false;
      Graph local = g.edge_subgraph(b.edges, nullptr);
      if (peel_ears(local).decomposition) {
        bc.kind = BlockKind::ear_peelable;
      } else {
        bc.kind = BlockKind::unsupported;
        all_peelable = false;
      }
    }
    out.blocks.push_back(bc);
  }
  out.tag = all_cactus ? ClassTag::cactus : all_peelable ? ClassTag::ear_peelable : ClassTag::unsupported;
  return out;
}

}  // namespace semiproper
