#include "semiproper/exact.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "semiproper/maxflow.hpp"

namespace semiproper {

std::string_view solve_kind_name(SolveKind k) {
  switch (k) {
    case SolveKind::chi_s_brute: return "chi_s_brute";
    case SolveKind::chi_s_labeling: return "chi_s_labeling";
    case SolveKind::chi_proper: return "chi_proper";
  }
  return "unknown";
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct BudgetGuard {
  BudgetGuard(Budget b, Clock::time_point start) : budget(b), start(start) {}

  /// Counts one node; true once the budget is spent.
  bool tick(std::int64_t& nodes) {
    ++nodes;
    if (nodes > budget.nodes) exhausted = true;
    if ((nodes & 1023) == 0 && seconds_since(start) > budget.seconds) exhausted = true;
    return exhausted;
  }

  Budget budget;
  Clock::time_point start;
  bool exhausted = false;
};

std::vector<Vertex> bfs_order(const Graph& g) {
  std::vector<Vertex> order;
  std::vector<bool> seen(g.vertex_count(), false);
  for (Vertex r = 0; r < g.vertex_count(); ++r) {
    if (seen[r]) continue;
    seen[r] = true;
    std::size_t head = order.size();
    order.push_back(r);
    while (head < order.size()) {
      Vertex v = order[head++];
      std::vector<Vertex> nb;
      for (auto inc : g.incident(v)) nb.push_back(inc.neighbor);
      std::sort(nb.begin(), nb.end());
      for (Vertex w : nb)
        if (!seen[w]) {
          seen[w] = true;
          order.push_back(w);
        }
    }
  }
  return order;
}

std::vector<Vertex> dfs_order(const Graph& g) {
  std::vector<Vertex> order;
  std::vector<bool> seen(g.vertex_count(), false);
  for (Vertex r = 0; r < g.vertex_count(); ++r) {
    if (seen[r]) continue;
    std::vector<Vertex> stack{r};
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      if (seen[v]) continue;
      seen[v] = true;
      order.push_back(v);
      std::vector<Vertex> nb;
      for (auto inc : g.incident(v)) nb.push_back(inc.neighbor);
      std::sort(nb.rbegin(), nb.rend());  // lowest neighbour explored first
      for (Vertex w : nb)
        if (!seen[w]) stack.push_back(w);
    }
  }
  return order;
}

// Branch and bound over per-edge (direction, weight) choices.
class EdgeSearch {
 public:
  EdgeSearch(const Graph& g, int max_weight, BudgetGuard& guard, std::int64_t& nodes)
      : g_(g), max_weight_(max_weight), guard_(guard), nodes_(nodes),
        weight_(g.vertex_count(), 0), last_(g.vertex_count(), -1), arcs_(g.edge_count()) {
    std::vector<int> pos(g.vertex_count());
    auto order = bfs_order(g);
    for (int i = 0; i < static_cast<int>(order.size()); ++i) pos[order[i]] = i;
    for (EdgeId e = 0; e < g.edge_count(); ++e) order_.push_back(e);
    auto key = [&](EdgeId e) {
      int a = pos[g.edge(e).u], b = pos[g.edge(e).v];
      return std::pair(std::max(a, b), std::min(a, b));
    };
    std::sort(order_.begin(), order_.end(), [&](EdgeId x, EdgeId y) { return key(x) < key(y); });
    for (int i = 0; i < static_cast<int>(order_.size()); ++i) {
      last_[g.edge(order_[i]).u] = i;
      last_[g.edge(order_[i]).v] = i;
    }
  }

  /// Is there an orientation with μ ≤ cap?
  bool feasible(std::int64_t cap) {
    cap_ = cap;
    std::fill(weight_.begin(), weight_.end(), 0);
    return dfs(0);
  }

  std::vector<Arc> arcs() const { return arcs_; }

 private:
  bool final_ok(Vertex x, int step) const {
    for (auto inc : g_.incident(x))
      if (last_[inc.neighbor] <= step && weight_[inc.neighbor] == weight_[x]) return false;
    return true;
  }

  bool dfs(int step) {
    if (guard_.tick(nodes_)) return false;
    if (step == static_cast<int>(order_.size())) return true;
    const EdgeId e = order_[step];
    const Edge& edge = g_.edge(e);
    for (int dir = 0; dir < 2; ++dir) {
      Vertex tail = dir == 0 ? edge.u : edge.v;
      Vertex head = dir == 0 ? edge.v : edge.u;
      for (int w = 1; w <= max_weight_; ++w) {
        if (weight_[head] + w > cap_) break;
        weight_[head] += w;
        bool ok = true;
        if (last_[edge.u] == step) ok = final_ok(edge.u, step);
        if (ok && last_[edge.v] == step) ok = final_ok(edge.v, step);
        if (ok) {
          arcs_[e] = {tail, head, w};
          if (dfs(step + 1)) return true;
        }
        weight_[head] -= w;
        if (guard_.exhausted) return false;
      }
    }
    return false;
  }

  const Graph& g_;
  int max_weight_;
  BudgetGuard& guard_;
  std::int64_t& nodes_;
  std::int64_t cap_ = 0;
  std::vector<std::int64_t> weight_;
  std::vector<int> last_;
  std::vector<EdgeId> order_;
  std::vector<Arc> arcs_;
};

SolveReport edge_search_report(const Graph& g, SolveKind kind, int max_weight, std::int64_t mu_cap,
                               Budget budget) {
  SolveReport report;
  report.kind = kind;
  report.mu_cap = mu_cap;
  report.max_weight = max_weight;
  auto start = Clock::now();
  BudgetGuard guard(budget, start);
  EdgeSearch search(g, max_weight, guard, report.nodes);
  for (std::int64_t k = 0; k <= mu_cap; ++k) {
    bool ok = search.feasible(k);
    if (guard.exhausted) {
      report.budget_exhausted = true;
      break;
    }
    if (ok) {
      report.value = k;
      report.witness = Orientation(g, search.arcs());
      break;
    }
    report.refuted_up_to = k;
  }
  report.elapsed_seconds = seconds_since(start);
  return report;
}

// Degree-window network: an orientation with in-degree in [lo(v), hi(v)].
struct WindowNetwork {
  explicit WindowNetwork(const Graph& g)
      : g(g), flow(g.edge_count() + g.vertex_count() + 2), sink_edges(g.vertex_count()) {}

  bool solve(std::span<const std::int64_t> lo, std::span<const std::int64_t> hi) {
    const int m = g.edge_count();
    const int n = g.vertex_count();
    const int s = m + n;
    const int t = m + n + 1;
    flow = BoundedFlow(m + n + 2);
    head_edges.assign(m, {-1, -1});
    for (EdgeId e = 0; e < m; ++e) {
      flow.add_edge(s, e, 1, 1);
      head_edges[e] = {flow.add_edge(e, m + g.edge(e).u, 0, 1), flow.add_edge(e, m + g.edge(e).v, 0, 1)};
    }
    for (Vertex v = 0; v < n; ++v) sink_edges[v] = flow.add_edge(m + v, t, lo[v], hi[v]);
    flow.add_edge(t, s, 0, m);
    return flow.feasible();
  }

  /// Head of edge e in the last feasible solution.
  Vertex head(EdgeId e) const { return flow.flow(head_edges[e].first) == 1 ? g.edge(e).u : g.edge(e).v; }

  const Graph& g;
  BoundedFlow flow;
  std::vector<int> sink_edges;
  std::vector<std::pair<int, int>> head_edges;
};

std::int64_t ceil_half(std::int64_t x) { return (x + 1) / 2; }

// Proper labellings with degree-window pruning.
class LabelSearch {
 public:
  LabelSearch(const Graph& g, std::int64_t cap, const std::vector<Vertex>& order, BudgetGuard& guard)
      : g_(g), cap_(cap), order_(order), guard_(guard), net_(g), label_(g.vertex_count(), -1),
        domain_(g.vertex_count(), 0), lo_(g.vertex_count()), hi_(g.vertex_count()) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      std::int64_t top = std::min<std::int64_t>(cap, 2 * static_cast<std::int64_t>(g.degree(v)));
      for (std::int64_t x = 0; x <= top; ++x) domain_[v] |= 1u << x;
    }
  }

  std::int64_t nodes = 0;
  std::function<bool()> cancelled = [] { return false; };

  /// Applies the labels for order_[0..prefix.size()); false if inconsistent.
  bool apply_prefix(std::span<const std::int64_t> prefix) {
    for (std::size_t i = 0; i < prefix.size(); ++i)
      if (!assign(order_[i], prefix[i], nullptr)) return false;
    return windows_feasible();
  }

  bool search(std::size_t depth) {
    if (guard_.tick(nodes) || cancelled()) return false;
    if (depth == order_.size()) return true;
    const Vertex v = order_[depth];
    std::uint32_t dom = domain_[v];
    for (std::int64_t x = 0; x <= cap_; ++x) {
      if (!(dom >> x & 1u)) continue;
      std::vector<std::pair<Vertex, std::uint32_t>> saved;
      if (assign(v, x, &saved) && windows_feasible() && search(depth + 1)) return true;
      unassign(v, saved);
      if (guard_.exhausted || cancelled()) return false;
    }
    return false;
  }

  /// Enumerates consistent labellings of the first `depth` vertices.
  void prefixes(std::size_t depth, std::vector<std::int64_t>& current,
                std::vector<std::vector<std::int64_t>>& out) {
    if (current.size() == depth || current.size() == order_.size()) {
      out.push_back(current);
      return;
    }
    const Vertex v = order_[current.size()];
    std::uint32_t dom = domain_[v];
    for (std::int64_t x = 0; x <= cap_; ++x) {
      if (!(dom >> x & 1u)) continue;
      std::vector<std::pair<Vertex, std::uint32_t>> saved;
      if (assign(v, x, &saved) && windows_feasible()) {
        current.push_back(x);
        prefixes(depth, current, out);
        current.pop_back();
      }
      unassign(v, saved);
    }
  }

  const std::vector<std::int64_t>& labels() const { return label_; }

 private:
  bool assign(Vertex v, std::int64_t x, std::vector<std::pair<Vertex, std::uint32_t>>* saved) {
    if (!(domain_[v] >> x & 1u)) return false;
    label_[v] = x;
    bool ok = true;
    for (auto inc : g_.incident(v)) {
      Vertex w = inc.neighbor;
      if (label_[w] >= 0) {
        if (label_[w] == x) ok = false;
        continue;
      }
      if (domain_[w] >> x & 1u) {
        if (saved) saved->emplace_back(w, domain_[w]);
        domain_[w] &= ~(1u << x);
        if (domain_[w] == 0) ok = false;
      }
    }
    return ok;
  }

  void unassign(Vertex v, const std::vector<std::pair<Vertex, std::uint32_t>>& saved) {
    label_[v] = -1;
    for (auto it = saved.rbegin(); it != saved.rend(); ++it) domain_[it->first] = it->second;
  }

  bool windows_feasible() {
    for (Vertex v = 0; v < g_.vertex_count(); ++v) {
      std::int64_t deg = g_.degree(v);
      std::int64_t low_value, high_value;
      if (label_[v] >= 0) {
        low_value = high_value = label_[v];
      } else {
        std::uint32_t d = domain_[v];
        low_value = __builtin_ctz(d);
        high_value = 31 - __builtin_clz(d);
      }
      lo_[v] = ceil_half(low_value);
      hi_[v] = std::min(high_value, deg);
      if (lo_[v] > hi_[v]) return false;
    }
    return net_.solve(lo_, hi_);
  }

  const Graph& g_;
  std::int64_t cap_;
  const std::vector<Vertex>& order_;
  BudgetGuard& guard_;
  WindowNetwork net_;
  std::vector<std::int64_t> label_;
  std::vector<std::uint32_t> domain_;
  std::vector<std::int64_t> lo_, hi_;
};

struct LabelOutcome {
  bool feasible = false;
  bool exhausted = false;
  std::vector<std::int64_t> labels;
};

LabelOutcome label_feasible(const Graph& g, std::int64_t cap, BudgetGuard& guard, std::int64_t& nodes,
                            int workers) {
  LabelOutcome out;
  const auto order = dfs_order(g);
  if (workers <= 1 || g.vertex_count() < 4) {
    LabelSearch search(g, cap, order, guard);
    out.feasible = search.apply_prefix({}) && search.search(0);
    nodes += search.nodes;
    out.exhausted = guard.exhausted;
    if (out.feasible) out.labels = search.labels();
    return out;
  }

  // Split on the first few labelling decisions; the lowest-index task that
  // succeeds supplies the witness so the result does not depend on timing.
  std::vector<std::vector<std::int64_t>> tasks;
  {
    LabelSearch splitter(g, cap, order, guard);
    std::vector<std::int64_t> current;
    if (splitter.apply_prefix({})) {
      std::size_t depth = 1;
      while (depth < order.size()) {
        tasks.clear();
        splitter.prefixes(depth, current, tasks);
        if (tasks.size() >= static_cast<std::size_t>(4 * workers) || depth >= 6) break;
        ++depth;
      }
    }
  }
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{tasks.size()};
  std::atomic<bool> exhausted{false};
  std::atomic<std::int64_t> total_nodes{0};
  std::vector<std::int64_t> task_nodes(tasks.size(), 0);
  std::mutex mu;
  std::vector<std::int64_t> best_labels;
  auto worker = [&] {
    while (true) {
      std::size_t id = next.fetch_add(1);
      if (id >= tasks.size() || id > best.load() || exhausted.load()) return;
      BudgetGuard local(guard.budget, guard.start);
      local.budget.nodes = guard.budget.nodes - total_nodes.load();
      LabelSearch search(g, cap, order, local);
      search.cancelled = [&] { return exhausted.load() || best.load() < id; };
      bool ok = search.apply_prefix(tasks[id]) && search.search(tasks[id].size());
      total_nodes += search.nodes;
      task_nodes[id] = search.nodes;
      if (local.exhausted) exhausted = true;
      if (ok) {
        std::lock_guard<std::mutex> lock(mu);
        if (id < best.load()) {
          best = id;
          best_labels = search.labels();
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  out.feasible = best.load() < tasks.size();
  // Tasks up to the winner are explored in full whatever the scheduling, so
  // counting only those keeps the node count reproducible.
  const std::size_t counted = out.feasible ? best.load() + 1 : tasks.size();
  for (std::size_t i = 0; i < counted; ++i) nodes += task_nodes[i];
  // A success stands even if another branch ran out of budget.
  out.exhausted = !out.feasible && exhausted.load();
  if (out.exhausted) guard.exhausted = true;
  if (out.feasible) out.labels = best_labels;
  return out;
}

}  // namespace

std::optional<Orientation> realize_labeling(const Graph& g, std::span<const std::int64_t> t) {
  const int n = g.vertex_count();
  if (static_cast<int>(t.size()) != n) throw std::invalid_argument("labelling size mismatch");
  std::vector<std::int64_t> lo(n), hi(n);
  for (Vertex v = 0; v < n; ++v) {
    if (t[v] < 0) return std::nullopt;
    lo[v] = ceil_half(t[v]);
    hi[v] = std::min<std::int64_t>(t[v], g.degree(v));
    if (lo[v] > hi[v]) return std::nullopt;
  }
  WindowNetwork net(g);
  if (!net.solve(lo, hi)) return std::nullopt;
  std::vector<std::vector<EdgeId>> into(n);
  for (EdgeId e = 0; e < g.edge_count(); ++e) into[net.head(e)].push_back(e);
  std::vector<Arc> arcs(g.edge_count());
  for (Vertex v = 0; v < n; ++v) {
    std::int64_t heavy = t[v] - static_cast<std::int64_t>(into[v].size());
    for (std::size_t i = 0; i < into[v].size(); ++i) {
      EdgeId e = into[v][i];
      arcs[e] = {g.edge(e).other(v), v, static_cast<std::int64_t>(i) < heavy ? 2 : 1};
    }
  }
  return Orientation(g, std::move(arcs));
}

SolveReport chi_s_brute(const Graph& g, int max_weight, std::int64_t mu_cap, Budget budget) {
  if (max_weight < 1) throw std::invalid_argument("weight domain must contain 1");
  return edge_search_report(g, SolveKind::chi_s_brute, max_weight, mu_cap, budget);
}

SolveReport chi_proper(const Graph& g, std::int64_t cap, Budget budget) {
  return edge_search_report(g, SolveKind::chi_proper, 1, cap, budget);
}

SolveReport chi_s_labeling(const Graph& g, std::int64_t mu_cap, Budget budget, int workers) {
  if (mu_cap > 30) throw std::invalid_argument("labelling solver supports caps up to 30");
  SolveReport report;
  report.kind = SolveKind::chi_s_labeling;
  report.mu_cap = mu_cap;
  report.max_weight = 2;
  auto start = Clock::now();
  BudgetGuard guard(budget, start);
  for (std::int64_t k = 0; k <= mu_cap; ++k) {
    LabelOutcome outcome = label_feasible(g, k, guard, report.nodes, workers);
    if (outcome.exhausted) {
      report.budget_exhausted = true;
      break;
    }
    if (outcome.feasible) {
      auto witness = realize_labeling(g, outcome.labels);
      if (!witness) throw std::logic_error("feasible labelling failed to realise");
      report.value = k;
      report.witness = std::move(witness);
      break;
    }
    report.refuted_up_to = k;
  }
  report.elapsed_seconds = seconds_since(start);
  return report;
}

int clique_number(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 24) throw std::invalid_argument("clique_number is exhaustive; n <= 24");
  std::vector<std::uint32_t> nb(n, 0);
  for (const Edge& e : g.edges()) {
    nb[e.u] |= 1u << e.v;
    nb[e.v] |= 1u << e.u;
  }
  int best = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    int size = __builtin_popcount(mask);
    if (size <= best) continue;
    bool clique = true;
    for (int v = 0; v < n && clique; ++v)
      if (mask >> v & 1u) clique = (mask & ~(nb[v] | (1u << v))) == 0;
    if (clique) best = size;
  }
  return best;
}

namespace {

bool colourable(const Graph& g, int k, std::vector<int>& colour, int v) {
  if (v == g.vertex_count()) return true;
  // Symmetry: vertex v may only open one new colour beyond those used so far.
  int used = 0;
  for (int u = 0; u < v; ++u) used = std::max(used, colour[u] + 1);
  const int limit = std::min(k, used + 1);
  for (int c = 0; c < limit; ++c) {
    bool ok = true;
    for (auto inc : g.incident(v))
      if (inc.neighbor >= 0 && inc.neighbor < v && colour[inc.neighbor] == c) ok = false;
    if (!ok) continue;
    colour[v] = c;
    if (colourable(g, k, colour, v + 1)) return true;
  }
  colour[v] = -1;
  return false;
}

}  // namespace

int chromatic_number(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return 0;
  std::vector<int> colour(n, -1);
  for (int k = 1; k <= n; ++k)
    if (colourable(g, k, colour, 0)) return k;
  return n;
}

AuditReport inequality_audit(const Graph& g) {
  if (g.vertex_count() < 1 || g.vertex_count() > 10 || g.edge_count() > 16)
    throw std::invalid_argument("inequality_audit needs 1 <= n <= 10 and m <= 16");
  AuditReport r;
  r.omega = clique_number(g);
  r.chi = chromatic_number(g);
  r.delta = max_degree(g);
  SolveReport s = chi_s_brute(g, 2, r.delta + 2);
  SolveReport p = chi_proper(g, r.delta + 2);
  if (!s.value || !p.value) throw std::logic_error("exact solver found no orientation within Δ+2");
  r.chi_s = *s.value;
  r.chi_proper = *p.value;
  r.holds = r.omega - 1 <= r.chi - 1 && r.chi - 1 <= r.chi_s && r.chi_s <= r.chi_proper &&
            r.chi_proper <= r.delta;
  return r;
}

TightnessReport tightness_report(const Graph& g, const Orientation& o,
                                 const std::array<std::vector<Vertex>, 3>* classes) {
  TightnessReport r;
  r.edge_count = g.edge_count();
  for (const Arc& a : o.arcs()) {
    if (a.weight != 1 && a.weight != 2) throw std::invalid_argument("tightness report needs weights in {1,2}");
    if (a.weight == 2) ++r.weight_two_arcs;
  }
  r.class_sizes.assign(static_cast<std::size_t>(o.mu()) + 1, 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    ++r.class_sizes[o.in_weight(v)];
    r.in_weight_sum += o.in_weight(v);
  }
  r.sum_identity = r.in_weight_sum == r.edge_count + r.weight_two_arcs;
  r.sum_at_least_edges = r.in_weight_sum >= r.edge_count;
  if (classes) {
    std::vector<int> cls(g.vertex_count(), -1);
    for (int c = 0; c < 3; ++c)
      for (Vertex v : (*classes)[c]) cls[v] = c;
    bool proper = true;
    for (const Edge& e : g.edges())
      if (cls[e.u] < 0 || cls[e.u] == cls[e.v]) proper = false;
    bool meets = true;
    for (const Edge& e : g.edges())
      for (auto inc : g.incident(e.u)) {
        Vertex w = inc.neighbor;
        if (w == e.v || !g.adjacent(w, e.v)) continue;
        if (cls[e.u] == cls[e.v] || cls[e.u] == cls[w] || cls[e.v] == cls[w]) meets = false;
      }
    r.classes_proper = proper;
    r.classes_meet_every_triangle = meets;
  }
  return r;
}

}  // namespace semiproper
