#pragma once

// Test-only oracles. Nothing here calls the library's search, flow, gadget or
// orientation code; they enumerate the definitions directly.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "semiproper/gadgets.hpp"
#include "semiproper/graph.hpp"

namespace oracle {

using semiproper::Edge;
using semiproper::Graph;
using semiproper::Vertex;

/// Calls `visit(heads, weights)` for every assignment of a head and a weight
/// in 1..max_weight to every edge. (2*max_weight)^m assignments.
inline void for_each_assignment(const Graph& g, int max_weight,
                                const std::function<void(const std::vector<Vertex>&,
                                                         const std::vector<int>&)>& visit) {
  const int m = g.edge_count();
  std::vector<int> code(m, 0);
  std::vector<Vertex> heads(m);
  std::vector<int> weights(m);
  const int base = 2 * max_weight;
  while (true) {
    for (int e = 0; e < m; ++e) {
      heads[e] = code[e] % 2 == 0 ? g.edge(e).v : g.edge(e).u;
      weights[e] = code[e] / 2 + 1;
    }
    visit(heads, weights);
    int i = 0;
    while (i < m && ++code[i] == base) code[i++] = 0;
    if (i == m) break;
  }
}

inline std::vector<std::int64_t> in_weights(const Graph& g, const std::vector<Vertex>& heads,
                                            const std::vector<int>& weights) {
  std::vector<std::int64_t> w(g.vertex_count(), 0);
  for (int e = 0; e < g.edge_count(); ++e) w[heads[e]] += weights[e];
  return w;
}

inline bool semi_proper(const Graph& g, const std::vector<std::int64_t>& w) {
  for (const Edge& e : g.edges())
    if (w[e.u] == w[e.v]) return false;
  return true;
}

/// Minimum μ over all semi-proper orientations with weights in 1..max_weight,
/// by plain enumeration.
inline std::int64_t chi_s(const Graph& g, int max_weight) {
  std::int64_t best = INT64_MAX;
  for_each_assignment(g, max_weight, [&](const auto& heads, const auto& weights) {
    auto w = in_weights(g, heads, weights);
    if (!semi_proper(g, w)) return;
    best = std::min(best, w.empty() ? 0 : *std::max_element(w.begin(), w.end()));
  });
  return best;
}

/// Is there an orientation with weights in {1,2} whose in-weights are exactly
/// `t`? Per-edge backtracking.
inline bool realizable(const Graph& g, const std::vector<std::int64_t>& t) {
  std::vector<std::int64_t> acc(g.vertex_count(), 0);
  std::function<bool(int)> go = [&](int e) {
    if (e == g.edge_count()) return acc == t;
    for (Vertex h : {g.edge(e).u, g.edge(e).v})
      for (int w = 1; w <= 2; ++w) {
        if (acc[h] + w > t[h]) continue;
        acc[h] += w;
        if (go(e + 1)) return true;
        acc[h] -= w;
      }
    return false;
  };
  return go(0);
}

/// First path orientation (per-edge choice order (fwd,1),(fwd,2),(bwd,1),
/// (bwd,2), lexicographic over edges) satisfying `spec`, by enumeration.
inline std::optional<std::vector<semiproper::PathArc>> gadget(const semiproper::GadgetSpec& spec) {
  const int m = spec.length - 1;
  std::vector<semiproper::PathArc> choice_list;
  for (bool fwd : {true, false})
    for (int w = 1; w <= spec.max_weight; ++w) choice_list.push_back({fwd, w});
  const int base = static_cast<int>(choice_list.size());
  std::vector<int> code(m, 0);
  while (true) {
    std::vector<semiproper::PathArc> arcs(m);
    for (int e = 0; e < m; ++e) arcs[e] = choice_list[code[e]];
    std::vector<int> prof(spec.length, 0);
    for (int e = 0; e < m; ++e) prof[arcs[e].forward ? e + 1 : e] += arcs[e].weight;
    bool ok = true;
    for (int i = 0; i < spec.length && ok; ++i) {
      if (prof[i] > spec.mu_cap) ok = false;
      if (i > 0 && prof[i] == prof[i - 1]) ok = false;
      if (auto it = spec.required.find(i); it != spec.required.end() && it->second != prof[i]) ok = false;
      if (auto it = spec.avoid.find(i); it != spec.avoid.end() &&
                                        std::count(it->second.begin(), it->second.end(), prof[i]))
        ok = false;
    }
    for (auto [e, w] : spec.edge_weight)
      if (arcs[e].weight != w) ok = false;
    if (ok) return arcs;
    // Lexicographic increment: edge 0 is the most significant digit.
    int i = m - 1;
    while (i >= 0 && ++code[i] == base) code[i--] = 0;
    if (i < 0) return std::nullopt;
  }
}

inline Graph make(int n, std::vector<Edge> edges) { return Graph(n, std::move(edges)); }

}  // namespace oracle
