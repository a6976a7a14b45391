#include "semiproper/validate.hpp"

#include <algorithm>

namespace semiproper {

Verdict validate(const Graph& g, std::span<const Arc> arcs,
                 std::span<const std::int64_t> claimed_in_weights,
                 std::optional<std::int64_t> mu_bound, std::optional<std::int64_t> max_weight) {
  Verdict out;
  auto fail = [&](std::string msg) {
    out.accepted = false;
    out.violations.push_back(std::move(msg));
  };

  const int n = g.vertex_count();
  out.in_weights.assign(n, 0);
  if (static_cast<int>(arcs.size()) != g.edge_count()) {
    fail("arc count " + std::to_string(arcs.size()) + " != edge count " +
         std::to_string(g.edge_count()));
    return out;
  }

  bool structural_ok = true;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Arc& a = arcs[e];
    const Edge& edge = g.edge(e);
    bool forward = a.tail == edge.u && a.head == edge.v;
    bool backward = a.tail == edge.v && a.head == edge.u;
    if (!forward && !backward) {
      fail("arc " + std::to_string(e) + " (" + std::to_string(a.tail) + "->" +
           std::to_string(a.head) + ") is not on edge " + std::to_string(edge.u) + "-" +
           std::to_string(edge.v));
      structural_ok = false;
      continue;
    }
    if (a.weight <= 0) fail("arc " + std::to_string(e) + " has non-positive weight");
    if (max_weight && a.weight > *max_weight)
      fail("arc " + std::to_string(e) + " weight " + std::to_string(a.weight) +
           " outside domain 1.." + std::to_string(*max_weight));
    out.in_weights[a.head] += a.weight;
  }
  if (!structural_ok) return out;

  if (!claimed_in_weights.empty()) {
    if (static_cast<int>(claimed_in_weights.size()) != n) {
      fail("claimed in-weight vector has wrong length");
    } else {
      for (Vertex v = 0; v < n; ++v)
        if (claimed_in_weights[v] != out.in_weights[v])
          fail("vertex " + std::to_string(v) + " claims in-weight " +
               std::to_string(claimed_in_weights[v]) + " but arcs give " +
               std::to_string(out.in_weights[v]));
    }
  }

  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    if (out.in_weights[edge.u] == out.in_weights[edge.v])
      fail("edge " + std::to_string(e) + " (" + std::to_string(edge.u) + "-" +
           std::to_string(edge.v) + ") joins equal in-weights " +
           std::to_string(out.in_weights[edge.u]));
  }

  out.mu = out.in_weights.empty() ? 0 : *std::max_element(out.in_weights.begin(), out.in_weights.end());
  if (mu_bound) {
    for (Vertex v = 0; v < n; ++v)
      if (out.in_weights[v] > *mu_bound)
        fail("vertex " + std::to_string(v) + " in-weight " + std::to_string(out.in_weights[v]) +
             " exceeds bound " + std::to_string(*mu_bound));
  }
  return out;
}

Verdict validate(const Graph& g, const Orientation& o, std::optional<std::int64_t> mu_bound,
                 std::optional<std::int64_t> max_weight) {
  return validate(g, o.arcs(), o.in_weights(), mu_bound, max_weight);
}

}  // namespace semiproper
