#include "semiproper/gadgets.hpp"

#include <algorithm>
#include <stdexcept>

namespace semiproper {

void GadgetSpec::check() const {
  if (length < 2) throw std::invalid_argument("gadget length must be >= 2");
  if (max_weight < 1) throw std::invalid_argument("gadget weight domain must contain 1");
  if (mu_cap < 0) throw std::invalid_argument("gadget cap must be non-negative");
  for (auto [pos, value] : required) {
    if (pos < 0 || pos >= length) throw std::invalid_argument("required position out of range");
    if (value < 0 || value > mu_cap) throw std::invalid_argument("required in-weight above cap");
    auto it = avoid.find(pos);
    if (it != avoid.end() && std::count(it->second.begin(), it->second.end(), value))
      throw std::invalid_argument("position both requires and avoids the same in-weight");
  }
  for (const auto& [pos, values] : avoid)
    if (pos < 0 || pos >= length) throw std::invalid_argument("avoid position out of range");
  for (auto [edge, w] : edge_weight) {
    if (edge < 0 || edge >= length - 1) throw std::invalid_argument("edge constraint out of range");
    if (w < 1 || w > max_weight) throw std::invalid_argument("edge weight outside domain");
  }
}

namespace {

bool vertex_ok(const GadgetSpec& spec, int pos, int value, int prev) {
  if (value > spec.mu_cap || value == prev) return false;
  if (auto it = spec.required.find(pos); it != spec.required.end() && it->second != value) return false;
  if (auto it = spec.avoid.find(pos); it != spec.avoid.end() &&
                                       std::count(it->second.begin(), it->second.end(), value))
    return false;
  return true;
}

std::vector<PathArc> edge_choices(const GadgetSpec& spec, int edge) {
  std::vector<PathArc> out;
  for (bool forward : {true, false})
    for (int w = 1; w <= spec.max_weight; ++w) {
      auto it = spec.edge_weight.find(edge);
      if (it != spec.edge_weight.end() && it->second != w) continue;
      out.push_back({forward, w});
    }
  return out;
}

}  // namespace

std::optional<Gadget> synthesize(const GadgetSpec& spec) {
  spec.check();
  const int n = spec.length;
  const int cap = spec.mu_cap;
  const int carries = spec.max_weight + 1;
  // feasible[i][prev + 1][carry]: vertices i..n-1 can be completed given the
  // in-weight of vertex i-1 (-1 for none) and the weight already pointing
  // into vertex i from edge i-1.
  auto index = [&](int prev, int carry) { return (prev + 1) * carries + carry; };
  std::vector<std::vector<char>> feasible(n, std::vector<char>((cap + 2) * carries, 0));
  std::vector<std::vector<PathArc>> choices(n - 1);
  for (int e = 0; e + 1 < n; ++e) choices[e] = edge_choices(spec, e);

  for (int prev = -1; prev <= cap; ++prev)
    for (int carry = 0; carry < carries; ++carry)
      feasible[n - 1][index(prev, carry)] = vertex_ok(spec, n - 1, carry, prev);
  for (int i = n - 2; i >= 0; --i)
    for (int prev = -1; prev <= cap; ++prev)
      for (int carry = 0; carry < carries; ++carry) {
        char ok = 0;
        for (const PathArc& c : choices[i]) {
          int value = carry + (c.forward ? 0 : c.weight);
          if (!vertex_ok(spec, i, value, prev)) continue;
          if (feasible[i + 1][index(value, c.forward ? c.weight : 0)]) {
            ok = 1;
            break;
          }
        }
        feasible[i][index(prev, carry)] = ok;
      }
  if (!feasible[0][index(-1, 0)]) return std::nullopt;

  Gadget g;
  g.spec = spec;
  int prev = -1;
  int carry = 0;
  for (int i = 0; i + 1 < n; ++i) {
    for (const PathArc& c : choices[i]) {
      int value = carry + (c.forward ? 0 : c.weight);
      int next_carry = c.forward ? c.weight : 0;
      if (vertex_ok(spec, i, value, prev) && feasible[i + 1][index(value, next_carry)]) {
        g.arcs.push_back(c);
        prev = value;
        carry = next_carry;
        break;
      }
    }
  }
  g.in_profile = path_profile(g.arcs);
  return g;
}

std::vector<int> path_profile(const std::vector<PathArc>& arcs) {
  std::vector<int> profile(arcs.size() + 1, 0);
  for (std::size_t i = 0; i < arcs.size(); ++i) profile[arcs[i].forward ? i + 1 : i] += arcs[i].weight;
  return profile;
}

GadgetSpec reverse(const GadgetSpec& s) {
  GadgetSpec r = s;
  r.required.clear();
  r.avoid.clear();
  r.edge_weight.clear();
  for (auto [p, v] : s.required) r.required[s.length - 1 - p] = v;
  for (const auto& [p, v] : s.avoid) r.avoid[s.length - 1 - p] = v;
  for (auto [e, w] : s.edge_weight) r.edge_weight[s.length - 2 - e] = w;
  return r;
}

Gadget reverse(const Gadget& g) {
  Gadget r;
  r.spec = reverse(g.spec);
  for (auto it = g.arcs.rbegin(); it != g.arcs.rend(); ++it) r.arcs.push_back({!it->forward, it->weight});
  r.in_profile.assign(g.in_profile.rbegin(), g.in_profile.rend());
  return r;
}

namespace {

// Profile given with 1-based positions as (position, in-weight) pairs and
// 1-based edges (edge k joins vk and vk+1).
GadgetSpec make_spec(int length, int max_weight, int cap, std::vector<std::pair<int, int>> profile,
                     std::vector<std::pair<int, int>> edges = {}) {
  GadgetSpec s;
  s.length = length;
  s.max_weight = max_weight;
  s.mu_cap = cap;
  s.required[0] = 0;
  s.required[length - 1] = 0;
  for (auto [pos, value] : profile) s.required[pos - 1] = value;
  for (auto [edge, w] : edges) s.edge_weight[edge - 1] = w;
  return s;
}

}  // namespace

GadgetSpec fixture_spec(const std::string& name, int length) {
  const int n = length;
  // Weight-one path profiles.
  if (name == "long-a") {
    if (n < 7) throw std::invalid_argument("long fixtures need length >= 7");
    return make_spec(n, 1, 2, {{2, 2}, {n - 2, 0}, {n - 1, 2}});
  }
  if (name == "long-b") {
    if (n < 7) throw std::invalid_argument("long fixtures need length >= 7");
    return make_spec(n, 1, 2, {{2, 1}, {3, 2}, {n - 3, 0}, {n - 2, 2}, {n - 1, 1}});
  }
  if (name == "long-c") {
    if (n < 7) throw std::invalid_argument("long fixtures need length >= 7");
    return make_spec(n, 1, 2, {{2, 1}, {n - 2, 0}, {n - 1, 2}});
  }
  if (name == "six-a") return make_spec(6, 1, 2, {{2, 2}, {3, 0}, {4, 1}, {5, 2}});
  if (name == "six-b") return make_spec(6, 1, 2, {{2, 1}, {3, 2}, {4, 0}, {5, 2}});
  if (name == "five-a") return make_spec(5, 1, 2, {{2, 1}, {3, 2}, {4, 1}});
  if (name == "five-b") return make_spec(5, 1, 2, {{2, 2}, {3, 0}, {4, 2}});
  if (name == "four") return make_spec(4, 1, 2, {{2, 1}, {3, 2}});
  // Profiles using weight two.
  if (name == "three-2") return make_spec(3, 2, 4, {{2, 2}}, {{1, 1}, {2, 1}});
  if (name == "three-3") return make_spec(3, 2, 4, {{2, 3}}, {{1, 2}, {2, 1}});
  if (name == "three-4") return make_spec(3, 2, 4, {{2, 4}}, {{1, 2}, {2, 2}});
  if (name == "four-heavy-a") return make_spec(4, 2, 4, {{2, 2}, {3, 3}}, {{1, 2}, {2, 1}, {3, 2}});
  if (name == "four-heavy-b") return make_spec(4, 2, 4, {{2, 1}, {3, 3}}, {{1, 1}, {2, 2}, {3, 1}});
  if (name == "five-heavy")
    return make_spec(5, 2, 4, {{2, 2}, {3, 0}, {4, 3}}, {{1, 1}, {2, 1}, {3, 1}, {4, 2}});
  if (name == "six-heavy")
    return make_spec(6, 2, 4, {{2, 1}, {3, 3}, {4, 2}, {5, 1}},
                     {{1, 1}, {2, 2}, {3, 1}, {4, 2}, {5, 1}});
  throw std::invalid_argument("unknown path fixture '" + name + "'");
}

std::vector<std::pair<std::string, GadgetSpec>> path_fixtures(int long_length) {
  static const char* kNames[] = {"long-a", "long-b", "long-c", "six-a", "six-b",
                                 "five-a", "five-b", "four",  "three-2",  "three-3",
                                 "three-4",  "four-heavy-a",  "four-heavy-b",  "five-heavy",    "six-heavy"};
  std::vector<std::pair<std::string, GadgetSpec>> out;
  for (const char* name : kNames) out.emplace_back(name, fixture_spec(name, long_length));
  return out;
}

}  // namespace semiproper
