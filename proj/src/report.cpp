#include "semiproper/report.hpp"

#include <cstdio>

namespace semiproper {

using nlohmann::json;

json to_json(const GraphClass& c) {
  json blocks = json::array();
  for (const auto& b : c.blocks)
    blocks.push_back({{"kind", block_kind_name(b.kind)}, {"vertices", b.vertex_count}, {"edges", b.edge_count}});
  return {{"class", class_name(c.tag)}, {"blocks", blocks}};
}

json to_json(const GeneratorMetadata& m) {
  json params = json::object();
  for (const auto& [k, v] : m.params) params[k] = v;
  json out = {{"family", m.family}, {"params", params}};
  if (!m.prng.empty()) {
    out["prng"] = m.prng;
    out["seed"] = m.seed;
  }
  if (m.uop) {
    json edges = json::array();
    for (const auto& e : m.uop->outeredges) edges.push_back({e.u, e.v});
    json ears = json::array();
    for (const auto& e : m.uop->ears) ears.push_back({{"a", e.a}, {"b", e.b}, {"apex", e.apex}});
    out["uop"] = {{"level", m.uop->level},
                  {"outervertices", m.uop->outervertices},
                  {"outeredges", edges},
                  {"classes", {{"A", m.uop->classes[0]}, {"B", m.uop->classes[1]}, {"C", m.uop->classes[2]}}},
                  {"ears", ears}};
  }
  return out;
}

json to_json(const TraceStep& s) {
  json out = {{"block", s.block},   {"kind", s.kind},       {"case", s.case_label},
              {"length", s.length}, {"fallback", s.fallback}, {"path", s.path},
              {"profile", s.profile}};
  if (s.ear >= 0) out["ear"] = s.ear;
  if (!s.fixture.empty()) out["fixture"] = s.fixture;
  if (s.kind == "ear") out["end_weights"] = {s.end_weight_a, s.end_weight_b};
  if (s.forbidden) out["forbidden"] = *s.forbidden;
  if (s.root) {
    out["root"] = *s.root;
    out["root_weight"] = {s.root_weight_before, s.root_weight_after};
  }
  return out;
}

json to_json(const OrientResult& r, bool with_trace) {
  json out = {{"class", class_name(r.graph_class)}, {"mu", r.orientation.mu()}, {"bound", r.bound}};
  json designated = json::array();
  for (const auto& d : r.designated) designated.push_back(d ? json(*d) : json(nullptr));
  out["designated"] = designated;
  if (with_trace) {
    json trace = json::array();
    for (const auto& s : r.trace) trace.push_back(to_json(s));
    out["trace"] = trace;
  }
  return out;
}

json to_json(const SolveReport& r, bool with_timing) {
  json out = {{"kind", solve_kind_name(r.kind)},
              {"mu_cap", r.mu_cap},
              {"max_weight", r.max_weight},
              {"value", r.value ? json(*r.value) : json(nullptr)},
              {"refuted_up_to", r.refuted_up_to},
              {"budget_exhausted", r.budget_exhausted}};
  if (r.value) {
    out["result"] = "exact";
  } else if (r.budget_exhausted) {
    out["result"] = "inconclusive";
  } else {
    out["result"] = "certificate";
    out["certificate"] = "no semi-proper orientation with mu <= " + std::to_string(r.mu_cap);
  }
  if (r.witness) {
    json arcs = json::array();
    for (const auto& a : r.witness->arcs()) arcs.push_back({a.tail, a.head, a.weight});
    out["witness"] = {{"arcs", arcs}, {"in_weights", r.witness->in_weights()}};
  }
  out["stats"] = {{"nodes", r.nodes}};
  if (with_timing) out["stats"]["elapsed_seconds"] = r.elapsed_seconds;
  return out;
}

json to_json(const Verdict& v) {
  return {{"accepted", v.accepted}, {"mu", v.mu}, {"violations", v.violations}, {"in_weights", v.in_weights}};
}

json to_json(const AuditReport& a) {
  return {{"omega", a.omega},   {"chi", a.chi},         {"chi_s", a.chi_s},
          {"chi_proper", a.chi_proper}, {"delta", a.delta}, {"holds", a.holds}};
}

json to_json(const TightnessReport& t) {
  json out = {{"class_sizes", t.class_sizes},      {"S", t.in_weight_sum},
              {"weight_two_arcs", t.weight_two_arcs}, {"edges", t.edge_count},
              {"sum_identity", t.sum_identity},    {"sum_at_least_edges", t.sum_at_least_edges}};
  if (t.classes_proper) out["classes_proper"] = *t.classes_proper;
  if (t.classes_meet_every_triangle) out["classes_meet_every_triangle"] = *t.classes_meet_every_triangle;
  return out;
}

std::string digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace semiproper
