#include "semiproper/orienter.hpp"

#include <algorithm>

#include "semiproper/validate.hpp"

namespace semiproper {

namespace {

struct Builder {
  explicit Builder(const Graph& g) : g(g), arcs(g.edge_count()), weight(g.vertex_count(), 0) {}

  void add_arc(Vertex tail, Vertex head, int w) {
    EdgeId e = g.find_edge(tail, head);
    if (e < 0) throw std::logic_error("arc on a non-edge");
    if (arcs[e]) throw std::logic_error("edge oriented twice");
    arcs[e] = Arc{tail, head, w};
    weight[head] += w;
  }

  void apply(const std::vector<Vertex>& path, const Gadget& gadget) {
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      const PathArc& a = gadget.arcs[i];
      if (a.forward)
        add_arc(path[i], path[i + 1], a.weight);
      else
        add_arc(path[i + 1], path[i], a.weight);
    }
  }

  Orientation finish() const {
    std::vector<Arc> out;
    out.reserve(arcs.size());
    for (const auto& a : arcs) {
      if (!a) throw std::logic_error("edge left unoriented");
      out.push_back(*a);
    }
    return Orientation(g, std::move(out));
  }

  const Graph& g;
  std::vector<std::optional<Arc>> arcs;
  std::vector<std::int64_t> weight;
};

GadgetSpec closed_path_spec(int length, int max_weight, int cap) {
  GadgetSpec s;
  s.length = length;
  s.max_weight = max_weight;
  s.mu_cap = cap;
  s.required = {{0, 0}, {length - 1, 0}};
  return s;
}

void add_avoid(GadgetSpec& s, int pos, std::int64_t value) {
  auto& list = s.avoid[pos];
  if (std::find(list.begin(), list.end(), value) == list.end()) list.push_back(static_cast<int>(value));
}

std::vector<int> interior(const Gadget& g) {
  return {g.in_profile.begin() + 1, g.in_profile.end() - 1};
}

void check_valid(const Graph& g, const Orientation& o, std::int64_t bound,
                 const std::vector<TraceStep>& trace) {
  Verdict v = validate(g, o, bound, 2);
  if (!v.accepted) throw OrientError("construction produced an invalid orientation: " + v.violations.front(), trace);
}

const char* cactus_fixture(const std::string& label) {
  if (label == "cycle3:root1") return "four-heavy-a";
  if (label == "cycle3:root2") return "four-heavy-b";
  if (label == "cycle3:root0or3") return "four";
  if (label == "cycle4:root-not1") return "five-a";
  if (label == "cycle4:root1") return "five-b";
  if (label == "cycle5:root2") return "six-heavy";
  if (label == "cycle5:root-not2") return "six-a";
  if (label == "cycle6+:root1") return "long-a";
  if (label == "cycle6+:root-not1") return "long-b";
  return "";
}

}  // namespace

std::string cactus_case(int cycle_length, std::int64_t r) {
  if (cycle_length == 0) return r == 1 ? "bridge:root1" : "bridge:root-not1";
  if (cycle_length == 3) return r == 1 ? "cycle3:root1" : r == 2 ? "cycle3:root2" : "cycle3:root0or3";
  if (cycle_length == 4) return r == 1 ? "cycle4:root1" : "cycle4:root-not1";
  if (cycle_length == 5) return r == 2 ? "cycle5:root2" : "cycle5:root-not2";
  return r == 1 ? "cycle6+:root1" : "cycle6+:root-not1";
}

std::vector<std::string> cactus_case_labels() {
  return {"root-bridge",      "root-cycle",       "bridge:root1",     "bridge:root-not1",
          "cycle3:root1",     "cycle3:root2",     "cycle3:root0or3",  "cycle4:root1",
          "cycle4:root-not1", "cycle5:root2",     "cycle5:root-not2", "cycle6+:root1",
          "cycle6+:root-not1"};
}

EarCase ear_case(int n, std::int64_t a, std::int64_t b) {
  const bool near_a1_or_b2 = a == 1 || b == 2;
  switch (n) {
    case 3:
      if ((a == 2 && b == 3) || (a == 3 && b == 2)) return {"ear3:2-3", "three-4", false};
      if (a != 2 && b != 2) return {"ear3:no2", "three-2", false};
      return {"ear3:no3", "three-3", false};
    case 4:
      return near_a1_or_b2 ? EarCase{"ear4:a1-or-b2", "four", true} : EarCase{"ear4:other", "four", false};
    case 5:
      if (a == 1 && b == 2) return {"ear5:1-2", "five-heavy", false};
      if (a != 1 && b != 1) return {"ear5:no1", "five-a", false};
      return {"ear5:no2", "five-b", false};
    case 6:
      return near_a1_or_b2 ? EarCase{"ear6:a1-or-b2", "six-b", true} : EarCase{"ear6:other", "six-b", false};
    default:
      return near_a1_or_b2 ? EarCase{"ear7+:a1-or-b2", "long-c", true} : EarCase{"ear7+:other", "long-c", false};
  }
}

OrientResult orient_cactus(const Graph& g) {
  BlockForest forest = block_forest(g);
  GraphClass cls = classify(g, forest);
  if (cls.tag != ClassTag::cactus) throw UnsupportedClass("graph is not a cactus");

  Builder builder(g);
  OrientResult result;
  result.graph_class = ClassTag::cactus;
  result.bound = 3;
  result.designated.assign(forest.blocks.size(), std::nullopt);

  for (int bi = 0; bi < static_cast<int>(forest.blocks.size()); ++bi) {
    const Block& b = forest.blocks[bi];
    if (b.is_isolated()) continue;
    TraceStep step;
    step.block = bi;
    step.root = b.root;

    if (!b.root) {
      if (b.is_bridge()) {
        const Edge& e = g.edge(b.edges.front());
        Vertex lo = std::min(e.u, e.v), hi = std::max(e.u, e.v);
        builder.add_arc(lo, hi, 1);
        step.kind = "root-bridge";
        step.case_label = "root-bridge";
        step.path = {lo, hi};
        step.length = 2;
        step.profile = {};
      } else {
        Vertex start = b.vertices.front();
        std::vector<Vertex> path = cycle_order(g, b, start);
        path.push_back(start);
        auto gadget = synthesize(closed_path_spec(static_cast<int>(path.size()), 1, 2));
        if (!gadget) throw OrientError("no weight-one pattern for the root cycle", result.trace);
        builder.apply(path, *gadget);
        step.kind = "root-cycle";
        step.case_label = "root-cycle";
        step.fixture = "synthesized";
        step.path = path;
        step.length = static_cast<int>(path.size());
        step.profile = interior(*gadget);
        result.designated[bi] = start;
      }
      result.trace.push_back(std::move(step));
      continue;
    }

    const Vertex s = *b.root;
    const std::int64_t r = builder.weight[s];
    step.root_weight_before = r;
    step.end_weight_a = step.end_weight_b = r;
    if (b.is_bridge()) {
      const Edge& e = g.edge(b.edges.front());
      Vertex v = e.other(s);
      int w = r == 1 ? 2 : 1;
      builder.add_arc(s, v, w);
      step.kind = "bridge";
      step.case_label = cactus_case(0, r);
      step.path = {s, v};
      step.length = 2;
      step.profile = {};
    } else {
      std::vector<Vertex> path = cycle_order(g, b, s);
      const int k = static_cast<int>(path.size());
      path.push_back(s);
      step.kind = "cycle";
      step.case_label = cactus_case(k, r);
      step.fixture = cactus_fixture(step.case_label);
      GadgetSpec spec = fixture_spec(step.fixture, k + 1);
      add_avoid(spec, 1, r);
      add_avoid(spec, k - 1, r);
      auto gadget = synthesize(spec);
      if (!gadget) {
        GadgetSpec generic = closed_path_spec(k + 1, 2, 3);
        add_avoid(generic, 1, r);
        add_avoid(generic, k - 1, r);
        gadget = synthesize(generic);
        step.fallback = true;
        step.fixture = "synthesized";
      }
      if (!gadget) throw OrientError("cycle at vertex " + std::to_string(s) + " cannot be oriented", result.trace);
      builder.apply(path, *gadget);
      step.path = path;
      step.length = k + 1;
      step.profile = interior(*gadget);
      result.designated[bi] = s;
    }
    step.root_weight_after = builder.weight[s];
    if (step.root_weight_after != step.root_weight_before)
      throw OrientError("attachment changed the in-weight of cut vertex " + std::to_string(s), result.trace);
    result.trace.push_back(std::move(step));
  }

  result.orientation = builder.finish();
  check_valid(g, result.orientation, result.bound, result.trace);
  return result;
}

namespace {

// Orients one 2-connected block given in local vertex ids.
BlockOrientation orient_block_local(const Graph& b, Vertex s, std::optional<std::int64_t> forbidden,
                                    int block_index) {
  PeelResult peel = peel_ears(b, s);
  if (!peel.decomposition)
    throw OrientError("ear decomposition failed: " + peel.failure, {});
  BlockOrientation out;
  out.decomposition = *peel.decomposition;
  const EarDecomposition& d = out.decomposition;
  Builder builder(b);

  // Base cycle, walked from s and back.
  {
    std::vector<Vertex> path = d.base_cycle;
    path.push_back(s);
    const int n = static_cast<int>(path.size());
    TraceStep step;
    step.block = block_index;
    step.kind = "base-cycle";
    step.case_label = "base-cycle";
    step.fixture = "synthesized";
    step.forbidden = forbidden;
    step.root = s;
    std::optional<Gadget> gadget;
    // Prefer weight-one patterns; heavier weights only when the forbidden
    // value leaves no weight-one choice.
    for (auto [max_weight, cap] : {std::pair{1, 2}, std::pair{2, 3}, std::pair{2, 4}}) {
      GadgetSpec spec = closed_path_spec(n, max_weight, cap);
      if (forbidden) {
        add_avoid(spec, 1, *forbidden);
        add_avoid(spec, n - 2, *forbidden);
      }
      gadget = synthesize(spec);
      if (gadget) break;
    }
    if (!gadget) throw OrientError("base cycle cannot avoid the forbidden in-weight", out.trace);
    builder.apply(path, *gadget);
    step.path = path;
    step.length = n;
    step.profile = interior(*gadget);
    out.trace.push_back(std::move(step));
  }

  for (int ei = 0; ei < static_cast<int>(d.ears.size()); ++ei) {
    std::vector<Vertex> path = d.ears[ei].path;
    if (builder.weight[path.front()] > builder.weight[path.back()]) std::reverse(path.begin(), path.end());
    const int n = static_cast<int>(path.size());
    const std::int64_t a = builder.weight[path.front()];
    const std::int64_t bw = builder.weight[path.back()];
    EarCase ec = ear_case(n, a, bw);

    TraceStep step;
    step.block = block_index;
    step.ear = ei;
    step.kind = "ear";
    step.case_label = ec.label;
    step.path = path;
    step.length = n;
    step.end_weight_a = a;
    step.end_weight_b = bw;
    step.forbidden = forbidden;

    auto constrain = [&](GadgetSpec spec) {
      add_avoid(spec, 1, a);
      add_avoid(spec, n - 2, bw);
      if (forbidden && path.front() == s) add_avoid(spec, 1, *forbidden);
      if (forbidden && path.back() == s) add_avoid(spec, n - 2, *forbidden);
      return spec;
    };
    auto fixture = [&](const std::string& name, bool reversed) {
      GadgetSpec spec = fixture_spec(name, n);
      return constrain(reversed ? reverse(spec) : spec);
    };

    std::optional<Gadget> gadget;
    try {
      gadget = synthesize(fixture(ec.fixture, ec.reversed));
    } catch (const std::invalid_argument&) {
      // The fixture itself hits an avoided value.
    }
    step.fixture = (ec.reversed ? "~" : "") + ec.fixture;
    if (!gadget && n == 3) {
      for (const char* alt : {"three-2", "three-3", "three-4"}) {
        if (alt == ec.fixture) continue;
        try {
          gadget = synthesize(fixture(alt, false));
        } catch (const std::invalid_argument&) {
        }
        if (gadget) {
          step.fixture = alt;
          step.fallback = true;
          break;
        }
      }
    }
    if (!gadget) {
      gadget = synthesize(constrain(closed_path_spec(n, 2, 4)));
      step.fixture = "synthesized";
      step.fallback = true;
    }
    if (!gadget) throw OrientError("ear " + std::to_string(ei) + " cannot be oriented", out.trace);
    builder.apply(path, *gadget);
    step.profile = interior(*gadget);
    out.trace.push_back(std::move(step));
  }

  out.orientation = builder.finish();
  if (out.orientation.in_weight(s) != 0) throw OrientError("designated vertex gained in-weight", out.trace);
  check_valid(b, out.orientation, 4, out.trace);
  if (forbidden)
    for (auto inc : b.incident(s))
      if (out.orientation.in_weight(inc.neighbor) == *forbidden)
        throw OrientError("neighbour of the designated vertex hit the forbidden in-weight", out.trace);
  return out;
}

}  // namespace

BlockOrientation orient_block(const Graph& block, Vertex s, std::optional<std::int64_t> forbidden) {
  if (s < 0 || s >= block.vertex_count()) throw std::invalid_argument("designated vertex out of range");
  return orient_block_local(block, s, forbidden, 0);
}

OrientResult orient_graph(const Graph& g) {
  if (classify(g).tag == ClassTag::cactus) return orient_cactus(g);
  return orient_composed(g);
}

OrientResult orient_composed(const Graph& g) {
  BlockForest forest = block_forest(g);
  GraphClass cls = classify(g, forest);
  if (cls.tag == ClassTag::unsupported)
    throw UnsupportedClass("graph has a block that is not ear-peelable");

  Builder builder(g);
  OrientResult result;
  result.graph_class = cls.tag;
  result.bound = 4;
  result.designated.assign(forest.blocks.size(), std::nullopt);

  for (int bi = 0; bi < static_cast<int>(forest.blocks.size()); ++bi) {
    const Block& b = forest.blocks[bi];
    if (b.is_isolated()) continue;
    if (b.is_bridge()) {
      const Edge& e = g.edge(b.edges.front());
      TraceStep step;
      step.block = bi;
      step.root = b.root;
      step.length = 2;
      if (b.root) {
        const Vertex s = *b.root;
        const std::int64_t r = builder.weight[s];
        Vertex v = e.other(s);
        builder.add_arc(s, v, r == 1 ? 2 : 1);
        step.kind = "bridge";
        step.case_label = cactus_case(0, r);
        step.path = {s, v};
        step.root_weight_before = r;
        step.root_weight_after = builder.weight[s];
      } else {
        Vertex lo = std::min(e.u, e.v), hi = std::max(e.u, e.v);
        builder.add_arc(lo, hi, 1);
        step.kind = "root-bridge";
        step.case_label = "root-bridge";
        step.path = {lo, hi};
      }
      result.trace.push_back(std::move(step));
      continue;
    }

    std::vector<Vertex> local_to_global;
    Graph local = g.edge_subgraph(b.edges, &local_to_global);
    const Vertex s = b.root.value_or(b.vertices.front());
    const Vertex s_local = static_cast<Vertex>(
        std::lower_bound(local_to_global.begin(), local_to_global.end(), s) - local_to_global.begin());
    std::optional<std::int64_t> forbidden;
    if (b.root) forbidden = builder.weight[s];
    const std::int64_t before = builder.weight[s];

    BlockOrientation bo;
    try {
      bo = orient_block_local(local, s_local, forbidden, bi);
    } catch (const OrientError& err) {
      auto trace = result.trace;
      trace.insert(trace.end(), err.trace().begin(), err.trace().end());
      throw OrientError(std::string("block ") + std::to_string(bi) + ": " + err.what(), trace);
    }
    for (const Arc& a : bo.orientation.arcs())
      builder.add_arc(local_to_global[a.tail], local_to_global[a.head], static_cast<int>(a.weight));
    result.designated[bi] = s;

    TraceStep attach;
    attach.block = bi;
    attach.kind = "block";
    attach.case_label = b.root ? "block:attached" : "block:first";
    attach.root = b.root;
    attach.forbidden = forbidden;
    attach.root_weight_before = before;
    attach.root_weight_after = builder.weight[s];
    attach.length = static_cast<int>(b.vertices.size());
    if (attach.root_weight_after != before)
      throw OrientError("attachment changed the in-weight of cut vertex " + std::to_string(s), result.trace);
    result.trace.push_back(attach);
    for (TraceStep step : bo.trace) {
      for (auto& v : step.path) v = local_to_global[v];
      if (step.root) step.root = local_to_global[*step.root];
      result.trace.push_back(std::move(step));
    }
  }

  result.orientation = builder.finish();
  check_valid(g, result.orientation, result.bound, result.trace);
  return result;
}

}  // namespace semiproper
