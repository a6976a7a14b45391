// semiproper: generate graphs, build semi-proper orientations, and check them
// with exact solvers.
//
// Exit codes: 0 ok, 2 usage or input error, 3 unsupported graph class,
// 4 validation reject, 5 solver budget exhausted.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "semiproper/decompose.hpp"
#include "semiproper/exact.hpp"
#include "semiproper/generators.hpp"
#include "semiproper/orienter.hpp"
#include "semiproper/report.hpp"
#include "semiproper/validate.hpp"

namespace {

using namespace semiproper;
using nlohmann::json;

enum Exit { kOk = 0, kUsage = 2, kUnsupported = 3, kReject = 4, kBudget = 5, kInternal = 70 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << data;
}

Graph load_graph(const std::string& path, std::string* bytes = nullptr) {
  std::string text = read_file(path);
  try {
    Graph g = parse_graph(text);
    if (bytes) *bytes = std::move(text);
    return g;
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

json envelope(const std::string& command, const std::string& echo) {
  return {{"schema", kReportSchema}, {"version", kVersion}, {"command", command}, {"invocation", echo}};
}

void emit(const json& j, const std::string& path) {
  std::string text = j.dump(2) + "\n";
  if (path.empty())
    std::cout << text;
  else
    write_file(path, text);
}

struct GenArgs {
  std::string family;
  int param = -1;
  int blocks = -1;
  int max_cycle = 9;
  double edge_prob = 0.4;
  int m = 0;
  std::uint64_t seed = 0;
  std::string out;
  std::string meta;
};

int cmd_gen(const GenArgs& a, const std::string& echo) {
  auto family = family_from_name(a.family);
  if (!family) throw UsageError("unknown family '" + a.family + "'");
  GeneratorSpec spec;
  spec.family = *family;
  spec.seed = a.seed;
  spec.max_cycle = a.max_cycle;
  spec.edge_prob = a.edge_prob;
  spec.edges = a.m;
  if (*family == Family::random_cactus)
    spec.size = a.blocks >= 0 ? a.blocks : a.param >= 0 ? a.param : 20;
  else if (a.param >= 0)
    spec.size = a.param;
  else if (*family != Family::cactus_tight)
    throw UsageError("--param is required for family " + a.family);

  Generated gen;
  try {
    gen = generate(spec);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::string text = serialize_graph(gen.graph);
  json meta = envelope("gen", echo);
  meta["generator"] = to_json(gen.metadata);
  meta["graph"] = {{"vertices", gen.graph.vertex_count()}, {"edges", gen.graph.edge_count()},
                   {"digest", digest(text)}};
  if (a.out.empty()) {
    std::cout << text;
    if (!a.meta.empty()) emit(meta, a.meta);
  } else {
    write_file(a.out, text);
    emit(meta, a.meta.empty() ? a.out + ".json" : a.meta);
  }
  return kOk;
}

int cmd_classify(const std::string& input, const std::string& echo) {
  std::string bytes;
  Graph g = load_graph(input, &bytes);
  BlockForest forest = block_forest(g);
  json out = envelope("classify", echo);
  out["input_digest"] = digest(bytes);
  out.update(to_json(classify(g, forest)));
  out["cut_vertices"] = forest.cut_vertices;
  out["components"] = forest.component_count;
  emit(out, "");
  return kOk;
}

struct OrientArgs {
  std::string input;
  std::string out;
  std::string report;
  std::string cls = "auto";
  bool no_trace = false;
};

int cmd_orient(const OrientArgs& a, const std::string& echo) {
  std::string bytes;
  Graph g = load_graph(a.input, &bytes);
  // Orientations refer to edge ids, so the input edge order is kept as is.
  OrientResult result;
  try {
    if (a.cls == "auto")
      result = orient_graph(g);
    else if (a.cls == "cactus")
      result = orient_cactus(g);
    else if (a.cls == "outerplanar")
      result = orient_composed(g);
    else
      throw UsageError("--class must be auto, cactus or outerplanar");
  } catch (const UnsupportedClass& e) {
    std::cerr << "unsupported class: " << e.what() << "\n";
    return kUnsupported;
  }

  Verdict v = validate(g, result.orientation, result.bound, 2);
  if (!v.accepted) {
    std::cerr << "internal error: constructed orientation rejected: " << v.violations.front() << "\n";
    return kInternal;
  }

  std::string text = serialize_orientation(result.orientation);
  json report = envelope("orient", echo);
  report["input_digest"] = digest(bytes);
  report.update(to_json(result, !a.no_trace));
  report["orientation_digest"] = digest(text);
  if (a.out.empty()) {
    std::cout << text;
    if (!a.report.empty()) emit(report, a.report);
  } else {
    write_file(a.out, text);
    emit(report, a.report);
  }
  return kOk;
}

struct ExactArgs {
  std::string input;
  std::string method = "brute";
  std::int64_t mu_cap = 4;
  int weight_domain = 2;
  double budget_secs = 0;
  std::int64_t budget_nodes = 0;
  int workers = 1;
  bool timing = false;
};

int cmd_exact(const ExactArgs& a, const std::string& echo) {
  std::string bytes;
  Graph g = load_graph(a.input, &bytes);
  Budget budget;
  if (a.budget_secs > 0) budget.seconds = a.budget_secs;
  if (a.budget_nodes > 0) budget.nodes = a.budget_nodes;
  if (a.weight_domain != 2 && a.weight_domain != 3) throw UsageError("--weight-domain must be 2 or 3");
  SolveReport r;
  if (a.method == "brute") {
    r = chi_s_brute(g, a.weight_domain, a.mu_cap, budget);
  } else if (a.method == "labeling") {
    if (a.weight_domain != 2) throw UsageError("the labeling method uses weights {1,2}");
    r = chi_s_labeling(g, a.mu_cap, budget, a.workers);
  } else if (a.method == "proper") {
    r = chi_proper(g, a.mu_cap, budget);
  } else {
    throw UsageError("--method must be brute, labeling or proper");
  }
  json out = envelope("exact", echo);
  out["input_digest"] = digest(bytes);
  out.update(to_json(r, a.timing));
  emit(out, "");
  return r.budget_exhausted ? kBudget : kOk;
}

struct ValidateArgs {
  std::string graph;
  std::string orientation;
  std::int64_t mu = -1;
  int weight_domain = 0;
};

int cmd_validate(const ValidateArgs& a, const std::string& echo) {
  std::string bytes;
  Graph g = load_graph(a.graph, &bytes);
  std::string otext = read_file(a.orientation);
  RawOrientation raw;
  try {
    raw = parse_raw_orientation(otext);
  } catch (const ParseError& e) {
    throw UsageError(a.orientation + ": " + e.what());
  }
  json out = envelope("validate", echo);
  out["input_digest"] = digest(bytes);
  out["orientation_digest"] = digest(otext);
  Verdict v;
  if (raw.vertex_count != g.vertex_count()) {
    v.accepted = false;
    v.violations.push_back("orientation has " + std::to_string(raw.vertex_count) + " vertices, graph has " +
                           std::to_string(g.vertex_count()));
  } else {
    std::optional<std::int64_t> mu;
    std::optional<std::int64_t> w;
    if (a.mu >= 0) mu = a.mu;
    if (a.weight_domain > 0) w = a.weight_domain;
    v = validate(g, raw.arcs, {}, mu, w);
  }
  out.update(to_json(v));
  emit(out, "");
  return v.accepted ? kOk : kReject;
}

int cmd_audit(const std::string& input, const std::string& orientation, const std::string& echo) {
  std::string bytes;
  Graph g = load_graph(input, &bytes);
  json out = envelope("audit", echo);
  out["input_digest"] = digest(bytes);
  bool ok = true;
  if (g.vertex_count() >= 1 && g.vertex_count() <= 10 && g.edge_count() <= 16) {
    AuditReport a = inequality_audit(g);
    out["inequality"] = to_json(a);
    ok = a.holds;
  } else if (orientation.empty()) {
    throw UsageError("inequality audit needs 1 <= n <= 10 and m <= 16");
  } else {
    out["inequality"] = nullptr;
  }
  if (!orientation.empty()) {
    Orientation o;
    try {
      o = parse_orientation(read_file(orientation), g);
    } catch (const ParseError& e) {
      throw UsageError(orientation + ": " + e.what());
    }
    try {
      out["tightness"] = to_json(tightness_report(g, o));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  emit(out, "");
  return ok ? kOk : kReject;
}

}  // namespace

int main(int argc, char** argv) {
  std::string echo;
  for (int i = 1; i < argc; ++i) echo += (i > 1 ? " " : "") + std::string(argv[i]);

  CLI::App app{"Semi-proper orientations of cacti and outerplanar graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a graph family");
  gen_cmd->add_option("--family", gen.family, "uop, cactus-tight, random-cactus, random-maximal-outerplanar, "
                                              "cycle, path, complete, star, random-graph, book, random-tree")
      ->required();
  gen_cmd->add_option("--param,-k", gen.param, "Primary size parameter of the family");
  gen_cmd->add_option("--blocks", gen.blocks, "random-cactus: number of blocks (default 20)");
  gen_cmd->add_option("--max-cycle", gen.max_cycle, "random-cactus: longest cycle (default 9)");
  gen_cmd->add_option("--edge-prob", gen.edge_prob, "random-cactus: bridge probability (default 0.4)");
  gen_cmd->add_option("--m", gen.m, "random-graph: number of edges");
  gen_cmd->add_option("--seed", gen.seed, "PRNG seed (default 0)");
  gen_cmd->add_option("-o,--output", gen.out, "Graph file (metadata goes to <file>.json)");
  gen_cmd->add_option("--meta", gen.meta, "Metadata JSON path");

  std::string classify_input;
  auto* classify_cmd = app.add_subcommand("classify", "Report the block structure and graph class");
  classify_cmd->add_option("-i,--input", classify_input, "Edge-list file")->required();

  OrientArgs orient;
  auto* orient_cmd = app.add_subcommand("orient", "Construct a semi-proper orientation");
  orient_cmd->add_option("-i,--input", orient.input, "Edge-list file")->required();
  orient_cmd->add_option("-o,--output", orient.out, "Orientation file (report then goes to stdout)");
  orient_cmd->add_option("--report", orient.report, "Report JSON path");
  orient_cmd->add_option("--class", orient.cls, "auto, cactus or outerplanar");
  orient_cmd->add_flag("--no-trace", orient.no_trace, "Omit the per-step trace from the report");

  ExactArgs exact;
  auto* exact_cmd = app.add_subcommand("exact", "Exact semi-proper / proper orientation number");
  exact_cmd->add_option("-i,--input", exact.input, "Edge-list file")->required();
  exact_cmd->add_option("--method", exact.method, "brute, labeling or proper");
  exact_cmd->add_option("--mu-cap", exact.mu_cap, "Largest μ searched (default 4)");
  exact_cmd->add_option("--weight-domain", exact.weight_domain, "Largest arc weight, 2 or 3 (default 2)");
  exact_cmd->add_option("--budget-secs", exact.budget_secs, "Wall-clock budget");
  exact_cmd->add_option("--budget-nodes", exact.budget_nodes, "Search-node budget");
  exact_cmd->add_option("--workers", exact.workers, "Worker threads for the labeling method");
  exact_cmd->add_flag("--timing", exact.timing, "Include elapsed time in the report");

  ValidateArgs val;
  auto* validate_cmd = app.add_subcommand("validate", "Check an orientation file against a graph");
  validate_cmd->add_option("-g,--graph", val.graph, "Edge-list file")->required();
  validate_cmd->add_option("-d,--orientation", val.orientation, "Orientation file")->required();
  validate_cmd->add_option("--mu", val.mu, "Required bound on the maximum in-weight");
  validate_cmd->add_option("--weight-domain", val.weight_domain, "Largest allowed arc weight");

  std::string audit_input, audit_orientation;
  auto* audit_cmd = app.add_subcommand("audit", "Inequality-chain audit and in-weight statistics");
  audit_cmd->add_option("-i,--input", audit_input, "Edge-list file")->required();
  audit_cmd->add_option("-d,--orientation", audit_orientation, "Orientation for the tightness report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen, echo);
    if (*classify_cmd) return cmd_classify(classify_input, echo);
    if (*orient_cmd) return cmd_orient(orient, echo);
    if (*exact_cmd) return cmd_exact(exact, echo);
    if (*validate_cmd) return cmd_validate(val, echo);
    if (*audit_cmd) return cmd_audit(audit_input, audit_orientation, echo);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const OrientError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
