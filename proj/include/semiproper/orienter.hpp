#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "semiproper/decompose.hpp"
#include "semiproper/gadgets.hpp"
#include "semiproper/graph.hpp"

namespace semiproper {

/// One construction step: a root cycle or bridge, a cycle or bridge hung on
/// a cut vertex, a base cycle C0, or an ear.
struct TraceStep {
  int block = 0;
  int ear = -1;             // index within the block's ear list, -1 otherwise
  std::string kind;         // "root-cycle", "root-bridge", "cycle", "bridge", "base-cycle", "ear"
  std::string case_label;   // e.g. "cycle3:root1", "ear3:2-3"
  std::string fixture;      // path fixture used ("four-heavy-a", "~four" when reversed), or "synthesized"
  bool fallback = false;    // case analysis could not meet the avoid-set; generic synthesis used
  int length = 0;           // vertices on the path (cycle length + 1 for cycles)
  std::vector<Vertex> path;
  std::int64_t end_weight_a = 0;  // in-weight of path.front() when applied
  std::int64_t end_weight_b = 0;  // in-weight of path.back() when applied
  std::optional<std::int64_t> forbidden;
  std::vector<int> profile;       // interior in-weights produced by the gadget
  std::optional<Vertex> root;
  std::int64_t root_weight_before = 0;
  std::int64_t root_weight_after = 0;
};

struct OrientResult {
  Orientation orientation;
  ClassTag graph_class = ClassTag::cactus;
  std::int64_t bound = 3;
  std::vector<TraceStep> trace;
  /// Per block of block_forest(g): the vertex held at block-local in-weight 0
  /// for 2-connected blocks (the block root, or its lowest vertex for a
  /// component's first block).
  std::vector<std::optional<Vertex>> designated;
};

class UnsupportedClass : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OrientError : public std::runtime_error {
 public:
  OrientError(const std::string& what, std::vector<TraceStep> trace)
      : std::runtime_error(what), trace_(std::move(trace)) {}
  const std::vector<TraceStep>& trace() const { return trace_; }

 private:
  std::vector<TraceStep> trace_;
};

/// μ ≤ 3 orientation of a cactus with weights in {1,2}. Blocks are attached
/// in block-tree DFS order; each attachment leaves its cut vertex's in-weight
/// unchanged. Throws UnsupportedClass for non-cacti.
OrientResult orient_cactus(const Graph& g);

struct BlockOrientation {
  Orientation orientation;
  EarDecomposition decomposition;
  std::vector<TraceStep> trace;
};

/// μ ≤ 4 orientation of a 2-connected ear-peelable graph with in-weight 0 at
/// `s` and no neighbour of `s` at in-weight `forbidden`. Throws OrientError
/// if the block does not peel with `s` on the base cycle.
BlockOrientation orient_block(const Graph& block, Vertex s,
                              std::optional<std::int64_t> forbidden = std::nullopt);

/// μ ≤ 4 orientation of any graph whose blocks are edges or ear-peelable;
/// cacti are delegated to orient_cactus. Throws UnsupportedClass otherwise.
OrientResult orient_graph(const Graph& g);

/// The block-composition construction without the cactus shortcut: every
/// 2-connected block, cycles included, goes through orient_block.
OrientResult orient_composed(const Graph& g);

/// Every case label orient_cactus can emit.
std::vector<std::string> cactus_case_labels();

/// Label orient_cactus uses for a cycle of `cycle_length` vertices (0 for a
/// bridge) hung on a cut vertex of in-weight `root_weight`.
std::string cactus_case(int cycle_length, std::int64_t root_weight);

/// Label and path fixture orient_block picks for an ear with `length`
/// vertices whose ends have in-weights a < b.
struct EarCase {
  std::string label;
  std::string fixture;
  bool reversed;
};
EarCase ear_case(int length, std::int64_t a, std::int64_t b);

}  // namespace semiproper
