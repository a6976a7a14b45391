#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semiproper/graph.hpp"

namespace semiproper {

struct Block {
  std::vector<Vertex> vertices;  // sorted, global ids
  std::vector<EdgeId> edges;     // global edge ids, ascending
  /// Cut vertex shared with an earlier block of the same component; absent
  /// for the first block of each component.
  std::optional<Vertex> root;
  int component = 0;

  bool is_isolated() const { return edges.empty(); }
  bool is_bridge() const { return edges.size() == 1; }
  bool is_cycle() const { return vertices.size() >= 3 && edges.size() == vertices.size(); }
};

/// Blocks in block-cut-tree DFS order, per connected component (components
/// ordered by their lowest vertex). For every prefix, the blocks of one
/// component seen so far induce a connected subgraph.
struct BlockForest {
  std::vector<Block> blocks;
  std::vector<Vertex> cut_vertices;  // sorted
  int component_count = 0;
};

BlockForest block_forest(const Graph& g);

/// Vertices of a cycle block in cyclic order, starting at `start` and moving
/// first to its lower-numbered cycle neighbour.
std::vector<Vertex> cycle_order(const Graph& g, const Block& b, Vertex start);

struct Ear {
  /// v1 ... vn; v1 and vn are the active pair, the rest are new vertices.
  std::vector<Vertex> path;
  Vertex a() const { return path.front(); }
  Vertex b() const { return path.back(); }
};

struct EarDecomposition {
  std::vector<Vertex> base_cycle;  // cyclic order, starts at the designated vertex if any
  std::vector<Ear> ears;           // in construction order
  std::optional<Vertex> designated;
};

struct PeelResult {
  std::optional<EarDecomposition> decomposition;
  std::string failure;  // set when decomposition is empty
  std::int64_t states_explored = 0;
};

/// Builds an ear decomposition by reverse construction: repeatedly removes a
/// maximal chain of degree-2 vertices whose two attachment vertices are
/// adjacent, until a cycle remains. Chains are tried in order of their lowest
/// internal vertex; a designated vertex is never removed, so it ends on the
/// base cycle. Dead ends are backtracked (bounded by `state_budget`).
///
/// `block` must be 2-connected; vertex ids are those of `block`.
PeelResult peel_ears(const Graph& block, std::optional<Vertex> designated = std::nullopt,
                     std::int64_t state_budget = 200000);

/// Edge set (as canonical sorted pairs) obtained by replaying the base cycle
/// and every ear.
std::vector<std::pair<Vertex, Vertex>> replay_edges(const EarDecomposition& d);

enum class ClassTag { cactus, ear_peelable, unsupported };
std::string_view class_name(ClassTag tag);

enum class BlockKind { isolated, bridge, cycle, ear_peelable, unsupported };
std::string_view block_kind_name(BlockKind kind);

struct BlockClass {
  BlockKind kind;
  int vertex_count;
  int edge_count;
};

struct GraphClass {
  ClassTag tag = ClassTag::cactus;
  std::vector<BlockClass> blocks;  // parallel to block_forest(g).blocks
};

GraphClass classify(const Graph& g);
GraphClass classify(const Graph& g, const BlockForest& forest);

}  // namespace semiproper
