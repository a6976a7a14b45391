#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "semiproper/graph.hpp"

namespace semiproper {

enum class Family {
  uop,
  cactus_tight,
  random_cactus,
  random_maximal_outerplanar,
  cycle,
  path,
  complete,
  star,
  random_graph,
  book,
  random_tree,
};

/// CLI spelling, e.g. "random-cactus".
std::string_view family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);

struct GeneratorSpec {
  Family family = Family::cycle;
  /// Primary size: UOP level, vertex count (cycle, path, complete,
  /// random-maximal-outerplanar, random-graph, random-tree), leaf count (star),
  /// page count (book) or block count (random-cactus).
  int size = 3;
  int edges = 0;         // random-graph only
  int max_cycle = 9;     // random-cactus only
  double edge_prob = 0.4;  // random-cactus only
  std::uint64_t seed = 0;
};

/// Default random-cactus spec: 20 blocks, cycles up to length 9, bridges with
/// probability 0.4.
GeneratorSpec default_cactus_spec(std::uint64_t seed);

struct UopEar {
  Vertex a;
  Vertex b;
  Vertex apex;
};

struct UopInfo {
  int level = 1;
  std::vector<Vertex> outervertices;
  std::vector<Edge> outeredges;
  /// Proper 3-colouring A, B, C; every triangle meets each class once.
  std::array<std::vector<Vertex>, 3> classes;
  /// Construction order of the 2-length ears.
  std::vector<UopEar> ears;
};

struct GeneratorMetadata {
  std::string family;
  std::string prng;  // empty for deterministic families
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, double>> params;
  std::optional<UopInfo> uop;
};

struct Generated {
  Graph graph;
  GeneratorMetadata metadata;
};

/// Same spec, same graph, bit for bit. Throws std::invalid_argument on bad
/// parameters.
Generated generate(const GeneratorSpec& spec);

/// Seeded 64-bit source used by every random family. The raw engine is
/// std::mt19937_64 (fully specified by the standard); bounded draws use
/// rejection sampling rather than std distributions, whose output is
/// implementation-defined.
class Rng {
 public:
  static constexpr std::string_view kName = "mt19937_64";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1)); }
  /// Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace semiproper
