#pragma once

#include <algorithm>
#include <vector>

#include "semiproper/generators.hpp"
#include "semiproper/graph.hpp"

namespace named {

using semiproper::Edge;
using semiproper::Graph;

inline Graph complete(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  return Graph(n, e);
}

inline Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return Graph(n, e);
}

inline Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph(n, e);
}

inline Graph star(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.push_back({0, i});
  return Graph(leaves + 1, e);
}

inline Graph tight_cactus() { return Graph(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}}); }

inline Graph bowtie() { return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}}); }

inline Graph k23() { return Graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}); }

/// Triangle 0,1,2 with a 2-ear on each edge (apexes 3, 4, 5).
inline Graph triangle_with_ears() {
  return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}, {0, 5}, {2, 5}});
}

inline Graph generate(semiproper::Family f, int size, std::uint64_t seed = 0, int edges = 0) {
  semiproper::GeneratorSpec s;
  s.family = f;
  s.size = size;
  s.seed = seed;
  s.edges = edges;
  return semiproper::generate(s).graph;
}

inline Graph uop(int k) { return generate(semiproper::Family::uop, k); }

/// Seeded G(n, m) with n and m drawn from the given ranges.
inline Graph random_small(std::uint64_t seed, int max_n, int max_m) {
  semiproper::Rng rng(seed ^ 0x5eedULL);
  int n = rng.between(2, max_n);
  int m = rng.between(1, std::min(max_m, n * (n - 1) / 2));
  return generate(semiproper::Family::random_graph, n, seed, m);
}

}  // namespace named
