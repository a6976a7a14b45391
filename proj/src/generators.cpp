#include "semiproper/generators.hpp"

#include <algorithm>
#include <stdexcept>

namespace semiproper {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 11> kFamilyNames{{
    {Family::uop, "uop"},
    {Family::cactus_tight, "cactus-tight"},
    {Family::random_cactus, "random-cactus"},
    {Family::random_maximal_outerplanar, "random-maximal-outerplanar"},
    {Family::cycle, "cycle"},
    {Family::path, "path"},
    {Family::complete, "complete"},
    {Family::star, "star"},
    {Family::random_graph, "random-graph"},
    {Family::book, "book"},
    {Family::random_tree, "random-tree"},
}};

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

Generated make_uop(int level) {
  require(level >= 1 && level <= 20, "uop level must be in 1..20");
  std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}};
  std::vector<int> colour{0, 1, 2};
  UopInfo info;
  info.level = level;
  info.outervertices = {0, 1, 2};
  info.outeredges = edges;
  int n = 3;
  for (int step = 2; step <= level; ++step) {
    std::vector<Edge> next_outer;
    std::vector<Vertex> next_vertices;
    for (const Edge& e : info.outeredges) {
      Vertex apex = n++;
      colour.push_back(3 - colour[e.u] - colour[e.v]);
      edges.push_back({e.u, apex});
      edges.push_back({apex, e.v});
      next_outer.push_back({e.u, apex});
      next_outer.push_back({apex, e.v});
      next_vertices.push_back(apex);
      info.ears.push_back({e.u, e.v, apex});
    }
    info.outeredges = std::move(next_outer);
    info.outervertices = std::move(next_vertices);
  }
  for (Vertex v = 0; v < n; ++v) info.classes[colour[v]].push_back(v);

  Generated out{Graph(n, std::move(edges)), {}};
  out.metadata.params = {{"level", level}};
  out.metadata.uop = std::move(info);
  return out;
}

Generated make_cactus_tight() {
  // Two triangles joined by the bridge 2-3.
  std::vector<Edge> edges{{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}};
  return {Graph(6, std::move(edges)), {}};
}

Generated make_random_cactus(const GeneratorSpec& spec) {
  require(spec.size >= 0, "random-cactus needs a non-negative block count");
  require(spec.max_cycle >= 3, "random-cactus max cycle length must be >= 3");
  require(spec.edge_prob >= 0.0 && spec.edge_prob <= 1.0, "edge probability must be in [0,1]");
  Rng rng(spec.seed);
  int n = 1;
  std::vector<Edge> edges;
  for (int b = 0; b < spec.size; ++b) {
    Vertex attach = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
    if (rng.unit() < spec.edge_prob) {
      edges.push_back({attach, n++});
      continue;
    }
    int len = rng.between(3, spec.max_cycle);
    Vertex prev = attach;
    for (int i = 1; i < len; ++i) {
      edges.push_back({prev, n});
      prev = n++;
    }
    edges.push_back({prev, attach});
  }
  Generated out{Graph(n, std::move(edges)), {}};
  out.metadata.params = {{"blocks", spec.size}, {"max_cycle", spec.max_cycle}, {"edge_prob", spec.edge_prob}};
  return out;
}

Generated make_random_maximal_outerplanar(const GeneratorSpec& spec) {
  const int n = spec.size;
  require(n >= 3, "random-maximal-outerplanar needs at least 3 vertices");
  Rng rng(spec.seed);
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  edges.push_back({0, n - 1});
  // Triangulate the convex polygon 0..n-1: each interval (i, j) with base
  // edge ij receives a random apex k, splitting into (i, k) and (k, j).
  std::vector<std::pair<int, int>> stack{{0, n - 1}};
  while (!stack.empty()) {
    auto [i, j] = stack.back();
    stack.pop_back();
    if (j - i < 2) continue;
    int k = rng.between(i + 1, j - 1);
    if (k - i >= 2) edges.push_back({i, k});
    if (j - k >= 2) edges.push_back({k, j});
    stack.push_back({k, j});
    stack.push_back({i, k});
  }
  std::vector<Vertex> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(static_cast<std::uint64_t>(i) + 1)]);
  for (auto& e : edges) e = {perm[e.u], perm[e.v]};
  Generated out{Graph(n, std::move(edges)), {}};
  out.metadata.params = {{"n", n}};
  return out;
}

Generated make_random_graph(const GeneratorSpec& spec) {
  const int n = spec.size;
  require(n >= 1, "random-graph needs at least one vertex");
  const std::int64_t max_m = static_cast<std::int64_t>(n) * (n - 1) / 2;
  require(spec.edges >= 0 && spec.edges <= max_m, "random-graph edge count out of range");
  Rng rng(spec.seed);
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
  for (int i = 0; i < spec.edges; ++i) {
    auto j = i + static_cast<int>(rng.below(pairs.size() - i));
    std::swap(pairs[i], pairs[j]);
  }
  pairs.resize(spec.edges);
  Generated out{Graph(n, std::move(pairs)), {}};
  out.metadata.params = {{"n", n}, {"m", spec.edges}};
  return out;
}

Generated make_random_tree(const GeneratorSpec& spec) {
  const int n = spec.size;
  require(n >= 1, "random-tree needs at least one vertex");
  Rng rng(spec.seed);
  std::vector<Edge> edges;
  if (n == 2) edges.push_back({0, 1});
  if (n > 2) {
    std::vector<int> prufer(n - 2);
    for (auto& x : prufer) x = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    std::vector<int> degree(n, 1);
    for (int x : prufer) ++degree[x];
    for (int x : prufer) {
      int leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      edges.push_back({leaf, x});
      --degree[leaf];
      --degree[x];
    }
    int a = -1;
    for (int v = 0; v < n; ++v)
      if (degree[v] == 1) {
        if (a < 0) {
          a = v;
        } else {
          edges.push_back({a, v});
          break;
        }
      }
  }
  Generated out{Graph(n, std::move(edges)), {}};
  out.metadata.params = {{"n", n}};
  return out;
}

}  // namespace

std::string_view family_name(Family f) {
  for (auto [fam, name] : kFamilyNames)
    if (fam == f) return name;
  return "unknown";
}

std::optional<Family> family_from_name(std::string_view name) {
  for (auto [fam, fam_name] : kFamilyNames) {
    if (fam_name == name) return fam;
    // Accept snake_case spellings as well.
    std::string alt(fam_name);
    std::replace(alt.begin(), alt.end(), '-', '_');
    if (alt == name) return fam;
  }
  return std::nullopt;
}

GeneratorSpec default_cactus_spec(std::uint64_t seed) {
  GeneratorSpec spec;
  spec.family = Family::random_cactus;
  spec.size = 20;
  spec.max_cycle = 9;
  spec.edge_prob = 0.4;
  spec.seed = seed;
  return spec;
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below(0)");
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    std::uint64_t x = next();
    if (x >= threshold) return x % bound;
  }
}

Generated generate(const GeneratorSpec& spec) {
  Generated out;
  bool seeded = false;
  switch (spec.family) {
    case Family::uop:
      out = make_uop(spec.size);
      break;
    case Family::cactus_tight:
      out = make_cactus_tight();
      break;
    case Family::random_cactus:
      out = make_random_cactus(spec);
      seeded = true;
      break;
    case Family::random_maximal_outerplanar:
      out = make_random_maximal_outerplanar(spec);
      seeded = true;
      break;
    case Family::cycle: {
      require(spec.size >= 3, "cycle needs at least 3 vertices");
      std::vector<Edge> edges;
      for (int i = 0; i < spec.size; ++i) edges.push_back({i, (i + 1) % spec.size});
      out.graph = Graph(spec.size, std::move(edges));
      out.metadata.params = {{"n", spec.size}};
      break;
    }
    case Family::path: {
      require(spec.size >= 1, "path needs at least one vertex");
      std::vector<Edge> edges;
      for (int i = 0; i + 1 < spec.size; ++i) edges.push_back({i, i + 1});
      out.graph = Graph(spec.size, std::move(edges));
      out.metadata.params = {{"n", spec.size}};
      break;
    }
    case Family::complete: {
      require(spec.size >= 1, "complete graph needs at least one vertex");
      std::vector<Edge> edges;
      for (int u = 0; u < spec.size; ++u)
        for (int v = u + 1; v < spec.size; ++v) edges.push_back({u, v});
      out.graph = Graph(spec.size, std::move(edges));
      out.metadata.params = {{"n", spec.size}};
      break;
    }
    case Family::star: {
      require(spec.size >= 0, "star needs a non-negative leaf count");
      std::vector<Edge> edges;
      for (int i = 1; i <= spec.size; ++i) edges.push_back({0, i});
      out.graph = Graph(spec.size + 1, std::move(edges));
      out.metadata.params = {{"leaves", spec.size}};
      break;
    }
    case Family::random_graph:
      out = make_random_graph(spec);
      seeded = true;
      break;
    case Family::book: {
      // Triangle 0-1-2 plus p-1 further 2-length ears on the edge 0-1.
      require(spec.size >= 1, "book needs at least one page");
      std::vector<Edge> edges{{0, 1}, {0, 2}, {1, 2}};
      for (int i = 1; i < spec.size; ++i) {
        edges.push_back({0, 2 + i});
        edges.push_back({1, 2 + i});
      }
      out.graph = Graph(spec.size + 2, std::move(edges));
      out.metadata.params = {{"pages", spec.size}};
      break;
    }
    case Family::random_tree:
      out = make_random_tree(spec);
      seeded = true;
      break;
  }
  out.metadata.family = std::string(family_name(spec.family));
  if (seeded) {
    out.metadata.prng = std::string(Rng::kName);
    out.metadata.seed = spec.seed;
  }
  return out;
}

}  // namespace semiproper
