#include <doctest.h>

#include <map>
#include <set>

#include "named_graphs.hpp"
#include "semiproper/decompose.hpp"

using namespace semiproper;

namespace {

std::set<std::pair<Vertex, Vertex>> edge_set(const Graph& g) {
  std::set<std::pair<Vertex, Vertex>> out;
  for (const Edge& e : g.edges()) out.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
  return out;
}

// Structural checks shared by the property tests below.
void check_forest(const Graph& g) {
  BlockForest f = block_forest(g);
  std::vector<int> owner(g.edge_count(), 0);
  for (const Block& b : f.blocks)
    for (EdgeId e : b.edges) ++owner[e];
  for (int c : owner) CHECK(c == 1);

  // Component of each vertex, by union-find on the edges.
  std::vector<int> parent(g.vertex_count());
  for (int i = 0; i < g.vertex_count(); ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : g.edges()) parent[find(e.u)] = find(e.v);

  std::map<int, int> comp_vertices, comp_sum;
  for (int v = 0; v < g.vertex_count(); ++v) ++comp_vertices[find(v)];
  std::map<int, std::set<Vertex>> seen;
  for (const Block& b : f.blocks) {
    int c = find(b.vertices.front());
    comp_sum[c] += static_cast<int>(b.vertices.size()) - 1;
    if (b.root) {
      CHECK(std::binary_search(f.cut_vertices.begin(), f.cut_vertices.end(), *b.root));
      CHECK(seen[c].count(*b.root));
      CHECK(std::binary_search(b.vertices.begin(), b.vertices.end(), *b.root));
    } else {
      CHECK(seen[c].empty());
    }
    // Each new block of a component touches what came before in exactly its root.
    if (!seen[c].empty()) {
      int shared = 0;
      for (Vertex v : b.vertices) shared += static_cast<int>(seen[c].count(v));
      CHECK(shared == 1);
    }
    seen[c].insert(b.vertices.begin(), b.vertices.end());
  }
  CHECK(f.component_count == static_cast<int>(comp_vertices.size()));
  // Each block after the first adds |B| - 1 new vertices.
  for (auto [c, nv] : comp_vertices) CHECK(comp_sum[c] == nv - 1);
}

void check_decomposition(const Graph& block, const EarDecomposition& d, std::optional<Vertex> s) {
  auto replay = replay_edges(d);
  std::set<std::pair<Vertex, Vertex>> replayed(replay.begin(), replay.end());
  CHECK(replayed.size() == replay.size());
  CHECK(replayed == edge_set(block));

  std::set<Vertex> have(d.base_cycle.begin(), d.base_cycle.end());
  CHECK(d.base_cycle.size() >= 3);
  for (const Ear& ear : d.ears) {
    CHECK(ear.path.size() >= 3);
    CHECK(have.count(ear.a()));
    CHECK(have.count(ear.b()));
    CHECK(block.adjacent(ear.a(), ear.b()));
    for (std::size_t i = 1; i + 1 < ear.path.size(); ++i) {
      CHECK_FALSE(have.count(ear.path[i]));
      have.insert(ear.path[i]);
    }
  }
  CHECK(static_cast<int>(have.size()) == block.vertex_count());
  if (s) {
    CHECK(d.designated == s);
    CHECK(d.base_cycle.front() == *s);
  }
}

}  // namespace

TEST_CASE("block_forest examples") {
  BlockForest f = block_forest(named::tight_cactus());
  REQUIRE(f.blocks.size() == 3);
  CHECK(f.blocks[0].vertices == std::vector<Vertex>{0, 1, 2});
  CHECK(f.blocks[1].vertices == std::vector<Vertex>{2, 3});
  CHECK(f.blocks[2].vertices == std::vector<Vertex>{3, 4, 5});
  CHECK(f.cut_vertices == std::vector<Vertex>{2, 3});
  CHECK_FALSE(f.blocks[0].root);
  CHECK(f.blocks[1].root == 2);
  CHECK(f.blocks[2].root == 3);

  BlockForest c = block_forest(named::cycle(7));
  CHECK(c.blocks.size() == 1);
  CHECK(c.blocks[0].is_cycle());
  CHECK(c.cut_vertices.empty());

  BlockForest p = block_forest(named::path(4));
  CHECK(p.blocks.size() == 3);
  for (const Block& b : p.blocks) CHECK(b.is_bridge());
  CHECK(p.cut_vertices == std::vector<Vertex>{1, 2});
}

TEST_CASE("block_forest handles isolated vertices and several components") {
  Graph g(7, {{0, 1}, {1, 2}, {0, 2}, {4, 5}});
  BlockForest f = block_forest(g);
  CHECK(f.component_count == 4);  // {0,1,2}, {3}, {4,5}, {6}
  int isolated = 0;
  for (const Block& b : f.blocks) isolated += b.is_isolated();
  CHECK(isolated == 2);
  check_forest(g);
}

TEST_CASE("block_forest structural properties on generated graphs") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    check_forest(generate(default_cactus_spec(seed)).graph);
    check_forest(named::random_small(seed, 14, 22));
    check_forest(named::generate(Family::random_tree, 2 + static_cast<int>(seed % 15), seed));
  }
}

TEST_CASE("cycle_order walks the cycle from the start vertex") {
  Graph g = named::cycle(5);
  BlockForest f = block_forest(g);
  CHECK(cycle_order(g, f.blocks[0], 2) == std::vector<Vertex>{2, 1, 0, 4, 3});
}

TEST_CASE("peel_ears on the triangle with three 2-ears") {
  Graph g = named::triangle_with_ears();
  PeelResult r = peel_ears(g);
  REQUIRE(r.decomposition);
  const EarDecomposition& d = *r.decomposition;
  CHECK(d.base_cycle.size() == 3);
  CHECK(d.ears.size() == 3);
  for (const Ear& e : d.ears) CHECK(e.path.size() == 3);
  check_decomposition(g, d, std::nullopt);
}

TEST_CASE("peel_ears failures") {
  PeelResult k4 = peel_ears(named::complete(4));
  CHECK_FALSE(k4.decomposition);
  CHECK_FALSE(k4.failure.empty());
  CHECK_FALSE(peel_ears(named::k23()).decomposition);
}

TEST_CASE("peel_ears keeps the designated vertex on the base cycle") {
  Graph g = named::triangle_with_ears();
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    PeelResult r = peel_ears(g, s);
    REQUIRE(r.decomposition);
    check_decomposition(g, *r.decomposition, s);
  }
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Graph o = named::generate(Family::random_maximal_outerplanar, 3 + static_cast<int>(seed % 25), seed);
    Vertex s = static_cast<Vertex>(seed % o.vertex_count());
    PeelResult r = peel_ears(o, s);
    REQUIRE(r.decomposition);
    check_decomposition(o, *r.decomposition, s);
  }
}

TEST_CASE("peel_ears replays uop graphs") {
  for (int k = 1; k <= 6; ++k) {
    Generated g = generate({Family::uop, k});
    PeelResult r = peel_ears(g.graph, 0);
    REQUIRE(r.decomposition);
    check_decomposition(g.graph, *r.decomposition, 0);
  }
}

TEST_CASE("peel_ears is deterministic") {
  Graph o = named::generate(Family::random_maximal_outerplanar, 30, 5);
  PeelResult a = peel_ears(o, 3), b = peel_ears(o, 3);
  REQUIRE(a.decomposition);
  CHECK(a.decomposition->base_cycle == b.decomposition->base_cycle);
  REQUIRE(a.decomposition->ears.size() == b.decomposition->ears.size());
  for (std::size_t i = 0; i < a.decomposition->ears.size(); ++i)
    CHECK(a.decomposition->ears[i].path == b.decomposition->ears[i].path);
}

TEST_CASE("classify examples") {
  CHECK(classify(named::tight_cactus()).tag == ClassTag::cactus);
  CHECK(classify(named::uop(4)).tag == ClassTag::ear_peelable);
  CHECK(classify(named::generate(Family::book, 3)).tag == ClassTag::ear_peelable);
  CHECK(classify(named::complete(4)).tag == ClassTag::unsupported);
  CHECK(classify(named::k23()).tag == ClassTag::unsupported);
  CHECK(classify(named::path(5)).tag == ClassTag::cactus);
  CHECK(classify(Graph(3, {})).tag == ClassTag::cactus);

  GraphClass c = classify(named::bowtie());
  REQUIRE(c.blocks.size() == 2);
  CHECK(c.blocks[0].kind == BlockKind::cycle);
  CHECK(c.blocks[0].vertex_count == 3);
}

TEST_CASE("classify is cactus exactly when every block is an edge or a cycle") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Graph g = named::random_small(seed, 10, 14);
    BlockForest f = block_forest(g);
    bool all_simple = true;
    for (const Block& b : f.blocks) all_simple &= b.is_isolated() || b.is_bridge() || b.is_cycle();
    CHECK((classify(g).tag == ClassTag::cactus) == all_simple);
  }
}
