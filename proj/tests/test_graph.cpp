#include <doctest.h>

#include <numeric>

#include "named_graphs.hpp"
#include "semiproper/generators.hpp"
#include "semiproper/graph.hpp"
#include "semiproper/validate.hpp"

using namespace semiproper;

TEST_CASE("parse_graph examples") {
  Graph tri = parse_graph("3 3\n0 1\n0 2\n1 2\n");
  CHECK(tri.vertex_count() == 3);
  CHECK(tri.edge_count() == 3);
  CHECK(tri.adjacent(0, 2));

  Graph single = parse_graph("1 0\n");
  CHECK(single.vertex_count() == 1);
  CHECK(single.edge_count() == 0);

  Graph tight = parse_graph("6 7\n0 1\n0 2\n1 2\n2 3\n3 4\n3 5\n4 5\n");
  CHECK(tight == named::tight_cactus());
}

TEST_CASE("parse_graph keeps edge order and reports line numbers") {
  Graph g = parse_graph("3 2\n2 1\n0 2\n");
  CHECK(g.edge(0) == Edge{2, 1});
  CHECK(g.find_edge(1, 2) == 0);
  CHECK(g.find_edge(0, 1) == -1);

  auto line_of = [](const char* text) {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("") == 1);
  CHECK(line_of("3\n") == 1);
  CHECK(line_of("x 1\n0 1\n") == 1);
  CHECK(line_of("3 2\n0 1\n") == 3);      // missing edge line
  CHECK(line_of("3 2\n0 1\n0 3\n") == 3);  // endpoint out of range
  CHECK(line_of("3 2\n0 1\n1 1\n") == 3);  // self-loop
  CHECK(line_of("3 2\n0 1\n1 0\n") == 3);  // duplicate
  CHECK(line_of("3 1\n0 1\n1 2\n") == 3);  // trailing data
  CHECK(line_of("3 1\n0 -1\n") == 2);
}

TEST_CASE("Graph constructor rejects non-simple input") {
  CHECK_THROWS_AS(Graph(2, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), std::invalid_argument);
}

TEST_CASE("serialize_graph examples") {
  CHECK(serialize_graph(named::complete(3)) == "3 3\n0 1\n0 2\n1 2\n");
  CHECK(serialize_graph(Graph(1, {})) == "1 0\n");
  CHECK(serialize_graph(named::tight_cactus()) == "6 7\n0 1\n0 2\n1 2\n2 3\n3 4\n3 5\n4 5\n");
  CHECK(serialize_graph(Graph(3, {{2, 1}, {1, 0}})) == "3 2\n0 1\n1 2\n");
}

TEST_CASE("parse and serialize round-trip on generated graphs") {
  const Family families[] = {Family::uop, Family::random_cactus, Family::random_maximal_outerplanar,
                             Family::random_graph, Family::random_tree, Family::book};
  for (Family f : families)
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      GeneratorSpec s;
      s.family = f;
      s.seed = seed;
      s.size = f == Family::uop ? 1 + static_cast<int>(seed % 6) : 3 + static_cast<int>(seed % 30);
      if (f == Family::random_graph) s.edges = static_cast<int>(seed % 3);
      Graph g = generate(s).graph;
      std::string text = serialize_graph(g);
      Graph back = parse_graph(text);
      CHECK(back == canonical(g));
      CHECK(serialize_graph(back) == text);
    }
}

TEST_CASE("max_degree examples") {
  CHECK(max_degree(named::complete(3)) == 2);
  CHECK(max_degree(named::tight_cactus()) == 3);
  CHECK(max_degree(named::star(4)) == 4);
  CHECK(max_degree(Graph(1, {})) == 0);
  CHECK_THROWS_AS(max_degree(Graph(0, {})), std::invalid_argument);
}

TEST_CASE("Orientation derived fields match a recomputation") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Graph g = named::random_small(seed, 12, 30);
    Rng rng(seed);
    std::vector<Arc> arcs;
    for (const Edge& e : g.edges()) {
      bool flip = rng.below(2) == 1;
      arcs.push_back({flip ? e.v : e.u, flip ? e.u : e.v, static_cast<std::int64_t>(1 + rng.below(3))});
    }
    Orientation o(g, arcs);
    std::vector<std::int64_t> expect(g.vertex_count(), 0);
    std::int64_t total = 0;
    for (const Arc& a : arcs) {
      expect[a.head] += a.weight;
      total += a.weight;
    }
    CHECK(o.in_weights() == expect);
    CHECK(std::accumulate(expect.begin(), expect.end(), std::int64_t{0}) == total);
    CHECK(o.total_weight() == total);
    CHECK(o.mu() == *std::max_element(expect.begin(), expect.end()));
  }
}

TEST_CASE("Orientation rejects arcs that do not match the graph") {
  Graph g = named::path(3);
  CHECK_THROWS_AS(Orientation(g, {{0, 1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Orientation(g, {{0, 2, 1}, {1, 2, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Orientation(g, {{0, 1, 0}, {1, 2, 1}}), std::invalid_argument);
  CHECK_NOTHROW(Orientation(g, {{1, 0, 1}, {2, 1, 2}}));
}

TEST_CASE("orientation text round-trip") {
  Graph g = named::tight_cactus();
  Orientation o(g, {{0, 1, 1}, {0, 2, 2}, {1, 2, 1}, {2, 3, 2}, {3, 4, 1}, {3, 5, 1}, {5, 4, 1}});
  std::string text = serialize_orientation(o);
  CHECK(text.substr(0, 4) == "6 7\n");
  CHECK(parse_orientation(text, g) == o);
  CHECK_THROWS_AS(parse_orientation("6 7\n0 1 1\n", g), ParseError);
  CHECK_THROWS_AS(parse_orientation("5 7\n", g), ParseError);
}

TEST_CASE("validate examples") {
  Graph tri = named::complete(3);
  // Directed 3-cycle with unit weights: every in-weight is 1.
  Verdict v = validate(tri, std::vector<Arc>{{0, 1, 1}, {2, 0, 1}, {1, 2, 1}});
  CHECK_FALSE(v.accepted);
  CHECK(v.violations.size() == 3);

  Orientation ok(tri, {{0, 1, 1}, {0, 2, 2}, {1, 2, 1}});
  CHECK(validate(tri, ok, 3, 2).accepted);
  CHECK_FALSE(validate(tri, ok, 2).accepted);
  CHECK_FALSE(validate(tri, ok, std::nullopt, 1).accepted);
}

TEST_CASE("validate reports structural problems") {
  Graph g = named::path(3);
  CHECK_FALSE(validate(g, std::vector<Arc>{{0, 1, 1}}).accepted);                       // missing edge
  CHECK_FALSE(validate(g, std::vector<Arc>{{0, 1, 1}, {0, 2, 1}}).accepted);            // non-edge
  CHECK_FALSE(validate(g, std::vector<Arc>{{0, 1, 1}, {1, 0, 1}}).accepted);            // edge twice
  CHECK_FALSE(validate(g, std::vector<Arc>{{1, 0, 1}, {1, 2, -1}}).accepted);           // weight
  std::vector<std::int64_t> wrong{1, 0, 0};
  Verdict v = validate(g, std::vector<Arc>{{1, 0, 1}, {1, 2, 1}}, wrong);
  CHECK_FALSE(v.accepted);
  CHECK(v.in_weights == std::vector<std::int64_t>{1, 0, 1});
  CHECK(validate(g, std::vector<Arc>{{1, 0, 1}, {1, 2, 1}}).accepted);
}
