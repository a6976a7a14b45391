#include <doctest.h>

#include "named_graphs.hpp"
#include "semiproper/report.hpp"

using namespace semiproper;

TEST_CASE("solve reports carry a result kind and omit timing by default") {
  nlohmann::json exact = to_json(chi_s_brute(named::complete(3)));
  CHECK(exact["result"] == "exact");
  CHECK(exact["value"] == 2);
  CHECK_FALSE(exact["stats"].contains("elapsed_seconds"));
  CHECK(exact["witness"]["arcs"].size() == 3);

  nlohmann::json cert = to_json(chi_s_brute(named::tight_cactus(), 2, 2));
  CHECK(cert["result"] == "certificate");
  CHECK(cert["value"].is_null());

  Budget tiny;
  tiny.nodes = 1;
  nlohmann::json inc = to_json(chi_s_labeling(named::uop(4), 3, tiny), true);
  CHECK(inc["result"] == "inconclusive");
  CHECK(inc["stats"].contains("elapsed_seconds"));
}

TEST_CASE("orient report lists class, mu, bound and trace") {
  nlohmann::json j = to_json(orient_graph(named::tight_cactus()));
  CHECK(j["class"] == "cactus");
  CHECK(j["mu"] == 3);
  CHECK(j["bound"] == 3);
  CHECK(j["trace"].size() == 3);
  CHECK(j["trace"][1]["kind"] == "bridge");
  CHECK_FALSE(to_json(orient_graph(named::tight_cactus()), false).contains("trace"));
}

TEST_CASE("generator metadata") {
  nlohmann::json j = to_json(generate({Family::uop, 2}).metadata);
  CHECK(j["family"] == "uop");
  CHECK(j["uop"]["classes"]["A"].size() == 2);
  CHECK_FALSE(j.contains("prng"));
  nlohmann::json r = to_json(generate(default_cactus_spec(4)).metadata);
  CHECK(r["prng"] == "mt19937_64");
  CHECK(r["seed"] == 4);
}

TEST_CASE("digest is FNV-1a") {
  CHECK(digest("") == "cbf29ce484222325");
  CHECK(digest("a") == "af63dc4c8601ec8c");
}
