#include <doctest.h>

#include "helpers.hpp"
#include "tropgon/beehive.hpp"
#include "tropgon/json_io.hpp"

using namespace tropgon;

TEST_CASE("polygon JSON round trip") {
  auto p = d_upsilon(2);
  auto j = polygon_to_json(p);
  CHECK(polygon_from_json(j) == p);

  // Readers accept any vertex order and re-normalize.
  Json shuffled{{"vertices", {{0, 2}, {-2, -2}, {2, 0}}}};
  CHECK(polygon_from_json(shuffled) == p);

  CHECK_THROWS(polygon_from_json(Json{{"vertices", "zap"}}));
  CHECK_THROWS(polygon_from_json(Json{{"points", Json::array()}}));
}

TEST_CASE("graph and scramble JSON") {
  auto g = cube_graph();
  auto j = graph_to_json(g);
  auto g2 = graph_from_json(j);
  CHECK(g2.n == g.n);
  CHECK(g2.edges == g.edges);
  CHECK_THROWS(graph_from_json(Json{{"n", 2}, {"edges", {{0, 5}}}}));

  Scramble s{{{0, 4}, {1, 5}}};
  auto s2 = scramble_from_json(scramble_to_json(s));
  CHECK(s2.eggs == s.eggs);
}

TEST_CASE("triangulation JSON round trip") {
  auto t = build_beehive(d_sigma(4));
  auto j = triangulation_to_json(t);
  auto t2 = triangulation_from_json(j);
  CHECK(t2.ps.points == t.ps.points);
  CHECK(t2.cells == t.cells);
}

TEST_CASE("property: random polygons survive the JSON round trip") {
  testutil::Rng rng(71);
  for (int i = 0; i < 40; ++i) {
    auto p = testutil::random_polygon(rng, 7, 6);
    CHECK(polygon_from_json(polygon_to_json(p)) == p);
  }
}

TEST_CASE("rationals and serialized reports") {
  CHECK(rat_to_json(Rat(-3, 2)) == Json{{"num", -3}, {"den", 2}});
  auto inv = invariants(d_sigma(4));
  auto j = invariants_to_json(inv);
  CHECK(j["genus"] == 3);
  CHECK(j["expected_gonality"] == 3);
  CHECK(j["maximal"] == true);
}

TEST_CASE("DOT export shape") {
  auto dot = skeleton_to_dot(cycle_graph(3));
  CHECK(dot.find("graph skeleton {") == 0);
  CHECK(dot.find("v0 -- v1") != std::string::npos);
}
