#include <doctest.h>

#include <fstream>

#include "tropgon/beehive.hpp"
#include "tropgon/certificate.hpp"
#include "tropgon/divisor.hpp"
#include "tropgon/enumeration.hpp"
#include "tropgon/graph.hpp"
#include "tropgon/json_io.hpp"
#include "tropgon/moduli.hpp"
#include "tropgon/scramble.hpp"
#include "tropgon/subdivision.hpp"

using namespace tropgon;

namespace {
Polygon poly(std::vector<Point> v) { return Polygon::from_vertices(v); }
}

TEST_CASE("certificate on a genus-1 polygon") {
  auto p = d_sigma(3);
  auto ps = make_point_set(p);
  auto t = complete_to_unimodular(regular_subdivision(ps, boundary_indicator(ps)));
  auto cert = gonality_certificate(p, t);
  CHECK(cert.exact());
  CHECK(cert.lower == 2);
  CHECK(cert.upper == 2);
}

TEST_CASE("certificate concludes gon = egon on small-egon corpus polygons") {
  for (long long g : {3, 4}) {
    for (const auto& e : enumerate_maximal(g).entries) {
      if (e.inv.expected_gonality > 3) continue;
      auto t = build_beehive(e.polygon);
      auto cert = gonality_certificate(e.polygon, t);
      CHECK(cert.exact());
      CHECK(cert.lower == e.inv.expected_gonality);
    }
  }
}

TEST_CASE("crystal certificate at gonality 3") {
  // Long 3-strip rectangle, genus 28: the skeleton is far beyond the
  // exhaustion cap, so the crystal scramble supplies the lower bound.
  auto p = poly({{0, 0}, {15, 0}, {15, 3}, {0, 3}});
  REQUIRE(genus(p) == 28);
  auto t = build_beehive(p);
  auto cert = gonality_certificate(p, t);
  CHECK(cert.exact());
  CHECK(cert.lower == 3);
  CHECK(cert.upper == 3);
  CHECK(cert.lower_witness.find("crystal") != std::string::npos);
}

TEST_CASE("scrambles of order 4 exist on genus-5 and genus-6 beehive skeletons") {
  // The dim-10 genus-5 polygons and the dim-13 genus-6 polygon of expected
  // gonality 4 carry order-4 scrambles with two-vertex eggs.
  int genus5_hits = 0;
  for (const auto& e : enumerate_maximal(5).entries) {
    if (e.inv.expected_gonality != 4 || e.dim != 10) continue;
    auto skel = skeleton(dual_graph(build_beehive(e.polygon)));
    auto model = loopless_model(skel);
    auto s = search_scramble(model, 4, 2);
    if (s) {
      CHECK(scramble_order(model, *s).order >= 4);
      ++genus5_hits;
    }
  }
  CHECK(genus5_hits >= 1);
}

TEST_CASE("sandwich certificates close on the genus-5 corpus") {
  for (const auto& e : enumerate_maximal(5).entries) {
    auto t = build_beehive(e.polygon);
    auto cert = gonality_certificate(e.polygon, t);
    CHECK(cert.exact());
    CHECK(cert.lower == e.inv.expected_gonality);
  }
}

TEST_CASE("finite-graph gonality may exceed the metric bound") {
  // The vertex-supported gonality of a skeleton is an upper-bound tool
  // only: for the expected-gonality-3 genus-5 polygon it comes out at 4,
  // while the sandwich pins the metric gonality at 3.
  for (const auto& e : enumerate_maximal(5).entries) {
    if (e.inv.expected_gonality != 3) continue;
    auto skel = skeleton(dual_graph(build_beehive(e.polygon)));
    long long finite = gonality(skel);
    CHECK(finite >= 3);
    auto cert = gonality_certificate(e.polygon, build_beehive(e.polygon));
    CHECK(cert.exact());
    CHECK(cert.lower == 3);
  }
}

TEST_CASE("crystal certificate at gonality 4") {
  // Genus 66 >= 4^3 with lattice width 4: exhaustion is far out of reach and
  // the order-4 crystal scramble carries the whole lower bound.
  auto p = poly({{0, 0}, {23, 0}, {23, 4}, {0, 4}});
  REQUIRE(genus(p) == 66);
  REQUIRE(expected_gonality(p) == 4);
  auto cert = gonality_certificate(p, build_beehive(p));
  CHECK(cert.exact());
  CHECK(cert.lower == 4);
  CHECK(cert.lower_witness.find("crystal") != std::string::npos);
}

TEST_CASE("shipped scramble fixtures certify order 4") {
  // The skeleton/scramble pairs under fixtures/ are the regenerated
  // figure certificates; orders are all that matters.
  for (const char* stem : {"genus5-top", "genus6-top", "genus8-top"}) {
    std::ifstream gf(std::string(FIXTURE_DIR) + "/" + stem + "-skeleton.json");
    std::ifstream sf(std::string(FIXTURE_DIR) + "/" + stem + "-scramble.json");
    REQUIRE(gf.good());
    REQUIRE(sf.good());
    auto g = graph_from_json(Json::parse(gf));
    auto s = scramble_from_json(Json::parse(sf));
    CHECK(s.eggs.size() == 4);
    CHECK(scramble_order(g, s).order == 4);
  }
}

TEST_CASE("sandwich inequality: scramble order never beats gonality") {
  for (const auto& e : enumerate_maximal(4).entries) {
    auto skel = skeleton(dual_graph(build_beehive(e.polygon)));
    auto model = loopless_model(skel);
    long long gon = gonality(model);
    for (long long target = gon + 1; target >= 1; --target) {
      auto s = search_scramble(model, target, 2);
      if (!s) continue;
      CHECK(scramble_order(model, *s).order <= gon);
      break;
    }
  }
}
