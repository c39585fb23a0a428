#include <doctest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "tropgon/beehive.hpp"
#include "tropgon/divisor.hpp"
#include "tropgon/graph.hpp"
#include "tropgon/scramble.hpp"
#include "tropgon/subdivision.hpp"

using namespace tropgon;

namespace {

Polygon poly(std::vector<Point> v) { return Polygon::from_vertices(v); }

MultiGraph random_connected_graph(testutil::Rng& rng, int n, int extra) {
  MultiGraph g;
  g.n = n;
  for (int v = 1; v < n; ++v)
    g.edges.push_back({(int)rng.below(v), v});
  for (int e = 0; e < extra; ++e) {
    int a = (int)rng.below(n), b = (int)rng.below(n);
    if (a == b) continue;
    g.edges.push_back({std::min(a, b), std::max(a, b)});
  }
  return g;
}

// Definition-level check of q-reducedness on small graphs: effective away
// from q, and no nonempty subset of V \ {q} can fire without going broke.
bool q_reduced_oracle(const MultiGraph& g, const Divisor& d, int q) {
  for (int v = 0; v < g.n; ++v)
    if (v != q && d.chips[v] < 0) return false;
  for (unsigned long mask = 1; mask < (1ul << g.n); ++mask) {
    if ((mask >> q) & 1ul) continue;
    bool fireable = true;
    for (int v = 0; v < g.n && fireable; ++v) {
      if (!((mask >> v) & 1ul)) continue;
      long long out = 0;
      for (const auto& [a, b] : g.edges) {
        if (a == b) continue;
        if (a == v && !((mask >> b) & 1ul)) ++out;
        if (b == v && !((mask >> a) & 1ul)) ++out;
      }
      if (d.chips[v] < out) fireable = false;
    }
    if (fireable) return false;
  }
  return true;
}

Divisor fire_vector(const MultiGraph& g, Divisor d, const std::vector<long long>& f) {
  for (const auto& [a, b] : g.edges) {
    if (a == b) continue;
    d.chips[a] += f[b] - f[a];
    d.chips[b] += f[a] - f[b];
  }
  return d;
}

}  // namespace

TEST_CASE("multigraph basics") {
  auto cube = cube_graph();
  CHECK(cube.n == 8);
  CHECK(cube.edges.size() == 12);
  CHECK(cube.betti() == 5);
  CHECK(cube.trivalent());
  CHECK(cube.connected());

  auto c5 = cycle_graph(5);
  CHECK(c5.betti() == 1);
  CHECK(!path_graph(4).trivalent());

  MultiGraph loop;
  loop.n = 1;
  loop.edges = {{0, 0}};
  CHECK(loop.betti() == 1);
  auto model = loopless_model(loop);
  CHECK(model.n == 2);
  CHECK(model.edges.size() == 2);
}

TEST_CASE("dual graph and skeleton") {
  // Any unimodular triangulation of the genus-3 triangle gives a trivalent
  // skeleton of Betti number 3.
  auto t = build_beehive(d_sigma(4));
  auto dual = dual_graph(t);
  CHECK(dual.n == (int)t.cells.size());
  auto skel = skeleton(dual);
  CHECK(skel.betti() == 3);
  CHECK(skel.trivalent());

  // Genus-1 polygon: the skeleton collapses to a single loop.
  auto p1 = d_sigma(3);
  auto ps = make_point_set(p1);
  auto t1 = complete_to_unimodular(regular_subdivision(ps, boundary_indicator(ps)));
  auto skel1 = skeleton(dual_graph(t1));
  CHECK(skel1.n == 1);
  CHECK(skel1.edges.size() == 1);
  CHECK(skel1.edges[0] == std::make_pair(0, 0));
  CHECK(skel1.betti() == 1);

  // A tree prunes to a point.
  auto skel_tree = skeleton(path_graph(6));
  CHECK(skel_tree.n == 1);
  CHECK(skel_tree.edges.empty());

  // A cycle suppresses to the loop normal form.
  auto skel_cycle = skeleton(cycle_graph(7));
  CHECK(skel_cycle.n == 1);
  CHECK(skel_cycle.edges.size() == 1);

  // Betti number is preserved by skeletonization.
  testutil::Rng rng(17);
  for (int i = 0; i < 20; ++i) {
    auto g = random_connected_graph(rng, 8, 6);
    CHECK(skeleton(g).betti() == g.betti());
  }
}

TEST_CASE("genus-5 worked example reproduces the cube skeleton") {
  // The beehive of this genus-5 maximal polygon is dual to a tropical curve
  // whose skeleton is the metric cube graph.
  auto p = poly({{-2, 2}, {0, 0}, {2, 0}, {0, 4}});
  REQUIRE(genus(p) == 5);
  auto skel = skeleton(dual_graph(build_beehive(p)));
  CHECK(graphs_isomorphic(skel, cube_graph()));
}

TEST_CASE("graph isomorphism helper") {
  CHECK(graphs_isomorphic(cube_graph(), cube_graph()));
  MultiGraph relabeled;
  relabeled.n = 8;
  for (auto [a, b] : cube_graph().edges)
    relabeled.edges.push_back({7 - a, 7 - b});
  CHECK(graphs_isomorphic(cube_graph(), relabeled));
  CHECK(!graphs_isomorphic(cube_graph(), cycle_graph(8)));
}

TEST_CASE("reduced divisors") {
  // Triangle graph: two chips at one vertex keep their degree.
  MultiGraph tri;
  tri.n = 3;
  tri.edges = {{0, 1}, {1, 2}, {0, 2}};
  Divisor d{{2, 0, 0}};
  auto r = reduce_divisor(tri, d, 1);
  CHECK(r.degree() == 2);
  CHECK(q_reduced_oracle(tri, r, 1));

  // Reducing an already reduced divisor changes nothing.
  CHECK(reduce_divisor(tri, r, 1).chips == r.chips);

  MultiGraph disconnected;
  disconnected.n = 2;
  CHECK_THROWS(reduce_divisor(disconnected, Divisor{{0, 0}}, 0));
}

TEST_CASE("reduction properties on random graphs") {
  testutil::Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = random_connected_graph(rng, 2 + (int)rng.below(4), (int)rng.below(4));
    Divisor d;
    d.chips.resize(g.n);
    for (auto& c : d.chips) c = rng.range(-3, 4);
    int q = (int)rng.below(g.n);
    auto r = reduce_divisor(g, d, q);
    CHECK(r.degree() == d.degree());
    CHECK(q_reduced_oracle(g, r, q));
    CHECK(reduce_divisor(g, r, q).chips == r.chips);

    // Equivalent divisors reduce to the same representative.
    std::vector<long long> f(g.n);
    for (auto& v : f) v = rng.range(-2, 2);
    f[q] = 0;
    auto d2 = fire_vector(g, d, f);
    CHECK(reduce_divisor(g, d2, q).chips == r.chips);
  }
}

TEST_CASE("positive rank") {
  auto cube = cube_graph();
  // One chip on each vertex of even weight (an independent set of size 4).
  Divisor d{{0, 0, 0, 0, 0, 0, 0, 0}};
  for (int v : {0, 3, 5, 6}) d.chips[v] = 1;
  CHECK(has_positive_rank(cube, d));

  // A single chip on a cycle has rank zero.
  Divisor single{{1, 0, 0, 0, 0}};
  CHECK(!has_positive_rank(cycle_graph(5), single));

  Divisor zero{{0, 0, 0, 0, 0}};
  CHECK(!has_positive_rank(cycle_graph(5), zero));
}

TEST_CASE("gonality fixtures") {
  CHECK(gonality(path_graph(6)) == 1);
  CHECK(gonality(path_graph(2)) == 1);
  for (int n = 3; n <= 10; ++n) CHECK(gonality(cycle_graph(n)) == 2);
  CHECK(gonality(cube_graph()) == 4);

  MultiGraph big;
  big.n = 20;
  for (int v = 0; v + 1 < 20; ++v) big.edges.push_back({v, v + 1});
  CHECK_THROWS(gonality(big));
}

TEST_CASE("scramble order on the cube") {
  // Four pillar eggs: the matching between the two antipodal 4-cycles.
  Scramble s;
  s.eggs = {{0, 4}, {1, 5}, {2, 6}, {3, 7}};
  auto ord = scramble_order(cube_graph(), s);
  CHECK(ord.hitting == 4);
  REQUIRE(ord.egg_cut.has_value());
  CHECK(*ord.egg_cut == 4);
  CHECK(ord.order == 4);

  // One egg covering everything: hitting number 1, no egg-cut.
  Scramble whole;
  whole.eggs = {{0, 1, 2, 3, 4, 5, 6, 7}};
  auto ow = scramble_order(cube_graph(), whole);
  CHECK(ow.hitting == 1);
  CHECK(!ow.egg_cut.has_value());
  CHECK(ow.order == 1);

  Scramble bad;
  bad.eggs = {{0, 7}};  // not connected
  CHECK_THROWS(scramble_order(cube_graph(), bad));
}

TEST_CASE("egg-cut max-flow agrees with the bipartition scan") {
  testutil::Rng rng(57);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = random_connected_graph(rng, 5 + (int)rng.below(7), (int)rng.below(8));
    // Two random disjoint connected eggs: pick two distinct edges.
    if (g.edges.size() < 2) continue;
    auto e1 = g.edges[rng.below(g.edges.size())];
    auto e2 = g.edges[rng.below(g.edges.size())];
    std::set<int> a{e1.first, e1.second}, b{e2.first, e2.second};
    bool disjoint = true;
    for (int v : b)
      if (a.count(v)) disjoint = false;
    if (!disjoint) continue;
    Scramble s;
    s.eggs = {{a.begin(), a.end()}, {b.begin(), b.end()}};
    auto ord = scramble_order(g, s);
    auto brute = egg_cut_bruteforce(g, s);
    REQUIRE(brute.has_value());
    REQUIRE(ord.egg_cut.has_value());
    CHECK(*ord.egg_cut == *brute);
  }
}

TEST_CASE("scramble search") {
  // No scramble of order 2 exists on a tree.
  CHECK(!search_scramble(path_graph(5), 2, 2).has_value());

  // The cube admits an order-4 scramble with 2-vertex eggs.
  auto found = search_scramble(cube_graph(), 4, 2);
  REQUIRE(found.has_value());
  CHECK(scramble_order(cube_graph(), *found).order >= 4);

  // Scramble orders never exceed gonality where both are computable.
  for (auto& g : {cube_graph(), cycle_graph(6)}) {
    long long gon = gonality(g);
    for (long long target = gon; target >= 1; --target) {
      auto s = search_scramble(g, target, 2);
      if (s) {
        CHECK(scramble_order(g, *s).order <= gon);
        break;
      }
    }
  }
}

TEST_CASE("crystal scramble") {
  auto p = poly({{0, 0}, {15, 0}, {15, 3}, {0, 3}});
  auto nb = build_beehive_normalized(p);
  REQUIRE(nb.crystal_x0.has_value());
  auto cs = crystal_scramble(nb.triangulation, *nb.crystal_x0, nb.d);
  CHECK(cs.scramble.eggs.size() == 3);
  auto ord = scramble_order(cs.strip_dual, cs.scramble);
  CHECK(ord.hitting == 3);  // disjoint eggs
  CHECK(ord.order == 3);

  // Subgraph monotonicity: the strip dual has no more vertices than the
  // full dual.
  CHECK(cs.strip_dual.n <= (int)nb.triangulation.cells.size());

  CHECK_THROWS(crystal_scramble(nb.triangulation, 1000, nb.d));
}
