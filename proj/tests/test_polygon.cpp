#include <doctest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "tropgon/polygon.hpp"

using namespace tropgon;

namespace {

Polygon poly(std::vector<Point> v) { return Polygon::from_vertices(v); }

// Brute-force interior scan, independent of Polygon::interior_points (walks
// each candidate against every edge line explicitly).
std::vector<Point> interior_oracle(const Polygon& p) {
  const auto& v = p.vertices();
  long long x0 = v[0].x, x1 = v[0].x, y0 = v[0].y, y1 = v[0].y;
  for (auto& q : v) {
    x0 = std::min(x0, q.x); x1 = std::max(x1, q.x);
    y0 = std::min(y0, q.y); y1 = std::max(y1, q.y);
  }
  std::vector<Point> out;
  for (long long x = x0; x <= x1; ++x)
    for (long long y = y0; y <= y1; ++y) {
      bool strict = v.size() >= 3;
      for (size_t i = 0; i < v.size() && strict; ++i) {
        Point a = v[i], b = v[(i + 1) % v.size()];
        if (cross(b - a, Point{x, y} - a) <= 0) strict = false;
      }
      if (strict) out.push_back({x, y});
    }
  return out;
}

// Width oracle with the doubled direction bound.
long long width_oracle(const Polygon& p) {
  const auto& v = p.vertices();
  long long x0 = v[0].x, x1 = v[0].x, y0 = v[0].y, y1 = v[0].y;
  for (auto& q : v) {
    x0 = std::min(x0, q.x); x1 = std::max(x1, q.x);
    y0 = std::min(y0, q.y); y1 = std::max(y1, q.y);
  }
  long long bound = 2 * std::max(x1 - x0, y1 - y0);
  long long best = -1;
  for (long long a = -bound; a <= bound; ++a)
    for (long long b = -bound; b <= bound; ++b) {
      if (a == 0 && b == 0) continue;
      if (gcd_ll(a, b) != 1) continue;
      long long lo = a * v[0].x + b * v[0].y, hi = lo;
      for (auto& q : v) {
        long long s = a * q.x + b * q.y;
        lo = std::min(lo, s); hi = std::max(hi, s);
      }
      if (best < 0 || hi - lo < best) best = hi - lo;
    }
  return best;
}

// Maximality oracle: scan extension candidates in a generously padded box.
bool maximal_oracle(const Polygon& p) {
  if (p.dimension() < 2) return false;
  long long g = genus(p);
  const auto& v = p.vertices();
  long long x0 = v[0].x, x1 = v[0].x, y0 = v[0].y, y1 = v[0].y;
  for (auto& q : v) {
    x0 = std::min(x0, q.x); x1 = std::max(x1, q.x);
    y0 = std::min(y0, q.y); y1 = std::max(y1, q.y);
  }
  long long pad = (x1 - x0) + (y1 - y0) + 2;
  for (long long x = x0 - pad; x <= x1 + pad; ++x)
    for (long long y = y0 - pad; y <= y1 + pad; ++y) {
      if (p.contains({x, y})) continue;
      auto ext = v;
      ext.push_back({x, y});
      if (genus(Polygon::convex_hull(ext)) == g) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("convex hull basics") {
  auto t = poly({{0, 0}, {1, 0}, {0, 1}, {0, 0}});
  CHECK(t.vertices() == std::vector<Point>{{0, 0}, {1, 0}, {0, 1}});

  auto seg = poly({{0, 0}, {2, 0}, {1, 0}});
  CHECK(seg.dimension() == 1);
  CHECK(seg.vertices() == std::vector<Point>{{0, 0}, {2, 0}});

  auto tri = poly({{0, 0}, {4, 0}, {0, 4}, {1, 1}});
  CHECK(tri.vertices() == std::vector<Point>{{0, 0}, {4, 0}, {0, 4}});

  CHECK_THROWS(Polygon::convex_hull({}));
}

TEST_CASE("genus and boundary points") {
  CHECK(genus(d_sigma(4)) == 3);
  CHECK(genus(d_upsilon(2)) == 4);
  CHECK(genus(poly({{0, 0}, {1, 0}, {0, 1}})) == 0);

  CHECK(boundary_points(d_sigma(5)) == 15);
  CHECK(boundary_points(d_upsilon(2)) == 6);
  CHECK(boundary_points(poly({{0, 0}, {1, 0}, {1, 1}, {0, 1}})) == 4);

  for (long long d = 2; d <= 12; ++d) {
    CHECK(genus(d_sigma(d)) == (d - 1) * (d - 2) / 2);
    CHECK(boundary_points(d_sigma(d)) == 3 * d);
  }
}

TEST_CASE("interior polygon") {
  auto q = interior_polygon(d_sigma(4));
  REQUIRE(q.has_value());
  CHECK(*q == poly({{1, 1}, {2, 1}, {1, 2}}));
  // Cross-check against the independent scan.
  auto pts = interior_oracle(d_sigma(4));
  CHECK(*q == Polygon::convex_hull(pts));

  CHECK(!interior_polygon(poly({{0, 0}, {1, 0}, {1, 1}, {0, 1}})).has_value());

  auto box = poly({{0, 0}, {4, 0}, {4, 2}, {0, 2}});
  auto qi = interior_polygon(box);
  REQUIRE(qi.has_value());
  CHECK(qi->dimension() == 1);
  CHECK(qi->vertices() == std::vector<Point>{{1, 1}, {3, 1}});
}

TEST_CASE("hyperelliptic flag") {
  CHECK(is_hyperelliptic_polygon(poly({{0, 0}, {4, 0}, {4, 2}, {0, 2}})));
  CHECK(!is_hyperelliptic_polygon(d_sigma(4)));
  CHECK(!is_hyperelliptic_polygon(d_upsilon(2)));
}

TEST_CASE("relaxed polygon") {
  auto r = relax(poly({{0, 0}, {1, 0}, {0, 1}}));
  REQUIRE(r.has_value());
  CHECK(*r == poly({{-1, -1}, {3, -1}, {-1, 3}}));

  auto rs = relax(poly({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
  REQUIRE(rs.has_value());
  CHECK(*rs == poly({{-1, -1}, {2, -1}, {2, 2}, {-1, 2}}));

  // Frozen witness whose relaxation has the non-integral apex (-1, -2/3).
  CHECK(!relax(poly({{0, 0}, {3, 1}, {0, 1}})).has_value());

  CHECK_THROWS(relax(poly({{0, 0}, {2, 0}})));
}

TEST_CASE("maximality") {
  CHECK(is_maximal(d_sigma(4)));
  CHECK(maximal_oracle(d_sigma(4)));

  // 3-sigma: hyperelliptic (one interior point); the candidate-point oracle
  // decides, and no extension preserves the genus.
  CHECK(is_maximal(d_sigma(3)) == maximal_oracle(d_sigma(3)));
  CHECK(is_maximal(d_sigma(3)));

  // The 4x1 strip extends to a 5x1 strip with the same (empty) interior.
  CHECK(!is_maximal(poly({{0, 0}, {4, 0}, {4, 1}, {0, 1}})));
  CHECK(!maximal_oracle(poly({{0, 0}, {4, 0}, {4, 1}, {0, 1}})));

  CHECK(!is_maximal(poly({{0, 0}, {2, 0}})));

  // Both routes agree on a sample of shapes.
  for (auto& p : {d_sigma(3), d_sigma(4), d_sigma(5), d_upsilon(2),
                  poly({{0, 0}, {3, 0}, {3, 3}, {0, 3}}),
                  poly({{0, 0}, {4, 0}, {4, 2}, {0, 2}})}) {
    CHECK(is_maximal(p) == maximal_oracle(p));
  }
}

TEST_CASE("lattice width") {
  CHECK(lattice_width(d_sigma(4)).width == 4);
  auto sq = lattice_width(poly({{0, 0}, {3, 0}, {3, 3}, {0, 3}}));
  CHECK(sq.width == 3);
  CHECK(sq.direction == Point{0, 1});
  CHECK(lattice_width(d_upsilon(2)).width == 4);
  CHECK(lattice_width(poly({{0, 0}, {5, 0}})).width == 0);

  testutil::Rng rng(42);
  for (int i = 0; i < 25; ++i) {
    auto p = testutil::random_polygon(rng, 6, 6);
    if (p.dimension() < 2) continue;
    CHECK(lattice_width(p).width == width_oracle(p));
  }
}

TEST_CASE("column vectors") {
  auto rect = poly({{0, 0}, {5, 0}, {5, 3}, {0, 3}});
  auto cv = column_vectors(rect);
  CHECK(cv == std::vector<Point>{{-1, 0}, {0, -1}, {0, 1}, {1, 0}});

  CHECK(column_vectors(d_upsilon(2)).empty());
  CHECK(column_vectors(d_sigma(5)).size() >= 3);
  CHECK(column_vectors(d_sigma(4)).size() == 6);
}

TEST_CASE("expected gonality") {
  CHECK(expected_gonality(d_upsilon(2)) == 3);
  CHECK(expected_gonality(d_sigma(4)) == 3);
  CHECK(expected_gonality(poly({{0, 0}, {4, 0}, {4, 2}, {0, 2}})) == 2);
  CHECK(expected_gonality(poly({{0, 0}, {1, 0}, {0, 1}})) == 1);
}

TEST_CASE("canonical form") {
  auto p = d_sigma(4);
  auto c = canonical_form(p);
  CHECK(canonical_form(c) == c);
  for (long long ell = -3; ell <= 3; ++ell)
    CHECK(canonical_form(shear(p, ell)) == c);

  CHECK(equivalent(d_upsilon(2),
                   apply_map(d_upsilon(2), AffineMap(0, -1, 1, -1, {7, -3}))));
  CHECK(!equivalent(d_sigma(3), d_sigma(4)));
}

TEST_CASE("apply_map and shear") {
  auto rect = poly({{0, 0}, {5, 0}, {5, 3}, {0, 3}});
  CHECK(shear(rect, 0) == rect);
  CHECK_THROWS(AffineMap(2, 0, 0, 1, {0, 0}));

  // A unit shear moves a point on row y relative to row 0 by y.
  auto s = AffineMap::shear(1);
  CHECK(s.apply({2, 3}) == Point{5, 3});
  CHECK(s.apply({2, 0}) == Point{2, 0});
}

TEST_CASE("unimodular invariance of invariants") {
  testutil::Rng rng(7);
  std::vector<Polygon> base = {d_sigma(4), d_upsilon(2),
                               poly({{0, 0}, {5, 0}, {5, 3}, {0, 3}}),
                               poly({{0, 0}, {4, 0}, {4, 2}, {0, 2}})};
  for (const auto& p : base) {
    auto ref = invariants(p);
    for (int i = 0; i < 25; ++i) {
      auto m = testutil::random_unimodular(rng);
      auto q = apply_map(p, m);
      auto inv = invariants(q);
      CHECK(inv.genus == ref.genus);
      CHECK(inv.boundary_points == ref.boundary_points);
      CHECK(inv.area_doubled == ref.area_doubled);
      CHECK(inv.lattice_width == ref.lattice_width);
      CHECK(inv.column_count == ref.column_count);
      CHECK(inv.expected_gonality == ref.expected_gonality);
      CHECK(inv.hyperelliptic == ref.hyperelliptic);
      CHECK(inv.maximal == ref.maximal);
      CHECK(canonical_form(q) == canonical_form(p));
    }
  }
}

TEST_CASE("Pick identity") {
  testutil::Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    auto p = testutil::random_polygon(rng, 8, 7);
    if (p.dimension() < 2) continue;
    CHECK(p.area2() == 2 * genus(p) + boundary_points(p) - 2);
  }
  CHECK(d_sigma(4).area2() == 2 * genus(d_sigma(4)) + boundary_points(d_sigma(4)) - 2);
}
