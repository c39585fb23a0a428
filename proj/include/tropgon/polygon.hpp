#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tropgon/geometry.hpp"

namespace tropgon {

// Convex lattice polygon. Vertices are stored counterclockwise with no
// collinear triples; points and segments are first-class degenerate cases
// (1 and 2 vertices). Construct through convex_hull() or from_vertices().
class Polygon {
 public:
  static Polygon convex_hull(std::vector<Point> points);
  // Accepts vertices in any order, re-normalizes via the hull.
  static Polygon from_vertices(const std::vector<Point>& vertices) {
    return convex_hull(vertices);
  }

  const std::vector<Point>& vertices() const { return v_; }
  int dimension() const;  // 0 point, 1 segment, 2 polygon

  bool contains(const Point& p) const;          // closed region
  bool strictly_contains(const Point& p) const; // interior

  long long area2() const;  // doubled area (shoelace)
  std::vector<Point> lattice_points() const;    // all points of P cap Z^2, lex order
  std::vector<Point> interior_points() const;   // strictly interior, lex order

  friend bool operator==(const Polygon& a, const Polygon& b) {
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Polygon& a, const Polygon& b) { return !(a == b); }
  friend bool operator<(const Polygon& a, const Polygon& b) { return a.v_ < b.v_; }

 private:
  explicit Polygon(std::vector<Point> v) : v_(std::move(v)) {}
  std::vector<Point> v_;
};

// Triangle families used throughout: d_sigma(d) = conv{(0,0),(d,0),(0,d)},
// d_upsilon(d) = conv{(-d,-d),(d,0),(0,d)}.
Polygon d_sigma(long long d);
Polygon d_upsilon(long long d);

long long genus(const Polygon& p);
long long boundary_points(const Polygon& p);

// Hull of the interior lattice points; nullopt when the genus is 0.
std::optional<Polygon> interior_polygon(const Polygon& p);

// true iff dim(P^(1)) <= 1, including empty interior.
bool is_hyperelliptic_polygon(const Polygon& p);

// Relaxed polygon P^(-1): every edge half-plane moved out by one lattice
// unit. Computed as a full half-plane intersection; returns nullopt when
// some vertex of the intersection is non-integral ("non-lattice").
// Requires dim(P) = 2.
std::optional<Polygon> relax(const Polygon& p);

// Rational vertex set of the relaxed region, in ccw order (always exists
// for two-dimensional P). Used by relax() and the maximality fallback.
std::vector<RatPoint> relaxed_region(const Polygon& p);

bool is_maximal(const Polygon& p);

struct WidthResult {
  long long width = 0;
  Point direction{0, 1};  // primitive witness, canonical tie-break
};
WidthResult lattice_width(const Polygon& p);

std::vector<Point> column_vectors(const Polygon& p);

long long expected_gonality(const Polygon& p);

Polygon apply_map(const Polygon& p, const AffineMap& m);
Polygon shear(const Polygon& p, long long ell);

// Canonical representative of the Z-affine equivalence class: lexicographic
// minimum over all maps placing a directed edge on the positive x-axis with
// the polygon in the upper half-plane and the residual shear normalized.
Polygon canonical_form(const Polygon& p);

bool equivalent(const Polygon& a, const Polygon& b);

struct PolygonInvariants {
  long long genus = 0;
  long long boundary_points = 0;
  long long area_doubled = 0;
  long long lattice_width = 0;
  Point width_direction{0, 1};
  long long column_count = 0;
  long long expected_gonality = 0;
  bool hyperelliptic = false;
  bool maximal = false;
};
PolygonInvariants invariants(const Polygon& p);

}  // namespace tropgon
