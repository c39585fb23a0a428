#pragma once

#include <array>
#include <vector>

#include "tropgon/polygon.hpp"
#include "tropgon/rational.hpp"

namespace tropgon {

// All lattice points of a polygon with stable indices (lex order).
struct PointSet {
  Polygon polygon = Polygon::from_vertices({{0, 0}});
  std::vector<Point> points;

  int index_of(const Point& p) const;
};

PointSet make_point_set(const Polygon& p);

// Heights indexed parallel to PointSet::points.
using HeightFunction = std::vector<Rat>;

HeightFunction zero_heights(const PointSet& ps);
// 1 on the boundary of P, 0 on interior points (the initial subdivision h0).
HeightFunction boundary_indicator(const PointSet& ps);
// 1 exactly at the vertices of P (the apexes v_i^(-1)), 0 elsewhere (h0').
HeightFunction vertex_indicator(const PointSet& ps);

// Cells are ccw corner-index lists into ps.points, sorted canonically.
struct Subdivision {
  PointSet ps;
  std::vector<std::vector<int>> cells;

  friend bool operator==(const Subdivision& a, const Subdivision& b) {
    return a.ps.points == b.ps.points && a.cells == b.cells;
  }
};

// Projection of the lower convex hull of the lifted point set.
Subdivision regular_subdivision(const PointSet& ps, const HeightFunction& h);

// Cell-wise refinement of s by h (heights indexed over s.ps).
Subdivision refine(const Subdivision& s, const HeightFunction& h);

bool is_unimodular(const Subdivision& s);

// Deterministic completion to a unimodular triangulation: unit squares split
// on the diagonal from the lex-least vertex, width-1 trapezoids by zig-zag,
// remaining cells by iterated pulling at the lex-least lattice point.
Subdivision complete_to_unimodular(const Subdivision& s);

// Zig-zag triangulation of the width-1 trapezoid conv(tau, tau_prime); the
// lists are the lattice points of the two parallel sides. When tau_prime has
// at least three points the first and last point of tau are connected to the
// second and second-to-last point of tau_prime, and the number of tau points
// joined to >= 2 points of tau_prime is the maximum min{n, m-1}.
Subdivision zigzag(const std::vector<Point>& tau,
                   const std::vector<Point>& tau_prime);

// Triangle list form, for callers assembling larger triangulations.
std::vector<std::array<Point, 3>> zigzag_triangles(
    std::vector<Point> tau, std::vector<Point> tau_prime);

// Builds a Subdivision from explicit triangles (orientation normalized,
// cells sorted); every vertex must be a point of ps.
Subdivision assemble_triangulation(const PointSet& ps,
                                   const std::vector<std::array<Point, 3>>& tris);

// Number of tau points connected to at least two tau_prime points by edges
// of t.
long long doubly_connected_count(const Subdivision& t,
                                 const std::vector<Point>& tau,
                                 const std::vector<Point>& tau_prime);

// Lattice points of s.ps lying in cell (closed), lex order.
std::vector<int> cell_point_indices(const PointSet& ps,
                                    const std::vector<int>& cell);

// All undirected cell edges as sorted index pairs.
std::vector<std::pair<int, int>> subdivision_edges(const Subdivision& s);

}  // namespace tropgon
