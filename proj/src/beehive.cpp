#include "tropgon/beehive.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "tropgon/moduli.hpp"

namespace tropgon {

namespace {

// Relaxed line of a directed edge (a -> b) of the interior polygon:
// n.p <= c + 1 with primitive outward normal n.
struct Line {
  Point n;
  long long c;
};

Line relaxed_line(const Point& a, const Point& b) {
  Point d = b - a;
  Point n = primitive({d.y, -d.x});
  return {n, n.x * a.x + n.y * a.y + 1};
}

}  // namespace

NormalizedBeehive build_beehive_normalized(const Polygon& p) {
  if (is_hyperelliptic_polygon(p))
    throw std::invalid_argument("build_beehive: polygon is hyperelliptic");
  if (!is_maximal(p))
    throw std::invalid_argument("build_beehive: polygon is not maximal");

  NormalizedBeehive out;
  out.normalized = strip_normalize(p, &out.d);
  if (auto sheared = shear_to_crystal(out.normalized, out.d))
    out.normalized = *sheared;
  out.crystal_x0 = find_crystal(out.normalized, out.d);

  const Polygon& N = out.normalized;
  auto ps = make_point_set(N);
  auto s0 = regular_subdivision(ps, boundary_indicator(ps));
  auto q = interior_polygon(N);

  std::vector<std::array<Point, 3>> tris;
  for (const auto& cell : s0.cells) {
    auto ids = cell_point_indices(ps, cell);
    std::vector<Point> inner, outer;
    for (int i : ids)
      (N.strictly_contains(ps.points[i]) ? inner : outer)
          .push_back(ps.points[i]);

    if (outer.empty()) {
      // The interior cell: triangulate through the separable quadratic lift,
      // which subdivides on the grid wherever four interior points form a
      // unit square.
      auto psq = make_point_set(*q);
      long long xl = psq.points[0].x, xr = xl;
      for (const auto& pt : psq.points) {
        xl = std::min(xl, pt.x);
        xr = std::max(xr, pt.x);
      }
      HeightFunction omega(psq.points.size(), Rat(0));
      for (size_t i = 0; i < psq.points.size(); ++i) {
        long long x = psq.points[i].x, y = psq.points[i].y;
        omega[i] = Rat((x - xl) * (x - xr) + (y - 1) * (y - (out.d - 1)));
      }
      auto sw = regular_subdivision(psq, omega);
      auto tri = complete_to_unimodular(sw);
      for (const auto& c : tri.cells)
        tris.push_back({tri.ps.points[c[0]], tri.ps.points[c[1]],
                        tri.ps.points[c[2]]});
    } else {
      // Ring trapezoid between an interior edge and its relaxed edge.
      for (auto& t : zigzag_triangles(inner, outer)) tris.push_back(t);
    }
  }

  out.triangulation = assemble_triangulation(ps, tris);
  if (!is_unimodular(out.triangulation))
    throw std::logic_error("build_beehive: triangulation not unimodular");
  if (!is_beehive(out.triangulation, N))
    throw std::logic_error("build_beehive: beehive conditions violated");
  return out;
}

Subdivision build_beehive(const Polygon& p) {
  long long d = 0;
  AffineMap to_strip;
  auto n0 = strip_normalize(p, &d, &to_strip);
  auto nb = build_beehive_normalized(p);
  // Recover the full map including the crystal shear, if one was applied.
  AffineMap full = to_strip;
  if (!(nb.normalized == n0)) {
    long long xmin0 = n0.vertices()[0].x, xmax0 = xmin0;
    for (const auto& v : n0.vertices()) {
      xmin0 = std::min(xmin0, v.x);
      xmax0 = std::max(xmax0, v.x);
    }
    bool found = false;
    for (long long k = 0; k <= xmax0 - xmin0 && !found; ++k) {
      for (long long ell : {k, -k}) {
        if (shear(n0, ell) == nb.normalized) {
          full = to_strip.then(AffineMap::shear(ell));
          found = true;
          break;
        }
        if (k == 0) break;
      }
    }
    if (!found) throw std::logic_error("build_beehive: lost normalization map");
  }
  AffineMap back = full.inverse();
  std::vector<std::array<Point, 3>> tris;
  for (const auto& c : nb.triangulation.cells)
    tris.push_back({back.apply(nb.triangulation.ps.points[c[0]]),
                    back.apply(nb.triangulation.ps.points[c[1]]),
                    back.apply(nb.triangulation.ps.points[c[2]])});
  return assemble_triangulation(make_point_set(p), tris);
}

bool is_beehive(const Subdivision& t, const Polygon& p) {
  if (!(t.ps.polygon == p)) return false;
  if (!is_unimodular(t)) return false;
  auto q = interior_polygon(p);
  if (!q || q->dimension() != 2) return false;
  auto r = relax(*q);
  if (!r || !(*r == p)) return false;  // not the maximal setting

  std::set<std::pair<int, int>> edges;
  for (auto& e : subdivision_edges(t)) edges.insert(e);
  auto has_edge = [&](const Point& a, const Point& b) {
    int i = t.ps.index_of(a), j = t.ps.index_of(b);
    if (i < 0 || j < 0) return false;
    return edges.count({std::min(i, j), std::max(i, j)}) > 0;
  };

  const auto& qv = q->vertices();
  size_t k = qv.size();

  // Condition 1: all boundary edges of the interior polygon appear.
  for (size_t i = 0; i < k; ++i) {
    Point a = qv[i], b = qv[(i + 1) % k];
    Point step = primitive(b - a);
    for (Point cur = a; cur != b; cur = cur + step)
      if (!has_edge(cur, cur + step)) return false;
  }

  // Condition 2: each interior vertex joins its apex on the boundary of P.
  for (size_t i = 0; i < k; ++i) {
    Point prev = qv[(i + k - 1) % k], v = qv[i], next = qv[(i + 1) % k];
    Line l1 = relaxed_line(prev, v), l2 = relaxed_line(v, next);
    long long det = l1.n.x * l2.n.y - l2.n.x * l1.n.y;
    if (det == 0) return false;
    long long nx = l1.c * l2.n.y - l2.c * l1.n.y;
    long long ny = l1.n.x * l2.c - l2.n.x * l1.c;
    if (nx % det != 0 || ny % det != 0) return false;
    Point apex{nx / det, ny / det};
    if (!has_edge(v, apex)) return false;
  }

  // Condition 3: per ring cell, the doubly-connected count meets the
  // closed-form maximum min{n, m-1}.
  for (size_t i = 0; i < k; ++i) {
    Point a = qv[i], b = qv[(i + 1) % k];
    Line l = relaxed_line(a, b);
    std::vector<Point> tau, tau_prime;
    Point step = primitive(b - a);
    for (Point cur = a;; cur = cur + step) {
      tau.push_back(cur);
      if (cur == b) break;
    }
    for (const auto& pt : t.ps.points)
      if (l.n.x * pt.x + l.n.y * pt.y == l.c) tau_prime.push_back(pt);
    long long want = std::min((long long)tau.size(),
                              (long long)tau_prime.size() - 1);
    if (doubly_connected_count(t, tau, tau_prime) != want) return false;
  }
  return true;
}

}  // namespace tropgon
