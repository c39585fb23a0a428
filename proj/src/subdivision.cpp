#include "tropgon/subdivision.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace tropgon {

namespace {

// Signed volume of the lifted tetrahedron (a,b,c,d); positive when d lies
// above the plane through a, b, c oriented ccw in the projection.
Rat orient3d(const Point& a, const Rat& ha, const Point& b, const Rat& hb,
             const Point& c, const Rat& hc, const Point& d, const Rat& hd) {
  long long bx = b.x - a.x, by = b.y - a.y;
  long long cx = c.x - a.x, cy = c.y - a.y;
  long long dx = d.x - a.x, dy = d.y - a.y;
  Rat bz = hb - ha, cz = hc - ha, dz = hd - ha;
  return Rat(bx) * (Rat(cy) * dz - cz * Rat(dy)) -
         Rat(by) * (Rat(cx) * dz - cz * Rat(dx)) +
         bz * Rat(cx * dy - cy * dx);
}

bool on_segment(const Point& a, const Point& b, const Point& p) {
  if (cross(b - a, p - a) != 0) return false;
  long long t = dot(b - a, p - a);
  return t >= 0 && t <= dot(b - a, b - a);
}

// Indices of pts lying on segment a->b, ordered from a to b.
std::vector<int> segment_chain(const std::vector<Point>& pts, const Point& a,
                               const Point& b) {
  std::vector<int> out;
  for (int i = 0; i < (int)pts.size(); ++i)
    if (on_segment(a, b, pts[i])) out.push_back(i);
  std::sort(out.begin(), out.end(), [&](int i, int j) {
    return dot(b - a, pts[i] - a) < dot(b - a, pts[j] - a);
  });
  return out;
}

void canonicalize_cell(std::vector<int>& cell) {
  auto it = std::min_element(cell.begin(), cell.end());
  std::rotate(cell.begin(), it, cell.end());
}

void sort_cells(std::vector<std::vector<int>>& cells) {
  std::sort(cells.begin(), cells.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              auto ka = a, kb = b;
              std::sort(ka.begin(), ka.end());
              std::sort(kb.begin(), kb.end());
              return ka < kb;
            });
}

// Lower-hull facets of the lifted point set by directed-edge wrapping.
// Returns cells as ccw corner lists of local indices.
std::vector<std::vector<int>> lower_hull_cells(const std::vector<Point>& pts,
                                               const std::vector<Rat>& h) {
  int n = (int)pts.size();
  auto hull = Polygon::convex_hull(pts);
  if (hull.dimension() != 2)
    throw std::invalid_argument("regular_subdivision: points span dimension < 2");
  std::map<Point, int> idx;
  for (int i = 0; i < n; ++i) idx[pts[i]] = i;

  std::set<std::pair<int, int>> visited;
  std::queue<std::pair<int, int>> work;

  // Seed with the 1D lower hulls along each boundary edge of the 2D hull.
  const auto& hv = hull.vertices();
  for (size_t e = 0; e < hv.size(); ++e) {
    Point a = hv[e], b = hv[(e + 1) % hv.size()];
    auto chain = segment_chain(pts, a, b);
    std::vector<int> keep;  // touching points of the 1D lower hull
    for (int id : chain) {
      while (keep.size() >= 2) {
        int p0 = keep[keep.size() - 2], p1 = keep.back();
        Rat t0(dot(b - a, pts[p0] - a)), t1(dot(b - a, pts[p1] - a));
        Rat t2(dot(b - a, pts[id] - a));
        Rat turn = (t1 - t0) * (h[id] - h[p0]) - (h[p1] - h[p0]) * (t2 - t0);
        if (turn < Rat(0)) keep.pop_back();
        else break;
      }
      keep.push_back(id);
    }
    for (size_t i = 0; i + 1 < keep.size(); ++i)
      work.push({keep[i], keep[i + 1]});
  }

  std::set<std::vector<int>> cell_keys;
  std::vector<std::vector<int>> cells;

  while (!work.empty()) {
    auto [u, w] = work.front();
    work.pop();
    if (visited.count({u, w})) continue;
    visited.insert({u, w});

    int c = -1;
    for (int p = 0; p < n; ++p) {
      if (cross(pts[w] - pts[u], pts[p] - pts[u]) <= 0) continue;
      if (c < 0) { c = p; continue; }
      if (orient3d(pts[u], h[u], pts[w], h[w], pts[c], h[c], pts[p], h[p]) <
          Rat(0))
        c = p;
    }
    if (c < 0) continue;  // outer boundary edge

    std::vector<int> face;
    for (int p = 0; p < n; ++p) {
      Rat s = orient3d(pts[u], h[u], pts[w], h[w], pts[c], h[c], pts[p], h[p]);
      if (s.sign() < 0) throw std::logic_error("lower hull support violated");
      if (s.sign() == 0) face.push_back(p);
    }
    std::vector<Point> fpts;
    for (int p : face) fpts.push_back(pts[p]);
    auto corners = Polygon::convex_hull(fpts).vertices();

    std::vector<int> cell;
    for (const auto& q : corners) cell.push_back(idx.at(q));
    auto key = cell;
    std::sort(key.begin(), key.end());
    bool is_new = cell_keys.insert(key).second;

    // Walk the facet boundary at lattice-chain resolution; reversed edges
    // feed the wrap.
    for (size_t i = 0; i < corners.size(); ++i) {
      Point a = corners[i], b = corners[(i + 1) % corners.size()];
      auto chain = segment_chain(fpts, a, b);
      for (size_t k = 0; k + 1 < chain.size(); ++k) {
        int p = idx.at(fpts[chain[k]]), q = idx.at(fpts[chain[k + 1]]);
        visited.insert({p, q});
        if (!visited.count({q, p})) work.push({q, p});
      }
    }

    if (is_new) {
      canonicalize_cell(cell);
      cells.push_back(cell);
    }
  }

  sort_cells(cells);
  return cells;
}

long long cell_area2(const PointSet& ps, const std::vector<int>& cell) {
  long long s = 0;
  for (size_t i = 0; i < cell.size(); ++i) {
    const Point& a = ps.points[cell[i]];
    const Point& b = ps.points[cell[(i + 1) % cell.size()]];
    s += cross(a, b);
  }
  return s;
}

}  // namespace

int PointSet::index_of(const Point& p) const {
  auto it = std::lower_bound(points.begin(), points.end(), p);
  if (it == points.end() || !(*it == p)) return -1;
  return (int)(it - points.begin());
}

PointSet make_point_set(const Polygon& p) {
  PointSet ps;
  ps.polygon = p;
  ps.points = p.lattice_points();  // lex sorted
  return ps;
}

HeightFunction zero_heights(const PointSet& ps) {
  return HeightFunction(ps.points.size(), Rat(0));
}

HeightFunction boundary_indicator(const PointSet& ps) {
  HeightFunction h(ps.points.size(), Rat(0));
  for (size_t i = 0; i < ps.points.size(); ++i)
    if (!ps.polygon.strictly_contains(ps.points[i])) h[i] = Rat(1);
  return h;
}

HeightFunction vertex_indicator(const PointSet& ps) {
  HeightFunction h(ps.points.size(), Rat(0));
  for (const auto& v : ps.polygon.vertices()) {
    int i = ps.index_of(v);
    if (i >= 0) h[i] = Rat(1);
  }
  return h;
}

Subdivision regular_subdivision(const PointSet& ps, const HeightFunction& h) {
  if (h.size() != ps.points.size())
    throw std::invalid_argument("height function does not cover the point set");
  Subdivision s;
  s.ps = ps;
  s.cells = lower_hull_cells(ps.points, h);
  return s;
}

std::vector<int> cell_point_indices(const PointSet& ps,
                                    const std::vector<int>& cell) {
  std::vector<Point> corners;
  for (int i : cell) corners.push_back(ps.points[i]);
  auto poly = Polygon::convex_hull(corners);
  std::vector<int> out;
  for (int i = 0; i < (int)ps.points.size(); ++i)
    if (poly.contains(ps.points[i])) out.push_back(i);
  return out;
}

Subdivision refine(const Subdivision& s, const HeightFunction& h) {
  if (h.size() != s.ps.points.size())
    throw std::invalid_argument("height function does not cover the point set");
  Subdivision out;
  out.ps = s.ps;
  for (const auto& cell : s.cells) {
    auto local = cell_point_indices(s.ps, cell);
    std::vector<Point> lpts;
    std::vector<Rat> lh;
    for (int i : local) {
      lpts.push_back(s.ps.points[i]);
      lh.push_back(h[i]);
    }
    for (auto sub : lower_hull_cells(lpts, lh)) {
      std::vector<int> mapped;
      for (int li : sub) mapped.push_back(local[li]);
      canonicalize_cell(mapped);
      out.cells.push_back(mapped);
    }
  }
  sort_cells(out.cells);
  return out;
}

bool is_unimodular(const Subdivision& s) {
  long long total = 0;
  for (const auto& cell : s.cells) {
    if (cell.size() != 3) return false;
    long long a2 = cell_area2(s.ps, cell);
    if (a2 != 1) return false;
    total += a2;
  }
  return total == s.ps.polygon.area2();
}

std::vector<std::array<Point, 3>> zigzag_triangles(std::vector<Point> tau,
                                                   std::vector<Point> tau_prime) {
  auto step_of = [](const std::vector<Point>& line) -> Point {
    if (line.size() < 2) return {0, 0};
    Point d = primitive(line[1] - line[0]);
    for (size_t i = 0; i + 1 < line.size(); ++i)
      if (line[i + 1] - line[i] != d)
        throw std::invalid_argument("zigzag: side points not consecutive");
    return d;
  };
  if (tau.empty() || tau_prime.empty())
    throw std::invalid_argument("zigzag: empty side");
  Point d1 = step_of(tau), d2 = step_of(tau_prime);
  Point dir = d1 == Point{0, 0} ? d2 : d1;
  if (dir == Point{0, 0})
    throw std::invalid_argument("zigzag: degenerate trapezoid");
  if (d1 != Point{0, 0} && d2 != Point{0, 0} && cross(d1, d2) != 0)
    throw std::invalid_argument("zigzag: sides not parallel");
  auto along = [&](const Point& p) { return dot(dir, p); };
  std::sort(tau.begin(), tau.end(),
            [&](const Point& a, const Point& b) { return along(a) < along(b); });
  std::sort(tau_prime.begin(), tau_prime.end(),
            [&](const Point& a, const Point& b) { return along(a) < along(b); });
  long long dist = cross(dir, tau_prime[0] - tau[0]);
  if (dist != 1 && dist != -1)
    throw std::invalid_argument("zigzag: sides not at lattice distance 1");

  int n = (int)tau.size(), m = (int)tau_prime.size();
  std::string moves;
  if (n == 1) moves = std::string(m - 1, 'U');
  else if (m == 1) moves = std::string(n - 1, 'R');
  else if (m == 2) moves = "U" + std::string(n - 1, 'R');
  else if (n == 2) moves = "UR" + std::string(m - 2, 'U');
  else {
    moves = "UR";
    int rU = m - 3, rR = n - 3;
    while (rU > 0 || rR > 0) {
      if (rU > 0) { moves += 'U'; --rU; }
      if (rR > 0) { moves += 'R'; --rR; }
    }
    moves += "RU";
  }

  std::vector<std::array<Point, 3>> tris;
  int i = 0, j = 0;
  for (char mv : moves) {
    if (mv == 'U') {
      tris.push_back({tau[i], tau_prime[j], tau_prime[j + 1]});
      ++j;
    } else {
      tris.push_back({tau[i], tau_prime[j], tau[i + 1]});
      ++i;
    }
  }
  return tris;
}

Subdivision assemble_triangulation(
    const PointSet& ps, const std::vector<std::array<Point, 3>>& tris) {
  Subdivision out;
  out.ps = ps;
  for (const auto& t : tris) {
    std::array<Point, 3> tri = t;
    if (cross(tri[1] - tri[0], tri[2] - tri[0]) < 0) std::swap(tri[1], tri[2]);
    std::vector<int> cell;
    for (const auto& q : tri) {
      int id = ps.index_of(q);
      if (id < 0) throw std::logic_error("triangle vertex outside point set");
      cell.push_back(id);
    }
    canonicalize_cell(cell);
    out.cells.push_back(cell);
  }
  sort_cells(out.cells);
  return out;
}

namespace {

// Splits one cell (its lattice points and ccw corners) into unimodular
// triangles, deterministically.
void complete_cell(const std::vector<Point>& cellpts,
                   const std::vector<Point>& corners,
                   std::vector<std::array<Point, 3>>& out) {
  if (cellpts.size() == 3 && corners.size() == 3) {
    out.push_back({corners[0], corners[1], corners[2]});
    return;
  }

  // Width-1 trapezoid: all points on two parallel lines at distance 1.
  for (size_t e = 0; e < corners.size(); ++e) {
    Point dir = primitive(corners[(e + 1) % corners.size()] - corners[e]);
    std::set<long long> levels;
    for (const auto& p : cellpts) levels.insert(cross(dir, p - corners[0]));
    if (levels.size() == 2 && *levels.rbegin() - *levels.begin() == 1) {
      long long lo = *levels.begin();
      std::vector<Point> a, b;
      for (const auto& p : cellpts)
        (cross(dir, p - corners[0]) == lo ? a : b).push_back(p);
      Point least = *std::min_element(cellpts.begin(), cellpts.end());
      bool least_in_a = std::find(a.begin(), a.end(), least) != a.end();
      auto tris = least_in_a ? zigzag_triangles(a, b) : zigzag_triangles(b, a);
      for (auto& t : tris) out.push_back(t);
      return;
    }
  }

  // Pulling refinement: cone from the lex-least non-corner point when one
  // exists, else from the lex-least corner, then recurse.
  Point v{0, 0};
  bool have_v = false;
  for (const auto& p : cellpts) {
    if (std::find(corners.begin(), corners.end(), p) != corners.end()) continue;
    if (!have_v || p < v) { v = p; have_v = true; }
  }
  if (!have_v) v = *std::min_element(corners.begin(), corners.end());

  for (size_t e = 0; e < corners.size(); ++e) {
    Point a = corners[e], b = corners[(e + 1) % corners.size()];
    std::vector<Point> chain;
    for (const auto& p : cellpts)
      if (on_segment(a, b, p)) chain.push_back(p);
    std::sort(chain.begin(), chain.end(), [&](const Point& p, const Point& q) {
      return dot(b - a, p - a) < dot(b - a, q - a);
    });
    for (size_t k = 0; k + 1 < chain.size(); ++k) {
      Point p = chain[k], q = chain[k + 1];
      if (p == v || q == v) continue;
      if (cross(q - p, v - p) == 0) continue;  // flat cone
      auto tri = Polygon::convex_hull({v, p, q});
      std::vector<Point> sub;
      for (const auto& r : cellpts)
        if (tri.contains(r)) sub.push_back(r);
      complete_cell(sub, tri.vertices(), out);
    }
  }
}

}  // namespace

Subdivision complete_to_unimodular(const Subdivision& s) {
  std::vector<std::array<Point, 3>> tris;
  for (const auto& cell : s.cells) {
    auto ids = cell_point_indices(s.ps, cell);
    std::vector<Point> cellpts;
    for (int i : ids) cellpts.push_back(s.ps.points[i]);
    std::vector<Point> corners;
    for (int i : cell) corners.push_back(s.ps.points[i]);
    complete_cell(cellpts, corners, tris);
  }
  auto out = assemble_triangulation(s.ps, tris);
  if (!is_unimodular(out))
    throw std::logic_error("complete_to_unimodular: completion failed");
  return out;
}

Subdivision zigzag(const std::vector<Point>& tau,
                   const std::vector<Point>& tau_prime) {
  auto tris = zigzag_triangles(tau, tau_prime);
  std::vector<Point> all = tau;
  all.insert(all.end(), tau_prime.begin(), tau_prime.end());
  auto ps = make_point_set(Polygon::convex_hull(all));
  auto out = assemble_triangulation(ps, tris);
  if (!is_unimodular(out))
    throw std::logic_error("zigzag: triangulation not unimodular");
  return out;
}

std::vector<std::pair<int, int>> subdivision_edges(const Subdivision& s) {
  std::set<std::pair<int, int>> es;
  for (const auto& cell : s.cells)
    for (size_t i = 0; i < cell.size(); ++i) {
      int a = cell[i], b = cell[(i + 1) % cell.size()];
      es.insert({std::min(a, b), std::max(a, b)});
    }
  return {es.begin(), es.end()};
}

long long doubly_connected_count(const Subdivision& t,
                                 const std::vector<Point>& tau,
                                 const std::vector<Point>& tau_prime) {
  auto edges = subdivision_edges(t);
  std::set<std::pair<int, int>> es(edges.begin(), edges.end());
  long long count = 0;
  for (const auto& p : tau) {
    int pi = t.ps.index_of(p);
    if (pi < 0) continue;
    int links = 0;
    for (const auto& q : tau_prime) {
      int qi = t.ps.index_of(q);
      if (qi < 0) continue;
      if (es.count({std::min(pi, qi), std::max(pi, qi)})) ++links;
    }
    if (links >= 2) ++count;
  }
  return count;
}

}  // namespace tropgon
