#include "tropgon/polygon.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace tropgon {

namespace {

// Rotates a ccw vertex list so it starts at the lexicographically least vertex.
void rotate_to_min(std::vector<Point>& v) {
  auto it = std::min_element(v.begin(), v.end());
  std::rotate(v.begin(), it, v.end());
}

struct HalfPlane {
  long long a, b, c;  // a x + b y <= c, gcd(a,b) = 1
};

std::vector<HalfPlane> edge_half_planes(const Polygon& p) {
  const auto& v = p.vertices();
  std::vector<HalfPlane> hs;
  for (size_t i = 0; i < v.size(); ++i) {
    Point u = v[i], w = v[(i + 1) % v.size()];
    Point d = w - u;
    Point n = primitive({d.y, -d.x});  // outward normal for ccw order
    hs.push_back({n.x, n.y, n.x * u.x + n.y * u.y});
  }
  return hs;
}

Rat rat_cross(const RatPoint& o, const RatPoint& a, const RatPoint& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

std::vector<RatPoint> rat_hull(std::vector<RatPoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const RatPoint& a, const RatPoint& b) { return a == b; }),
            pts.end());
  size_t n = pts.size();
  if (n <= 2) return pts;
  std::vector<RatPoint> h(2 * n);
  size_t k = 0;
  for (size_t i = 0; i < n; ++i) {
    while (k >= 2 && rat_cross(h[k - 2], h[k - 1], pts[i]).sign() <= 0) --k;
    h[k++] = pts[i];
  }
  size_t lower = k + 1;
  for (size_t i = n - 1; i-- > 0;) {
    while (k >= lower && rat_cross(h[k - 2], h[k - 1], pts[i]).sign() <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

}  // namespace

Polygon Polygon::convex_hull(std::vector<Point> pts) {
  if (pts.empty()) throw std::invalid_argument("convex_hull: no points");
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  size_t n = pts.size();
  if (n == 1) return Polygon({pts[0]});

  bool collinear = true;
  for (size_t i = 2; i < n && collinear; ++i)
    collinear = cross(pts[i] - pts[0], pts[1] - pts[0]) == 0;
  if (n == 2 || collinear) return Polygon({pts.front(), pts.back()});

  std::vector<Point> h(2 * n);
  size_t k = 0;
  for (size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0) --k;
    h[k++] = pts[i];
  }
  size_t lower = k + 1;
  for (size_t i = n - 1; i-- > 0;) {
    while (k >= lower && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  rotate_to_min(h);
  return Polygon(h);
}

int Polygon::dimension() const {
  if (v_.size() == 1) return 0;
  if (v_.size() == 2) return 1;
  return 2;
}

bool Polygon::contains(const Point& p) const {
  if (v_.size() == 1) return p == v_[0];
  if (v_.size() == 2) {
    Point d = v_[1] - v_[0], q = p - v_[0];
    if (cross(d, q) != 0) return false;
    long long t = dot(d, q);
    return t >= 0 && t <= dot(d, d);
  }
  for (size_t i = 0; i < v_.size(); ++i) {
    Point u = v_[i], w = v_[(i + 1) % v_.size()];
    if (cross(w - u, p - u) < 0) return false;
  }
  return true;
}

bool Polygon::strictly_contains(const Point& p) const {
  if (v_.size() < 3) return false;
  for (size_t i = 0; i < v_.size(); ++i) {
    Point u = v_[i], w = v_[(i + 1) % v_.size()];
    if (cross(w - u, p - u) <= 0) return false;
  }
  return true;
}

long long Polygon::area2() const {
  long long s = 0;
  for (size_t i = 0; i < v_.size(); ++i)
    s += cross(v_[i], v_[(i + 1) % v_.size()]);
  return s;
}

std::vector<Point> Polygon::lattice_points() const {
  long long x0 = v_[0].x, x1 = v_[0].x, y0 = v_[0].y, y1 = v_[0].y;
  for (const auto& p : v_) {
    x0 = std::min(x0, p.x); x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y); y1 = std::max(y1, p.y);
  }
  std::vector<Point> out;
  for (long long x = x0; x <= x1; ++x)
    for (long long y = y0; y <= y1; ++y)
      if (contains({x, y})) out.push_back({x, y});
  return out;
}

std::vector<Point> Polygon::interior_points() const {
  if (v_.size() < 3) return {};
  long long x0 = v_[0].x, x1 = v_[0].x, y0 = v_[0].y, y1 = v_[0].y;
  for (const auto& p : v_) {
    x0 = std::min(x0, p.x); x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y); y1 = std::max(y1, p.y);
  }
  std::vector<Point> out;
  for (long long x = x0 + 1; x < x1; ++x)
    for (long long y = y0 + 1; y < y1; ++y)
      if (strictly_contains({x, y})) out.push_back({x, y});
  return out;
}

Polygon d_sigma(long long d) {
  return Polygon::from_vertices({{0, 0}, {d, 0}, {0, d}});
}

Polygon d_upsilon(long long d) {
  return Polygon::from_vertices({{-d, -d}, {d, 0}, {0, d}});
}

long long genus(const Polygon& p) {
  return (long long)p.interior_points().size();
}

long long boundary_points(const Polygon& p) {
  const auto& v = p.vertices();
  if (v.size() == 1) return 1;
  if (v.size() == 2) return gcd_ll(v[1].x - v[0].x, v[1].y - v[0].y) + 1;
  long long r = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    Point d = v[(i + 1) % v.size()] - v[i];
    r += gcd_ll(d.x, d.y);
  }
  return r;
}

std::optional<Polygon> interior_polygon(const Polygon& p) {
  auto pts = p.interior_points();
  if (pts.empty()) return std::nullopt;
  return Polygon::convex_hull(pts);
}

bool is_hyperelliptic_polygon(const Polygon& p) {
  auto q = interior_polygon(p);
  return !q || q->dimension() <= 1;
}

std::vector<RatPoint> relaxed_region(const Polygon& p) {
  if (p.dimension() < 2)
    throw std::invalid_argument("relaxation undefined for dimension < 2");
  auto hs = edge_half_planes(p);
  for (auto& h : hs) h.c += 1;

  // Pairwise line intersections filtered against all constraints. The naive
  // per-vertex apex can violate a non-adjacent relaxed half-plane (sharp
  // slivers), so the full intersection is computed.
  std::vector<RatPoint> cand;
  size_t n = hs.size();
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      long long det = hs[i].a * hs[j].b - hs[j].a * hs[i].b;
      if (det == 0) continue;
      Rat x(hs[i].c * hs[j].b - hs[j].c * hs[i].b, det);
      Rat y(hs[i].a * hs[j].c - hs[j].a * hs[i].c, det);
      bool ok = true;
      for (const auto& h : hs) {
        if (Rat(h.a) * x + Rat(h.b) * y > Rat(h.c)) { ok = false; break; }
      }
      if (ok) cand.push_back({x, y});
    }
  }
  return rat_hull(std::move(cand));
}

std::optional<Polygon> relax(const Polygon& p) {
  auto region = relaxed_region(p);
  std::vector<Point> vs;
  for (const auto& rp : region) {
    if (!rp.is_lattice()) return std::nullopt;
    vs.push_back({rp.x.num(), rp.y.num()});
  }
  return Polygon::convex_hull(vs);
}

bool is_maximal(const Polygon& p) {
  if (p.dimension() < 2) return false;
  long long g = genus(p);
  auto q = interior_polygon(p);
  if (q && q->dimension() == 2) {
    auto r = relax(*q);
    return r && *r == p;
  }
  // Hyperelliptic or genus-0 fallback: any lattice polygon strictly
  // containing P with the same interior lies inside P^(-1), so it is enough
  // to test each lattice point of P^(-1) \ P as an extension candidate.
  auto hs = edge_half_planes(p);
  for (auto& h : hs) h.c += 1;
  auto region = relaxed_region(p);
  Rat x0 = region[0].x, x1 = region[0].x, y0 = region[0].y, y1 = region[0].y;
  for (const auto& rp : region) {
    x0 = std::min(x0, rp.x); x1 = std::max(x1, rp.x);
    y0 = std::min(y0, rp.y); y1 = std::max(y1, rp.y);
  }
  auto base = p.vertices();
  for (long long x = x0.ceil(); x <= x1.floor(); ++x) {
    for (long long y = y0.ceil(); y <= y1.floor(); ++y) {
      Point cpt{x, y};
      if (p.contains(cpt)) continue;
      bool inside = true;
      for (const auto& h : hs)
        if (h.a * x + h.b * y > h.c) { inside = false; break; }
      if (!inside) continue;
      auto ext = base;
      ext.push_back(cpt);
      if (genus(Polygon::convex_hull(ext)) == g) return false;
    }
  }
  return true;
}

WidthResult lattice_width(const Polygon& p) {
  if (p.dimension() == 0) return {0, {0, 1}};
  if (p.dimension() == 1) {
    Point d = primitive(p.vertices()[1] - p.vertices()[0]);
    Point n{-d.y, d.x};
    if (n.x < 0 || (n.x == 0 && n.y < 0)) n = -n;
    return {0, n};
  }
  const auto& v = p.vertices();
  long long x0 = v[0].x, x1 = v[0].x, y0 = v[0].y, y1 = v[0].y;
  for (const auto& q : v) {
    x0 = std::min(x0, q.x); x1 = std::max(x1, q.x);
    y0 = std::min(y0, q.y); y1 = std::max(y1, q.y);
  }
  long long bound = std::max(x1 - x0, y1 - y0);
  WidthResult best{-1, {0, 1}};
  for (long long a = 0; a <= bound; ++a) {
    for (long long b = -bound; b <= bound; ++b) {
      if (a == 0 && b <= 0) continue;               // canonical half of Z^2
      if (gcd_ll(a, b) != 1) continue;
      long long lo = a * v[0].x + b * v[0].y, hi = lo;
      for (const auto& q : v) {
        long long s = a * q.x + b * q.y;
        lo = std::min(lo, s);
        hi = std::max(hi, s);
      }
      long long w = hi - lo;
      if (best.width < 0 || w < best.width ||
          (w == best.width && Point{a, b} < best.direction))
        best = {w, {a, b}};
    }
  }
  return best;
}

std::vector<Point> column_vectors(const Polygon& p) {
  if (p.dimension() < 2)
    throw std::invalid_argument("column_vectors: polygon required");
  auto pts = p.lattice_points();
  const auto& v = p.vertices();
  long long x0 = v[0].x, x1 = v[0].x, y0 = v[0].y, y1 = v[0].y;
  for (const auto& q : v) {
    x0 = std::min(x0, q.x); x1 = std::max(x1, q.x);
    y0 = std::min(y0, q.y); y1 = std::max(y1, q.y);
  }
  std::set<Point> found;
  for (size_t i = 0; i < v.size(); ++i) {
    Point u = v[i], w = v[(i + 1) % v.size()];
    Point e = w - u;
    std::vector<Point> movers;  // lattice points of P not on edge tau
    for (const auto& q : pts)
      if (cross(e, q - u) != 0) movers.push_back(q);
    for (long long a = -(x1 - x0); a <= x1 - x0; ++a) {
      for (long long b = -(y1 - y0); b <= y1 - y0; ++b) {
        if (a == 0 && b == 0) continue;
        Point t{a, b};
        if (found.count(t)) continue;
        bool ok = true;
        for (const auto& q : movers)
          if (!p.contains(q + t)) { ok = false; break; }
        if (ok) found.insert(t);
      }
    }
  }
  return {found.begin(), found.end()};
}

Polygon apply_map(const Polygon& p, const AffineMap& m) {
  std::vector<Point> vs;
  vs.reserve(p.vertices().size());
  for (const auto& q : p.vertices()) vs.push_back(m.apply(q));
  return Polygon::convex_hull(vs);
}

Polygon shear(const Polygon& p, long long ell) {
  return apply_map(p, AffineMap::shear(ell));
}

Polygon canonical_form(const Polygon& p) {
  if (p.dimension() == 0) return Polygon::from_vertices({{0, 0}});
  if (p.dimension() == 1) {
    long long len = gcd_ll(p.vertices()[1].x - p.vertices()[0].x,
                           p.vertices()[1].y - p.vertices()[0].y);
    return Polygon::from_vertices({{0, 0}, {len, 0}});
  }
  const auto& v = p.vertices();
  size_t n = v.size();
  std::optional<std::vector<Point>> best;
  for (size_t i = 0; i < n; ++i) {
    for (int refl = 0; refl < 2; ++refl) {
      Point a = refl ? v[(i + 1) % n] : v[i];
      Point b = refl ? v[i] : v[(i + 1) % n];
      Point d = primitive(b - a);
      // Row (s,t) with s*dx + t*dy = 1 via extended gcd.
      long long s = 0, t = 0;
      {
        long long old_r = d.x, r = d.y, old_s = 1, ss = 0, old_t = 0, tt = 1;
        while (r != 0) {
          long long qd = old_r / r;
          long long tmp = old_r - qd * r; old_r = r; r = tmp;
          tmp = old_s - qd * ss; old_s = ss; ss = tmp;
          tmp = old_t - qd * tt; old_t = tt; tt = tmp;
        }
        if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
        s = old_s; t = old_t;
      }
      // Second row perpendicular to d; sign keeps the polygon above the axis.
      Point row2 = refl ? Point{d.y, -d.x} : Point{-d.y, d.x};
      AffineMap lin(s, t, row2.x, row2.y, {0, 0});
      Point a2 = lin.apply(a);
      AffineMap m = lin.then(AffineMap::translation({-a2.x, -a2.y}));
      std::vector<Point> img;
      img.reserve(n);
      for (const auto& q : v) img.push_back(m.apply(q));
      // Normalize the residual shear: topmost-then-leftmost vertex gets
      // x in [0, y).
      Point top = img[0];
      for (const auto& q : img)
        if (q.y > top.y || (q.y == top.y && q.x < top.x)) top = q;
      long long ell = 0;
      if (top.y > 0) {
        long long fl = top.x >= 0 ? top.x / top.y
                                  : -((-top.x + top.y - 1) / top.y);
        ell = -fl;
      }
      for (auto& q : img) q.x += ell * q.y;
      auto cand = Polygon::convex_hull(img).vertices();
      if (!best || cand < *best) best = cand;
    }
  }
  return Polygon::convex_hull(*best);
}

bool equivalent(const Polygon& a, const Polygon& b) {
  return canonical_form(a) == canonical_form(b);
}

long long expected_gonality(const Polygon& p) {
  auto q = interior_polygon(p);
  if (!q) return 1;
  if (q->dimension() <= 1) return 2;
  if (equivalent(p, d_upsilon(2))) return 3;
  return lattice_width(*q).width + 2;
}

PolygonInvariants invariants(const Polygon& p) {
  PolygonInvariants inv;
  inv.genus = genus(p);
  inv.boundary_points = boundary_points(p);
  inv.area_doubled = p.area2();
  auto w = lattice_width(p);
  inv.lattice_width = w.width;
  inv.width_direction = w.direction;
  inv.column_count = p.dimension() == 2 ? (long long)column_vectors(p).size() : 0;
  inv.expected_gonality = expected_gonality(p);
  inv.hyperelliptic = is_hyperelliptic_polygon(p);
  inv.maximal = is_maximal(p);
  return inv;
}

}  // namespace tropgon
