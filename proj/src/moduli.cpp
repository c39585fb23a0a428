#include "tropgon/moduli.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace tropgon {

namespace {

long long ext_gcd_row(Point u, long long* s_out, long long* t_out) {
  // s*ux + t*uy = gcd
  long long old_r = u.x, r = u.y, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    long long q = old_r / r;
    long long tmp = old_r - q * r; old_r = r; r = tmp;
    tmp = old_s - q * s; old_s = s; s = tmp;
    tmp = old_t - q * t; old_t = t; t = tmp;
  }
  if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
  *s_out = old_s;
  *t_out = old_t;
  return old_r;
}

long long row_min_x(const Polygon& p, long long y) {
  long long best = 0;
  bool seen = false;
  for (const auto& v : p.vertices()) {
    if (v.y != y) continue;
    if (!seen || v.x < best) best = v.x;
    seen = true;
  }
  if (!seen) throw std::logic_error("strip row carries no vertex");
  return best;
}

long long row_max_x(const Polygon& p, long long y) {
  long long best = 0;
  bool seen = false;
  for (const auto& v : p.vertices()) {
    if (v.y != y) continue;
    if (!seen || v.x > best) best = v.x;
    seen = true;
  }
  if (!seen) throw std::logic_error("strip row carries no vertex");
  return best;
}

}  // namespace

long long moduli_dim(const Polygon& p) {
  if (is_hyperelliptic_polygon(p))
    throw std::invalid_argument("moduli_dim: polygon is hyperelliptic");
  if (!is_maximal(p))
    throw std::invalid_argument("moduli_dim: polygon is not maximal");
  return genus(p) + boundary_points(p) - 3 -
         (long long)column_vectors(p).size();
}

Rat upper_bound_U(long long g, long long d) {
  if (d <= 1) throw std::invalid_argument("upper_bound_U: d must be >= 2");
  if (g < 1) throw std::invalid_argument("upper_bound_U: g must be >= 1");
  return Rat(g) + Rat(2 * g, d - 1) + Rat(2 * d - 3);
}

Polygon strip_normalize(const Polygon& p, long long* d_out,
                        AffineMap* map_out) {
  if (p.dimension() < 2)
    throw std::invalid_argument("strip_normalize: polygon required");
  auto w = lattice_width(p);
  Point u = w.direction;
  long long s, t;
  ext_gcd_row(u, &s, &t);  // s*ux + t*uy = 1
  // Rows (t, -s; ux, uy) have det t*uy + s*ux = 1; y-coordinate becomes <u,p>.
  AffineMap m(t, -s, u.x, u.y, {0, 0});
  auto q = apply_map(p, m);
  long long ymin = q.vertices()[0].y;
  for (const auto& v : q.vertices()) ymin = std::min(ymin, v.y);
  m = m.then(AffineMap::translation({0, -ymin}));
  q = apply_map(q, AffineMap::translation({0, -ymin}));
  long long d = w.width;

  // Fix the shear: x_min of row 0 at most x_min of row d, ties toward 0.
  long long x0 = row_min_x(q, 0), xd = row_min_x(q, d);
  if (x0 > xd && d > 0) {
    long long ell = (x0 - xd + d - 1) / d;
    q = shear(q, ell);
    m = m.then(AffineMap::shear(ell));
  }
  if (d_out) *d_out = d;
  if (map_out) *map_out = m;
  return q;
}

Truncation truncate(const Polygon& p) {
  Truncation tr;
  tr.normalized = strip_normalize(p, &tr.d);
  const Polygon& q = tr.normalized;
  long long d = tr.d;

  long long xmin = q.vertices()[0].x, xmax = xmin;
  for (const auto& v : q.vertices()) {
    xmin = std::min(xmin, v.x);
    xmax = std::max(xmax, v.x);
  }
  tr.rect_left = xmin;
  tr.rect_right = xmax;

  long long xt0 = row_min_x(q, d), xt1 = row_max_x(q, d);
  long long xb0 = row_min_x(q, 0), xb1 = row_max_x(q, 0);
  tr.a = xt1 - xt0;
  tr.b = xb1 - xb0;

  // Column extents along the two vertical sides.
  long long yl0 = 0, yl1 = 0, yr0 = 0, yr1 = 0;
  bool seen_l = false, seen_r = false;
  for (const auto& v : q.vertices()) {
    if (v.x == xmin) {
      if (!seen_l) { yl0 = yl1 = v.y; seen_l = true; }
      yl0 = std::min(yl0, v.y);
      yl1 = std::max(yl1, v.y);
    }
    if (v.x == xmax) {
      if (!seen_r) { yr0 = yr1 = v.y; seen_r = true; }
      yr0 = std::min(yr0, v.y);
      yr1 = std::max(yr1, v.y);
    }
  }

  tr.cuts[0] = {xt0 - xmin, d - yl1, Corner::NW};
  tr.cuts[1] = {xmax - xt1, d - yr1, Corner::NE};
  tr.cuts[2] = {xmax - xb1, yr0, Corner::SE};
  tr.cuts[3] = {xb0 - xmin, yl0, Corner::SW};

  for (const auto& c : tr.cuts)
    if ((c.x == 0) != (c.y == 0))
      throw std::logic_error("truncate: degenerate corner leg");

  tr.trunc_polygon = Polygon::convex_hull(
      {{xmin, yl0}, {xmin, yl1}, {xmax, yr0}, {xmax, yr1},
       {xt0, d}, {xt1, d}, {xb0, 0}, {xb1, 0}});

  // Area identity for the truncated rectangle (doubled form).
  long long legs = 0;
  for (const auto& c : tr.cuts) legs += c.x * c.y;
  if (tr.trunc_polygon.area2() != 2 * (xmax - xmin) * d - legs)
    throw std::logic_error("truncate: area reconstruction failed");

  return tr;
}

Rat cut_penalty(long long x, long long y, long long d) {
  if (d < 2) throw std::invalid_argument("cut_penalty: d must be >= 2");
  if (x < 1 || y < 1)
    throw std::invalid_argument("cut_penalty: (x, y) is not a cut");
  return Rat(x * (y - d) - (y - gcd_ll(x, y)), d - 1);
}

DimReport check_dim_bound(const Polygon& p) {
  long long egon = expected_gonality(p);
  if (egon <= 1)
    throw std::invalid_argument("check_dim_bound: expected gonality must exceed 1");
  DimReport rep;
  rep.dim = moduli_dim(p);  // validates maximal + non-hyperelliptic
  rep.genus = genus(p);
  rep.boundary = boundary_points(p);
  rep.columns = (long long)column_vectors(p).size();
  rep.egon = egon;
  rep.upper_bound = upper_bound_U(rep.genus, egon);

  auto tr = truncate(p);
  for (const auto& c : tr.cuts) {
    if (!c.is_cut()) continue;
    Rat xi = cut_penalty(c.x, c.y, tr.d);
    static const char* names[] = {"NW", "NE", "SE", "SW"};
    rep.witnesses.push_back(std::string("cut ") + names[(int)c.corner] + " (" +
                            std::to_string(c.x) + "," + std::to_string(c.y) +
                            ") X = " + xi.str());
  }
  if (rep.dim > rep.upper_bound.floor())
    throw std::logic_error("check_dim_bound: dimension bound falsified");
  return rep;
}

std::optional<long long> find_crystal(const Polygon& p, long long d) {
  if (d < 2) return std::nullopt;
  std::set<Point> interior;
  long long xlo = 0, xhi = 0;
  bool first = true;
  for (const auto& q : p.interior_points()) {
    interior.insert(q);
    if (first || q.x < xlo) xlo = q.x;
    if (first || q.x > xhi) xhi = q.x;
    first = false;
  }
  if (first) return std::nullopt;
  for (long long x0 = xlo; x0 + d <= xhi; ++x0) {
    bool full = true;
    for (long long i = 0; i <= d && full; ++i)
      for (long long j = 1; j <= d - 1 && full; ++j)
        if (!interior.count({x0 + i, j})) full = false;
    if (full) return x0;
  }
  return std::nullopt;
}

std::optional<Polygon> shear_to_crystal(const Polygon& p, long long d) {
  long long row1 = 0, rowd1 = 0;
  for (const auto& q : p.interior_points()) {
    if (q.y == 1) ++row1;
    if (q.y == d - 1) ++rowd1;
  }
  if (row1 < 2 * d - 2 || rowd1 < 2 * d - 2) return std::nullopt;

  long long xmin = p.vertices()[0].x, xmax = xmin;
  for (const auto& v : p.vertices()) {
    xmin = std::min(xmin, v.x);
    xmax = std::max(xmax, v.x);
  }
  long long extent = xmax - xmin;
  for (long long k = 0; k <= extent; ++k) {
    for (long long ell : {k, -k}) {
      auto img = shear(p, ell);
      if (find_crystal(img, d)) return img;
      if (k == 0) break;
    }
  }
  return std::nullopt;
}

Polygon witness_d4(long long g) {
  if (g < 7 || g % 3 != 1)
    throw std::invalid_argument("witness_d4: need g >= 7 with g = 1 mod 3");
  long long m = (g - 1) / 3 + 2;
  auto p = Polygon::from_vertices(
      {{2, 0}, {m, 0}, {m, 2}, {m - 2, 4}, {0, 4}, {0, 2}});
  if (genus(p) != g || expected_gonality(p) != 4 ||
      moduli_dim(p) != upper_bound_U(g, 4).floor())
    throw std::logic_error("witness_d4: postcondition failed");
  return p;
}

Polygon witness_d5(long long g) {
  if (g < 12) throw std::invalid_argument("witness_d5: need g >= 12");
  long long ne = 0, sw = 0, m = 0;
  switch (g % 4) {
    case 0: m = (g + 4) / 4 + 1; ne = 3; sw = 2; break;
    case 1: m = (g + 3) / 4 + 1; ne = 3; sw = 0; break;
    case 2: m = (g + 2) / 4 + 1; ne = 2; sw = 2; break;
    default: m = (g + 1) / 4 + 1; ne = 2; sw = 0; break;
  }
  std::vector<Point> vs;
  if (sw > 0) {
    vs.push_back({sw, 0});
    vs.push_back({0, sw});
  } else {
    vs.push_back({0, 0});
  }
  vs.push_back({m, 0});
  vs.push_back({m, 5 - ne});
  vs.push_back({m - ne, 5});
  vs.push_back({0, 5});
  auto p = Polygon::convex_hull(vs);
  if (genus(p) != g || expected_gonality(p) != 5 ||
      moduli_dim(p) != upper_bound_U(g, 5).floor() - 1)
    throw std::logic_error("witness_d5: postcondition failed");
  return p;
}

long long hyperelliptic_locus_dim(long long g) {
  if (g < 2) throw std::invalid_argument("hyperelliptic_locus_dim: g >= 2");
  return 2 * g - 1;
}

long long trigonal_locus_dim(long long g) {
  if (g < 3) throw std::invalid_argument("trigonal_locus_dim: g >= 3");
  return 2 * g + 1;
}

std::vector<std::string> verify_U_properties(long long d, long long g_lo,
                                             long long g_hi) {
  if (d < 3) throw std::invalid_argument("verify_U_properties: d >= 3");
  std::vector<std::string> out;
  for (long long g = g_lo; g <= g_hi; ++g) {
    // U(g, 2 sqrt(g+2)) <= U(g, d+1) reduces to two integer inequalities:
    // 2 sqrt(g+2) - 1 - d > 0, and g >= d (2 sqrt(g+2) - 1), the latter
    // squared to (g+d)^2 >= 4 d^2 (g+2).
    bool factor_pos = (d + 1) * (d + 1) < 4 * (g + 2);
    bool main = (g + d) * (g + d) >= 4 * d * d * (g + 2);
    if (!(factor_pos && main))
      out.push_back("U comparison fails at d=" + std::to_string(d) +
                    " g=" + std::to_string(g));
  }
  return out;
}

bool width_bound_holds(const Polygon& p) {
  long long lw = lattice_width(p).width;
  return lw * lw <= 4 * (genus(p) + 2);
}

}  // namespace tropgon
