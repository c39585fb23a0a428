#include "tropgon/enumeration.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "tropgon/moduli.hpp"

namespace tropgon {

namespace {

// Column profiles: intervals [lo_x, hi_x], occupied columns consecutive,
// upper profile concave and lower profile convex. These are exactly the
// convex lattice point sets.
void profile_search(long long g, long long remaining, long long x,
                    std::vector<long long>& lo, std::vector<long long>& hi,
                    std::set<std::vector<Point>>& seen,
                    std::vector<Polygon>& out) {
  if (remaining == 0) {
    std::vector<Point> pts;
    for (size_t i = 0; i < lo.size(); ++i)
      for (long long y = lo[i]; y <= hi[i]; ++y)
        pts.push_back({(long long)i, y});
    auto hull = Polygon::convex_hull(pts);
    if (hull.dimension() != 2) return;
    if ((long long)hull.lattice_points().size() != g) return;  // non-convex profile
    auto canon = canonical_form(hull);
    if (seen.insert(canon.vertices()).second) out.push_back(canon);
    return;
  }
  if (x > g) return;
  long long span = 2 * g + 2;
  for (long long l = -span; l <= span; ++l) {
    // Lattice convexity rounds the hull boundary, so the profile second
    // differences may dip one unit below true convexity.
    if (x >= 2 && (l - lo[x - 1]) < (lo[x - 1] - lo[x - 2]) - 1) continue;
    for (long long h = l; h <= l + remaining - 1; ++h) {
      if (x >= 2 && (h - hi[x - 1]) > (hi[x - 1] - hi[x - 2]) + 1) continue;
      long long count = h - l + 1;
      if (count > remaining) break;
      lo.push_back(l);
      hi.push_back(h);
      profile_search(g, remaining - count, x + 1, lo, hi, seen, out);
      lo.pop_back();
      hi.pop_back();
    }
  }
}

}  // namespace

std::vector<Polygon> enumerate_interior_candidates(long long g, long long cap) {
  if (g < 1 || g > cap)
    throw std::invalid_argument("enumerate_interior_candidates: genus cap exceeded");
  std::vector<Polygon> out;
  if (g < 3) return out;  // no two-dimensional set with fewer than 3 points
  std::set<std::vector<Point>> seen;
  // First column normalized to lo = 0.
  for (long long c0 = 1; c0 <= g; ++c0) {
    std::vector<long long> lo{0}, hi{c0 - 1};
    profile_search(g, g - c0, 1, lo, hi, seen, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Corpus enumerate_maximal(long long g, long long cap) {
  auto candidates = enumerate_interior_candidates(g, cap);
  std::set<std::vector<Point>> seen;
  Corpus corpus;
  corpus.genus = g;
  for (const auto& q : candidates) {
    auto r = relax(q);
    if (!r) continue;  // relaxation is not a lattice polygon
    auto p = canonical_form(*r);
    if (!seen.insert(p.vertices()).second) continue;
    CorpusEntry e;
    e.polygon = p;
    e.inv = invariants(p);
    if (e.inv.genus != g || !e.inv.maximal || e.inv.hyperelliptic)
      throw std::logic_error("enumerate_maximal: postcondition failed");
    e.dim = moduli_dim(p);
    corpus.entries.push_back(e);
  }
  std::sort(corpus.entries.begin(), corpus.entries.end(),
            [](const CorpusEntry& a, const CorpusEntry& b) {
              return a.polygon < b.polygon;
            });
  return corpus;
}

std::map<long long, long long> table_row(long long g) {
  static const std::set<long long> supported{2, 3, 4, 5, 6, 8};
  if (!supported.count(g))
    throw std::invalid_argument("table_row: unsupported genus");
  std::map<long long, long long> row;
  row[2] = hyperelliptic_locus_dim(g);
  auto corpus = enumerate_maximal(g);
  for (const auto& e : corpus.entries) {
    long long d = e.inv.expected_gonality;
    auto it = row.find(d);
    if (it == row.end() || it->second < e.dim) row[d] = e.dim;
  }
  return row;
}

}  // namespace tropgon
