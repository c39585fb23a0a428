#pragma once

#include <cstdint>
#include <vector>

#include "tropgon/geometry.hpp"
#include "tropgon/polygon.hpp"

namespace testutil {

// Deterministic xorshift; fixtures must not depend on libc rand.
struct Rng {
  uint64_t s;
  explicit Rng(uint64_t seed) : s(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  uint64_t next() {
    s ^= s << 13; s ^= s >> 7; s ^= s << 17;
    return s;
  }
  long long below(long long n) { return (long long)(next() % (uint64_t)n); }
  long long range(long long lo, long long hi) { return lo + below(hi - lo + 1); }
};

// Random unimodular affine map with matrix entries in [-5, 5].
inline tropgon::AffineMap random_unimodular(Rng& rng) {
  for (;;) {
    long long a = rng.range(-5, 5), b = rng.range(-5, 5);
    long long c = rng.range(-5, 5), d = rng.range(-5, 5);
    long long det = a * d - b * c;
    if (det != 1 && det != -1) continue;
    tropgon::Point t{rng.range(-5, 5), rng.range(-5, 5)};
    return tropgon::AffineMap(a, b, c, d, t);
  }
}

inline tropgon::Polygon random_polygon(Rng& rng, long long span, int npts) {
  std::vector<tropgon::Point> pts;
  for (int i = 0; i < npts; ++i)
    pts.push_back({rng.range(0, span), rng.range(0, span)});
  return tropgon::Polygon::convex_hull(pts);
}

}  // namespace testutil
