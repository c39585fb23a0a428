#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "tropgon/rational.hpp"

namespace tropgon {

// A lattice point of Z^2. Also used for integer direction vectors.
struct Point {
  long long x = 0;
  long long y = 0;

  friend bool operator==(const Point& a, const Point& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
  friend bool operator<(const Point& a, const Point& b) {
    return std::tie(a.x, a.y) < std::tie(b.x, b.y);
  }
  friend Point operator+(const Point& a, const Point& b) {
    return {a.x + b.x, a.y + b.y};
  }
  friend Point operator-(const Point& a, const Point& b) {
    return {a.x - b.x, a.y - b.y};
  }
  Point operator-() const { return {-x, -y}; }
};

inline long long cross(const Point& a, const Point& b) {
  return a.x * b.y - a.y * b.x;
}

inline long long dot(const Point& a, const Point& b) {
  return a.x * b.x + a.y * b.y;
}

// gcd of |a|,|b| with gcd(0,0) = 0.
inline long long gcd_ll(long long a, long long b) {
  return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

inline Point primitive(const Point& v) {
  long long g = gcd_ll(v.x, v.y);
  if (g == 0) throw std::invalid_argument("primitive: zero vector");
  return {v.x / g, v.y / g};
}

// Rational point, used for half-plane intersections (relaxed polygons).
struct RatPoint {
  Rat x;
  Rat y;
  bool is_lattice() const { return x.is_integer() && y.is_integer(); }
  friend bool operator==(const RatPoint& a, const RatPoint& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator<(const RatPoint& a, const RatPoint& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  }
};

// Z-affine transformation p -> A p + b with |det A| = 1.
class AffineMap {
 public:
  AffineMap() : a_{{1, 0, 0, 1}}, t_{0, 0} {}
  AffineMap(long long a, long long b, long long c, long long d, Point t)
      : a_{{a, b, c, d}}, t_(t) {
    if (det() != 1 && det() != -1)
      throw std::invalid_argument("AffineMap: matrix is not unimodular");
  }

  static AffineMap shear(long long ell) { return AffineMap(1, ell, 0, 1, {0, 0}); }
  static AffineMap translation(Point t) { return AffineMap(1, 0, 0, 1, t); }

  long long det() const { return a_[0] * a_[3] - a_[1] * a_[2]; }

  Point apply(const Point& p) const {
    return {a_[0] * p.x + a_[1] * p.y + t_.x, a_[2] * p.x + a_[3] * p.y + t_.y};
  }

  AffineMap then(const AffineMap& m) const {
    // (m o this)(p) = M_m (M_this p + t_this) + t_m
    long long a = m.a_[0] * a_[0] + m.a_[1] * a_[2];
    long long b = m.a_[0] * a_[1] + m.a_[1] * a_[3];
    long long c = m.a_[2] * a_[0] + m.a_[3] * a_[2];
    long long d = m.a_[2] * a_[1] + m.a_[3] * a_[3];
    return AffineMap(a, b, c, d, m.apply(t_));
  }

  AffineMap inverse() const {
    long long s = det();  // +-1
    long long a = s * a_[3], b = -s * a_[1], c = -s * a_[2], d = s * a_[0];
    AffineMap lin(a, b, c, d, {0, 0});
    Point ti = lin.apply(t_);
    return AffineMap(a, b, c, d, {-ti.x, -ti.y});
  }

  const std::array<long long, 4>& matrix() const { return a_; }
  const Point& translation() const { return t_; }

 private:
  std::array<long long, 4> a_;  // row major: [a b; c d]
  Point t_;
};

}  // namespace tropgon
