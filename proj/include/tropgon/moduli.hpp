#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tropgon/polygon.hpp"
#include "tropgon/rational.hpp"

namespace tropgon {

// dim(M_P) = g + r - 3 - c for maximal non-hyperelliptic P.
long long moduli_dim(const Polygon& p);

// U(g,d) = g + 2g/(d-1) + 2d - 3, exact.
Rat upper_bound_U(long long g, long long d);

enum class Corner { NW = 0, NE = 1, SE = 2, SW = 3 };

struct Cut {
  long long x = 0;  // horizontal leg
  long long y = 0;  // vertical leg; x = 0 iff y = 0 (no cut)
  Corner corner = Corner::NW;
  bool is_cut() const { return x >= 1 && y >= 1; }
  bool is_short(long long d) const { return is_cut() && y != d; }
};

struct Truncation {
  long long d = 0;           // strip height
  long long rect_left = 0;   // bounding rectangle x-range
  long long rect_right = 0;
  long long a = 0;           // top edge lattice length
  long long b = 0;           // bottom edge lattice length
  std::array<Cut, 4> cuts;   // NW, NE, SE, SW
  Polygon trunc_polygon = Polygon::from_vertices({{0, 0}});
  Polygon normalized = Polygon::from_vertices({{0, 0}});  // strip image of P
};

// Width-direction strip normalization: image of P inside R x [0, d] with the
// shear fixed so x_min of row 0 is <= x_min of row d (ties toward ell = 0).
// map_out, when given, receives the applied transformation.
Polygon strip_normalize(const Polygon& p, long long* d_out = nullptr,
                        AffineMap* map_out = nullptr);

Truncation truncate(const Polygon& p);

// X_i = (x(y - d) - (y - gcd(x,y))) / (d-1); requires x,y >= 1 and d >= 2.
Rat cut_penalty(long long x, long long y, long long d);

struct DimReport {
  long long genus = 0;
  long long boundary = 0;
  long long columns = 0;
  long long dim = 0;
  long long egon = 0;
  Rat upper_bound;
  std::vector<std::string> witnesses;
};

// Asserts dim <= floor(U(g, egon)); a violation throws (a falsification of
// the bound, never expected).
DimReport check_dim_bound(const Polygon& p);

// Leftmost x0 such that columns x0..x0+d are full of interior points on rows
// 1..d-1. P must already sit in the strip R x [0, d].
std::optional<long long> find_crystal(const Polygon& p, long long d);

// Scans shears |ell| bounded by the horizontal extent for an image of P with
// a crystal; requires rows 1 and d-1 to carry >= 2d-2 interior points each.
std::optional<Polygon> shear_to_crystal(const Polygon& p, long long d);

// [(g-1)/3+2] x 4 rectangle minus two antipodal 2-sigma corners;
// g >= 7, g = 1 mod 3. Reaches dim = floor(U(g,4)).
Polygon witness_d4(long long g);

// Truncated 5-row rectangle with cuts chosen by g mod 4; g >= 12.
// Reaches dim = floor(U(g,5)) - 1.
Polygon witness_d5(long long g);

long long hyperelliptic_locus_dim(long long g);  // 2g - 1, g >= 2
long long trigonal_locus_dim(long long g);       // 2g + 1, g >= 3

// Exact check of U(g, 2 sqrt(g+2)) <= U(g, d+1) over a genus range
// (square-root comparisons done by squaring). Returns falsification
// messages; empty means every case holds.
std::vector<std::string> verify_U_properties(long long d, long long g_lo,
                                             long long g_hi);

// lw(P)^2 <= 4 (g + 2), exact.
bool width_bound_holds(const Polygon& p);

}  // namespace tropgon
