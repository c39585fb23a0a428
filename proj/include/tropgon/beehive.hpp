#pragma once

#include <optional>

#include "tropgon/subdivision.hpp"

namespace tropgon {

// Beehive triangulation of a maximal non-hyperelliptic polygon: contains all
// boundary edges of P^(1), joins each interior vertex to its apex, and
// maximizes doubly-connected boundary points per ring cell. The interior is
// triangulated through the separable quadratic lift, so crystal unit squares
// survive as pairs of triangles. Built on the strip-normalized image and
// pulled back, so the result triangulates P itself.
Subdivision build_beehive(const Polygon& p);

// As above but in strip coordinates; exposes the normalized polygon so crystal
// machinery can read off columns. crystal_x0 is set when a crystal was found
// (after the shear scan).
struct NormalizedBeehive {
  Polygon normalized = Polygon::from_vertices({{0, 0}});
  long long d = 0;
  std::optional<long long> crystal_x0;
  Subdivision triangulation;
};
NormalizedBeehive build_beehive_normalized(const Polygon& p);

bool is_beehive(const Subdivision& t, const Polygon& p);

}  // namespace tropgon
