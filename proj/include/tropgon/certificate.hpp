#pragma once

#include <string>

#include "tropgon/beehive.hpp"
#include "tropgon/polygon.hpp"
#include "tropgon/subdivision.hpp"

namespace tropgon {

// Sandwich certificate for the gonality of skeletons dual to t: a scramble
// (or exact computation) from below against the expected gonality (or exact
// computation) from above.
struct GonalityCertificate {
  long long lower = 1;
  long long upper = 0;
  std::string lower_witness;
  std::string upper_witness;
  bool exact() const { return lower == upper; }
};

GonalityCertificate gonality_certificate(const Polygon& p,
                                         const Subdivision& t,
                                         int gonality_cap = 14);

}  // namespace tropgon
