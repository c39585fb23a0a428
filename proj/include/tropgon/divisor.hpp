#pragma once

#include <vector>

#include "tropgon/graph.hpp"

namespace tropgon {

// Chip configuration on the vertices of a MultiGraph.
struct Divisor {
  std::vector<long long> chips;

  long long degree() const {
    long long s = 0;
    for (long long c : chips) s += c;
    return s;
  }
};

// The unique q-reduced divisor equivalent to d. Loops are ignored for
// firing; parallel edges count with multiplicity.
Divisor reduce_divisor(const MultiGraph& g, Divisor d, int q);

// True iff every q-reduced form of d keeps at least one chip at q.
bool has_positive_rank(const MultiGraph& g, const Divisor& d);

// Least degree of a positive-rank effective divisor, by exhaustion over
// chip multisets on the canonical loopless model. Throws when the model
// exceeds the vertex cap (never a silent wrong answer).
long long gonality(const MultiGraph& g, int vertex_cap = 14);

}  // namespace tropgon
