#pragma once

#include <optional>
#include <vector>

#include "tropgon/graph.hpp"
#include "tropgon/subdivision.hpp"

namespace tropgon {

// A collection of connected vertex subsets (eggs).
struct Scramble {
  std::vector<std::vector<int>> eggs;
};

struct ScrambleOrder {
  long long hitting = 0;
  std::optional<long long> egg_cut;  // nullopt = no egg-cut exists (+infinity)
  long long order = 0;               // min of the two
};

// Exact order: minimum hitting set by branch and bound, minimum egg-cut by
// max-flow between contracted disjoint egg pairs.
ScrambleOrder scramble_order(const MultiGraph& g, const Scramble& s);

// Minimum edge cut separating vertex sets a and b (contracted), unit
// capacity per parallel edge.
long long min_edge_cut(const MultiGraph& g, const std::vector<int>& a,
                       const std::vector<int>& b);

// Brute-force egg-cut by scanning all bipartitions; for cross-checks on
// small graphs.
std::optional<long long> egg_cut_bruteforce(const MultiGraph& g,
                                            const Scramble& s);

// Searches for a scramble of order >= target with connected eggs of at most
// max_egg_size vertices: first disjoint families (hitting number = family
// size), then, on small candidate sets, every family.
std::optional<Scramble> search_scramble(const MultiGraph& g, long long target,
                                        int max_egg_size, int vertex_cap = 24);

// The d eggs of the crystal strip: per column, the triangles inside
// [x_{i-1}, x_i] x [1, d-1] plus the ones immediately above and below.
// Lives on the dual restricted to the strip [x0, x0+d].
struct CrystalScramble {
  MultiGraph strip_dual;
  Scramble scramble;
  std::vector<int> strip_cells;  // triangulation cell ids, parallel to dual
};
CrystalScramble crystal_scramble(const Subdivision& t, long long x0,
                                 long long d);

}  // namespace tropgon
