#pragma once

#include <utility>
#include <vector>

#include "tropgon/subdivision.hpp"

namespace tropgon {

// Finite multigraph; loops (u == v) and parallel edges allowed.
struct MultiGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  long long degree(int v) const;  // a loop contributes 2
  bool connected() const;
  long long betti() const;  // E - V + #components
  bool trivalent() const;
};

// One vertex per triangle, one edge per shared interior edge of t (boundary
// edges contribute nothing). Requires a unimodular triangulation.
MultiGraph dual_graph(const Subdivision& t);

// Leaf pruning followed by suppression of 2-valent vertices; an isolated
// cycle collapses to one vertex with a loop. Vertices are reindexed.
MultiGraph skeleton(const MultiGraph& g);

// Canonical loopless model: each loop is subdivided into a pair of parallel
// edges (the inserted vertex keeps degree 2 with the same neighbor twice).
MultiGraph loopless_model(const MultiGraph& g);

// The 3-cube graph, vertices 0..7 indexed by binary coordinates.
MultiGraph cube_graph();
MultiGraph cycle_graph(int n);
MultiGraph path_graph(int n);

bool graphs_isomorphic(const MultiGraph& a, const MultiGraph& b);

}  // namespace tropgon
