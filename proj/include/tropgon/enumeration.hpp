#pragma once

#include <map>
#include <vector>

#include "tropgon/polygon.hpp"

namespace tropgon {

struct CorpusEntry {
  Polygon polygon = Polygon::from_vertices({{0, 0}});  // canonical form
  PolygonInvariants inv;
  long long dim = 0;  // dim(M_P)
};

struct Corpus {
  long long genus = 0;
  std::vector<CorpusEntry> entries;  // ordered by canonical vertex list

  // Entries grouped by expected gonality.
  std::map<long long, std::vector<const CorpusEntry*>> by_egon() const {
    std::map<long long, std::vector<const CorpusEntry*>> out;
    for (const auto& e : entries) out[e.inv.expected_gonality].push_back(&e);
    return out;
  }
};

// All two-dimensional convex lattice point sets with exactly g lattice
// points, up to unimodular equivalence, as canonical hull polygons.
// Generated by column-interval backtracking with concave/convex profiles.
std::vector<Polygon> enumerate_interior_candidates(long long g,
                                                   long long cap = 8);

// Maximal non-hyperelliptic polygons of genus g up to equivalence: the
// lattice relaxations of the interior candidates.
Corpus enumerate_maximal(long long g, long long cap = 8);

// Table row for g in {2,...,6,8}: d=2 from the hyperelliptic closed form,
// d>=3 the maximum moduli dimension among corpus polygons of that expected
// gonality. Absent keys mean the locus is empty.
std::map<long long, long long> table_row(long long g);

}  // namespace tropgon
