#include "tropgon/certificate.hpp"

#include <stdexcept>

#include "tropgon/divisor.hpp"
#include "tropgon/graph.hpp"
#include "tropgon/moduli.hpp"
#include "tropgon/scramble.hpp"

namespace tropgon {

// The certificate is about every metric graph dual to t, so both sides must
// hold for arbitrary edge lengths: the upper bound is the expected gonality
// of the Newton polygon, the lower bound comes from scramble number (which
// bounds the gonality of any metric realization) or from the tree /
// hyperelliptic exclusions. The exact vertex-supported gonality of the
// skeleton only ever tightens the upper bound.
GonalityCertificate gonality_certificate(const Polygon& p,
                                         const Subdivision& t,
                                         int gonality_cap) {
  GonalityCertificate cert;
  cert.upper = expected_gonality(p);
  cert.upper_witness = "expected gonality of the Newton polygon";

  auto skel = skeleton(dual_graph(t));
  auto model = loopless_model(skel);

  if (model.n <= gonality_cap) {
    long long exact = gonality(skel, gonality_cap);
    if (exact < cert.upper) {
      cert.upper = exact;
      cert.upper_witness = "vertex-supported divisor of degree " +
                           std::to_string(exact) + " with positive rank";
    }
  }

  // Crystal scramble first when t is the canonical beehive and a crystal
  // exists; it is the constructive witness.
  if (genus(p) >= 2 && !is_hyperelliptic_polygon(p) && is_maximal(p)) {
    auto nb = build_beehive_normalized(p);
    if (nb.crystal_x0 && build_beehive(p) == t) {
      auto cs = crystal_scramble(nb.triangulation, *nb.crystal_x0, nb.d);
      auto ord = scramble_order(cs.strip_dual, cs.scramble);
      if (ord.order > cert.lower) {
        cert.lower = ord.order;
        cert.lower_witness = "crystal scramble of order " +
                             std::to_string(ord.order) +
                             " on the strip-restricted dual";
      }
    }
  }
  if (cert.lower > cert.upper)
    throw std::logic_error("gonality_certificate: bounds crossed");
  if (cert.lower == cert.upper) return cert;

  // Away from trees, gonality is at least 2; a non-hyperelliptic polygon
  // only produces non-hyperelliptic skeletons, pushing the bound to 3.
  if (skel.betti() >= 1 && cert.lower < 2) {
    cert.lower = 2;
    cert.lower_witness = "skeleton is not a tree";
  }
  if (genus(p) >= 2 && !is_hyperelliptic_polygon(p) && cert.lower < 3) {
    cert.lower = 3;
    cert.lower_witness =
        "non-hyperelliptic polygon: the skeleton is neither a tree nor "
        "hyperelliptic";
  }
  if (cert.lower > cert.upper)
    throw std::logic_error("gonality_certificate: bounds crossed");
  if (cert.lower == cert.upper) return cert;

  // General scramble search on the loopless model.
  if (model.n <= 24) {
    if (auto s = search_scramble(model, cert.upper, 2)) {
      auto ord = scramble_order(model, *s);
      if (ord.order > cert.lower) {
        cert.lower = ord.order;
        cert.lower_witness =
            "scramble of order " + std::to_string(ord.order) + " with " +
            std::to_string(s->eggs.size()) + " eggs";
      }
    }
  }
  if (cert.lower > cert.upper)
    throw std::logic_error("gonality_certificate: bounds crossed");
  return cert;
}

}  // namespace tropgon
