#pragma once

#include <string>

#include <json.hpp>

#include "tropgon/certificate.hpp"
#include "tropgon/enumeration.hpp"
#include "tropgon/graph.hpp"
#include "tropgon/moduli.hpp"
#include "tropgon/polygon.hpp"
#include "tropgon/scramble.hpp"
#include "tropgon/subdivision.hpp"

namespace tropgon {

// Ordered JSON throughout so identical inputs serialize byte-identically.
using Json = nlohmann::ordered_json;

Json polygon_to_json(const Polygon& p);        // {"vertices": [[x,y],...]}
Polygon polygon_from_json(const Json& j);      // accepts any vertex order

Json graph_to_json(const MultiGraph& g);       // {"n": k, "edges": [[u,v],...]}
MultiGraph graph_from_json(const Json& j);

Json scramble_to_json(const Scramble& s);      // {"eggs": [[v,...],...]}
Scramble scramble_from_json(const Json& j);

Json triangulation_to_json(const Subdivision& t);
Subdivision triangulation_from_json(const Json& j);

Json rat_to_json(const Rat& r);                // {"num": n, "den": d}

Json invariants_to_json(const PolygonInvariants& inv);
Json dim_report_to_json(const DimReport& rep);
Json certificate_to_json(const GonalityCertificate& cert);
Json corpus_to_json(const Corpus& corpus);

std::string skeleton_to_dot(const MultiGraph& g);

}  // namespace tropgon
