#include "tropgon/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace tropgon {

Json polygon_to_json(const Polygon& p) {
  Json verts = Json::array();
  for (const auto& v : p.vertices()) verts.push_back({v.x, v.y});
  return Json{{"vertices", verts}};
}

Polygon polygon_from_json(const Json& j) {
  if (!j.contains("vertices") || !j["vertices"].is_array())
    throw std::invalid_argument("polygon JSON: missing \"vertices\" array");
  std::vector<Point> pts;
  for (const auto& v : j["vertices"]) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() ||
        !v[1].is_number_integer())
      throw std::invalid_argument("polygon JSON: vertex must be [x, y] integers");
    pts.push_back({v[0].get<long long>(), v[1].get<long long>()});
  }
  return Polygon::from_vertices(pts);
}

Json graph_to_json(const MultiGraph& g) {
  Json edges = Json::array();
  for (const auto& [a, b] : g.edges) edges.push_back({a, b});
  return Json{{"n", g.n}, {"edges", edges}};
}

MultiGraph graph_from_json(const Json& j) {
  if (!j.contains("n") || !j.contains("edges"))
    throw std::invalid_argument("graph JSON: need \"n\" and \"edges\"");
  MultiGraph g;
  g.n = j["n"].get<int>();
  for (const auto& e : j["edges"]) {
    int a = e[0].get<int>(), b = e[1].get<int>();
    if (a < 0 || b < 0 || a >= g.n || b >= g.n)
      throw std::invalid_argument("graph JSON: edge endpoint out of range");
    g.edges.push_back({a, b});
  }
  return g;
}

Json scramble_to_json(const Scramble& s) {
  Json eggs = Json::array();
  for (const auto& egg : s.eggs) eggs.push_back(egg);
  return Json{{"eggs", eggs}};
}

Scramble scramble_from_json(const Json& j) {
  if (!j.contains("eggs"))
    throw std::invalid_argument("scramble JSON: need \"eggs\"");
  Scramble s;
  for (const auto& egg : j["eggs"])
    s.eggs.push_back(egg.get<std::vector<int>>());
  return s;
}

Json triangulation_to_json(const Subdivision& t) {
  Json pts = Json::array();
  for (const auto& p : t.ps.points) pts.push_back({p.x, p.y});
  Json cells = Json::array();
  for (const auto& c : t.cells) cells.push_back(c);
  return Json{{"points", pts}, {"cells", cells}};
}

Subdivision triangulation_from_json(const Json& j) {
  if (!j.contains("points") || !j.contains("cells"))
    throw std::invalid_argument(
        "triangulation JSON: need \"points\" and \"cells\"");
  std::vector<Point> pts;
  for (const auto& p : j["points"])
    pts.push_back({p[0].get<long long>(), p[1].get<long long>()});
  auto ps = make_point_set(Polygon::convex_hull(pts));
  Subdivision out;
  out.ps = ps;
  for (const auto& c : j["cells"]) {
    std::vector<int> cell;
    for (const auto& idx : c) {
      int i = idx.get<int>();
      if (i < 0 || i >= (int)pts.size())
        throw std::invalid_argument("triangulation JSON: cell index out of range");
      int mapped = ps.index_of(pts[i]);
      if (mapped < 0)
        throw std::invalid_argument("triangulation JSON: point not in polygon");
      cell.push_back(mapped);
    }
    out.cells.push_back(cell);
  }
  return out;
}

Json rat_to_json(const Rat& r) {
  return Json{{"num", r.num()}, {"den", r.den()}};
}

Json invariants_to_json(const PolygonInvariants& inv) {
  return Json{{"genus", inv.genus},
              {"boundary_points", inv.boundary_points},
              {"area_doubled", inv.area_doubled},
              {"lattice_width", inv.lattice_width},
              {"width_direction", {inv.width_direction.x, inv.width_direction.y}},
              {"column_count", inv.column_count},
              {"expected_gonality", inv.expected_gonality},
              {"hyperelliptic", inv.hyperelliptic},
              {"maximal", inv.maximal}};
}

Json dim_report_to_json(const DimReport& rep) {
  return Json{{"genus", rep.genus},
              {"boundary", rep.boundary},
              {"columns", rep.columns},
              {"dim", rep.dim},
              {"egon", rep.egon},
              {"upper_bound", rat_to_json(rep.upper_bound)},
              {"witnesses", rep.witnesses}};
}

Json certificate_to_json(const GonalityCertificate& cert) {
  Json j{{"lower", cert.lower},
         {"upper", cert.upper},
         {"lower_witness", cert.lower_witness},
         {"upper_witness", cert.upper_witness}};
  if (cert.exact()) j["gonality"] = cert.lower;
  return j;
}

Json corpus_to_json(const Corpus& corpus) {
  Json entries = Json::array();
  for (const auto& e : corpus.entries) {
    Json je = polygon_to_json(e.polygon);
    je["invariants"] = invariants_to_json(e.inv);
    je["moduli_dim"] = e.dim;
    entries.push_back(je);
  }
  return Json{{"genus", corpus.genus},
              {"count", corpus.entries.size()},
              {"polygons", entries}};
}

std::string skeleton_to_dot(const MultiGraph& g) {
  std::ostringstream out;
  out << "graph skeleton {\n";
  for (int v = 0; v < g.n; ++v) out << "  v" << v << ";\n";
  for (const auto& [a, b] : g.edges)
    out << "  v" << a << " -- v" << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace tropgon
