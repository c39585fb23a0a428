// Python bindings for the main operations: polygon invariants, moduli
// dimensions, beehive triangulations, skeletons, and gonality certificates.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tropgon/beehive.hpp"
#include "tropgon/certificate.hpp"
#include "tropgon/divisor.hpp"
#include "tropgon/enumeration.hpp"
#include "tropgon/graph.hpp"
#include "tropgon/moduli.hpp"
#include "tropgon/scramble.hpp"
#include "tropgon/subdivision.hpp"
#include "tropgon/verify.hpp"

namespace py = pybind11;

namespace {

using Verts = std::vector<std::pair<long long, long long>>;

tropgon::Polygon to_polygon(const Verts& vs) {
  std::vector<tropgon::Point> pts;
  for (const auto& [x, y] : vs) pts.push_back({x, y});
  return tropgon::Polygon::from_vertices(pts);
}

Verts from_polygon(const tropgon::Polygon& p) {
  Verts out;
  for (const auto& v : p.vertices()) out.push_back({v.x, v.y});
  return out;
}

tropgon::MultiGraph to_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  tropgon::MultiGraph g;
  g.n = n;
  g.edges = edges;
  return g;
}

py::dict invariants_dict(const tropgon::PolygonInvariants& inv) {
  py::dict d;
  d["genus"] = inv.genus;
  d["boundary_points"] = inv.boundary_points;
  d["area_doubled"] = inv.area_doubled;
  d["lattice_width"] = inv.lattice_width;
  d["width_direction"] = std::make_pair(inv.width_direction.x, inv.width_direction.y);
  d["column_count"] = inv.column_count;
  d["expected_gonality"] = inv.expected_gonality;
  d["hyperelliptic"] = inv.hyperelliptic;
  d["maximal"] = inv.maximal;
  return d;
}

py::tuple triangulation_tuple(const tropgon::Subdivision& t) {
  Verts pts;
  for (const auto& p : t.ps.points) pts.push_back({p.x, p.y});
  return py::make_tuple(pts, t.cells);
}

}  // namespace

PYBIND11_MODULE(_tropgon, m) {
  m.doc() = "lattice polygon invariants, tropical skeletons, and gonality";

  m.def("analyze", [](const Verts& vs) {
    return invariants_dict(tropgon::invariants(to_polygon(vs)));
  }, py::arg("vertices"));

  m.def("canonical_form", [](const Verts& vs) {
    return from_polygon(tropgon::canonical_form(to_polygon(vs)));
  });

  m.def("relax", [](const Verts& vs) -> py::object {
    auto r = tropgon::relax(to_polygon(vs));
    if (!r) return py::none();
    return py::cast(from_polygon(*r));
  });

  m.def("interior_polygon", [](const Verts& vs) -> py::object {
    auto q = tropgon::interior_polygon(to_polygon(vs));
    if (!q) return py::none();
    return py::cast(from_polygon(*q));
  });

  m.def("moduli_dim", [](const Verts& vs) {
    return tropgon::moduli_dim(to_polygon(vs));
  });

  m.def("upper_bound_U", [](long long g, long long d) {
    auto u = tropgon::upper_bound_U(g, d);
    return std::make_pair(u.num(), u.den());
  });

  m.def("cut_penalty", [](long long x, long long y, long long d) {
    auto v = tropgon::cut_penalty(x, y, d);
    return std::make_pair(v.num(), v.den());
  });

  m.def("witness_d4", [](long long g) {
    return from_polygon(tropgon::witness_d4(g));
  });
  m.def("witness_d5", [](long long g) {
    return from_polygon(tropgon::witness_d5(g));
  });
  m.def("hyperelliptic_locus_dim", &tropgon::hyperelliptic_locus_dim);
  m.def("trigonal_locus_dim", &tropgon::trigonal_locus_dim);

  m.def("truncate", [](const Verts& vs) {
    auto tr = tropgon::truncate(to_polygon(vs));
    py::dict d;
    d["d"] = tr.d;
    d["a"] = tr.a;
    d["b"] = tr.b;
    std::vector<std::pair<long long, long long>> cuts;
    for (const auto& c : tr.cuts)
      if (c.is_cut()) cuts.push_back({c.x, c.y});
    d["cuts"] = cuts;
    return d;
  });

  m.def("find_crystal", [](const Verts& vs, long long d) -> py::object {
    auto x0 = tropgon::find_crystal(to_polygon(vs), d);
    if (!x0) return py::none();
    return py::cast(*x0);
  });

  m.def("enumerate_maximal", [](long long g, long long cap) {
    auto corpus = tropgon::enumerate_maximal(g, cap);
    py::list out;
    for (const auto& e : corpus.entries) {
      py::dict d = invariants_dict(e.inv);
      d["vertices"] = from_polygon(e.polygon);
      d["moduli_dim"] = e.dim;
      out.append(d);
    }
    return out;
  }, py::arg("genus"), py::arg("cap") = 8);

  m.def("table_row", [](long long g) {
    py::dict out;
    for (const auto& [d, v] : tropgon::table_row(g))
      out[py::int_(d)] = v;
    return out;
  });

  m.def("build_beehive", [](const Verts& vs) {
    return triangulation_tuple(tropgon::build_beehive(to_polygon(vs)));
  });

  m.def("skeleton_of", [](const Verts& vs) {
    auto skel = tropgon::skeleton(
        tropgon::dual_graph(tropgon::build_beehive(to_polygon(vs))));
    return py::make_tuple(skel.n, skel.edges);
  }, "skeleton of the beehive triangulation of the polygon");

  m.def("betti", [](int n, const std::vector<std::pair<int, int>>& edges) {
    return to_graph(n, edges).betti();
  });

  m.def("gonality", [](int n, const std::vector<std::pair<int, int>>& edges,
                       int cap) {
    return tropgon::gonality(to_graph(n, edges), cap);
  }, py::arg("n"), py::arg("edges"), py::arg("cap") = 14);

  m.def("scramble_order", [](int n, const std::vector<std::pair<int, int>>& edges,
                             const std::vector<std::vector<int>>& eggs) {
    auto ord = tropgon::scramble_order(to_graph(n, edges), tropgon::Scramble{eggs});
    return ord.order;
  });

  m.def("certify", [](const Verts& vs, int cap) {
    auto p = to_polygon(vs);
    auto cert = tropgon::gonality_certificate(p, tropgon::build_beehive(p), cap);
    py::dict d;
    d["lower"] = cert.lower;
    d["upper"] = cert.upper;
    d["lower_witness"] = cert.lower_witness;
    d["upper_witness"] = cert.upper_witness;
    d["exact"] = cert.exact();
    return d;
  }, py::arg("vertices"), py::arg("cap") = 14);

  m.def("verify", [](long long max_genus, int cap, int jobs) {
    tropgon::VerifyOptions opt;
    opt.max_genus = max_genus;
    opt.gonality_cap = cap;
    opt.jobs = jobs;
    py::list out;
    for (const auto& r : tropgon::run_verification(opt)) {
      py::dict d;
      d["name"] = r.name;
      d["pass"] = r.pass;
      d["failures"] = r.failures;
      out.append(d);
    }
    return out;
  }, py::arg("max_genus") = 8, py::arg("cap") = 14, py::arg("jobs") = 1);
}
