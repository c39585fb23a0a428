// tropgon: lattice-polygon invariants, tropical moduli dimensions, beehive
// triangulations and gonality certificates from the command line.
//
// Exit codes: 0 success, 1 falsified mathematical assertion, 2 bad usage or
// malformed input.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tropgon/beehive.hpp"
#include "tropgon/certificate.hpp"
#include "tropgon/divisor.hpp"
#include "tropgon/enumeration.hpp"
#include "tropgon/graph.hpp"
#include "tropgon/json_io.hpp"
#include "tropgon/moduli.hpp"
#include "tropgon/verify.hpp"

namespace {

using tropgon::Json;

// Inline JSON (starts with '{') or a file path.
Json load_json(const std::string& arg) {
  std::string text;
  if (!arg.empty() && arg[0] == '{') {
    text = arg;
  } else {
    std::ifstream in(arg);
    if (!in) throw std::invalid_argument("cannot open input file: " + arg);
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  return Json::parse(text);
}

void emit(const Json& j, bool as_json, const std::string& text) {
  if (as_json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

std::string polygon_line(const tropgon::Polygon& p) {
  std::ostringstream out;
  for (size_t i = 0; i < p.vertices().size(); ++i) {
    if (i) out << " ";
    out << "(" << p.vertices()[i].x << "," << p.vertices()[i].y << ")";
  }
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lattice polygons, tropical curve skeletons, and gonality"};
  app.require_subcommand(1);

  std::string polygon_arg, graph_arg, triangulation_arg, out_path;
  std::string format = "text";
  long long genus_arg = 0;
  long long max_genus = 8;
  int gonality_cap = 14;
  int jobs = 1;
  bool verify_all = false;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json", "dot"}));
  };

  auto* analyze = app.add_subcommand("analyze", "lattice invariants of a polygon");
  analyze->add_option("--polygon", polygon_arg, "polygon JSON (file or inline)")
      ->required();
  add_format(analyze);

  auto* dim = app.add_subcommand("dim", "moduli dimension report with the U bound");
  dim->add_option("--polygon", polygon_arg)->required();
  add_format(dim);

  auto* relax_cmd = app.add_subcommand("relax", "relaxed polygon P^(-1)");
  relax_cmd->add_option("--polygon", polygon_arg)->required();
  add_format(relax_cmd);

  auto* enumerate = app.add_subcommand("enumerate",
                                       "maximal non-hyperelliptic polygons of a genus");
  enumerate->add_option("--genus", genus_arg)->required();
  enumerate->add_option("--max-genus", max_genus, "enumeration cap");
  enumerate->add_option("--out", out_path, "write corpus JSON here");

  auto* table = app.add_subcommand("table", "locus dimension row for a genus");
  table->add_option("--genus", genus_arg)->required();
  add_format(table);

  auto* beehive = app.add_subcommand("beehive", "beehive triangulation of a polygon");
  beehive->add_option("--polygon", polygon_arg)->required();

  auto* skeleton_cmd = app.add_subcommand("skeleton",
                                          "skeleton of the dual tropical curve");
  skeleton_cmd->add_option("--polygon", polygon_arg,
                           "build the beehive first, then take the skeleton");
  skeleton_cmd->add_option("--triangulation", triangulation_arg,
                           "triangulation JSON (file or inline)");
  add_format(skeleton_cmd);

  auto* gon = app.add_subcommand("gonality", "exact gonality of a multigraph");
  gon->add_option("--graph", graph_arg)->required();
  gon->add_option("--gonality-cap", gonality_cap, "exhaustion vertex cap");

  std::string scramble_arg;
  auto* certify = app.add_subcommand("certify", "sandwich gonality certificate");
  certify->add_option("--polygon", polygon_arg,
                      "certify the beehive skeletons of this polygon");
  certify->add_option("--graph", graph_arg,
                      "evaluate a user-supplied certificate on this graph");
  certify->add_option("--scramble", scramble_arg,
                      "scramble JSON giving the lower bound (with --graph)");
  certify->add_option("--gonality-cap", gonality_cap);
  add_format(certify);

  auto* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_flag("--all", verify_all, "run every criterion (default)");
  verify->add_option("--max-genus", max_genus);
  verify->add_option("--gonality-cap", gonality_cap);
  verify->add_option("--jobs", jobs, "worker threads for corpus-wide checks");

  CLI11_PARSE(app, argc, argv);

  try {
    bool as_json = format == "json";

    if (analyze->parsed()) {
      auto p = tropgon::polygon_from_json(load_json(polygon_arg));
      auto inv = tropgon::invariants(p);
      std::ostringstream text;
      text << "polygon: " << polygon_line(p) << "\n"
           << "genus: " << inv.genus << "\n"
           << "boundary points: " << inv.boundary_points << "\n"
           << "doubled area: " << inv.area_doubled << "\n"
           << "lattice width: " << inv.lattice_width << " in direction ("
           << inv.width_direction.x << "," << inv.width_direction.y << ")\n"
           << "column vectors: " << inv.column_count << "\n"
           << "expected gonality: " << inv.expected_gonality << "\n"
           << "hyperelliptic: " << (inv.hyperelliptic ? "yes" : "no") << "\n"
           << "maximal: " << (inv.maximal ? "yes" : "no") << "\n";
      emit(tropgon::invariants_to_json(inv), as_json, text.str());
    } else if (dim->parsed()) {
      auto p = tropgon::polygon_from_json(load_json(polygon_arg));
      auto rep = tropgon::check_dim_bound(p);
      std::ostringstream text;
      text << "dim(M_P) = " << rep.dim << "\n"
           << "U(" << rep.genus << "," << rep.egon
           << ") = " << rep.upper_bound.str() << " (floor "
           << rep.upper_bound.floor() << ")\n";
      for (const auto& w : rep.witnesses) text << w << "\n";
      emit(tropgon::dim_report_to_json(rep), as_json, text.str());
    } else if (relax_cmd->parsed()) {
      auto p = tropgon::polygon_from_json(load_json(polygon_arg));
      auto r = tropgon::relax(p);
      if (!r) {
        emit(Json{{"relaxed", nullptr}}, as_json, "non-lattice\n");
      } else {
        emit(tropgon::polygon_to_json(*r), as_json, polygon_line(*r) + "\n");
      }
    } else if (enumerate->parsed()) {
      auto corpus = tropgon::enumerate_maximal(genus_arg, max_genus);
      auto j = tropgon::corpus_to_json(corpus);
      if (!out_path.empty()) {
        std::ofstream out(out_path);
        out << j.dump(2) << "\n";
        std::cout << "wrote " << corpus.entries.size() << " polygons to "
                  << out_path << "\n";
      } else {
        std::cout << j.dump(2) << "\n";
      }
    } else if (table->parsed()) {
      auto row = tropgon::table_row(genus_arg);
      Json j;
      std::ostringstream text;
      for (const auto& [d, v] : row) {
        j[std::to_string(d)] = v;
        text << "d=" << d << ": " << v << "\n";
      }
      emit(j, as_json, text.str());
    } else if (beehive->parsed()) {
      auto p = tropgon::polygon_from_json(load_json(polygon_arg));
      auto t = tropgon::build_beehive(p);
      std::cout << tropgon::triangulation_to_json(t).dump(2) << "\n";
    } else if (skeleton_cmd->parsed()) {
      tropgon::MultiGraph skel;
      if (!triangulation_arg.empty()) {
        auto t = tropgon::triangulation_from_json(load_json(triangulation_arg));
        skel = tropgon::skeleton(tropgon::dual_graph(t));
      } else if (!polygon_arg.empty()) {
        auto p = tropgon::polygon_from_json(load_json(polygon_arg));
        skel = tropgon::skeleton(tropgon::dual_graph(tropgon::build_beehive(p)));
      } else {
        std::cerr << "skeleton: need --polygon or --triangulation\n";
        return 2;
      }
      if (format == "dot") {
        std::cout << tropgon::skeleton_to_dot(skel);
      } else {
        std::ostringstream text;
        text << "vertices: " << skel.n << "\nedges:";
        for (auto& [a, b] : skel.edges) text << " (" << a << "," << b << ")";
        text << "\nfirst Betti number: " << skel.betti() << "\n";
        emit(tropgon::graph_to_json(skel), as_json, text.str());
      }
    } else if (gon->parsed()) {
      auto g = tropgon::graph_from_json(load_json(graph_arg));
      long long value = tropgon::gonality(g, gonality_cap);
      std::cout << "gonality = " << value << "\n";
    } else if (certify->parsed()) {
      if (!graph_arg.empty()) {
        // User-supplied certificate: a scramble lower bound against the
        // exact gonality of the graph.
        auto g = tropgon::graph_from_json(load_json(graph_arg));
        std::ostringstream text;
        Json j;
        if (!scramble_arg.empty()) {
          auto s = tropgon::scramble_from_json(load_json(scramble_arg));
          auto ord = tropgon::scramble_order(g, s);
          text << "scramble order = " << ord.order << " (hitting "
               << ord.hitting << ", egg-cut "
               << (ord.egg_cut ? std::to_string(*ord.egg_cut) : "none")
               << ")\n"
               << "gonality of every metric realization is at least "
               << ord.order << "\n";
          j["scramble_order"] = ord.order;
          j["hitting"] = ord.hitting;
          if (ord.egg_cut) j["egg_cut"] = *ord.egg_cut;
        }
        if (g.n <= gonality_cap) {
          long long gon = tropgon::gonality(g, gonality_cap);
          text << "gonality = " << gon << "\n";
          j["gonality"] = gon;
        }
        emit(j, as_json, text.str());
      } else if (!polygon_arg.empty()) {
        auto p = tropgon::polygon_from_json(load_json(polygon_arg));
        auto t = tropgon::build_beehive(p);
        auto cert = tropgon::gonality_certificate(p, t, gonality_cap);
        std::ostringstream text;
        if (cert.exact())
          text << "gon = " << cert.lower << "\n";
        else
          text << "gon in [" << cert.lower << ", " << cert.upper << "]\n";
        text << "lower: " << cert.lower << " (" << cert.lower_witness << ")\n"
             << "upper: " << cert.upper << " (" << cert.upper_witness << ")\n";
        emit(tropgon::certificate_to_json(cert), as_json, text.str());
      } else {
        std::cerr << "certify: need --polygon or --graph\n";
        return 2;
      }
    } else if (verify->parsed()) {
      (void)verify_all;  // the full suite is the only mode
      tropgon::VerifyOptions opt;
      opt.max_genus = max_genus;
      opt.gonality_cap = gonality_cap;
      opt.jobs = jobs;
      auto results = tropgon::run_verification(opt);
      int failed = 0;
      for (const auto& r : results) {
        std::cout << "[" << (r.pass ? "PASS" : "FAIL") << "] " << r.name << "\n";
        for (const auto& f : r.failures) std::cout << "       - " << f << "\n";
        if (!r.pass) ++failed;
      }
      std::cout << results.size() - failed << "/" << results.size()
                << " criteria passed\n";
      if (failed > 0) return 1;
    }
  } catch (const Json::parse_error& ex) {
    std::cerr << "input error: " << ex.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "input error: " << ex.what() << "\n";
    return 2;
  } catch (const std::runtime_error& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  } catch (const std::logic_error& ex) {
    std::cerr << "falsified assertion: " << ex.what() << "\n";
    return 1;
  }
  return 0;
}
