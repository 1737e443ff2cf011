// Command-line front end: validates polygons and decompositions, enumerates
// triangulations with degree-sequence filters and dihedral orbits, locates
// points, prints parsing trees, and evaluates coordinate systems, all as
// deterministic JSON with exact rational values.
//
// Exit codes: 0 success, 1 validation failure, 2 I/O or parse failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "polycoord/polycoord.hpp"

namespace {

using polycoord::CartographicSystem;
using polycoord::Chord;
using polycoord::ChordalDecomposition;
using polycoord::ChordalSystem;
using polycoord::CoordinateSystem;
using polycoord::DegreeSequence;
using polycoord::Point2;
using polycoord::Polygon;
using polycoord::Rational;
using json = polycoord::io::json;

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw polycoord::parse_error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw polycoord::parse_error("invalid JSON in " + path + ": " + e.what());
  }
}

struct OutputOptions {
  std::string path;
  bool pretty = false;
};

void emit(const json& doc, const OutputOptions& options) {
  std::string text = options.pretty ? doc.dump(2) : doc.dump();
  text += '\n';
  if (options.path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(options.path, std::ios::binary);
  if (!out) throw polycoord::parse_error("cannot write " + options.path);
  out << text;
}

Polygon load_polygon(const std::string& path) {
  return polycoord::io::polygon_from(read_json_file(path));
}

ChordalDecomposition load_decomposition(const std::string& path, const Polygon& poly) {
  ChordalDecomposition d = polycoord::io::decomposition_from(read_json_file(path));
  if (d.n() != poly.size())
    throw polycoord::validation_error("decomposition is for n=" + std::to_string(d.n()) +
                                      " but the polygon has n=" + std::to_string(poly.size()));
  return d;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact coordinate systems on convex polygons"};
  app.require_subcommand(1);

  OutputOptions out;
  int exit_code = 0;
  const auto add_common = [&out](CLI::App* sub) {
    sub->add_option("--output", out.path, "write the JSON result to this file instead of stdout");
    sub->add_flag("--pretty", out.pretty, "indent the JSON output");
  };

  // validate POLYGON [DECOMPOSITION]
  std::string validate_polygon_path, validate_decomposition_path;
  auto* cmd_validate =
      app.add_subcommand("validate", "check a polygon (and optional decomposition) file");
  cmd_validate->add_option("polygon", validate_polygon_path, "polygon JSON file")->required();
  cmd_validate->add_option("decomposition", validate_decomposition_path,
                           "decomposition JSON file");
  add_common(cmd_validate);
  cmd_validate->callback([&] {
    try {
      const Polygon poly = load_polygon(validate_polygon_path);
      json doc{{"valid", true}, {"polygon", polycoord::io::polygon_json(poly)}};
      if (!validate_decomposition_path.empty()) {
        const ChordalDecomposition d = load_decomposition(validate_decomposition_path, poly);
        doc["decomposition"] = polycoord::io::decomposition_entry_json(d);
      }
      emit(doc, out);
    } catch (const polycoord::validation_error& e) {
      emit(json{{"valid", false}, {"error", e.what()}}, out);
      exit_code = 1;
    }
  });

  // triangulations N [--cds LABEL] [--orbits] [--cap N]
  int triangulations_n = 0;
  int triangulations_cap = 14;
  std::string cds_filter;
  bool group_orbits = false;
  auto* cmd_triangulations =
      app.add_subcommand("triangulations", "enumerate the chordal decompositions of an n-gon");
  cmd_triangulations->add_option("n", triangulations_n, "polygon size")->required();
  cmd_triangulations->add_option("--cds", cds_filter,
                                 "keep only decompositions with this degree sequence, e.g. \"1^2 2^2\"");
  cmd_triangulations->add_flag("--orbits", group_orbits, "group the listing into dihedral orbits");
  cmd_triangulations->add_option("--cap", triangulations_cap, "largest allowed n");
  add_common(cmd_triangulations);
  cmd_triangulations->callback([&] {
    std::vector<ChordalDecomposition> all =
        polycoord::enumerate_decompositions(triangulations_n, triangulations_cap);
    if (!cds_filter.empty()) {
      const DegreeSequence wanted = DegreeSequence::parse_label(cds_filter);
      std::erase_if(all, [&wanted](const ChordalDecomposition& d) {
        return !(polycoord::degree_sequence(d) == wanted);
      });
    }
    json doc = json::array();
    if (!group_orbits) {
      for (const ChordalDecomposition& d : all)
        doc.push_back(polycoord::io::decomposition_entry_json(d));
    } else {
      std::set<ChordalDecomposition> seen;
      for (const ChordalDecomposition& d : all) {
        if (seen.contains(d)) continue;
        const polycoord::DecompositionOrbit orbit = polycoord::orbit_of(d);
        json members = json::array();
        for (const auto& [image, count] : orbit.images) {
          seen.insert(image);
          members.push_back(polycoord::io::decomposition_entry_json(image));
        }
        doc.push_back(json{
            {"representative", polycoord::io::decomposition_entry_json(orbit.images.front().first)},
            {"size", orbit.images.size()},
            {"multiplicity", orbit.images.front().second},
            {"members", std::move(members)}});
      }
    }
    emit(doc, out);
  });

  // locate POLYGON DECOMPOSITION POINTS
  std::string locate_polygon_path, locate_decomposition_path, locate_points_path;
  auto* cmd_locate =
      app.add_subcommand("locate", "find the region(s) of each query point, with sign codes");
  cmd_locate->add_option("polygon", locate_polygon_path, "polygon JSON file")->required();
  cmd_locate->add_option("decomposition", locate_decomposition_path, "decomposition JSON file")
      ->required();
  cmd_locate->add_option("points", locate_points_path, "points JSON file")->required();
  add_common(cmd_locate);
  cmd_locate->callback([&] {
    const Polygon poly = load_polygon(locate_polygon_path);
    const ChordalDecomposition d = load_decomposition(locate_decomposition_path, poly);
    const ChordalSystem system(poly, d);
    json doc = json::array();
    for (const Point2& p : polycoord::io::points_from(read_json_file(locate_points_path))) {
      try {
        const std::vector<std::size_t> hits = system.locate(p);
        json signs = json::array();
        for (int s : polycoord::chord_signs(p, poly, system.sign_codes().chords))
          signs.push_back(s);
        json codes = json::array();
        json region_paths = json::array();
        for (std::size_t r : hits) {
          codes.push_back(system.sign_codes().codes[r]);
          region_paths.push_back(system.tree().nodes()[r].path);
        }
        doc.push_back(json{{"point", polycoord::io::point_json(p)},
                           {"signs", std::move(signs)},
                           {"codes", std::move(codes)},
                           {"regions", std::move(region_paths)}});
      } catch (const polycoord::outside_polygon_error& e) {
        doc.push_back(json{{"point", polycoord::io::point_json(p)}, {"error", e.what()}});
        exit_code = 1;
      }
    }
    emit(doc, out);
  });

  // tree POLYGON DECOMPOSITION
  std::string tree_polygon_path, tree_decomposition_path;
  auto* cmd_tree =
      app.add_subcommand("tree", "print the parsing tree and sign-code table of a decomposition");
  cmd_tree->add_option("polygon", tree_polygon_path, "polygon JSON file")->required();
  cmd_tree->add_option("decomposition", tree_decomposition_path, "decomposition JSON file")
      ->required();
  add_common(cmd_tree);
  cmd_tree->callback([&] {
    const Polygon poly = load_polygon(tree_polygon_path);
    const ChordalDecomposition d = load_decomposition(tree_decomposition_path, poly);
    const ChordalSystem system(poly, d);
    emit(polycoord::io::tree_json(d, system.tree(), system.sign_codes()), out);
  });

  // coords POLYGON SYSTEM POINTS
  std::string coords_polygon_path, coords_system_path, coords_points_path;
  auto* cmd_coords =
      app.add_subcommand("coords", "evaluate a coordinate system at each query point");
  cmd_coords->add_option("polygon", coords_polygon_path, "polygon JSON file")->required();
  cmd_coords->add_option("system", coords_system_path, "system descriptor JSON file")->required();
  cmd_coords->add_option("points", coords_points_path, "points JSON file")->required();
  add_common(cmd_coords);
  cmd_coords->callback([&] {
    const Polygon poly = load_polygon(coords_polygon_path);
    const CoordinateSystem system =
        polycoord::io::system_from(read_json_file(coords_system_path), poly);
    json doc = json::array();
    for (const Point2& p : polycoord::io::points_from(read_json_file(coords_points_path))) {
      try {
        doc.push_back(polycoord::io::coordinate_vector_json(p, system.coordinates(p)));
      } catch (const polycoord::outside_polygon_error& e) {
        doc.push_back(json{{"point", polycoord::io::point_json(p)}, {"error", e.what()}});
        exit_code = 1;
      }
    }
    emit(doc, out);
  });

  // interpolate POLYGON SYSTEM VALUES POINTS
  std::string interp_polygon_path, interp_system_path, interp_values_path, interp_points_path;
  auto* cmd_interpolate =
      app.add_subcommand("interpolate", "extend per-vertex data to each query point");
  cmd_interpolate->add_option("polygon", interp_polygon_path, "polygon JSON file")->required();
  cmd_interpolate->add_option("system", interp_system_path, "system descriptor JSON file")
      ->required();
  cmd_interpolate->add_option("values", interp_values_path, "per-vertex values JSON file")
      ->required();
  cmd_interpolate->add_option("points", interp_points_path, "points JSON file")->required();
  add_common(cmd_interpolate);
  cmd_interpolate->callback([&] {
    const Polygon poly = load_polygon(interp_polygon_path);
    const CoordinateSystem system =
        polycoord::io::system_from(read_json_file(interp_system_path), poly);
    const auto values = polycoord::io::values_from(read_json_file(interp_values_path));
    json doc = json::array();
    for (const Point2& p : polycoord::io::points_from(read_json_file(interp_points_path))) {
      try {
        json value = json::array();
        for (const Rational& component : polycoord::interpolate(p, system, values))
          value.push_back(component.str());
        doc.push_back(json{{"point", polycoord::io::point_json(p)}, {"value", std::move(value)}});
      } catch (const polycoord::outside_polygon_error& e) {
        doc.push_back(json{{"point", polycoord::io::point_json(p)}, {"error", e.what()}});
        exit_code = 1;
      }
    }
    emit(doc, out);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const polycoord::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const polycoord::validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
