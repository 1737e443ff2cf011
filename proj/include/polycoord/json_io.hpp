#pragma once

#include <json.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "polycoord/coords.hpp"
#include "polycoord/decomposition.hpp"
#include "polycoord/errors.hpp"
#include "polycoord/locator.hpp"
#include "polycoord/polygon.hpp"

// JSON wire formats. Rationals travel as canonical lowest-term strings
// ("5/8", "1", "0"); vertex labels are 1-based; object key order is fixed by
// construction, so equal inputs serialize to identical bytes.

namespace polycoord::io {

using json = nlohmann::ordered_json;

inline json rational_json(const Rational& r) { return r.str(); }

inline Rational rational_from(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw parse_error("expected a rational string, got " + j.dump());
}

inline json point_json(const Point2& p) { return json::array({p.x.str(), p.y.str()}); }

inline Point2 point_from(const json& j) {
  if (!j.is_array() || j.size() != 2)
    throw parse_error("expected a point [\"x\",\"y\"], got " + j.dump());
  return Point2{rational_from(j[0]), rational_from(j[1])};
}

inline json polygon_json(const Polygon& poly) {
  json vertices = json::array();
  for (const Point2& p : poly.vertices()) vertices.push_back(point_json(p));
  return json{{"vertices", std::move(vertices)}};
}

inline Polygon polygon_from(const json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
    throw parse_error("expected {\"vertices\": [...]}");
  std::vector<Point2> points;
  for (const json& entry : j["vertices"]) points.push_back(point_from(entry));
  return validate_polygon(std::move(points));
}

inline json chord_json(const Chord& c) { return json::array({c.a(), c.b()}); }

inline json chords_json(const std::vector<Chord>& chords) {
  json out = json::array();
  for (const Chord& c : chords) out.push_back(chord_json(c));
  return out;
}

inline std::vector<Chord> chords_from(const json& j, int n) {
  if (!j.is_array()) throw parse_error("expected a chord array [[a,b],...], got " + j.dump());
  std::vector<Chord> chords;
  for (const json& entry : j) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() ||
        !entry[1].is_number_integer())
      throw parse_error("expected a chord [a,b], got " + entry.dump());
    chords.emplace_back(entry[0].get<int>(), entry[1].get<int>(), n);
  }
  return chords;
}

inline json decomposition_json(const ChordalDecomposition& d) {
  return json{{"n", d.n()}, {"chords", chords_json(d.chords())}};
}

/// Decomposition plus its degree sequence, both as the explicit list and the
/// exponent label ("1^2 2^2").
inline json decomposition_entry_json(const ChordalDecomposition& d) {
  const DegreeSequence cds = degree_sequence(d);
  return json{{"n", d.n()},
              {"chords", chords_json(d.chords())},
              {"cds", cds.degrees()},
              {"cds_label", cds.label()}};
}

inline ChordalDecomposition decomposition_from(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer() || !j.contains("chords"))
    throw parse_error("expected {\"n\": ..., \"chords\": [[a,b],...]}");
  const int n = j["n"].get<int>();
  if (n < 3) throw validation_error("polygon size must be at least 3");
  return validate_decomposition(n, chords_from(j["chords"], n));
}

inline std::vector<Point2> points_from(const json& j) {
  if (!j.is_object() || !j.contains("points") || !j["points"].is_array())
    throw parse_error("expected {\"points\": [[\"x\",\"y\"],...]}");
  std::vector<Point2> points;
  for (const json& entry : j["points"]) points.push_back(point_from(entry));
  return points;
}

inline json coordinate_vector_json(const Point2& p, const CoordinateVector& v) {
  json weights = json::array();
  for (const Rational& w : v.weights()) weights.push_back(w.str());
  return json{{"point", point_json(p)}, {"weights", std::move(weights)}};
}

/// Per-vertex data vectors keyed by 1-based labels:
/// {"values": {"1": ["0","0"], ...}}.
inline std::map<int, std::vector<Rational>> values_from(const json& j) {
  if (!j.is_object() || !j.contains("values") || !j["values"].is_object())
    throw parse_error("expected {\"values\": {\"1\": [...], ...}}");
  std::map<int, std::vector<Rational>> values;
  for (const auto& [key, entry] : j["values"].items()) {
    int label = 0;
    try {
      std::size_t used = 0;
      label = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw parse_error("value keys must be vertex labels, got \"" + key + "\"");
    }
    if (!entry.is_array()) throw parse_error("value for vertex " + key + " must be an array");
    std::vector<Rational> row;
    for (const json& component : entry) row.push_back(rational_from(component));
    values[label] = std::move(row);
  }
  return values;
}

/// System descriptors:
///   {"kind":"chordal","chords":[[1,3],...]}
///   {"kind":"cartographic","representative":[[1,3],...]}
///   {"kind":"mixture","parts":[{"weight":"1/2","system":{...}},...]}
inline CoordinateSystem system_from(const json& j, const Polygon& poly) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw parse_error("expected a system descriptor with a \"kind\" field");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "chordal") {
    if (!j.contains("chords")) throw parse_error("chordal system needs \"chords\"");
    return CoordinateSystem(ChordalSystem(
        poly, validate_decomposition(poly.size(), chords_from(j["chords"], poly.size()))));
  }
  if (kind == "cartographic") {
    if (!j.contains("representative"))
      throw parse_error("cartographic system needs \"representative\"");
    return CoordinateSystem(CartographicSystem(
        poly, validate_decomposition(poly.size(), chords_from(j["representative"], poly.size()))));
  }
  if (kind == "mixture") {
    if (!j.contains("parts") || !j["parts"].is_array())
      throw parse_error("mixture system needs a \"parts\" array");
    std::vector<std::pair<CoordinateSystem, Weight>> parts;
    for (const json& entry : j["parts"]) {
      if (!entry.is_object() || !entry.contains("weight") || !entry.contains("system"))
        throw parse_error("each mixture part needs \"weight\" and \"system\"");
      parts.emplace_back(system_from(entry["system"], poly), Weight(rational_from(entry["weight"])));
    }
    return mix_systems(std::move(parts));
  }
  throw parse_error("unknown system kind \"" + kind + "\"");
}

inline json system_json(const CoordinateSystem& system) {
  if (const ChordalSystem* chordal = system.as_chordal())
    return json{{"kind", "chordal"}, {"chords", chords_json(chordal->decomposition().chords())}};
  if (const CartographicSystem* carto = system.as_cartographic())
    return json{{"kind", "cartographic"},
                {"representative", chords_json(carto->representative().chords())}};
  const MixtureSystem* mixture = system.as_mixture();
  json parts = json::array();
  for (const MixturePart& part : mixture->parts())
    parts.push_back(json{{"weight", part.weight.value().str()}, {"system", system_json(*part.system)}});
  return json{{"kind", "mixture"}, {"parts", std::move(parts)}};
}

inline json segment_json(const OrientedSegment& seg) { return json::array({seg.from, seg.to}); }

inline json triangle_json(const OrientedTriangle& tri) {
  return json::array({tri.labels[0], tri.labels[1], tri.labels[2]});
}

/// Parsing tree and sign-code table of a decomposition, nodes keyed by path
/// word in preorder; byte-stable across runs.
inline json tree_json(const ChordalDecomposition& d, const ParsingTree& tree,
                      const SignCodeTable& table) {
  json nodes = json::object();
  for (const ParsingNode& node : tree.nodes())
    nodes[node.path] = json{{"triangle", triangle_json(node.triangle)},
                            {"base", segment_json(node.base)},
                            {"case", to_string(node.tag)}};
  json leaves = json::array();
  for (const ParsingLeaf& leaf : tree.leaves())
    leaves.push_back(json{{"path", leaf.path}, {"edge", segment_json(leaf.edge)}});
  json codes = json::object();
  for (std::size_t i = 0; i < table.codes.size(); ++i)
    codes[tree.nodes()[i].path] = table.codes[i];
  return json{{"n", d.n()},
              {"chords", chords_json(d.chords())},
              {"initial_base", segment_json(OrientedSegment(1, 2))},
              {"nodes", std::move(nodes)},
              {"leaves", std::move(leaves)},
              {"sign_codes", json{{"chords", chords_json(table.chords)}, {"codes", std::move(codes)}}}};
}

}  // namespace polycoord::io
