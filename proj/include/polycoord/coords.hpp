#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "polycoord/dihedral.hpp"
#include "polycoord/locator.hpp"
#include "polycoord/polygon.hpp"
#include "polycoord/weights.hpp"

namespace polycoord {

/// Full coordinate vector of a point: one weight per polygon vertex, in
/// label order, with explicit zeros. Entries lie in [0,1] and sum to
/// exactly 1.
class CoordinateVector {
 public:
  explicit CoordinateVector(std::vector<Rational> weights) : w_(std::move(weights)) {
    if (w_.empty()) throw validation_error("coordinate vector must not be empty");
    Rational sum(0);
    for (const Rational& v : w_) {
      if (v.sign() < 0 || v > 1)
        throw validation_error("coordinate " + v.str() + " outside [0,1]");
      sum += v;
    }
    if (sum != 1)
      throw validation_error("coordinates sum to " + sum.str() + ", expected 1");
  }

  int size() const { return static_cast<int>(w_.size()); }

  const Rational& operator[](int label) const {
    if (label < 1 || label > size())
      throw validation_error("unknown vertex label " + std::to_string(label));
    return w_[static_cast<std::size_t>(label - 1)];
  }

  const std::vector<Rational>& weights() const { return w_; }

  int nonzero_count() const {
    int count = 0;
    for (const Rational& v : w_)
      if (v.sign() != 0) ++count;
    return count;
  }

  friend bool operator==(const CoordinateVector&, const CoordinateVector&) = default;

 private:
  std::vector<Rational> w_;
};

/// Coordinate system of one chordal decomposition: a point's weights are its
/// areal coordinates within the region(s) containing it, zero at every other
/// vertex. The parsing tree and sign-code table are built once and reused
/// for all queries.
class ChordalSystem {
 public:
  ChordalSystem(Polygon poly, ChordalDecomposition decomposition)
      : poly_(std::move(poly)),
        decomposition_(std::move(decomposition)),
        tree_(poly_, decomposition_),
        regions_(tree_.region_list()),
        table_(sign_code_table(poly_, decomposition_, regions_)) {}

  const Polygon& polygon() const { return poly_; }
  const ChordalDecomposition& decomposition() const { return decomposition_; }
  const ParsingTree& tree() const { return tree_; }
  const std::vector<OrientedTriangle>& region_list() const { return regions_; }
  const SignCodeTable& sign_codes() const { return table_; }

  std::vector<std::size_t> locate(const Point2& a) const {
    return polycoord::locate(a, poly_, table_);
  }

  /// Coordinates via location: scatter the areal coordinates of any
  /// containing region into a full vector. When several regions contain the
  /// point (chords, vertices) they must agree, which is checked.
  CoordinateVector coordinates(const Point2& a) const {
    const auto hits = locate(a);
    CoordinateVector result = from_region(a, hits.front());
    for (std::size_t i = 1; i < hits.size(); ++i)
      if (!(from_region(a, hits[i]) == result))
        throw error("internal: containing regions disagree on the coordinates of (" +
                    a.x.str() + ", " + a.y.str() + ")");
    return result;
  }

  /// Reference evaluation by the inclusion-exclusion recursion over the
  /// regions containing the vertex: each region contributes its areal
  /// coordinate when the point lies in it and in none of the regions already
  /// folded in. Slower than coordinates() but independent of the sign-code
  /// path; the two must agree everywhere.
  Rational coordinate_recursive(const Point2& a, int vertex_label) const {
    poly_.check_label(vertex_label);
    require_inside(a, poly_);
    Rational value(0);
    std::vector<std::size_t> folded;
    for (std::size_t i = 0; i < regions_.size(); ++i) {
      const OrientedTriangle& tri = regions_[i];
      if (!tri.contains_label(vertex_label)) continue;
      if (point_in_triangle(a, tri, poly_)) {
        bool already_covered = false;
        for (std::size_t j : folded)
          if (point_in_triangle(a, regions_[j], poly_)) {
            already_covered = true;
            break;
          }
        if (!already_covered) value += areal_coordinate(a, tri, vertex_label, poly_);
      }
      folded.push_back(i);
    }
    return value;
  }

 private:
  CoordinateVector from_region(const Point2& a, std::size_t region_index) const {
    const OrientedTriangle& tri = regions_[region_index];
    const auto coords = triangle_coords(a, tri, poly_);
    std::vector<Rational> weights(static_cast<std::size_t>(poly_.size()), Rational(0));
    for (int k = 0; k < 3; ++k)
      weights[static_cast<std::size_t>(tri.labels[static_cast<std::size_t>(k)] - 1)] =
          coords[static_cast<std::size_t>(k)].value();
    return CoordinateVector(std::move(weights));
  }

  Polygon poly_;
  ChordalDecomposition decomposition_;
  ParsingTree tree_;
  std::vector<OrientedTriangle> regions_;
  SignCodeTable table_;
};

/// Orbit-averaged coordinate system: the multiplicity-weighted mean of the
/// chordal systems over the full dihedral orbit of a representative
/// decomposition. The orbit and its chordal systems are built eagerly.
class CartographicSystem {
 public:
  CartographicSystem(Polygon poly, ChordalDecomposition representative)
      : poly_(std::move(poly)), representative_(std::move(representative)) {
    if (poly_.size() != representative_.n())
      throw validation_error("representative decomposition does not match the polygon size");
    for (auto& [image, count] : orbit_of(representative_).images)
      orbit_.emplace_back(ChordalSystem(poly_, image), count);
  }

  const Polygon& polygon() const { return poly_; }
  const ChordalDecomposition& representative() const { return representative_; }
  const std::vector<std::pair<ChordalSystem, int>>& orbit() const { return orbit_; }

  CoordinateVector coordinates(const Point2& a) const {
    const Rational group_order(2 * poly_.size());
    std::vector<Rational> sum(static_cast<std::size_t>(poly_.size()), Rational(0));
    for (const auto& [system, multiplicity] : orbit_) {
      const CoordinateVector part = system.coordinates(a);
      for (std::size_t i = 0; i < sum.size(); ++i)
        sum[i] += Rational(multiplicity) * part.weights()[i] / group_order;
    }
    return CoordinateVector(std::move(sum));
  }

 private:
  Polygon poly_;
  ChordalDecomposition representative_;
  std::vector<std::pair<ChordalSystem, int>> orbit_;
};

class CoordinateSystem;

struct MixturePart {
  std::shared_ptr<const CoordinateSystem> system;
  Weight weight;
};

/// Finite convex combination of coordinate systems over one polygon.
/// Mixtures may nest; evaluation distributes the weights through.
class MixtureSystem {
 public:
  explicit MixtureSystem(std::vector<MixturePart> parts);

  const Polygon& polygon() const;
  const std::vector<MixturePart>& parts() const { return parts_; }

  CoordinateVector coordinates(const Point2& a) const;

 private:
  std::vector<MixturePart> parts_;
};

/// A coordinate system for a polygon: every evaluation yields a vector of
/// vertex weights that sums to 1 and reproduces the point as a vertex
/// combination. Chordal, cartographic, or a convex mixture.
class CoordinateSystem {
 public:
  CoordinateSystem(ChordalSystem system) : impl_(std::move(system)) {}          // NOLINT
  CoordinateSystem(CartographicSystem system) : impl_(std::move(system)) {}     // NOLINT
  CoordinateSystem(MixtureSystem system) : impl_(std::move(system)) {}          // NOLINT

  const Polygon& polygon() const {
    return std::visit([](const auto& s) -> const Polygon& { return s.polygon(); }, impl_);
  }

  CoordinateVector coordinates(const Point2& a) const {
    return std::visit([&a](const auto& s) { return s.coordinates(a); }, impl_);
  }

  const ChordalSystem* as_chordal() const { return std::get_if<ChordalSystem>(&impl_); }
  const CartographicSystem* as_cartographic() const {
    return std::get_if<CartographicSystem>(&impl_);
  }
  const MixtureSystem* as_mixture() const { return std::get_if<MixtureSystem>(&impl_); }

 private:
  std::variant<ChordalSystem, CartographicSystem, MixtureSystem> impl_;
};

inline MixtureSystem::MixtureSystem(std::vector<MixturePart> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw validation_error("mixture needs at least one part");
  Rational sum(0);
  for (const MixturePart& part : parts_) {
    if (!part.system) throw validation_error("mixture part without a system");
    sum += part.weight.value();
    if (!(part.system->polygon() == parts_.front().system->polygon()))
      throw validation_error("mixture parts are systems of different polygons");
  }
  if (sum != 1)
    throw validation_error("mixture weights sum to " + sum.str() + ", expected 1");
}

inline const Polygon& MixtureSystem::polygon() const { return parts_.front().system->polygon(); }

inline CoordinateVector MixtureSystem::coordinates(const Point2& a) const {
  std::vector<Rational> sum(static_cast<std::size_t>(polygon().size()), Rational(0));
  for (const MixturePart& part : parts_) {
    const CoordinateVector vec = part.system->coordinates(a);
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += part.weight.value() * vec.weights()[i];
  }
  return CoordinateVector(std::move(sum));
}

/// Convex combination of coordinate systems; the weights must sum to
/// exactly 1 and all parts must share one polygon.
inline CoordinateSystem mix_systems(std::vector<std::pair<CoordinateSystem, Weight>> parts) {
  std::vector<MixturePart> mixture;
  mixture.reserve(parts.size());
  for (auto& [system, weight] : parts)
    mixture.push_back({std::make_shared<const CoordinateSystem>(std::move(system)), weight});
  return CoordinateSystem(MixtureSystem(std::move(mixture)));
}

/// Defects of raw vertex weights at a point: range, partition weighting, and
/// the reproduction of the point itself. Empty means the weights pass.
inline std::vector<std::string> coordinate_violations(const Polygon& poly, const Point2& a,
                                                      std::span<const Rational> weights) {
  std::vector<std::string> issues;
  if (static_cast<int>(weights.size()) != poly.size()) {
    issues.push_back("expected " + std::to_string(poly.size()) + " weights, got " +
                     std::to_string(weights.size()));
    return issues;
  }
  Rational sum(0), px(0), py(0);
  for (int label = 1; label <= poly.size(); ++label) {
    const Rational& w = weights[static_cast<std::size_t>(label - 1)];
    if (w.sign() < 0 || w > 1)
      issues.push_back("weight for vertex " + std::to_string(label) + " is " + w.str() +
                       ", outside [0,1]");
    sum += w;
    px += w * poly.vertex(label).x;
    py += w * poly.vertex(label).y;
  }
  if (sum != 1) issues.push_back("partition of unity fails: weights sum to " + sum.str());
  if (px != a.x || py != a.y)
    issues.push_back("linear precision fails: weighted vertex sum is (" + px.str() + ", " +
                     py.str() + "), point is (" + a.x.str() + ", " + a.y.str() + ")");
  return issues;
}

struct SystemReport {
  struct Violation {
    std::size_t sample_index;
    Point2 point;
    std::string detail;
  };

  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
};

/// Evaluates the system at every sample and checks partition of unity and
/// linear precision exactly. Violations are collected, not thrown.
inline SystemReport verify_system(const CoordinateSystem& system,
                                  std::span<const Point2> samples) {
  SystemReport report;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const CoordinateVector vec = system.coordinates(samples[i]);
    for (std::string& issue :
         coordinate_violations(system.polygon(), samples[i], vec.weights()))
      report.violations.push_back({i, samples[i], std::move(issue)});
  }
  return report;
}

/// Extends per-vertex data to the whole polygon through the system's
/// weights: the exact sum of weight(vertex) * values(vertex).
inline std::vector<Rational> interpolate(const Point2& a, const CoordinateSystem& system,
                                         const std::map<int, std::vector<Rational>>& values) {
  const Polygon& poly = system.polygon();
  for (const auto& [label, value] : values) poly.check_label(label);
  std::size_t dimension = 0;
  bool first = true;
  for (int label = 1; label <= poly.size(); ++label) {
    const auto it = values.find(label);
    if (it == values.end())
      throw validation_error("missing value for vertex " + std::to_string(label));
    if (first) {
      dimension = it->second.size();
      first = false;
    } else if (it->second.size() != dimension) {
      throw validation_error("value dimension mismatch at vertex " + std::to_string(label) +
                             ": expected " + std::to_string(dimension) + ", got " +
                             std::to_string(it->second.size()));
    }
  }

  const CoordinateVector vec = system.coordinates(a);
  std::vector<Rational> result(dimension, Rational(0));
  for (int label = 1; label <= poly.size(); ++label) {
    const std::vector<Rational>& value = values.at(label);
    for (std::size_t j = 0; j < dimension; ++j) result[j] += vec[label] * value[j];
  }
  return result;
}

}  // namespace polycoord
