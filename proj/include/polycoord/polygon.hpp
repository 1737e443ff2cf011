#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <utility>
#include <vector>

#include "polycoord/errors.hpp"
#include "polycoord/point.hpp"

namespace polycoord {

/// Signed area of the triangle (v0, v1, v2); positive exactly when the
/// vertices run counterclockwise.
inline Rational signed_area(const Point2& v0, const Point2& v1, const Point2& v2) {
  return ((v1.x - v0.x) * (v2.y - v0.y) - (v2.x - v0.x) * (v1.y - v0.y)) / 2;
}

/// Orders a set of combinatorial labels. The pair {1, n} closes the boundary
/// cycle and becomes [n, 1]; every other set keeps its natural increasing
/// order.
inline std::vector<int> standard_order(std::vector<int> labels, int n) {
  if (labels.size() < 2) throw validation_error("standard order needs at least two labels");
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
    throw validation_error("standard order labels must be distinct");
  if (labels.front() < 1 || labels.back() > n)
    throw validation_error("vertex label out of range 1.." + std::to_string(n));
  if (labels.size() == 2 && labels[0] == 1 && labels[1] == n) return {n, 1};
  return labels;
}

/// Oriented segment between two distinct combinatorial vertices.
struct OrientedSegment {
  int from;
  int to;

  OrientedSegment(int from_label, int to_label) : from(from_label), to(to_label) {
    if (from == to) throw validation_error("segment endpoints must differ");
  }

  OrientedSegment reversed() const { return {to, from}; }

  friend bool operator==(const OrientedSegment&, const OrientedSegment&) = default;
};

/// Oriented triangle of combinatorial vertices.
struct OrientedTriangle {
  std::array<int, 3> labels;

  OrientedTriangle(int a, int b, int c) : labels{a, b, c} {
    if (a == b || b == c || a == c) throw validation_error("triangle labels must be distinct");
  }

  bool contains_label(int v) const {
    return v == labels[0] || v == labels[1] || v == labels[2];
  }

  /// Ascending labels. On a counterclockwise convex polygon this is the
  /// canonical counterclockwise presentation of the triangle.
  OrientedTriangle canonical() const {
    std::array<int, 3> s = labels;
    std::sort(s.begin(), s.end());
    return {s[0], s[1], s[2]};
  }

  std::string str() const {
    return std::to_string(labels[0]) + "^" + std::to_string(labels[1]) + "^" +
           std::to_string(labels[2]);
  }

  friend bool operator==(const OrientedTriangle&, const OrientedTriangle&) = default;
};

/// Strictly convex polygon with counterclockwise vertices, labelled 1..n.
class Polygon {
 public:
  /// Accepts the vertex list only if it is strictly convex and
  /// counterclockwise: every vertex must lie strictly left of every directed
  /// boundary edge it does not belong to. Rejects short lists, repeated
  /// points, clockwise order, and collinear triples, naming a witness.
  static Polygon validated(std::vector<Point2> vertices) {
    const int n = static_cast<int>(vertices.size());
    if (n < 3)
      throw validation_error("polygon needs at least 3 vertices, got " + std::to_string(n));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (vertices[static_cast<std::size_t>(i)] == vertices[static_cast<std::size_t>(j)])
          throw validation_error("repeated vertex: labels " + std::to_string(i + 1) + " and " +
                                 std::to_string(j + 1));

    Rational doubled(0);
    for (int i = 0; i < n; ++i) {
      const Point2& p = vertices[static_cast<std::size_t>(i)];
      const Point2& q = vertices[static_cast<std::size_t>((i + 1) % n)];
      doubled += p.x * q.y - q.x * p.y;
    }
    if (doubled.sign() < 0) throw validation_error("vertices are in clockwise order");

    for (int i = 0; i < n; ++i) {
      const int j = (i + 1) % n;
      for (int w = 0; w < n; ++w) {
        if (w == i || w == j) continue;
        const int s = signed_area(vertices[static_cast<std::size_t>(i)],
                                  vertices[static_cast<std::size_t>(j)],
                                  vertices[static_cast<std::size_t>(w)])
                          .sign();
        if (s == 0)
          throw validation_error("vertex " + std::to_string(w + 1) + " is collinear with edge " +
                                 std::to_string(i + 1) + "->" + std::to_string(j + 1));
        if (s < 0)
          throw validation_error("vertex " + std::to_string(w + 1) + " lies right of edge " +
                                 std::to_string(i + 1) + "->" + std::to_string(j + 1) +
                                 ": not strictly convex and counterclockwise");
      }
    }
    return Polygon(std::move(vertices));
  }

  int size() const { return static_cast<int>(vertices_.size()); }

  void check_label(int label) const {
    if (label < 1 || label > size())
      throw validation_error("unknown vertex label " + std::to_string(label) + " for n=" +
                             std::to_string(size()));
  }

  const Point2& vertex(int label) const {
    check_label(label);
    return vertices_[static_cast<std::size_t>(label - 1)];
  }

  const std::vector<Point2>& vertices() const { return vertices_; }

  int next_label(int label) const {
    check_label(label);
    return label == size() ? 1 : label + 1;
  }

  friend bool operator==(const Polygon&, const Polygon&) = default;

 private:
  explicit Polygon(std::vector<Point2> vertices) : vertices_(std::move(vertices)) {}

  std::vector<Point2> vertices_;
};

inline Polygon validate_polygon(std::vector<Point2> vertices) {
  return Polygon::validated(std::move(vertices));
}

/// Value of the areal function of the oriented segment at x: the signed area
/// of (x, v_from, v_to). Positive iff x lies left of the directed line
/// through the segment; reversing the segment negates the value.
inline Rational areal_value(const Point2& x, const OrientedSegment& seg, const Polygon& poly) {
  return signed_area(x, poly.vertex(seg.from), poly.vertex(seg.to));
}

/// Sign classification of x against the directed line of the segment:
/// +1 left, 0 on the line, -1 right.
inline int side_of(const Point2& x, const OrientedSegment& seg, const Polygon& poly) {
  return areal_value(x, seg, poly).sign();
}

/// Boundary edge i -> i+1, read cyclically (n -> 1 closes the cycle).
inline OrientedSegment boundary_edge(const Polygon& poly, int i) {
  poly.check_label(i);
  return {i, poly.next_label(i)};
}

inline bool inside_polygon(const Point2& x, const Polygon& poly) {
  for (int i = 1; i <= poly.size(); ++i)
    if (side_of(x, boundary_edge(poly, i), poly) < 0) return false;
  return true;
}

/// Throws outside_polygon_error naming the separating boundary edge when x
/// is not in the closed polygon.
inline void require_inside(const Point2& x, const Polygon& poly) {
  for (int i = 1; i <= poly.size(); ++i) {
    const OrientedSegment e = boundary_edge(poly, i);
    if (side_of(x, e, poly) < 0)
      throw outside_polygon_error("point (" + x.x.str() + ", " + x.y.str() +
                                      ") lies outside the polygon: right of edge " +
                                      std::to_string(e.from) + "->" + std::to_string(e.to),
                                  e.from, e.to);
  }
}

inline Rational triangle_area(const OrientedTriangle& tri, const Polygon& poly) {
  return signed_area(poly.vertex(tri.labels[0]), poly.vertex(tri.labels[1]),
                     poly.vertex(tri.labels[2]));
}

/// Closed containment in a counterclockwise triangle.
inline bool point_in_triangle(const Point2& x, const OrientedTriangle& tri, const Polygon& poly) {
  for (int k = 0; k < 3; ++k) {
    const Point2& a = poly.vertex(tri.labels[static_cast<std::size_t>(k)]);
    const Point2& b = poly.vertex(tri.labels[static_cast<std::size_t>((k + 1) % 3)]);
    if (signed_area(a, b, x).sign() < 0) return false;
  }
  return true;
}

/// Raw areal coordinate of x with respect to one vertex of the triangle:
/// the area ratio A(v_prev, x, v_next) / A(triangle), indices cyclic. The
/// value is exact but unconstrained when x is outside the triangle.
inline Rational areal_coordinate(const Point2& x, const OrientedTriangle& tri, int vertex_label,
                                 const Polygon& poly) {
  int k = -1;
  for (int i = 0; i < 3; ++i)
    if (tri.labels[static_cast<std::size_t>(i)] == vertex_label) k = i;
  if (k < 0)
    throw validation_error("vertex " + std::to_string(vertex_label) + " is not part of triangle " +
                           tri.str());
  const Rational area = triangle_area(tri, poly);
  if (area.sign() <= 0)
    throw validation_error("triangle " + tri.str() + " is not counterclockwise");
  const Point2& prev = poly.vertex(tri.labels[static_cast<std::size_t>((k + 2) % 3)]);
  const Point2& next = poly.vertex(tri.labels[static_cast<std::size_t>((k + 1) % 3)]);
  return signed_area(prev, x, next) / area;
}

/// Areal (barycentric) coordinates of x inside the closed counterclockwise
/// triangle, one weight per triangle vertex in the triangle's label order.
/// The components sum to exactly 1 and reproduce x as a vertex combination.
inline std::array<Weight, 3> triangle_coords(const Point2& x, const OrientedTriangle& tri,
                                             const Polygon& poly) {
  std::array<Rational, 3> raw{Rational(0), Rational(0), Rational(0)};
  for (int k = 0; k < 3; ++k)
    raw[static_cast<std::size_t>(k)] =
        areal_coordinate(x, tri, tri.labels[static_cast<std::size_t>(k)], poly);
  for (int k = 0; k < 3; ++k)
    if (raw[static_cast<std::size_t>(k)].sign() < 0)
      throw validation_error(
          "point (" + x.x.str() + ", " + x.y.str() + ") lies outside triangle " + tri.str() +
          ": coordinate for vertex " +
          std::to_string(tri.labels[static_cast<std::size_t>(k)]) + " is " +
          raw[static_cast<std::size_t>(k)].str());
  if (raw[0] + raw[1] + raw[2] != 1)
    throw error("internal: areal coordinates do not sum to 1");
  return {Weight(raw[0]), Weight(raw[1]), Weight(raw[2])};
}

/// Exact area of the polygon (shoelace sum).
inline Rational polygon_area(const Polygon& poly) {
  Rational doubled(0);
  const auto& v = poly.vertices();
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& p = v[i];
    const Point2& q = v[(i + 1) % n];
    doubled += p.x * q.y - q.x * p.y;
  }
  return doubled / 2;
}

}  // namespace polycoord
