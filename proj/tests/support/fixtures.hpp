#pragma once

// Shared test geometry: the worked hexagon and quadrilateral with their
// decompositions and query points.

#include <vector>

#include "polycoord/decomposition.hpp"
#include "polycoord/point.hpp"
#include "polycoord/polygon.hpp"
#include "polycoord/rational.hpp"

namespace testsupport {

using polycoord::Chord;
using polycoord::ChordalDecomposition;
using polycoord::Point2;
using polycoord::Polygon;
using polycoord::Rational;

inline Point2 pt(int x, int y) { return {Rational(x), Rational(y)}; }

inline Point2 pt(const char* x, const char* y) {
  return {Rational::parse(x), Rational::parse(y)};
}

/// Unit-lattice hexagon: v1=(2,1), v2=(2,2), v3=(1,2), v4=(0,1), v5=(0,0), v6=(1,0).
inline Polygon hexagon() {
  return polycoord::validate_polygon(
      {pt(2, 1), pt(2, 2), pt(1, 2), pt(0, 1), pt(0, 0), pt(1, 0)});
}

inline ChordalDecomposition hex_decomposition(std::vector<std::pair<int, int>> pairs) {
  std::vector<Chord> chords;
  for (auto [a, b] : pairs) chords.emplace_back(a, b, 6);
  return polycoord::validate_decomposition(6, std::move(chords));
}

/// The alternating decomposition {13,15,35} (degree sequence 2^3).
inline ChordalDecomposition hex_delta1() { return hex_decomposition({{1, 3}, {1, 5}, {3, 5}}); }

/// Its dihedral partner {24,26,46}.
inline ChordalDecomposition hex_delta2() { return hex_decomposition({{2, 4}, {2, 6}, {4, 6}}); }

inline Point2 hex_a() { return pt("7/4", "3/2"); }
inline Point2 hex_b() { return pt("3/2", "3/2"); }
inline Point2 hex_c() { return pt(1, 1); }

/// Quadrilateral v1=(0,0), v2=(1,0), v3=(0,1), v4=(-1,1/2) with query point
/// a = (0, 3/8), the average of the four vertices.
inline Polygon quadrilateral() {
  return polycoord::validate_polygon({pt(0, 0), pt(1, 0), pt(0, 1), pt("-1", "1/2")});
}

inline ChordalDecomposition quad_d13() {
  return polycoord::validate_decomposition(4, {Chord(1, 3, 4)});
}

inline ChordalDecomposition quad_d24() {
  return polycoord::validate_decomposition(4, {Chord(2, 4, 4)});
}

inline Point2 quad_a() { return pt("0", "3/8"); }

inline std::vector<Rational> rationals(std::vector<const char*> texts) {
  std::vector<Rational> out;
  out.reserve(texts.size());
  for (const char* t : texts) out.push_back(Rational::parse(t));
  return out;
}

}  // namespace testsupport
