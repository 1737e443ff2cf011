#pragma once

#include "polycoord/rational.hpp"
#include "polycoord/weights.hpp"

namespace polycoord {

struct Point2 {
  Rational x;
  Rational y;

  friend bool operator==(const Point2&, const Point2&) = default;
};

/// The weighted mean x(1-p) + yp, evaluated exactly componentwise.
inline Point2 weighted_mean(const Point2& x, const Point2& y, const OpenWeight& p) {
  const Rational& w = p.value();
  const Rational c = Rational(1) - w;
  return Point2{x.x * c + y.x * w, x.y * c + y.y * w};
}

}  // namespace polycoord
