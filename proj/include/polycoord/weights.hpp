#pragma once

#include <utility>

#include "polycoord/errors.hpp"
#include "polycoord/rational.hpp"

namespace polycoord {

/// Scalar confined to the closed unit interval [0, 1].
class Weight {
 public:
  explicit Weight(Rational value) : v_(std::move(value)) {
    if (v_.sign() < 0 || v_ > 1)
      throw validation_error("weight outside [0,1]: " + v_.str());
  }

  static Weight zero() { return Weight(Rational(0)); }
  static Weight one() { return Weight(Rational(1)); }

  const Rational& value() const { return v_; }

  friend bool operator==(const Weight&, const Weight&) = default;

 private:
  Rational v_;
};

/// Operator scalar confined to the open unit interval (0, 1). These are the
/// weights the binary mean operations are indexed by; excluding the endpoints
/// keeps complementation and the dual product closed.
class OpenWeight {
 public:
  explicit OpenWeight(Rational value) : v_(std::move(value)) {
    if (v_.sign() <= 0 || v_ >= 1)
      throw validation_error("operator weight outside (0,1): " + v_.str());
  }

  const Rational& value() const { return v_; }
  Weight as_weight() const { return Weight(v_); }

  friend bool operator==(const OpenWeight&, const OpenWeight&) = default;

 private:
  Rational v_;
};

/// p' = 1 - p.
inline OpenWeight complement(const OpenWeight& p) { return OpenWeight(Rational(1) - p.value()); }

/// p o q = p + q - p q, again in (0,1).
inline OpenWeight dual_product(const OpenWeight& p, const OpenWeight& q) {
  return OpenWeight(p.value() + q.value() - p.value() * q.value());
}

}  // namespace polycoord
