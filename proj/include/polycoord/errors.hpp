#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace polycoord {

/// Base class of all library errors.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input: rational strings, JSON shapes, degree-sequence labels.
class parse_error : public error {
 public:
  using error::error;
};

/// A domain invariant does not hold: bad polygon, crossing chords, weights off range.
class validation_error : public error {
 public:
  using error::error;
};

/// A query point lies outside the closed polygon. Carries the boundary edge
/// the point falls on the wrong side of.
class outside_polygon_error : public validation_error {
 public:
  outside_polygon_error(std::string message, int edge_from, int edge_to)
      : validation_error(std::move(message)), edge_from_(edge_from), edge_to_(edge_to) {}

  int edge_from() const noexcept { return edge_from_; }
  int edge_to() const noexcept { return edge_to_; }

 private:
  int edge_from_;
  int edge_to_;
};

}  // namespace polycoord
