#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "acute/rational.hpp"

namespace acute {

/// A point with exact rational coordinates.
struct Point {
  std::vector<Rational> coords;

  Point() = default;
  explicit Point(std::vector<Rational> c) : coords(std::move(c)) {}

  std::size_t dim() const { return coords.size(); }
  const Rational& operator[](std::size_t i) const { return coords[i]; }
  Rational& operator[](std::size_t i) { return coords[i]; }

  friend bool operator==(const Point&, const Point&) = default;
  /// Lexicographic coordinate order; used for exact duplicate detection.
  friend std::strong_ordering operator<=>(const Point& a, const Point& b) {
    const std::size_t n = a.coords.size() < b.coords.size() ? a.coords.size() : b.coords.size();
    for (std::size_t i = 0; i < n; ++i) {
      const auto c = a.coords[i] <=> b.coords[i];
      if (c != std::strong_ordering::equal) return c;
    }
    return a.coords.size() <=> b.coords.size();
  }
};

/// Provenance of a point set. `source` is one of "construct", "catalog",
/// "search", "ef", "external"; `id` identifies a catalog entry or run.
struct Meta {
  std::string source = "external";
  std::string id;
  int format_version = 1;
};

/// A finite point set in R^dim. Invariants (checked by validate()):
/// every point has exactly `dim` coordinates, and points are pairwise
/// distinct under exact comparison.
struct PointSet {
  std::size_t dim = 0;
  std::vector<Point> points;
  Meta meta;

  std::size_t size() const { return points.size(); }

  /// Throws std::invalid_argument on a dimension mismatch or duplicate
  /// points (the duplicate error message names the offending indices).
  void validate() const;
};

/// The apex scalar product <y - x, z - x>, computed exactly. The sign
/// classifies the angle at apex x: positive = acute, zero = right,
/// negative = obtuse. Throws std::invalid_argument on dimension mismatch.
Rational apex_dot(const Point& x, const Point& y, const Point& z);

}  // namespace acute
