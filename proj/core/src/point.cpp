#include "acute/point.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace acute {

void PointSet::validate() const {
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].dim() != dim)
      throw std::invalid_argument("PointSet: point " + std::to_string(i) + " has " +
                                  std::to_string(points[i].dim()) + " coordinates, expected " +
                                  std::to_string(dim));
  }
  // sort an index view; equal neighbours are duplicates
  std::vector<std::size_t> idx(points.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return points[a] < points[b]; });
  for (std::size_t k = 1; k < idx.size(); ++k) {
    if (points[idx[k - 1]] == points[idx[k]]) {
      const auto a = std::min(idx[k - 1], idx[k]);
      const auto b = std::max(idx[k - 1], idx[k]);
      throw std::invalid_argument("PointSet: duplicate points at indices " +
                                  std::to_string(a) + " and " + std::to_string(b));
    }
  }
}

Rational apex_dot(const Point& x, const Point& y, const Point& z) {
  if (x.dim() != y.dim() || x.dim() != z.dim())
    throw std::invalid_argument("apex_dot: dimension mismatch");
  Rational acc;
  for (std::size_t i = 0; i < x.dim(); ++i)
    acc += (y[i] - x[i]) * (z[i] - x[i]);
  return acc;
}

}  // namespace acute
