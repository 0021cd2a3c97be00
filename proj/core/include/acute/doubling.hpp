#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "acute/point.hpp"

namespace acute {

/// A point on the radius-r circle, produced by the tangent-half-angle map
/// t -> r * ((1-t^2)/(1+t^2), 2t/(1+t^2)) with t in (0,1). Coordinates are
/// exact rationals, lie strictly in the open first quadrant, and satisfy
/// x^2 + y^2 = r^2 as an identity.
struct CirclePoint {
  Rational t;
  Rational x;
  Rational y;
};

/// Per-step record of one doubling: the input bound, the radius, the circle
/// parameters, and the maximum pairwise |<phi_i, phi_j>|.
struct StepRecord {
  std::size_t dim_before = 0;
  std::size_t n_before = 0;
  Rational s_lower_bound;         // certified bound on the input set
  Rational r;
  std::vector<Rational> t_params; // strictly increasing, in (0,1)
  Rational m_max;                 // max |<phi_i, phi_j>| over i != j; < r^2
};

struct ConstructionTrace {
  std::string base_id;
  std::vector<StepRecord> steps;
};

/// Largest dyadic radius r = 2^(-k), k >= 0, with 4r^2 < s (strict).
/// Throws std::invalid_argument unless s > 0.
Rational choose_radius(const Rational& s);

/// n distinct rational points on the radius-r circle, parameters
/// t_i = (i+1)/(n+1). All lie in the open first quadrant, so no point is
/// another's negation and the 2n points +-phi_i are pairwise distinct.
std::vector<CirclePoint> circle_points(std::size_t n, const Rational& r);

/// Certified positive lower bound on the minimum apex scalar product of a
/// doubled set: min(s_lb - 4r^2, 2(r^2 - M)) with M = max |<phi_i, phi_j>|.
/// Requires 4r^2 < s_lb and phis pairwise distinct, non-antipodal, of exact
/// norm r; throws std::invalid_argument otherwise.
Rational certified_s_bound(const Rational& s_lb, const Rational& r,
                           const std::vector<CirclePoint>& phis);

/// Lifts an acute set X in R^d to 2|X| points in R^{d+2}: point 2i is
/// (x_i, +phi_i) and point 2i+1 is (x_i, -phi_i), with r = choose_radius(s_lb)
/// and phi from circle_points(|X|, r) in point-index order. s_lb must be a
/// certified positive lower bound on min_apex_dot(X).
std::pair<PointSet, StepRecord> double_set(const PointSet& X, const Rational& s_lb);

struct ConstructOptions {
  bool recheck_exact = false;           // cross-validate carried bounds exactly
  std::optional<std::string> base_id;   // catalog entry to start from
  int threads = 0;
};

/// Builds an acute set in R^d: the catalog entry for d <= 5, otherwise
/// chained doublings from the d=4 (even d) or d=5 (odd d) base. The carried
/// bound comes from certified_s_bound per step; with recheck_exact the exact
/// minimum is recomputed and checked against it (the carried bound is still
/// the one used, so output coordinates do not depend on the flag).
std::pair<PointSet, ConstructionTrace> construct(std::size_t d,
                                                 const ConstructOptions& opts = {});

/// Output size of construct(d) with default bases: 2, 3, 5, then
/// 2^(d/2+1) for even d >= 4 and 3*2^((d-1)/2) for odd d >= 5.
std::size_t expected_construct_size(std::size_t d);

}  // namespace acute
