#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>

#include "acute/point.hpp"

namespace acute {

enum class Verdict { acute, right_angle_present, obtuse_present, indeterminate };
enum class VerifyMode { exact, floating };

const char* to_string(Verdict v);
const char* to_string(VerifyMode m);
Verdict verdict_from_string(const std::string& s);
VerifyMode mode_from_string(const std::string& s);

/// Outcome of an acuteness check.
///
/// s_min is the exact minimum of <y-x, z-x> over ordered triples with
/// x != y and x != z, where y = z is permitted (those terms are squared
/// distances). It is present in exact mode whenever the set has >= 2 points.
/// The verdict, by contrast, is decided on pairwise-distinct triples only.
struct VerificationReport {
  Verdict verdict = Verdict::indeterminate;
  std::optional<Rational> s_min;
  std::optional<std::array<std::size_t, 3>> witness;  // [apex, y, z]
  std::optional<double> min_angle_deg;                // reporting only, float
  VerifyMode mode = VerifyMode::exact;
  std::optional<double> tolerance;                    // float mode only
  std::size_t n = 0;
  std::size_t dim = 0;
  double elapsed_ms = 0.0;
};

struct MinApexResult {
  Rational value;
  std::array<std::size_t, 3> witness;  // [apex, y, z], lexicographically smallest
};

/// Exact minimum apex scalar product over ordered triples with x != y,
/// x != z (y = z permitted). Deterministic witness tie-break: the
/// lexicographically smallest (apex, y, z), independent of thread count.
///
/// Requires |X| >= 2 and pairwise-distinct points; throws
/// std::invalid_argument otherwise. `threads` <= 0 selects hardware
/// parallelism.
MinApexResult min_apex_dot(const PointSet& X, int threads = 0);

/// Certifies or refutes acuteness.
///
/// Exact mode: verdict is `acute` iff every pairwise-distinct triple has a
/// strictly positive apex scalar product; zero minimum reports
/// `right_angle_present`, negative reports `obtuse_present`. Float mode is a
/// fast pre-filter: dots are evaluated in double precision and any dot inside
/// (-tolerance, +tolerance) makes the verdict `indeterminate`. Sets with
/// fewer than 3 points are vacuously acute.
///
/// Duplicate points are an input error (std::invalid_argument), not a
/// verdict. Results are bit-identical across thread counts.
VerificationReport verify_acute(const PointSet& X, VerifyMode mode,
                                double tolerance = 1e-9, int threads = 0);

/// Smallest angle over pairwise-distinct triples, in degrees, evaluated in
/// floating point. Requires |X| >= 3.
double min_angle_deg(const PointSet& X, int threads = 0);

}  // namespace acute
