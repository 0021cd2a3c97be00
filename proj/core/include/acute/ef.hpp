#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "acute/point.hpp"
#include "acute/verify.hpp"

namespace acute {

// One run of the probabilistic hypercube generator: sample N vertices of
// {0,1}^d, drop duplicates, then delete points until no right angle
// remains. Hypercube apex dots are non-negative integers, so right
// triples (dot == 0) are the only obstruction and detection is exact.
struct EfRun {
  std::size_t dim = 0;
  std::uint64_t seed = 0;
  std::size_t sample_size = 0;
  std::vector<std::vector<int>> sampled;  // raw draws, in order
  std::size_t duplicates_removed = 0;
  std::size_t right_triples_found = 0;
  PointSet output;
  VerificationReport certificate;  // exact, produced before returning
};

// d >= 2; N defaults to ceil((2/sqrt(3))^d). Deterministic per
// (d, seed, N). The output is certified by the exact verifier before
// returning.
EfRun ef_generate(std::size_t d, std::uint64_t seed,
                  std::optional<std::size_t> samples = std::nullopt);

// ceil((2/sqrt(3))^d), the default sample count
std::size_t ef_default_samples(std::size_t d);

}  // namespace acute
