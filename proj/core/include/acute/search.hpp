#pragma once

#include <cstdint>
#include <optional>

#include "acute/catalog.hpp"

namespace acute {

// Simulated-annealing search for an acute n-point configuration in R^d.
// The chain runs in floating point; any candidate that clears
// accept_threshold is rationalized (denominators capped by
// max_denominator) and handed to the exact verifier, which is the only
// authority on success.
struct SearchConfig {
  std::size_t dim = 2;
  std::size_t target_size = 3;
  std::uint64_t seed = 0;
  std::size_t max_iters = 6000;
  double initial_temperature = 0.3;
  double cooling_rate = 0.99943;
  double perturbation_scale = 0.08;
  // minimum cosine the float configuration must reach before a
  // rationalization attempt is made
  double accept_threshold = 0.05;
  std::uint64_t max_denominator = 10000;

  void validate() const;  // throws std::invalid_argument
};

// Returns a certified entry on success, std::nullopt if the chain never
// produced a configuration that passed exact verification.
std::optional<CatalogEntry> search_acute(const SearchConfig& cfg);

}  // namespace acute
