#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "acute/point.hpp"
#include "acute/verify.hpp"

namespace acute {

/// A certified small-dimension acute set shipped with the library.
struct CatalogEntry {
  std::string id;           // "d1".."d5" for shipped entries
  std::size_t dim = 0;
  std::size_t target_size = 0;
  PointSet points;
  VerificationReport certificate;  // exact mode, recomputed on load
};

/// The shipped entry for dimension d in 1..5. Loading re-verifies the
/// stored certificate exactly; a mismatch (corrupt data) throws
/// std::runtime_error, an out-of-range d throws std::invalid_argument.
CatalogEntry base_set(std::size_t d);

/// Same, addressed by catalog id ("d1".."d5").
CatalogEntry base_set_by_id(const std::string& id);

const std::vector<std::string>& catalog_ids();

}  // namespace acute
