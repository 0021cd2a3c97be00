#include <doctest.h>

#include <algorithm>

#include "acute/ef.hpp"
#include "acute/verify.hpp"

using acute::Rational;
using acute::Verdict;
using acute::VerifyMode;

TEST_CASE("ef: hypercube lemma holds for every coordinate pattern") {
  // per-coordinate contribution (y-x)(z-x) over all 2^3 bit patterns
  for (int x = 0; x <= 1; ++x)
    for (int y = 0; y <= 1; ++y)
      for (int z = 0; z <= 1; ++z) {
        const int term = (y - x) * (z - x);
        CHECK(term >= 0);
        CHECK(term <= 1);
      }
}

TEST_CASE("ef: default sample count") {
  CHECK(acute::ef_default_samples(2) == 2);   // (2/sqrt3)^2 = 4/3
  CHECK(acute::ef_default_samples(4) == 2);   // 16/9
  CHECK(acute::ef_default_samples(10) == 5);  // 1024/243 = 4.21
  CHECK(acute::ef_default_samples(12) == 6);  // 4096/729 = 5.62
}

TEST_CASE("ef: runs are deterministic per (d, seed, N)") {
  const auto a = acute::ef_generate(8, 123);
  const auto b = acute::ef_generate(8, 123);
  CHECK(a.sampled == b.sampled);
  CHECK(a.output.points == b.output.points);
  CHECK(a.duplicates_removed == b.duplicates_removed);
  CHECK(a.right_triples_found == b.right_triples_found);
}

TEST_CASE("ef: bookkeeping is consistent and the output is certified") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto run = acute::ef_generate(10, seed);
    CHECK(run.dim == 10);
    CHECK(run.seed == seed);
    CHECK(run.sample_size == 5);
    CHECK(run.sampled.size() == run.sample_size);

    // every sampled vertex is a 0/1 vector of the right dimension
    for (const auto& v : run.sampled) {
      CHECK(v.size() == 10);
      for (int b : v) CHECK((b == 0 || b == 1));
    }

    // sizes add up: samples - duplicates - deletions = output
    CHECK(run.output.size() ==
          run.sample_size - run.duplicates_removed - run.right_triples_found);

    // output points are sampled vertices
    for (const auto& p : run.output.points) {
      std::vector<int> bits;
      for (const auto& c : p.coords) bits.push_back(c == Rational(1) ? 1 : 0);
      CHECK(std::find(run.sampled.begin(), run.sampled.end(), bits) !=
            run.sampled.end());
    }

    CHECK(run.certificate.verdict == Verdict::acute);
    CHECK(acute::verify_acute(run.output, VerifyMode::exact).verdict ==
          Verdict::acute);
    CHECK(run.output.meta.source == "ef");
    CHECK(run.output.meta.id == "ef-d10-seed" + std::to_string(seed));
  }
}

TEST_CASE("ef: planar runs never exceed three points") {
  // an acute set in R^2 has at most 3 points, so certification caps the size
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto run = acute::ef_generate(2, seed, 8);
    CHECK(run.output.size() <= 3);
  }
}

TEST_CASE("ef: explicit sample count and error paths") {
  const auto run = acute::ef_generate(6, 7, 12);
  CHECK(run.sample_size == 12);
  CHECK(run.sampled.size() == 12);

  CHECK_THROWS_AS(acute::ef_generate(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(acute::ef_generate(5, 0, 0), std::invalid_argument);
}
