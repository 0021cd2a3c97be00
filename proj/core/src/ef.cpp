#include "acute/ef.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "acute/verify.hpp"

namespace acute {

std::size_t ef_default_samples(std::size_t d) {
  const double v = std::pow(2.0 / std::sqrt(3.0), static_cast<double>(d));
  return static_cast<std::size_t>(std::ceil(v - 1e-9));
}

namespace {

int apex_dot_int(const std::vector<int>& x, const std::vector<int>& y,
                 const std::vector<int>& z) {
  int s = 0;
  for (std::size_t k = 0; k < x.size(); ++k)
    s += (y[k] - x[k]) * (z[k] - x[k]);
  return s;
}

// find any triple with a zero apex dot; returns false when clean
bool find_right_triple(const std::vector<std::vector<int>>& pts,
                       std::size_t out[3]) {
  const std::size_t n = pts.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t i = 0; i < n; ++i) {
      if (i == a) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (j == a) continue;
        const int dot = apex_dot_int(pts[a], pts[i], pts[j]);
        if (dot < 0)
          throw std::logic_error("ef: negative apex dot on hypercube vertices");
        if (dot == 0) {
          out[0] = a;
          out[1] = i;
          out[2] = j;
          return true;
        }
      }
    }
  return false;
}

}  // namespace

EfRun ef_generate(std::size_t d, std::uint64_t seed,
                  std::optional<std::size_t> samples) {
  if (d < 2) throw std::invalid_argument("ef: d must be >= 2");
  const std::size_t n_samples = samples.value_or(ef_default_samples(d));
  if (n_samples < 1) throw std::invalid_argument("ef: sample count must be >= 1");

  EfRun run;
  run.dim = d;
  run.seed = seed;
  run.sample_size = n_samples;

  std::mt19937_64 rng(seed);
  run.sampled.reserve(n_samples);
  for (std::size_t i = 0; i < n_samples; ++i) {
    std::vector<int> v(d);
    for (std::size_t k = 0; k < d; ++k) v[k] = static_cast<int>(rng() & 1u);
    run.sampled.push_back(std::move(v));
  }

  // keep the first occurrence of each vertex
  std::vector<std::vector<int>> pts;
  for (const auto& v : run.sampled) {
    bool seen = false;
    for (const auto& w : pts)
      if (w == v) {
        seen = true;
        break;
      }
    if (seen)
      ++run.duplicates_removed;
    else
      pts.push_back(v);
  }

  // delete the highest-index participant of each right triple, rescanning
  // from scratch after every deletion so indices stay meaningful
  std::size_t triple[3];
  while (find_right_triple(pts, triple)) {
    ++run.right_triples_found;
    const std::size_t victim = std::max({triple[0], triple[1], triple[2]});
    pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(victim));
  }

  run.output.dim = d;
  for (const auto& v : pts) {
    Point p;
    p.coords.reserve(d);
    for (int c : v) p.coords.emplace_back(c);
    run.output.points.push_back(std::move(p));
  }
  run.output.meta.source = "ef";
  run.output.meta.id = "ef-d" + std::to_string(d) + "-seed" + std::to_string(seed);

  run.certificate = verify_acute(run.output, VerifyMode::exact);
  if (run.certificate.verdict != Verdict::acute)
    throw std::logic_error("ef: deletion left a non-acute set");
  return run;
}

}  // namespace acute
