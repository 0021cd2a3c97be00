#include "acute/search.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "acute/verify.hpp"

namespace acute {

void SearchConfig::validate() const {
  if (dim < 1) throw std::invalid_argument("search: dim must be >= 1");
  if (target_size < 1) throw std::invalid_argument("search: target_size must be >= 1");
  if (max_iters < 1) throw std::invalid_argument("search: max_iters must be >= 1");
  if (!(initial_temperature > 0.0))
    throw std::invalid_argument("search: initial_temperature must be > 0");
  if (!(cooling_rate > 0.0) || !(cooling_rate < 1.0))
    throw std::invalid_argument("search: cooling_rate must be in (0, 1)");
  if (!(perturbation_scale > 0.0))
    throw std::invalid_argument("search: perturbation_scale must be > 0");
  if (!(accept_threshold > 0.0))
    throw std::invalid_argument("search: accept_threshold must be > 0");
  if (max_denominator < 1)
    throw std::invalid_argument("search: max_denominator must be >= 1");
}

namespace {

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  // [0, 1), 53-bit
  double uniform() { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double normal() {
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }
};

struct Triple {
  std::size_t a, i, j;
};

std::vector<Triple> make_triples(std::size_t n) {
  std::vector<Triple> out;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t i = 0; i < n; ++i) {
      if (i == a) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (j == a) continue;
        out.push_back({a, i, j});
      }
    }
  return out;
}

// flat row-major n x d layout
class Chain {
 public:
  Chain(std::size_t n, std::size_t d, const std::vector<Triple>& triples)
      : n_(n), d_(d), triples_(triples), cos_(triples.size()) {}

  // min cosine over all apex triples; -2 flags a degenerate pair
  double objective(const std::vector<double>& p) {
    double best = 1.0;
    for (std::size_t t = 0; t < triples_.size(); ++t) {
      const auto& tr = triples_[t];
      double dot = 0, nu = 0, nv = 0;
      const double* pa = &p[tr.a * d_];
      const double* pi = &p[tr.i * d_];
      const double* pj = &p[tr.j * d_];
      for (std::size_t k = 0; k < d_; ++k) {
        const double u = pi[k] - pa[k];
        const double v = pj[k] - pa[k];
        dot += u * v;
        nu += u * u;
        nv += v * v;
      }
      if (nu < 1e-24 || nv < 1e-24) return -2.0;
      const double c = dot / std::sqrt(nu * nv);
      cos_[t] = c;
      best = std::min(best, c);
    }
    return best;
  }

  // softmin-weighted ascent direction for the min cosine, normalized to
  // unit Frobenius norm (cos_ must hold the values for p)
  void gradient(const std::vector<double>& p, double tau, std::vector<double>& g) {
    g.assign(p.size(), 0.0);
    double cmin = 1.0;
    for (double c : cos_) cmin = std::min(cmin, c);
    for (std::size_t t = 0; t < triples_.size(); ++t) {
      const auto& tr = triples_[t];
      const double w = std::exp(-(cos_[t] - cmin) / tau);
      const double* pa = &p[tr.a * d_];
      const double* pi = &p[tr.i * d_];
      const double* pj = &p[tr.j * d_];
      double dot = 0, nu2 = 0, nv2 = 0;
      for (std::size_t k = 0; k < d_; ++k) {
        const double u = pi[k] - pa[k];
        const double v = pj[k] - pa[k];
        dot += u * v;
        nu2 += u * u;
        nv2 += v * v;
      }
      const double nunv = std::sqrt(nu2 * nv2);
      const double c = dot / nunv;
      double* ga = &g[tr.a * d_];
      double* gi = &g[tr.i * d_];
      double* gj = &g[tr.j * d_];
      for (std::size_t k = 0; k < d_; ++k) {
        const double u = pi[k] - pa[k];
        const double v = pj[k] - pa[k];
        const double du = v / nunv - c * u / nu2;
        const double dv = u / nunv - c * v / nv2;
        gi[k] += w * du;
        gj[k] += w * dv;
        ga[k] -= w * (du + dv);
      }
    }
    double norm2 = 0;
    for (double x : g) norm2 += x * x;
    if (norm2 > 1e-28) {
      const double inv = 1.0 / std::sqrt(norm2);
      for (double& x : g) x *= inv;
    }
  }

  // center at the origin and normalize RMS point norm to 1; the min
  // cosine is invariant under both
  void renormalize(std::vector<double>& p) const {
    for (std::size_t k = 0; k < d_; ++k) {
      double mean = 0;
      for (std::size_t i = 0; i < n_; ++i) mean += p[i * d_ + k];
      mean /= static_cast<double>(n_);
      for (std::size_t i = 0; i < n_; ++i) p[i * d_ + k] -= mean;
    }
    double sum2 = 0;
    for (double x : p) sum2 += x * x;
    if (sum2 > 1e-28) {
      const double inv = std::sqrt(static_cast<double>(n_) / sum2);
      for (double& x : p) x *= inv;
    }
  }

 private:
  std::size_t n_, d_;
  const std::vector<Triple>& triples_;
  std::vector<double> cos_;
};

std::optional<CatalogEntry> try_certify(const std::vector<double>& p,
                                        const SearchConfig& cfg) {
  PointSet ps;
  ps.dim = cfg.dim;
  ps.points.reserve(cfg.target_size);
  for (std::size_t i = 0; i < cfg.target_size; ++i) {
    Point pt;
    pt.coords.reserve(cfg.dim);
    for (std::size_t k = 0; k < cfg.dim; ++k)
      pt.coords.push_back(rationalize_one(p[i * cfg.dim + k], cfg.max_denominator));
    ps.points.push_back(std::move(pt));
  }
  ps.meta.source = "search";
  ps.meta.id = "search-d" + std::to_string(cfg.dim) + "-n" +
               std::to_string(cfg.target_size) + "-seed" + std::to_string(cfg.seed);

  VerificationReport rep;
  try {
    rep = verify_acute(ps, VerifyMode::exact);
  } catch (const std::invalid_argument&) {
    return std::nullopt;  // rounding collided two points
  }
  if (rep.verdict != Verdict::acute) return std::nullopt;

  CatalogEntry e;
  e.id = ps.meta.id;
  e.dim = cfg.dim;
  e.target_size = cfg.target_size;
  e.points = std::move(ps);
  e.certificate = std::move(rep);
  return e;
}

}  // namespace

std::optional<CatalogEntry> search_acute(const SearchConfig& cfg) {
  cfg.validate();
  const std::size_t n = cfg.target_size;
  const std::size_t d = cfg.dim;

  Rng rng(cfg.seed);
  const std::vector<Triple> triples = make_triples(n);
  Chain chain(n, d, triples);

  // basis directions plus noise spread the initial points; extras beyond
  // d start as pure noise
  std::vector<double> cur(n * d, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    if (i < d) cur[i * d + i] = 1.0;
    for (std::size_t k = 0; k < d; ++k) cur[i * d + k] += rng.uniform(-0.3, 0.3);
  }
  chain.renormalize(cur);
  double cur_obj = chain.objective(cur);

  std::vector<double> best = cur;
  double best_obj = cur_obj;
  std::vector<double> grad, prop;

  double temp = cfg.initial_temperature;
  for (std::size_t iter = 0; iter < cfg.max_iters; ++iter, temp *= cfg.cooling_rate) {
    const double frac =
        static_cast<double>(iter) / static_cast<double>(cfg.max_iters);
    const double tau = std::max(temp, 0.01);
    const double eta = cfg.perturbation_scale * temp / cfg.initial_temperature;
    const double sigma = 0.01 * (1.0 - frac) * (1.0 - frac);

    // cos_ cache inside chain matches cur only right after objective();
    // keep that ordering when editing
    chain.objective(cur);
    chain.gradient(cur, tau, grad);
    prop = cur;
    for (std::size_t idx = 0; idx < prop.size(); ++idx)
      prop[idx] += eta * grad[idx] + sigma * rng.normal();
    chain.renormalize(prop);

    const double prop_obj = chain.objective(prop);
    const double delta = prop_obj - cur_obj;
    if (delta >= 0.0 || rng.uniform() < std::exp(delta / std::max(temp, 1e-6))) {
      cur.swap(prop);
      cur_obj = prop_obj;
      if (cur_obj > best_obj) {
        best = cur;
        best_obj = cur_obj;
      }
    }

    if (cur_obj > cfg.accept_threshold && iter % 25 == 0) {
      if (auto hit = try_certify(cur, cfg)) return hit;
    }
  }

  if (best_obj > cfg.accept_threshold) {
    if (auto hit = try_certify(best, cfg)) return hit;
  }
  return std::nullopt;
}

}  // namespace acute
