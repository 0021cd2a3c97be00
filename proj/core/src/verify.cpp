#include "acute/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

namespace acute {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::acute: return "acute";
    case Verdict::right_angle_present: return "right_angle_present";
    case Verdict::obtuse_present: return "obtuse_present";
    case Verdict::indeterminate: return "indeterminate";
  }
  return "indeterminate";
}

const char* to_string(VerifyMode m) {
  return m == VerifyMode::exact ? "exact" : "float";
}

Verdict verdict_from_string(const std::string& s) {
  if (s == "acute") return Verdict::acute;
  if (s == "right_angle_present") return Verdict::right_angle_present;
  if (s == "obtuse_present") return Verdict::obtuse_present;
  if (s == "indeterminate") return Verdict::indeterminate;
  throw std::invalid_argument("unknown verdict \"" + s + "\"");
}

VerifyMode mode_from_string(const std::string& s) {
  if (s == "exact") return VerifyMode::exact;
  if (s == "float") return VerifyMode::floating;
  throw std::invalid_argument("unknown mode \"" + s + "\"");
}

namespace {

int resolve_threads(int threads, std::size_t n) {
  int t = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
  if (t < 1) t = 1;
  if (static_cast<std::size_t>(t) > n) t = static_cast<int>(n);
  return t;
}

// Points rescaled to integer vectors: coords[i][k] == num[k] / lambda,
// with lambda the (positive) lcm of the coordinate denominators. All
// dots then reduce to integer arithmetic plus one exact division at the end.
struct ScaledPoint {
  mpz_class lambda;
  std::vector<mpz_class> num;
};

std::vector<ScaledPoint> scale_points(const PointSet& X) {
  std::vector<ScaledPoint> sp(X.size());
  mpz_class t;
  for (std::size_t i = 0; i < X.size(); ++i) {
    const Point& p = X.points[i];
    sp[i].lambda = 1;
    for (const Rational& c : p.coords)
      mpz_lcm(sp[i].lambda.get_mpz_t(), sp[i].lambda.get_mpz_t(), c.den().get_mpz_t());
    sp[i].num.resize(p.dim());
    for (std::size_t k = 0; k < p.dim(); ++k) {
      mpz_divexact(t.get_mpz_t(), sp[i].lambda.get_mpz_t(), p.coords[k].den().get_mpz_t());
      sp[i].num[k] = p.coords[k].num() * t;
    }
  }
  return sp;
}

// A fraction num/den (den > 0) plus the triple that produced it.
struct Candidate {
  mpz_class num;
  mpz_class den;
  std::array<std::size_t, 3> w{};
  bool valid = false;
};

// candidate order: value first, then lexicographic witness
bool candidate_less(const Candidate& a, const Candidate& b, mpz_class& t1, mpz_class& t2) {
  t1 = a.num * b.den;
  t2 = b.num * a.den;
  const int c = mpz_cmp(t1.get_mpz_t(), t2.get_mpz_t());
  if (c != 0) return c < 0;
  return a.w < b.w;
}

void consider(Candidate& best, const mpz_class& num, const mpz_class& den,
              std::array<std::size_t, 3> w, mpz_class& t1, mpz_class& t2) {
  if (!best.valid) {
    best.num = num;
    best.den = den;
    best.w = w;
    best.valid = true;
    return;
  }
  // sign prefilter: candidates strictly above the current best by sign alone
  const int sc = sgn(num), sb = sgn(best.num);
  if (sc != sb) {
    if (sc > sb) return;
    best.num = num;
    best.den = den;
    best.w = w;
    return;
  }
  t1 = num * best.den;
  t2 = best.num * den;
  const int c = mpz_cmp(t1.get_mpz_t(), t2.get_mpz_t());
  if (c < 0 || (c == 0 && w < best.w)) {
    best.num = num;
    best.den = den;
    best.w = w;
  }
}

struct ExactScanResult {
  Candidate best_all;       // y = z permitted (this minimum is s_min)
  Candidate best_distinct;  // pairwise-distinct triples only
};

// One apex chunk of the exact scan. Per apex: difference vectors against the
// apex are formed once as integer vectors, then each unordered pair {y, z}
// costs one integer dot.
ExactScanResult exact_scan_range(const PointSet& X, const std::vector<ScaledPoint>& sp,
                                 std::size_t lo, std::size_t hi) {
  const std::size_t n = X.size();
  const std::size_t d = X.dim;
  ExactScanResult res;
  std::vector<std::vector<mpz_class>> diff(n, std::vector<mpz_class>(d));
  std::vector<mpz_class> pair_den(n);  // lambda_a^2 * lambda_y
  mpz_class a2, dot, den, t1, t2;

  for (std::size_t a = lo; a < hi; ++a) {
    a2 = sp[a].lambda * sp[a].lambda;
    for (std::size_t y = 0; y < n; ++y) {
      if (y == a) continue;
      for (std::size_t k = 0; k < d; ++k) {
        diff[y][k] = sp[a].lambda * sp[y].num[k];
        mpz_submul(diff[y][k].get_mpz_t(), sp[y].lambda.get_mpz_t(), sp[a].num[k].get_mpz_t());
      }
      pair_den[y] = a2 * sp[y].lambda;
    }
    for (std::size_t y = 0; y < n; ++y) {
      if (y == a) continue;
      for (std::size_t z = y; z < n; ++z) {
        if (z == a) continue;
        dot = 0;
        for (std::size_t k = 0; k < d; ++k)
          mpz_addmul(dot.get_mpz_t(), diff[y][k].get_mpz_t(), diff[z][k].get_mpz_t());
        den = pair_den[y] * sp[z].lambda;
        consider(res.best_all, dot, den, {a, y, z}, t1, t2);
        if (z != y) consider(res.best_distinct, dot, den, {a, y, z}, t1, t2);
      }
    }
  }
  return res;
}

void merge(Candidate& into, const Candidate& from, mpz_class& t1, mpz_class& t2) {
  if (!from.valid) return;
  if (!into.valid) {
    into = from;
    return;
  }
  if (candidate_less(from, into, t1, t2)) into = from;
}

// Parallel exact scan; the merge is performed in ascending apex order so the
// result is bit-identical to a single-threaded run.
ExactScanResult exact_scan(const PointSet& X, int threads) {
  const auto sp = scale_points(X);
  const std::size_t n = X.size();
  const int t = resolve_threads(threads, n);
  std::vector<ExactScanResult> parts(t);
  if (t == 1) {
    parts[0] = exact_scan_range(X, sp, 0, n);
  } else {
    std::vector<std::thread> workers;
    const std::size_t chunk = (n + t - 1) / t;
    for (int i = 0; i < t; ++i) {
      const std::size_t lo = std::min(n, i * chunk);
      const std::size_t hi = std::min(n, lo + chunk);
      workers.emplace_back([&, i, lo, hi] { parts[i] = exact_scan_range(X, sp, lo, hi); });
    }
    for (auto& w : workers) w.join();
  }
  ExactScanResult out;
  mpz_class t1, t2;
  for (const auto& p : parts) {
    merge(out.best_all, p.best_all, t1, t2);
    merge(out.best_distinct, p.best_distinct, t1, t2);
  }
  return out;
}

struct FloatScanResult {
  double min_dot = std::numeric_limits<double>::infinity();
  std::array<std::size_t, 3> min_witness{};
  bool has_min = false;
  double max_cos = -std::numeric_limits<double>::infinity();
  bool in_band = false;
  std::array<std::size_t, 3> band_witness{};
};

FloatScanResult float_scan_range(const std::vector<std::vector<double>>& P, double tol,
                                 std::size_t lo, std::size_t hi) {
  const std::size_t n = P.size();
  const std::size_t d = n ? P[0].size() : 0;
  FloatScanResult res;
  std::vector<std::vector<double>> diff(n, std::vector<double>(d));
  std::vector<double> norm(n);

  for (std::size_t a = lo; a < hi; ++a) {
    for (std::size_t y = 0; y < n; ++y) {
      if (y == a) continue;
      double s2 = 0;
      for (std::size_t k = 0; k < d; ++k) {
        diff[y][k] = P[y][k] - P[a][k];
        s2 += diff[y][k] * diff[y][k];
      }
      norm[y] = std::sqrt(s2);
    }
    for (std::size_t y = 0; y < n; ++y) {
      if (y == a) continue;
      for (std::size_t z = y + 1; z < n; ++z) {
        if (z == a) continue;
        double dot = 0;
        for (std::size_t k = 0; k < d; ++k) dot += diff[y][k] * diff[z][k];
        if (!res.has_min || dot < res.min_dot) {
          res.min_dot = dot;
          res.min_witness = {a, y, z};
          res.has_min = true;
        }
        if (!res.in_band && dot > -tol && dot < tol) {
          res.in_band = true;
          res.band_witness = {a, y, z};
        }
        const double den = norm[y] * norm[z];
        if (den > 0) {
          const double c = dot / den;
          if (c > res.max_cos) res.max_cos = c;
        }
      }
    }
  }
  return res;
}

FloatScanResult float_scan(const PointSet& X, double tol, int threads) {
  const std::size_t n = X.size();
  std::vector<std::vector<double>> P(n);
  for (std::size_t i = 0; i < n; ++i) {
    P[i].reserve(X.dim);
    for (const Rational& c : X.points[i].coords) P[i].push_back(c.to_double());
  }
  const int t = resolve_threads(threads, n);
  std::vector<FloatScanResult> parts(t);
  if (t == 1) {
    parts[0] = float_scan_range(P, tol, 0, n);
  } else {
    std::vector<std::thread> workers;
    const std::size_t chunk = (n + t - 1) / t;
    for (int i = 0; i < t; ++i) {
      const std::size_t lo = std::min(n, i * chunk);
      const std::size_t hi = std::min(n, lo + chunk);
      workers.emplace_back([&, i, lo, hi] { parts[i] = float_scan_range(P, tol, lo, hi); });
    }
    for (auto& w : workers) w.join();
  }
  FloatScanResult out;
  for (const auto& p : parts) {
    if (p.has_min && (!out.has_min || p.min_dot < out.min_dot ||
                      (p.min_dot == out.min_dot && p.min_witness < out.min_witness))) {
      out.min_dot = p.min_dot;
      out.min_witness = p.min_witness;
      out.has_min = true;
    }
    if (p.in_band && !out.in_band) {
      out.in_band = true;
      out.band_witness = p.band_witness;
    }
    out.max_cos = std::max(out.max_cos, p.max_cos);
  }
  return out;
}

double cos_to_degrees(double c) {
  return std::acos(std::clamp(c, -1.0, 1.0)) * 180.0 / M_PI;
}

}  // namespace

MinApexResult min_apex_dot(const PointSet& X, int threads) {
  X.validate();
  if (X.size() < 2)
    throw std::invalid_argument("min_apex_dot: need at least 2 points, got " +
                                std::to_string(X.size()));
  const auto scan = exact_scan(X, threads);
  return MinApexResult{Rational(scan.best_all.num, scan.best_all.den), scan.best_all.w};
}

VerificationReport verify_acute(const PointSet& X, VerifyMode mode, double tolerance,
                                int threads) {
  const auto start = std::chrono::steady_clock::now();
  X.validate();  // duplicates and dimension mismatches are input errors
  if (mode == VerifyMode::floating && !(tolerance > 0))
    throw std::invalid_argument("verify_acute: float mode needs tolerance > 0");

  VerificationReport rep;
  rep.mode = mode;
  rep.n = X.size();
  rep.dim = X.dim;
  if (mode == VerifyMode::floating) rep.tolerance = tolerance;

  if (X.size() < 3) {
    rep.verdict = Verdict::acute;  // vacuous: no triple exists
    if (mode == VerifyMode::exact && X.size() == 2) {
      const auto scan = exact_scan(X, threads);
      rep.s_min = Rational(scan.best_all.num, scan.best_all.den);
      rep.witness = scan.best_all.w;
    }
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return rep;
  }

  if (mode == VerifyMode::exact) {
    const auto scan = exact_scan(X, threads);
    const int s = sgn(scan.best_distinct.num);
    rep.verdict = s > 0   ? Verdict::acute
                  : s == 0 ? Verdict::right_angle_present
                           : Verdict::obtuse_present;
    rep.s_min = Rational(scan.best_all.num, scan.best_all.den);
    rep.witness = scan.best_all.w;
    const auto fs = float_scan(X, tolerance, threads);
    rep.min_angle_deg = cos_to_degrees(fs.max_cos);
  } else {
    const auto fs = float_scan(X, tolerance, threads);
    if (fs.in_band) {
      rep.verdict = Verdict::indeterminate;
      rep.witness = fs.band_witness;
    } else if (fs.min_dot > 0) {
      rep.verdict = Verdict::acute;
    } else {
      rep.verdict = Verdict::obtuse_present;
      rep.witness = fs.min_witness;
    }
    rep.min_angle_deg = cos_to_degrees(fs.max_cos);
  }

  rep.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
  return rep;
}

double min_angle_deg(const PointSet& X, int threads) {
  X.validate();
  if (X.size() < 3)
    throw std::invalid_argument("min_angle_deg: need at least 3 points, got " +
                                std::to_string(X.size()));
  const auto fs = float_scan(X, 1e-9, threads);
  return cos_to_degrees(fs.max_cos);
}

}  // namespace acute
