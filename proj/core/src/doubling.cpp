#include "acute/doubling.hpp"

#include <stdexcept>

#include "acute/catalog.hpp"
#include "acute/verify.hpp"

namespace acute {

Rational choose_radius(const Rational& s) {
  if (s.sign() <= 0)
    throw std::invalid_argument("choose_radius: need s > 0, got " + s.str());
  Rational r(1);
  const Rational four(4);
  while (!(four * r * r < s)) r /= Rational(2);
  return r;
}

std::vector<CirclePoint> circle_points(std::size_t n, const Rational& r) {
  if (n < 1) throw std::invalid_argument("circle_points: need n >= 1");
  if (r.sign() <= 0)
    throw std::invalid_argument("circle_points: need r > 0, got " + r.str());
  std::vector<CirclePoint> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational t(static_cast<long>(i + 1), static_cast<long>(n + 1));
    const Rational t2 = t * t;
    const Rational den = Rational(1) + t2;
    CirclePoint p;
    p.x = r * (Rational(1) - t2) / den;
    p.y = r * (Rational(2) * t) / den;
    p.t = std::move(t);
    out.push_back(std::move(p));
  }
  return out;
}

namespace {

// max |<phi_i, phi_j>| over i != j, validating distinctness / non-antipodality
// / exact norm along the way.
Rational max_pairwise_abs_dot(const std::vector<CirclePoint>& phis, const Rational& r) {
  const Rational r2 = r * r;
  for (const auto& p : phis) {
    if (p.x * p.x + p.y * p.y != r2)
      throw std::invalid_argument("certified_s_bound: circle point off the radius-" +
                                  r.str() + " circle");
  }
  Rational m(0);
  for (std::size_t i = 0; i < phis.size(); ++i) {
    for (std::size_t j = i + 1; j < phis.size(); ++j) {
      if ((phis[i].x == phis[j].x && phis[i].y == phis[j].y) ||
          (phis[i].x == -phis[j].x && phis[i].y == -phis[j].y))
        throw std::invalid_argument(
            "certified_s_bound: circle points must be pairwise distinct and "
            "non-antipodal");
      const Rational dot = (phis[i].x * phis[j].x + phis[i].y * phis[j].y).abs();
      if (dot > m) m = dot;
    }
  }
  return m;
}

Rational bound_from_max_dot(const Rational& s_lb, const Rational& r, const Rational& m) {
  const Rational r2 = r * r;
  const Rational a = s_lb - Rational(4) * r2;
  const Rational b = Rational(2) * (r2 - m);
  return a < b ? a : b;
}

}  // namespace

Rational certified_s_bound(const Rational& s_lb, const Rational& r,
                           const std::vector<CirclePoint>& phis) {
  if (!(Rational(4) * r * r < s_lb))
    throw std::invalid_argument("certified_s_bound: need 4r^2 < s_lb");
  const Rational m = max_pairwise_abs_dot(phis, r);
  return bound_from_max_dot(s_lb, r, m);
}

std::pair<PointSet, StepRecord> double_set(const PointSet& X, const Rational& s_lb) {
  if (X.size() < 1) throw std::invalid_argument("double_set: empty input set");
  if (s_lb.sign() <= 0)
    throw std::invalid_argument("double_set: need s_lb > 0, got " + s_lb.str());
  X.validate();

  const std::size_t n = X.size();
  const Rational r = choose_radius(s_lb);
  const auto phis = circle_points(n, r);

  StepRecord step;
  step.dim_before = X.dim;
  step.n_before = n;
  step.s_lower_bound = s_lb;
  step.r = r;
  step.t_params.reserve(n);
  for (const auto& p : phis) step.t_params.push_back(p.t);
  step.m_max = max_pairwise_abs_dot(phis, r);

  PointSet Y;
  Y.dim = X.dim + 2;
  Y.points.reserve(2 * n);
  Y.meta = X.meta;
  Y.meta.source = "construct";
  for (std::size_t i = 0; i < n; ++i) {
    Point plus = X.points[i];
    plus.coords.push_back(phis[i].x);
    plus.coords.push_back(phis[i].y);
    Point minus = X.points[i];
    minus.coords.push_back(-phis[i].x);
    minus.coords.push_back(-phis[i].y);
    Y.points.push_back(std::move(plus));
    Y.points.push_back(std::move(minus));
  }
  return {std::move(Y), std::move(step)};
}

std::size_t expected_construct_size(std::size_t d) {
  switch (d) {
    case 1: return 2;
    case 2: return 3;
    case 3: return 5;
    case 4: return 8;
    case 5: return 12;
    default:
      break;
  }
  if (d % 2 == 0) return std::size_t{1} << (d / 2 + 1);  // 2^(d/2+1)
  return std::size_t{3} << ((d - 1) / 2);                // 3 * 2^((d-1)/2)
}

std::pair<PointSet, ConstructionTrace> construct(std::size_t d, const ConstructOptions& opts) {
  if (d < 1) throw std::invalid_argument("construct: need d >= 1");

  CatalogEntry base;
  if (opts.base_id) {
    base = base_set_by_id(*opts.base_id);
    if (base.dim > d || (d - base.dim) % 2 != 0)
      throw std::invalid_argument("construct: base " + *opts.base_id + " (dim " +
                                  std::to_string(base.dim) +
                                  ") cannot reach dimension " + std::to_string(d) +
                                  " by doubling");
  } else if (d <= 5) {
    base = base_set(d);
  } else {
    base = base_set(d % 2 == 0 ? 4 : 5);
  }

  ConstructionTrace trace;
  trace.base_id = base.id;

  PointSet X = std::move(base.points);
  Rational s_lb = *base.certificate.s_min;

  while (X.dim < d) {
    auto [Y, step] = double_set(X, s_lb);
    const auto phis = circle_points(step.n_before, step.r);
    Rational next = certified_s_bound(step.s_lower_bound, step.r, phis);
    if (opts.recheck_exact) {
      const auto exact = min_apex_dot(Y, opts.threads);
      if (exact.value < next)
        throw std::logic_error("construct: carried bound " + next.str() +
                               " exceeds exact minimum " + exact.value.str());
    }
    trace.steps.push_back(std::move(step));
    X = std::move(Y);
    s_lb = std::move(next);
  }

  X.meta.id = "construct-d" + std::to_string(d);
  if (!trace.steps.empty()) X.meta.source = "construct";
  return {std::move(X), std::move(trace)};
}

}  // namespace acute
