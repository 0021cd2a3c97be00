#include <doctest.h>

#include <random>
#include <vector>

#include "acute/catalog.hpp"
#include "acute/doubling.hpp"
#include "acute/verify.hpp"

using acute::CirclePoint;
using acute::Point;
using acute::PointSet;
using acute::Rational;
using acute::Verdict;
using acute::VerifyMode;

TEST_CASE("doubling: choose_radius picks the largest dyadic radius") {
  CHECK(acute::choose_radius(Rational(2)) == Rational(1, 2));
  CHECK(acute::choose_radius(Rational(1)) == Rational(1, 4));
  CHECK(acute::choose_radius(Rational(5)) == Rational(1));

  // the inequality is strict: s = 4r^2 exactly must step down
  CHECK(acute::choose_radius(Rational(4)) == Rational(1, 2));
  CHECK(acute::choose_radius(Rational(1, 4)) == Rational(1, 8));
  CHECK(acute::choose_radius(Rational(1, 1000)) == Rational(1, 64));

  CHECK_THROWS_AS(acute::choose_radius(Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(acute::choose_radius(Rational(-1)), std::invalid_argument);

  // dyadic, r <= 1, and maximal: 4(2r)^2 >= s while 4r^2 < s
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> num(1, 500), den(1, 500);
  for (int i = 0; i < 100; ++i) {
    const Rational s(num(rng), den(rng));
    const Rational r = acute::choose_radius(s);
    CHECK(Rational(4) * r * r < s);
    CHECK(r <= Rational(1));
    if (r < Rational(1)) {
      const Rational r2 = r * Rational(2);
      CHECK(!(Rational(4) * r2 * r2 < s));
    }
    mpz_class d = r.den();
    // denominator is a power of two
    while (mpz_even_p(d.get_mpz_t())) d /= 2;
    CHECK(d == 1);
  }
}

TEST_CASE("doubling: circle_points pinned coordinates") {
  const auto two = acute::circle_points(2, Rational(1, 4));
  REQUIRE(two.size() == 2);
  CHECK(two[0].t == Rational(1, 3));
  CHECK(two[0].x == Rational(1, 5));
  CHECK(two[0].y == Rational(3, 20));
  CHECK(two[1].t == Rational(2, 3));
  CHECK(two[1].x == Rational(5, 52));
  CHECK(two[1].y == Rational(3, 13));

  const auto one = acute::circle_points(1, Rational(1));
  REQUIRE(one.size() == 1);
  CHECK(one[0].t == Rational(1, 2));
  CHECK(one[0].x == Rational(3, 5));
  CHECK(one[0].y == Rational(4, 5));

  CHECK_THROWS_AS(acute::circle_points(0, Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(acute::circle_points(2, Rational(0)), std::invalid_argument);
}

TEST_CASE("doubling: circle_points structural properties") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<std::size_t> nn(1, 40);
  std::uniform_int_distribution<int> kk(0, 6);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = nn(rng);
    const Rational r(1, 1L << kk(rng));
    const auto phis = acute::circle_points(n, r);
    REQUIRE(phis.size() == n);
    const Rational r2 = r * r;
    for (std::size_t i = 0; i < n; ++i) {
      // exact norm identity and open first quadrant
      CHECK(phis[i].x * phis[i].x + phis[i].y * phis[i].y == r2);
      CHECK(phis[i].x.sign() > 0);
      CHECK(phis[i].y.sign() > 0);
      if (i) CHECK(phis[i - 1].t < phis[i].t);
      for (std::size_t j = i + 1; j < n; ++j) {
        CHECK((phis[i].x * phis[j].x + phis[i].y * phis[j].y).abs() < r2);
        CHECK(!(phis[i].x == phis[j].x && phis[i].y == phis[j].y));
      }
    }
  }
}

TEST_CASE("doubling: certified_s_bound pinned example") {
  const auto phis = acute::circle_points(2, Rational(1, 4));
  // M = <phi_1, phi_2> = 1/52 + 9/260 = 7/130
  CHECK(phis[0].x * phis[1].x + phis[0].y * phis[1].y == Rational(7, 130));
  CHECK(acute::certified_s_bound(Rational(1), Rational(1, 4), phis) == Rational(9, 520));
}

TEST_CASE("doubling: certified_s_bound with one circle point") {
  // no pairs, so M = 0 and the bound is min(s - 4r^2, 2r^2)
  const auto one = acute::circle_points(1, Rational(1, 4));
  CHECK(acute::certified_s_bound(Rational(1), Rational(1, 4), one) == Rational(1, 8));
  CHECK(acute::certified_s_bound(Rational(100), Rational(1, 4), one) == Rational(1, 8));
  // s barely above 4r^2: the s - 4r^2 branch wins
  CHECK(acute::certified_s_bound(Rational(5, 16), Rational(1, 4), one) == Rational(1, 16));
}

TEST_CASE("doubling: certified_s_bound rejects bad inputs") {
  const auto phis = acute::circle_points(2, Rational(1, 4));
  // 4r^2 < s_lb violated
  CHECK_THROWS_AS(acute::certified_s_bound(Rational(1, 4), Rational(1, 4), phis),
                  std::invalid_argument);
  // off-circle point
  auto bad = phis;
  bad[0].x += Rational(1, 1000);
  CHECK_THROWS_AS(acute::certified_s_bound(Rational(1), Rational(1, 4), bad),
                  std::invalid_argument);
  // antipodal pair
  auto anti = phis;
  anti[1].x = -phis[0].x;
  anti[1].y = -phis[0].y;
  CHECK_THROWS_AS(acute::certified_s_bound(Rational(1), Rational(1, 4), anti),
                  std::invalid_argument);

  // bound is positive and strictly below s_lb whenever defined
  for (std::size_t n : {1u, 2u, 5u, 12u}) {
    const Rational s(1);
    const Rational r = acute::choose_radius(s);
    const Rational b = acute::certified_s_bound(s, r, acute::circle_points(n, r));
    CHECK(b.sign() > 0);
    CHECK(b < s);
  }
}

TEST_CASE("doubling: double_set pinned 4 point example") {
  PointSet X;
  X.dim = 1;
  X.points = {Point{{Rational(0)}}, Point{{Rational(1)}}};
  const auto [Y, step] = acute::double_set(X, Rational(1));

  REQUIRE(Y.size() == 4);
  CHECK(Y.dim == 3);
  CHECK(step.r == Rational(1, 4));
  CHECK(step.dim_before == 1);
  CHECK(step.n_before == 2);
  CHECK(step.s_lower_bound == Rational(1));
  CHECK(step.m_max == Rational(7, 130));

  // point 2i carries +phi_i, point 2i+1 carries -phi_i
  CHECK(Y.points[0] == Point{{Rational(0), Rational(1, 5), Rational(3, 20)}});
  CHECK(Y.points[1] == Point{{Rational(0), Rational(-1, 5), Rational(-3, 20)}});
  CHECK(Y.points[2] == Point{{Rational(1), Rational(5, 52), Rational(3, 13)}});
  CHECK(Y.points[3] == Point{{Rational(1), Rational(-5, 52), Rational(-3, 13)}});

  CHECK(acute::verify_acute(Y, VerifyMode::exact).verdict == Verdict::acute);
}

TEST_CASE("doubling: double_set on a single point") {
  PointSet X;
  X.dim = 2;
  X.points = {Point{{Rational(5), Rational(-1)}}};
  const auto [Y, step] = acute::double_set(X, Rational(3));
  REQUIRE(Y.size() == 2);
  CHECK(Y.dim == 4);
  CHECK(step.r == Rational(1, 2));
  CHECK(Y.points[0] != Y.points[1]);
  CHECK_NOTHROW(Y.validate());
}

TEST_CASE("doubling: double_set rejects bad inputs") {
  PointSet empty;
  empty.dim = 1;
  CHECK_THROWS_AS(acute::double_set(empty, Rational(1)), std::invalid_argument);

  PointSet X;
  X.dim = 1;
  X.points = {Point{{Rational(0)}}, Point{{Rational(1)}}};
  CHECK_THROWS_AS(acute::double_set(X, Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(acute::double_set(X, Rational(-2)), std::invalid_argument);

  PointSet dup = X;
  dup.points.push_back(dup.points[0]);
  CHECK_THROWS_AS(acute::double_set(dup, Rational(1)), std::invalid_argument);
}

// Chained soundness: from every shipped base, three doublings in a row stay
// exactly acute, double in size each time, and never violate the carried bound.
TEST_CASE("doubling: chained doublings from every base stay certified") {
  for (std::size_t d = 1; d <= 5; ++d) {
    const acute::CatalogEntry base = acute::base_set(d);
    PointSet X = base.points;
    Rational s_lb = *base.certificate.s_min;
    for (int k = 1; k <= 3; ++k) {
      auto [Y, step] = acute::double_set(X, s_lb);
      CHECK(Y.size() == 2 * X.size());
      CHECK(Y.dim == X.dim + 2);

      const auto phis = acute::circle_points(step.n_before, step.r);
      const Rational next = acute::certified_s_bound(s_lb, step.r, phis);
      CHECK(next.sign() > 0);

      const auto rep = acute::verify_acute(Y, VerifyMode::exact);
      CHECK(rep.verdict == Verdict::acute);
      // the carried bound never overstates the true minimum
      CHECK(next <= *rep.s_min);

      X = std::move(Y);
      s_lb = next;
    }
    CHECK(X.size() == 8 * base.points.size());
  }
}

// The lifted apex product splits into the base product plus the 2D tail
// product, and the tail part can move the total by at most 4r^2.
TEST_CASE("doubling: lifted dot decomposes into base plus circle term") {
  const acute::CatalogEntry base = acute::base_set(3);
  const PointSet& X = base.points;
  const auto [Y, step] = acute::double_set(X, *base.certificate.s_min);
  const auto phis = acute::circle_points(step.n_before, step.r);
  const Rational cap = Rational(4) * step.r * step.r;

  auto tail = [&](std::size_t idx) {
    const CirclePoint& p = phis[idx / 2];
    return idx % 2 == 0 ? Point{{p.x, p.y}} : Point{{-p.x, -p.y}};
  };
  auto head = [&](std::size_t idx) { return X.points[idx / 2]; };

  std::mt19937_64 rng(23);
  std::uniform_int_distribution<std::size_t> pick(0, Y.size() - 1);
  int seen = 0;
  while (seen < 400) {
    const std::size_t a = pick(rng), y = pick(rng), z = pick(rng);
    if (a == y || a == z || y == z) continue;
    const Rational whole = acute::apex_dot(Y.points[a], Y.points[y], Y.points[z]);
    const Rational base_term = acute::apex_dot(head(a), head(y), head(z));
    const Rational circle_term = acute::apex_dot(tail(a), tail(y), tail(z));
    CHECK(whole == base_term + circle_term);
    CHECK(circle_term.abs() <= cap);
    ++seen;
  }
}

// Apex and neighbor over the same base point: the dot is 2(r^2 -+ <phi_i,
// phi_j>), so 2(r^2 - M) bounds every such triple. Checked exhaustively.
TEST_CASE("doubling: equal base triples respect the 2(r^2 - M) bound") {
  const acute::CatalogEntry base = acute::base_set(2);
  const auto [Y, step] = acute::double_set(base.points, *base.certificate.s_min);
  const Rational floor_val = Rational(2) * (step.r * step.r - step.m_max);
  CHECK(floor_val.sign() > 0);

  int cases = 0;
  for (std::size_t i = 0; i < base.points.size(); ++i) {
    for (std::size_t z = 0; z < Y.size(); ++z) {
      if (z == 2 * i || z == 2 * i + 1) continue;
      for (int flip = 0; flip < 2; ++flip) {
        const std::size_t a = 2 * i + flip;
        const std::size_t y = 2 * i + (1 - flip);
        const Rational dot = acute::apex_dot(Y.points[a], Y.points[y], Y.points[z]);
        CHECK(dot >= floor_val);
        ++cases;
      }
    }
  }
  CHECK(cases == int(base.points.size() * (Y.size() - 2) * 2));
}

TEST_CASE("doubling: expected_construct_size table") {
  const std::size_t want[] = {2, 3, 5, 8, 12, 16, 24, 32, 48, 64, 96, 128, 192, 256, 384, 512};
  for (std::size_t d = 1; d <= 16; ++d)
    CHECK(acute::expected_construct_size(d) == want[d - 1]);
}

TEST_CASE("doubling: construct in low dimensions returns catalog entries") {
  for (std::size_t d = 1; d <= 5; ++d) {
    const auto [ps, trace] = acute::construct(d);
    CHECK(ps.dim == d);
    CHECK(ps.size() == acute::expected_construct_size(d));
    CHECK(trace.steps.empty());
    CHECK(trace.base_id == "d" + std::to_string(d));
    CHECK(ps.meta.id == "construct-d" + std::to_string(d));
  }
}

TEST_CASE("doubling: construct sizes and trace invariants") {
  for (std::size_t d : {6, 7, 8, 9}) {
    const auto [ps, trace] = acute::construct(d);
    CHECK(ps.dim == d);
    CHECK(ps.size() == acute::expected_construct_size(d));
    CHECK(trace.base_id == (d % 2 == 0 ? "d4" : "d5"));
    REQUIRE(!trace.steps.empty());

    std::size_t dim = trace.steps.front().dim_before;
    for (const auto& st : trace.steps) {
      CHECK(st.dim_before == dim);
      dim += 2;
      CHECK(Rational(4) * st.r * st.r < st.s_lower_bound);
      CHECK(st.m_max < st.r * st.r);
      for (std::size_t i = 1; i < st.t_params.size(); ++i)
        CHECK(st.t_params[i - 1] < st.t_params[i]);
    }
    CHECK(dim == d);
  }
}

TEST_CASE("doubling: construct with an explicit base") {
  const auto [ps, trace] = acute::construct(7, {.base_id = "d3"});
  CHECK(ps.dim == 7);
  CHECK(trace.base_id == "d3");
  CHECK(trace.steps.size() == 2);
  CHECK(ps.size() == 20);  // 5 * 2^2
  CHECK(acute::verify_acute(ps, VerifyMode::exact).verdict == Verdict::acute);

  // parity mismatch and unreachable dimensions
  CHECK_THROWS_AS(acute::construct(6, {.base_id = "d3"}), std::invalid_argument);
  CHECK_THROWS_AS(acute::construct(2, {.base_id = "d5"}), std::invalid_argument);
  CHECK_THROWS_AS(acute::construct(0), std::invalid_argument);
  CHECK_THROWS_AS(acute::construct(4, {.base_id = "nope"}), std::invalid_argument);
}

TEST_CASE("doubling: recheck_exact changes nothing but the checking") {
  const auto plain = acute::construct(6);
  const auto checked = acute::construct(6, {.recheck_exact = true});
  CHECK(plain.first.points == checked.first.points);
  CHECK(plain.first.meta.id == checked.first.meta.id);
  REQUIRE(plain.second.steps.size() == checked.second.steps.size());
  for (std::size_t i = 0; i < plain.second.steps.size(); ++i) {
    CHECK(plain.second.steps[i].r == checked.second.steps[i].r);
    CHECK(plain.second.steps[i].m_max == checked.second.steps[i].m_max);
  }
}
