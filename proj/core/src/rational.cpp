#include "acute/rational.hpp"

#include <cmath>
#include <utility>

namespace acute {

namespace {

void require_nonzero_den(const mpz_class& den) {
  if (sgn(den) == 0) throw std::invalid_argument("Rational: zero denominator");
}

}  // namespace

Rational::Rational(long num, long den) : v_(num, den) {
  require_nonzero_den(v_.get_den());
  v_.canonicalize();
}

Rational::Rational(mpz_class num, mpz_class den)
    : v_(std::move(num), std::move(den)) {
  require_nonzero_den(v_.get_den());
  v_.canonicalize();
}

Rational::Rational(mpq_class q) : v_(std::move(q)) {
  require_nonzero_den(v_.get_den());
  v_.canonicalize();
}

Rational Rational::from_string(std::string_view s) {
  const auto bad = [&] {
    return std::invalid_argument("Rational: malformed literal \"" + std::string(s) + "\"");
  };
  if (s.empty()) throw bad();

  const auto is_int = [](std::string_view t) {
    if (!t.empty() && (t[0] == '-' || t[0] == '+')) t.remove_prefix(1);
    if (t.empty()) return false;
    for (char c : t)
      if (c < '0' || c > '9') return false;
    return true;
  };

  const auto slash = s.find('/');
  std::string_view num_part = s.substr(0, slash);
  std::string_view den_part = slash == std::string_view::npos ? "1" : s.substr(slash + 1);
  if (!is_int(num_part) || !is_int(den_part)) throw bad();

  mpz_class num(std::string(num_part), 10);
  mpz_class den(std::string(den_part), 10);
  require_nonzero_den(den);
  return Rational(std::move(num), std::move(den));
}

Rational Rational::from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("Rational: non-finite double");
  mpq_class q;
  mpq_set_d(q.get_mpq_t(), x);  // exact: doubles are dyadic
  return Rational(std::move(q));
}

Rational Rational::abs() const {
  mpq_class r;
  mpq_abs(r.get_mpq_t(), v_.get_mpq_t());
  return Rational(std::move(r));
}

std::string Rational::str() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::operator-() const {
  mpq_class r;
  mpq_neg(r.get_mpq_t(), v_.get_mpq_t());
  return Rational(std::move(r));
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

namespace {

// Best approximation with denominator <= limit, by walking the continued
// fraction of |x| = p/q. Mirrors the classic convergent/semiconvergent
// selection: the answer is either the last convergent below the limit or the
// best admissible semiconvergent, whichever is closer (ties to the smaller
// denominator, i.e. the convergent).
Rational limit_denominator(const Rational& x, const mpz_class& limit) {
  if (x.den() <= limit) return x;

  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  mpz_class n = x.num(), d = x.den();
  const bool negative = sgn(n) < 0;
  if (negative) n = -n;

  while (true) {
    mpz_class a = n / d;
    mpz_class q2 = q0 + a * q1;
    if (q2 > limit) break;
    mpz_class p2 = p0 + a * p1;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    mpz_class r = n - a * d;
    n = d; d = r;
    // exact representation reached (cannot happen here since den > limit)
    if (sgn(d) == 0) break;
  }

  // largest k with q0 + k*q1 <= limit
  mpz_class k = (limit - q0) / q1;
  Rational semi(p0 + k * p1, q0 + k * q1);
  Rational conv(p1, q1);
  Rational target = negative ? -x : x;
  Rational best =
      ((semi - target).abs() < (conv - target).abs()) ? semi : conv;
  return negative ? -best : best;
}

}  // namespace

Rational rationalize_one(double value, std::uint64_t max_denominator) {
  if (max_denominator < 1)
    throw std::invalid_argument("rationalize: max_denominator must be >= 1");
  const Rational exact = Rational::from_double(value);  // throws on non-finite
  static_assert(sizeof(unsigned long) == 8, "64-bit unsigned long expected");
  const mpz_class limit{static_cast<unsigned long>(max_denominator)};
  return limit_denominator(exact, limit);
}

std::vector<Rational> rationalize(const std::vector<double>& values,
                                  std::uint64_t max_denominator) {
  std::vector<Rational> out;
  out.reserve(values.size());
  for (double v : values) out.push_back(rationalize_one(v, max_denominator));
  return out;
}

}  // namespace acute
