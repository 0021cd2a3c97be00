#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace acute {

/// Exact arbitrary-precision rational scalar.
///
/// Always held in canonical form: denominator > 0 and gcd(|num|, den) == 1.
/// Equality is therefore structural, and every arithmetic result is exact.
/// Immutable-friendly value type; safe to share across threads.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(n) {}
  Rational(long long n) : v_(static_cast<long>(n)) {}

  /// num/den, canonicalized. Throws std::invalid_argument if den == 0.
  Rational(long num, long den);
  Rational(mpz_class num, mpz_class den);

  /// Wraps an mpq value, canonicalizing it.
  explicit Rational(mpq_class q);

  /// Parses "p/q" or a bare integer "p". Throws std::invalid_argument on
  /// malformed input or zero denominator.
  static Rational from_string(std::string_view s);

  /// Exact value of the double (doubles are dyadic rationals).
  /// Throws std::invalid_argument on NaN or infinity.
  static Rational from_double(double x);

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  Rational abs() const;

  /// Nearest-ish double (GMP rounding); reporting only, never used for
  /// certification.
  double to_double() const { return v_.get_d(); }

  /// Canonical "p/q" rendering; the denominator is always printed, so the
  /// output parses back bit-exactly.
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);  // throws on division by zero

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
    return c <=> 0;
  }

 private:
  mpq_class v_;  // canonical at all times
};

/// Best rational approximations of finite doubles with denominator bounded by
/// max_denominator, via continued-fraction convergents. Exact on inputs that
/// are ratios p/q with q <= max_denominator.
std::vector<Rational> rationalize(const std::vector<double>& values,
                                  std::uint64_t max_denominator);

/// Single-value form of rationalize().
Rational rationalize_one(double value, std::uint64_t max_denominator);

}  // namespace acute
