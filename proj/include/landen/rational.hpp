#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace landen {

/// Arbitrary-precision signed integer (GMP-backed).
using BigInt = mpz_class;

/// Exact rational scalar. Always held in canonical form: the denominator is
/// positive and gcd(|numerator|, denominator) = 1, so equality is structural.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(int n) : q_(n) {}                 // NOLINT: integers embed implicitly
  Rational(long n) : q_(mpz_class(n)) {}     // NOLINT
  Rational(const BigInt& n) : q_(n) {}       // NOLINT

  /// num/den, reduced. Throws std::domain_error if den == 0.
  Rational(const BigInt& num, const BigInt& den);
  Rational(long num, long den);

  /// Parses "p/q", an integer, or a decimal literal with optional exponent
  /// ("0.25", "-3", "1e-10"). Decimal literals convert exactly, never through
  /// binary floating point. Throws std::invalid_argument on malformed input.
  static Rational parse(const std::string& text);

  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational abs() const;
  /// Integer power; negative exponents require a nonzero base.
  Rational pow(long e) const;

  /// "p" when the value is an integer, "p/q" otherwise.
  std::string str() const;
  /// Always "p/q", even for integers.
  std::string fraction_str() const;
  /// Fixed-point rendering with the given number of fractional digits,
  /// rounded half-away-from-zero.
  std::string decimal(int fractional_digits) const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);  // throws std::domain_error on /0

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) != 0; }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) >= 0; }

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// C(n, k) for integer n >= 0; zero when k < 0 or k > n.
/// Throws std::domain_error for n < 0 (use gen_binom for negative or
/// fractional upper indices).
Rational binom(long n, long k);

/// Generalized binomial coefficient C(r, k) = r(r-1)...(r-k+1)/k! for any
/// rational r and integer k >= 0; zero for k < 0. Agrees with binom() when r
/// is a non-negative integer.
Rational gen_binom(const Rational& r, long k);

/// 10^e as an exact rational (e may be negative).
Rational pow10(long e);

}  // namespace landen
