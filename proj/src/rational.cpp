#include "landen/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace landen {

namespace {

BigInt parse_integer(const std::string& text, const char* what) {
  if (text.empty()) throw std::invalid_argument(std::string("empty ") + what);
  std::size_t i = (text[0] == '+' || text[0] == '-') ? 1 : 0;
  if (i == text.size()) throw std::invalid_argument(std::string("malformed ") + what + ": " + text);
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument(std::string("malformed ") + what + ": " + text);
  }
  return BigInt(text, 10);
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) : q_() {
  if (sgn(den) == 0) throw std::domain_error("Rational: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    const BigInt num = parse_integer(text.substr(0, slash), "numerator");
    const BigInt den = parse_integer(text.substr(slash + 1), "denominator");
    return Rational(num, den);
  }

  // Integer or decimal literal, optional exponent.
  std::string mantissa = text;
  long exp10 = 0;
  const auto epos = text.find_first_of("eE");
  if (epos != std::string::npos) {
    const std::string exppart = text.substr(epos + 1);
    const BigInt e = parse_integer(exppart, "exponent");
    if (!e.fits_slong_p()) throw std::invalid_argument("exponent out of range: " + text);
    exp10 = e.get_si();
    mantissa = text.substr(0, epos);
  }

  std::string digits = mantissa;
  long frac_len = 0;
  const auto dot = mantissa.find('.');
  if (dot != std::string::npos) {
    digits = mantissa.substr(0, dot) + mantissa.substr(dot + 1);
    frac_len = static_cast<long>(mantissa.size() - dot - 1);
    if (frac_len == 0 || dot == 0 || (dot == 1 && (mantissa[0] == '+' || mantissa[0] == '-')))
      throw std::invalid_argument("malformed decimal literal: " + text);
  }
  const BigInt scaled = parse_integer(digits, "number");
  return Rational(scaled) * pow10(exp10 - frac_len);
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(q_))); }

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  const bool invert = e < 0;
  if (invert && is_zero()) throw std::domain_error("Rational::pow: zero base, negative exponent");
  const unsigned long n = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  BigInt np, dp;
  mpz_pow_ui(np.get_mpz_t(), q_.get_num().get_mpz_t(), n);
  mpz_pow_ui(dp.get_mpz_t(), q_.get_den().get_mpz_t(), n);
  return invert ? Rational(dp, np) : Rational(np, dp);
}

std::string Rational::str() const {
  return is_integer() ? q_.get_num().get_str() : q_.get_str();
}

std::string Rational::fraction_str() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Rational::decimal(int fractional_digits) const {
  if (fractional_digits < 0) throw std::invalid_argument("decimal: negative digit count");
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(fractional_digits));
  const BigInt num = ::abs(q_.get_num()) * scale;
  const BigInt den = q_.get_den();
  BigInt quot, rem;
  mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (2 * rem >= den) ++quot;  // half away from zero (on |value|)

  std::string body = quot.get_str();
  if (static_cast<long>(body.size()) <= fractional_digits)
    body.insert(0, static_cast<std::size_t>(fractional_digits) + 1 - body.size(), '0');
  std::string out;
  if (sign() < 0 && sgn(quot) != 0) out += '-';
  if (fractional_digits == 0) return out + body;
  out += body.substr(0, body.size() - static_cast<std::size_t>(fractional_digits));
  out += '.';
  out += body.substr(body.size() - static_cast<std::size_t>(fractional_digits));
  return out;
}

Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }

Rational& Rational::operator+=(const Rational& o) {
  q_ += o.q_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  q_ -= o.q_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  q_ *= o.q_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational binom(long n, long k) {
  if (n < 0) throw std::domain_error("binom: upper index must be non-negative");
  if (k < 0 || k > n) return Rational(0);
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(out);
}

Rational gen_binom(const Rational& r, long k) {
  if (k < 0) return Rational(0);
  Rational out(1);
  for (long i = 0; i < k; ++i) out *= (r - Rational(i)) / Rational(i + 1);
  return out;
}

Rational pow10(long e) { return Rational(10).pow(e); }

}  // namespace landen
