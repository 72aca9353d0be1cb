#pragma once

#include <iosfwd>
#include <vector>

#include "landen/rational.hpp"

namespace landen {

/// Truncated formal power series over Rational: coefficient i is the
/// coefficient of x^i, and the value is exact modulo x^(order+1). Operations
/// never claim coefficients beyond the stated order; combining series of
/// different orders truncates to the smaller one.
class TruncatedSeries {
 public:
  /// Zero series of the given order.
  explicit TruncatedSeries(int order);
  /// Wraps an explicit coefficient list; order = coeffs.size() - 1.
  explicit TruncatedSeries(std::vector<Rational> coeffs);

  static TruncatedSeries constant(const Rational& c, int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& coeff(int i) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

 private:
  std::vector<Rational> coeffs_;
};

/// Coefficientwise sum at order min(s.order, t.order).
TruncatedSeries add(const TruncatedSeries& s, const TruncatedSeries& t);

/// Cauchy product truncated to order min(s.order, t.order).
TruncatedSeries mul(const TruncatedSeries& s, const TruncatedSeries& t);

/// (1+x)^alpha: coefficient k is gen_binom(alpha, k). Exact polynomial when
/// alpha is a non-negative integer.
TruncatedSeries binomial_series(const Rational& alpha, int order);

/// Substitution x -> x^j: coefficient of x^(j*i) in the result is s's
/// coefficient of x^i, everything else is zero. The requested order must stay
/// within what s determines, i.e. order <= j*(s.order+1) - 1.
TruncatedSeries stretch(const TruncatedSeries& s, int j, int order);

/// Multiplication by c*x^j, truncated to s.order.
TruncatedSeries scale_shift(const TruncatedSeries& s, const Rational& c, int j);

/// Structural equality: same order and same coefficients.
bool operator==(const TruncatedSeries& s, const TruncatedSeries& t);
inline bool operator!=(const TruncatedSeries& s, const TruncatedSeries& t) { return !(s == t); }

inline TruncatedSeries operator+(const TruncatedSeries& s, const TruncatedSeries& t) { return add(s, t); }
inline TruncatedSeries operator*(const TruncatedSeries& s, const TruncatedSeries& t) { return mul(s, t); }

std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s);

}  // namespace landen
