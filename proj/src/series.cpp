#include "landen/series.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace landen {

TruncatedSeries::TruncatedSeries(int order) {
  if (order < 0) throw std::invalid_argument("TruncatedSeries: negative order");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("TruncatedSeries: empty coefficient list");
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, int order) {
  TruncatedSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

const Rational& TruncatedSeries::coeff(int i) const {
  if (i < 0 || i > order()) throw std::out_of_range("TruncatedSeries::coeff: index beyond order");
  return coeffs_[static_cast<std::size_t>(i)];
}

TruncatedSeries add(const TruncatedSeries& s, const TruncatedSeries& t) {
  const int n = std::min(s.order(), t.order());
  std::vector<Rational> out(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) out[static_cast<std::size_t>(i)] = s.coeff(i) + t.coeff(i);
  return TruncatedSeries(std::move(out));
}

TruncatedSeries mul(const TruncatedSeries& s, const TruncatedSeries& t) {
  const int n = std::min(s.order(), t.order());
  std::vector<Rational> out(static_cast<std::size_t>(n) + 1, Rational(0));
  for (int i = 0; i <= n; ++i) {
    if (s.coeff(i).is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (t.coeff(j).is_zero()) continue;
      out[static_cast<std::size_t>(i + j)] += s.coeff(i) * t.coeff(j);
    }
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries binomial_series(const Rational& alpha, int order) {
  if (order < 0) throw std::invalid_argument("binomial_series: negative order");
  std::vector<Rational> out(static_cast<std::size_t>(order) + 1);
  Rational c(1);  // gen_binom(alpha, 0)
  out[0] = c;
  for (int k = 1; k <= order; ++k) {
    c *= (alpha - Rational(k - 1)) / Rational(k);
    out[static_cast<std::size_t>(k)] = c;
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries stretch(const TruncatedSeries& s, int j, int order) {
  if (j < 1) throw std::invalid_argument("stretch: j must be >= 1");
  if (order < 0) throw std::invalid_argument("stretch: negative order");
  // s determines coefficients of x^(j*i) for i <= s.order and zeros in
  // between; beyond j*(s.order+1) - 1 nothing is known.
  if (static_cast<long>(order) > static_cast<long>(j) * (s.order() + 1) - 1)
    throw std::invalid_argument("stretch: requested order exceeds what the input determines");
  std::vector<Rational> out(static_cast<std::size_t>(order) + 1, Rational(0));
  for (int i = 0; static_cast<long>(i) * j <= order; ++i)
    out[static_cast<std::size_t>(i) * static_cast<std::size_t>(j)] = s.coeff(i);
  return TruncatedSeries(std::move(out));
}

TruncatedSeries scale_shift(const TruncatedSeries& s, const Rational& c, int j) {
  if (j < 0) throw std::invalid_argument("scale_shift: negative shift");
  const int n = s.order();
  std::vector<Rational> out(static_cast<std::size_t>(n) + 1, Rational(0));
  for (int i = 0; i + j <= n; ++i) out[static_cast<std::size_t>(i + j)] = c * s.coeff(i);
  return TruncatedSeries(std::move(out));
}

bool operator==(const TruncatedSeries& s, const TruncatedSeries& t) {
  return s.coeffs() == t.coeffs();
}

std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s) {
  os << "[";
  for (int i = 0; i <= s.order(); ++i) {
    if (i) os << ", ";
    os << s.coeff(i);
  }
  return os << "]";
}

}  // namespace landen
