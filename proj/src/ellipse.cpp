#include "landen/ellipse.hpp"

#include <optional>
#include <utility>

namespace landen {

EllipseParams params_from_axes(const Rational& a, const Rational& b) {
  if (!(a > Rational(0))) throw std::domain_error("semi-major axis must be positive");
  if (b < Rational(0)) throw std::domain_error("semi-minor axis must be nonnegative");
  if (b > a) throw std::domain_error("axes must satisfy b <= a");
  EllipseParams p;
  p.a = a;
  p.b = b;
  p.e2 = Rational(1) - (b * b) / (a * a);
  p.sqrt_x = (a - b) / (a + b);
  p.x = p.sqrt_x * p.sqrt_x;
  p.h = p.x;
  p.degenerate = b.is_zero();
  const Rational one_plus = Rational(1) + p.sqrt_x;
  if (Rational(4) * p.sqrt_x / (one_plus * one_plus) != p.e2)
    throw std::logic_error("bridge identity 4*sqrt_x/(1+sqrt_x)^2 = e2 violated");
  return p;
}

namespace {

// Partial sum of weight * arctan(1/x) for integer x >= 2. The series
// alternates with strictly decreasing terms, so the error is below the first
// omitted term; stops once that bound drops to the budget and returns it.
std::pair<Rational, Rational> weighted_arctan_inv(long x, const Rational& weight,
                                                  const Rational& budget) {
  const BigInt x2 = BigInt(x) * BigInt(x);
  BigInt power(x);  // x^(2k+1)
  Rational sum(0);
  for (long k = 0;;) {
    Rational term(BigInt(k % 2 == 0 ? 1 : -1), BigInt(2 * k + 1) * power);
    sum += weight * term;
    power *= x2;
    ++k;
    const Rational bound = weight * Rational(BigInt(1), BigInt(2 * k + 1) * power);
    if (bound <= budget) return {sum, bound};
  }
}

}  // namespace

PiApprox pi_with_budget(const Rational& budget) {
  if (!(budget > Rational(0))) throw std::domain_error("pi budget must be positive");
  const Rational half = budget / Rational(2);
  auto [a5, r5] = weighted_arctan_inv(5, Rational(16), half);
  auto [a239, r239] = weighted_arctan_inv(239, Rational(4), half);
  return {a5 - a239, r5 + r239};
}

PiApprox pi_approx(long digits) {
  if (digits < 1) throw std::domain_error("digits must be >= 1");
  return pi_with_budget(pow10(-digits));
}

namespace {

// Walks t_m = C(2m,m)/4^m through t_m = t_{m-1} * (2m-1)/(2m); both
// perimeter coefficient families fall out of it.
struct CentralRatio {
  Rational t{1};
  long m = 0;
  void advance() {
    ++m;
    t *= Rational(2 * m - 1, 2 * m);
  }
  Rational maclaurin() const { return -(t * t) / Rational(2 * m - 1); }
  Rational ivory() const {
    const Rational q = t / Rational(2 * m - 1);
    return q * q;
  }
};

struct TailSearch {
  long terms = 0;        // N+1: indices 0..N are summed
  Rational sum;          // partial series sum through index N
  Rational series_tail;  // proven bound on the dropped part of the bare series
};

// Smallest N with tail(N) <= target, where tail is the geometric bound
// |coeff_{N+1}| * var^{N+1} / (1 - var), or, for the ivory family at
// var = 1, the cubic-decay bound I_{N+1} * (N+1)^3 / (2 N^2) (valid from
// N = 1 because n^3 * I_n decreases). Both rest on the families'
// monotone-magnitude property. nullopt when max_terms is hit first.
std::optional<TailSearch> search_tail(bool ivory_family, const Rational& variable,
                                      const Rational& target, long max_terms) {
  const bool at_one = variable == Rational(1);
  if (at_one && !ivory_family) return std::nullopt;
  const Rational one_minus = Rational(1) - variable;
  CentralRatio it;
  Rational sum(0);
  Rational power(1);  // variable^n
  for (long n = 0; n < max_terms; ++n) {
    sum += (ivory_family ? it.ivory() : it.maclaurin()) * power;
    power *= variable;
    it.advance();  // coefficient n+1
    Rational tail;
    if (at_one) {
      if (n == 0) continue;
      const Rational np1(n + 1);
      tail = it.ivory() * np1 * np1 * np1 / (Rational(2 * n) * Rational(n));
    } else {
      tail = (ivory_family ? it.ivory() : it.maclaurin().abs()) * power / one_minus;
    }
    if (tail <= target) return TailSearch{n + 1, sum, tail};
  }
  return std::nullopt;
}

// Assembles the rendering and its certified radius from an exact partial sum.
// The estimate prefactor * pi * sum differs from the true perimeter by at
// most prefactor * pi_ub * series_tail + prefactor * |sum| * pi.radius;
// rounding to digits+1 places costs at most one more unit in that place.
BoundedDecimal render(const Rational& prefactor, const TailSearch& s, const PiApprox& pi,
                      const Rational& pi_ub, long digits) {
  const Rational estimate = prefactor * pi.value * s.sum;
  BoundedDecimal out;
  out.decimal = estimate.decimal(digits + 1);
  out.value = Rational::parse(out.decimal);
  out.error_radius = prefactor * pi_ub * s.series_tail +
                     prefactor * s.sum.abs() * pi.radius + pow10(-(digits + 1));
  out.terms = s.terms;
  return out;
}

}  // namespace

// Error budget for both methods: with eps = 10^-digits, the pi enclosure and
// the series tail each get 2/5 eps and the final rounding one guard-place
// unit (eps/10), keeping the total radius within eps. sum_ub bounds the
// series sum: 1 for maclaurin (later terms are negative), 2 for ivory
// (sum_n I_n = 4/pi).

BoundedDecimal perimeter_maclaurin(const EllipseParams& p, long digits, long max_terms) {
  if (digits < 1) throw std::domain_error("digits must be >= 1");
  if (max_terms < 1) throw std::domain_error("max_terms must be >= 1");
  if (p.e2 == Rational(1))
    throw DegenerateInputError("maclaurin tail bound needs e2 < 1; use the ivory series for b = 0");
  const Rational slice = Rational(2, 5) * pow10(-digits);
  const Rational prefactor = Rational(2) * p.a;
  const PiApprox pi = pi_with_budget(slice / prefactor);
  const Rational pi_ub = pi.value + pi.radius;
  auto found = search_tail(false, p.e2, slice / (prefactor * pi_ub), max_terms);
  if (!found)
    throw PrecisionUnreachableError("maclaurin tail bound misses " + std::to_string(digits) +
                                    " digits within " + std::to_string(max_terms) + " terms");
  return render(prefactor, *found, pi, pi_ub, digits);
}

BoundedDecimal perimeter_ivory(const EllipseParams& p, long digits, long max_terms) {
  if (digits < 1) throw std::domain_error("digits must be >= 1");
  if (max_terms < 1) throw std::domain_error("max_terms must be >= 1");
  const Rational slice = Rational(2, 5) * pow10(-digits);
  const Rational prefactor = p.a + p.b;
  const Rational sum_ub(2);
  const PiApprox pi = pi_with_budget(slice / (prefactor * sum_ub));
  const Rational pi_ub = pi.value + pi.radius;
  auto found = search_tail(true, p.h, slice / (prefactor * pi_ub), max_terms);
  if (!found)
    throw PrecisionUnreachableError("ivory tail bound misses " + std::to_string(digits) +
                                    " digits within " + std::to_string(max_terms) + " terms");
  return render(prefactor, *found, pi, pi_ub, digits);
}

ConvergenceComparison compare_convergence(const EllipseParams& p, const Rational& tolerance,
                                          long max_terms) {
  if (!(tolerance > Rational(0))) throw std::domain_error("tolerance must be positive");
  if (max_terms < 1) throw std::domain_error("max_terms must be >= 1");
  const PiApprox pi = pi_with_budget(Rational(1, 1000));
  const Rational pi_ub = pi.value + pi.radius;

  ConvergenceComparison out;
  out.maclaurin_tail = Rational(0);
  out.ivory_tail = Rational(0);
  if (p.e2 != Rational(1)) {
    const Rational scale = Rational(2) * p.a * pi_ub;
    if (auto r = search_tail(false, p.e2, tolerance / scale, max_terms)) {
      out.maclaurin_terms = r->terms;
      out.maclaurin_tail = r->series_tail * scale;
    }
  }
  const Rational scale = (p.a + p.b) * pi_ub;
  if (auto r = search_tail(true, p.h, tolerance / scale, max_terms)) {
    out.ivory_terms = r->terms;
    out.ivory_tail = r->series_tail * scale;
  }
  return out;
}

}  // namespace landen
