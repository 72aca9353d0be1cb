#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "landen/rational.hpp"

namespace landen {

/// Thrown when a series is asked for a case its tail bound cannot cover
/// (maclaurin at e2 = 1).
class DegenerateInputError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Thrown when the term cap is exhausted before the tail bound meets the
/// requested precision.
class PrecisionUnreachableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact derived quantities of an ellipse with semi-axes a >= b.
///   e2     = 1 - b^2/a^2   (eccentricity squared, maclaurin variable)
///   sqrt_x = (a-b)/(a+b)
///   h = x  = sqrt_x^2      (ivory variable)
/// The two variables are linked by 4*sqrt_x/(1+sqrt_x)^2 = e2, which
/// params_from_axes re-checks on every construction.
struct EllipseParams {
  Rational a;
  Rational b;
  Rational e2;
  Rational h;
  Rational x;
  Rational sqrt_x;
  bool degenerate = false;  // b == 0
};

/// Requires a > 0 and 0 <= b <= a; throws std::domain_error otherwise.
EllipseParams params_from_axes(const Rational& a, const Rational& b);

/// Rational enclosure of pi: |pi - value| <= radius.
struct PiApprox {
  Rational value;
  Rational radius;
};

/// Machin's formula 16*arctan(1/5) - 4*arctan(1/239) with alternating-series
/// remainders; guarantees radius <= 10^-digits. digits must be >= 1.
PiApprox pi_approx(long digits);
/// Same, stopping as soon as radius <= budget (budget > 0).
PiApprox pi_with_budget(const Rational& budget);

/// A decimal rendering together with a proven bound on its distance from the
/// true value: error_radius = series tail bound + pi enclosure contribution
/// + one unit in the rendered last place. value is the rendered string as an
/// exact rational, so |true - value| <= error_radius <= 10^-digits.
struct BoundedDecimal {
  std::string decimal;
  Rational value;
  Rational error_radius;
  long terms = 0;
};

inline constexpr long kDefaultMaxTerms = 10000;

/// p = 2*a*pi * sum_m c_m e2^m. Requires e2 < 1 (throws
/// DegenerateInputError at e2 = 1: the geometric tail bound needs e2 < 1)
/// and digits >= 1.
BoundedDecimal perimeter_maclaurin(const EllipseParams& p, long digits,
                                   long max_terms = kDefaultMaxTerms);

/// p = pi*(a+b) * sum_n I_n h^n. Handles the full range 0 <= h <= 1; at
/// h = 1 the geometric bound is replaced by the cubic-decay bound
/// I_{N+1} * (N+1)^3 / (2 N^2).
BoundedDecimal perimeter_ivory(const EllipseParams& p, long digits,
                               long max_terms = kDefaultMaxTerms);

/// Smallest term counts whose proven perimeter tail bound (prefactor and pi
/// enclosure included) meets the tolerance. A method that cannot get there
/// -- maclaurin at e2 = 1, or a term cap hit -- reports no count.
struct ConvergenceComparison {
  std::optional<long> maclaurin_terms;
  Rational maclaurin_tail;  // bound achieved at the reported count, 0 if none
  std::optional<long> ivory_terms;
  Rational ivory_tail;
};

/// tolerance must be > 0; throws std::domain_error otherwise.
ConvergenceComparison compare_convergence(const EllipseParams& p,
                                          const Rational& tolerance,
                                          long max_terms = kDefaultMaxTerms);

}  // namespace landen
