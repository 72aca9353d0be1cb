#pragma once

#include <optional>
#include <string>

#include "landen/identities.hpp"
#include "landen/rational.hpp"
#include "landen/series.hpp"

namespace landen {

/// Outcome of a coefficient-level series comparison. passed is true exactly
/// when no mismatch was found through the checked order; otherwise
/// first_mismatch carries the lowest diverging exponent and both values.
struct VerificationReport {
  struct Mismatch {
    int exponent = 0;
    Rational lhs;
    Rational rhs;
  };

  std::string claim;
  int order_checked = 0;
  bool passed = false;
  std::optional<Mismatch> first_mismatch;
};

/// Coefficient-by-coefficient comparison of two series of equal order.
VerificationReport compare_series(std::string claim, const TruncatedSeries& lhs,
                                  const TruncatedSeries& rhs);

// The three coefficient families. All indices are >= 0.
//
//   maclaurin:     c_m = -1/(2m-1) * [C(2m,m)/4^m]^2         (c_0 = 1, c_m < 0 after)
//   ivory:         I_n = [C(2n,n) / (4^n (2n-1))]^2          (all positive)
//   intermediate:  g_m = -1/(4m-1) * C(4m,2m)/4^(2m) * C(2m,m)/4^m

Rational maclaurin_coeff(long m);
Rational ivory_coeff(long n);
Rational intermediate_coeff(long m);

/// Rejected reading of the intermediate family in which the second factor is
/// C(2m,m)/4^(2m). Kept as the negative control for verify_step1: the series
/// built from it must fail the step1 comparison at u^4.
Rational intermediate_coeff_rejected(long m);

/// The intermediate coefficient of index n obtained through the alternating
/// central-binomial sum: (-1)^(n-1)/(2n-1) * C(2n,n)/4^n * S_n. Zero for odd
/// n; equals intermediate_coeff(n/2) for even n.
Rational intermediate_from_lemma2(long n);

/// The transformation's left-hand side in u = x^(1/4):
/// sum_m c_m * 4^m * u^(2m) * (1+u^2)^(1-2m), truncated at the given order.
TruncatedSeries lhs_series_in_u(int order);

/// The intermediate series in v = sqrt(x):
/// (1+v^2)^(1/2) * sum_m g_m * 4^m * v^(2m) * (1+v^2)^(-2m).
TruncatedSeries intermediate_series_in_v(int order);

/// sum_n I_n * t^(variable_power * n): variable_power 4 gives the series in
/// u, 2 in v, 1 in x.
TruncatedSeries ivory_series_in(int variable_power, int order);

/// step1: lhs_series_in_u against intermediate_series_in_v stretched to u.
VerificationReport verify_step1(int order);
/// Same comparison with the rejected intermediate family; expected to fail.
VerificationReport verify_step1_negative_control(int order);

/// step2: intermediate_series_in_v against the ivory series in v.
VerificationReport verify_step2(int order);
/// Same comparison against the maclaurin family instead; expected to fail.
VerificationReport verify_step2_negative_control(int order);

/// theorem1: lhs_series_in_u against the ivory series in u, the end-to-end
/// coefficient equality.
VerificationReport verify_theorem1(int order);

/// step2's coefficient collapse at index n: the convolution
/// sum_m C(-n+1/2, m) * C(n, n-m) = C(1/2, n), and
/// (-1)^(n-1)/(2n-1) * C(2n,n)/4^n * C(1/2,n) = I_n. holds iff both are true.
IdentityCheck step2_coefficient_collapse(long n);

}  // namespace landen
