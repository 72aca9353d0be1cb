#include "landen/transformation.hpp"

#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace landen {

namespace {

Rational minus_one_pow(long k) { return (k % 2 == 0) ? Rational(1) : Rational(-1); }

Rational central_binomial_over_4m(long m) { return binom(2 * m, m) / Rational(4).pow(m); }

void require_non_negative(long i, const char* who) {
  if (i < 0) throw std::domain_error(std::string(who) + ": requires a non-negative index");
}

/// sum_m g(m) * 4^m * t^(2m) * (1+t^2)^(base_exponent - 2m) at the given
/// order. Both outer series of the transformation have this shape; they
/// differ in the coefficient family and in base_exponent (1 for the series in
/// u, 1/2 for the series in v).
TruncatedSeries outer_series(const std::function<Rational(long)>& family,
                             const Rational& base_exponent, int order) {
  if (order < 0) throw std::invalid_argument("outer_series: negative order");
  TruncatedSeries sum(order);
  const int half = order / 2;
  for (long m = 0; m <= half; ++m) {
    const Rational exponent = base_exponent - Rational(2 * m);
    const TruncatedSeries factor = stretch(binomial_series(exponent, half), 2, order);
    sum = add(sum, scale_shift(factor, family(m) * Rational(4).pow(m), static_cast<int>(2 * m)));
  }
  return sum;
}

TruncatedSeries intermediate_series_with(const std::function<Rational(long)>& family, int order) {
  return outer_series(family, Rational(1, 2), order);
}

}  // namespace

VerificationReport compare_series(std::string claim, const TruncatedSeries& lhs,
                                  const TruncatedSeries& rhs) {
  if (lhs.order() != rhs.order())
    throw std::invalid_argument("compare_series: order mismatch between sides");
  VerificationReport report;
  report.claim = std::move(claim);
  report.order_checked = lhs.order();
  for (int i = 0; i <= lhs.order(); ++i) {
    if (lhs.coeff(i) != rhs.coeff(i)) {
      report.first_mismatch = VerificationReport::Mismatch{i, lhs.coeff(i), rhs.coeff(i)};
      report.passed = false;
      return report;
    }
  }
  report.passed = true;
  return report;
}

Rational maclaurin_coeff(long m) {
  require_non_negative(m, "maclaurin_coeff");
  const Rational b = central_binomial_over_4m(m);
  return Rational(-1) / Rational(2 * m - 1) * b * b;
}

Rational ivory_coeff(long n) {
  require_non_negative(n, "ivory_coeff");
  const Rational b = central_binomial_over_4m(n) / Rational(2 * n - 1);
  return b * b;
}

Rational intermediate_coeff(long m) {
  require_non_negative(m, "intermediate_coeff");
  return Rational(-1) / Rational(4 * m - 1) * central_binomial_over_4m(2 * m) *
         central_binomial_over_4m(m);
}

Rational intermediate_coeff_rejected(long m) {
  require_non_negative(m, "intermediate_coeff_rejected");
  return Rational(-1) / Rational(4 * m - 1) * central_binomial_over_4m(2 * m) * binom(2 * m, m) /
         Rational(4).pow(2 * m);
}

Rational intermediate_from_lemma2(long n) {
  require_non_negative(n, "intermediate_from_lemma2");
  // S_0 = 1 directly; the alternating-sum closed form takes over from n = 1.
  const Rational s = (n == 0) ? Rational(1) : lemma2_closedform(n);
  return minus_one_pow(n - 1) / Rational(2 * n - 1) * central_binomial_over_4m(n) * s;
}

TruncatedSeries lhs_series_in_u(int order) {
  return outer_series(maclaurin_coeff, Rational(1), order);
}

TruncatedSeries intermediate_series_in_v(int order) {
  return intermediate_series_with(intermediate_coeff, order);
}

TruncatedSeries ivory_series_in(int variable_power, int order) {
  if (variable_power < 1) throw std::invalid_argument("ivory_series_in: variable_power must be >= 1");
  if (order < 0) throw std::invalid_argument("ivory_series_in: negative order");
  std::vector<Rational> out(static_cast<std::size_t>(order) + 1, Rational(0));
  for (long n = 0; n * variable_power <= order; ++n)
    out[static_cast<std::size_t>(n * variable_power)] = ivory_coeff(n);
  return TruncatedSeries(std::move(out));
}

namespace {

TruncatedSeries intermediate_stretched_to_u(const std::function<Rational(long)>& family,
                                            int order) {
  return stretch(intermediate_series_with(family, order / 2), 2, order);
}

}  // namespace

VerificationReport verify_step1(int order) {
  return compare_series("step1", lhs_series_in_u(order),
                        intermediate_stretched_to_u(intermediate_coeff, order));
}

VerificationReport verify_step1_negative_control(int order) {
  return compare_series("step1-negative-control", lhs_series_in_u(order),
                        intermediate_stretched_to_u(intermediate_coeff_rejected, order));
}

VerificationReport verify_step2(int order) {
  return compare_series("step2", intermediate_series_in_v(order), ivory_series_in(2, order));
}

VerificationReport verify_step2_negative_control(int order) {
  if (order < 0) throw std::invalid_argument("verify_step2_negative_control: negative order");
  std::vector<Rational> out(static_cast<std::size_t>(order) + 1, Rational(0));
  for (long n = 0; 2 * n <= order; ++n)
    out[static_cast<std::size_t>(2 * n)] = maclaurin_coeff(n);
  return compare_series("step2-negative-control", intermediate_series_in_v(order),
                        TruncatedSeries(std::move(out)));
}

VerificationReport verify_theorem1(int order) {
  return compare_series("theorem1", lhs_series_in_u(order), ivory_series_in(4, order));
}

IdentityCheck step2_coefficient_collapse(long n) {
  require_non_negative(n, "step2_coefficient_collapse");
  Rational convolution(0);
  for (long m = 0; m <= n; ++m)
    convolution += gen_binom(Rational(-2 * n + 1, 2), m) * binom(n, n - m);
  const Rational half_binom = gen_binom(Rational(1, 2), n);
  const Rational prefactor = minus_one_pow(n - 1) / Rational(2 * n - 1) * central_binomial_over_4m(n);

  // Both equalities must hold: fold them into a single exact comparison by
  // checking the collapsed product against I_n with the convolution in place
  // of C(1/2, n), alongside the convolution's own collapse.
  const bool collapse_holds = (convolution == half_binom);
  const Rational lhs = prefactor * convolution;
  const Rational rhs = ivory_coeff(n);
  IdentityCheck check = make_identity_check("step2-collapse", {{"n", Rational(n)}}, lhs, rhs);
  check.holds = check.holds && collapse_holds;
  return check;
}

}  // namespace landen
