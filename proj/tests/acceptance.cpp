// Acceptance gate: one line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cstdio>
#include <random>
#include <string>

#include <landen/ellipse.hpp>
#include <landen/identities.hpp>
#include <landen/rational.hpp>
#include <landen/series.hpp>
#include <landen/transformation.hpp>

using namespace landen;

namespace {

int failures = 0;

void report(int number, const std::string& what, bool ok) {
  std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", number, what.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

double elapsed_s(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Rational random_rational(std::mt19937& rng, long num_lo, long num_hi, long den_hi) {
  std::uniform_int_distribution<long> num(num_lo, num_hi);
  std::uniform_int_distribution<long> den(1, den_hi);
  return Rational(num(rng), den(rng));
}

}  // namespace

int main() {
  // 1. end-to-end coefficient equality at order 200, under 60 s, with the
  //    pinned leading x-coefficients 1, 1/4, 1/64, 1/256 on both sides
  {
    const auto start = std::chrono::steady_clock::now();
    const VerificationReport r = verify_theorem1(200);
    bool ok = r.passed && r.order_checked == 200;
    const TruncatedSeries lhs = lhs_series_in_u(12);
    const Rational expected[] = {Rational(1), Rational(1, 4), Rational(1, 64), Rational(1, 256)};
    for (int n = 0; n < 4; ++n) {
      ok = ok && lhs.coeff(4 * n) == expected[n] && ivory_coeff(n) == expected[n];
    }
    const double secs = elapsed_s(start);
    ok = ok && secs < 60.0;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "theorem1 exact at order 200, leading coefficients 1, 1/4, 1/64, 1/256 (%.2fs)",
                  secs);
    report(1, buf, ok);
  }

  // 2. step1 exact at order 200; the rejected-coefficient variant diverges
  //    first at u^4
  {
    const VerificationReport good = verify_step1(200);
    const VerificationReport bad = verify_step1_negative_control(200);
    const bool ok = good.passed && !bad.passed && bad.first_mismatch &&
                    bad.first_mismatch->exponent == 4 &&
                    bad.first_mismatch->lhs == Rational(1, 4) &&
                    bad.first_mismatch->rhs == Rational(7, 16);
    report(2, "step1 exact at order 200; negative control first diverges at u^4", ok);
  }

  // 3. step2 exact at order 200 and the coefficient collapse for all n <= 80
  {
    bool ok = verify_step2(200).passed;
    for (long n = 0; n <= 80 && ok; ++n) ok = step2_coefficient_collapse(n).holds;
    report(3, "step2 exact at order 200; coefficient collapse holds for n <= 80", ok);
  }

  // 4. identity suite: lemma1 on [0,200]^2, the lemma2 triple on [1,200]
  //    (odd n exactly 0), vandermonde / knuth / absorption sweeps, < 5 min
  {
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    for (long n = 0; n <= 200 && ok; ++n)
      for (long k = 0; k <= 200 && ok; ++k) ok = lemma1_check(n, k).holds;
    for (long n = 1; n <= 200 && ok; ++n) {
      const Rational brute = lemma2_bruteforce(n);
      const IdentityCheck two = lemma2_twoform(n);
      ok = brute == lemma2_closedform(n) && two.holds && two.lhs == brute;
      if (n % 2 == 1) ok = ok && brute == Rational(0);
    }
    std::mt19937 rng(20260817);
    for (int trial = 0; trial < 40 && ok; ++trial) {
      const Rational a = random_rational(rng, -9, 9, 7);
      const Rational b = random_rational(rng, -9, 9, 7);
      std::uniform_int_distribution<long> pick_n(0, 30);
      ok = vandermonde(a, b, pick_n(rng)).holds;
    }
    for (long n = 0; n <= 60 && ok; ++n)
      for (long k = 0; k <= 60 && ok; ++k) ok = knuth_identity_a(n, k).holds;
    for (int trial = 0; trial < 40 && ok; ++trial) {
      const Rational r = random_rational(rng, -20, 20, 9);
      std::uniform_int_distribution<long> pick_k(0, 60);
      ok = knuth_identity_b(r, pick_k(rng)).holds;
    }
    for (long m = 0; m <= 50 && ok; ++m) {
      const Rational r = Rational(1, 2) - Rational(m);
      for (long k = 0; k <= 50 && ok; ++k) ok = absorption(r, k).holds;
    }
    const double secs = elapsed_s(start);
    ok = ok && secs < 300.0;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "lemma1 on [0,200]^2, lemma2 triple on [1,200], "
                  "vandermonde/knuth/absorption sweeps (%.2fs)",
                  secs);
    report(4, buf, ok);
  }

  // 5. known geometry: circle radius 1 gives 2*pi to 15 digits, both
  //    methods; the degenerate segment gives 4 within 1e-6 via ivory
  {
    bool ok = true;
    const Rational two_pi_ref = Rational(2) * Rational::parse("3.14159265358979323846");
    const EllipseParams circle = params_from_axes(Rational(1), Rational(1));
    for (const bool use_ivory : {false, true}) {
      const BoundedDecimal d =
          use_ivory ? perimeter_ivory(circle, 15) : perimeter_maclaurin(circle, 15);
      ok = ok && d.error_radius <= pow10(-15) &&
           (d.value - two_pi_ref).abs() <= d.error_radius + pow10(-19);
    }
    const EllipseParams segment = params_from_axes(Rational(1), Rational(0));
    const BoundedDecimal d = perimeter_ivory(segment, 6);
    ok = ok && d.error_radius <= pow10(-6) && (d.value - Rational(4)).abs() <= d.error_radius;
    report(5, "circle = 2*pi to 15 digits each method; segment = 4 within 1e-6", ok);
  }

  // 6. cross-method oracle: 25 random rational ellipses at 12 digits, the
  //    two values agree within the sum of the proven radii
  {
    bool ok = true;
    std::mt19937 rng(8675309);
    std::uniform_int_distribution<long> den(1, 97);
    for (int trial = 0; trial < 25 && ok; ++trial) {
      const long q = den(rng);
      std::uniform_int_distribution<long> a_num(q, 10 * q);
      const long p = a_num(rng);
      std::uniform_int_distribution<long> b_num((p + 2) / 3, p);
      const EllipseParams e = params_from_axes(Rational(p, q), Rational(b_num(rng), q));
      const BoundedDecimal mac = perimeter_maclaurin(e, 12);
      const BoundedDecimal ivo = perimeter_ivory(e, 12);
      ok = (mac.value - ivo.value).abs() <= mac.error_radius + ivo.error_radius;
    }
    report(6, "25 random ellipses: |maclaurin - ivory| within summed radii at 12 digits", ok);
  }

  // 7. series-ring exponent law: (1+x)^a * (1+x)^b = (1+x)^(a+b) at order
  //    100 for 20 random rational pairs
  {
    bool ok = true;
    std::mt19937 rng(1729);
    for (int trial = 0; trial < 20 && ok; ++trial) {
      const Rational a = random_rational(rng, -12, 12, 8);
      const Rational b = random_rational(rng, -12, 12, 8);
      ok = mul(binomial_series(a, 100), binomial_series(b, 100)) == binomial_series(a + b, 100);
    }
    report(7, "binomial series multiply by adding exponents at order 100, 20 random pairs", ok);
  }

  // 8. convergence acceleration at (2,1), tolerance 1e-10: term counts
  //    frozen at 59 maclaurin / 8 ivory
  {
    const EllipseParams e = params_from_axes(Rational(2), Rational(1));
    const ConvergenceComparison c = compare_convergence(e, pow10(-10));
    const bool ok = c.maclaurin_terms && c.ivory_terms && *c.ivory_terms < *c.maclaurin_terms &&
                    *c.maclaurin_terms == 59 && *c.ivory_terms == 8;
    report(8, "ivory needs 8 terms vs maclaurin 59 at (2,1), tolerance 1e-10", ok);
  }

  if (failures == 0) std::printf("all 8 criteria passed\n");
  return failures == 0 ? 0 : 1;
}
