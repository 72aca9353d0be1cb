#include "landen/identities.hpp"

#include <stdexcept>

#include "landen/series.hpp"

namespace landen {

namespace {

Rational minus_one_pow(long k) { return (k % 2 == 0) ? Rational(1) : Rational(-1); }

void require_positive(long n, const char* who) {
  if (n < 1) throw std::domain_error(std::string(who) + ": requires n >= 1");
}

}  // namespace

IdentityCheck make_identity_check(std::string name,
                                  std::vector<std::pair<std::string, Rational>> parameters,
                                  Rational lhs, Rational rhs) {
  IdentityCheck c;
  c.name = std::move(name);
  c.parameters = std::move(parameters);
  c.holds = (lhs == rhs);
  c.lhs = std::move(lhs);
  c.rhs = std::move(rhs);
  return c;
}

Rational lemma1_lhs(long n, long k) {
  if (n < 0) throw std::domain_error("lemma1_lhs: requires n >= 0");
  return gen_binom(Rational(-2 * n - 1, 2), k);
}

Rational lemma1_rhs(long n, long k) {
  if (n < 0) throw std::domain_error("lemma1_rhs: requires n >= 0");
  if (k < 0) return Rational(0);  // C(n+k, k) vanishes for k < 0
  return binom(2 * n + 2 * k, n + k) * binom(n + k, k) / binom(2 * n, n) * minus_one_pow(k) /
         Rational(4).pow(k);
}

IdentityCheck lemma1_check(long n, long k) {
  return make_identity_check("lemma1", {{"n", Rational(n)}, {"k", Rational(k)}},
                             lemma1_lhs(n, k), lemma1_rhs(n, k));
}

IdentityCheck knuth_identity_a(long n, long k) {
  if (n < 0) throw std::domain_error("knuth_identity_a: requires n >= 0");
  const Rational lhs = binom(n, k) * gen_binom(Rational(2 * n + 1, 2), k);
  // The second upper index may go negative for large k; gen_binom covers it.
  const Rational rhs =
      binom(2 * n + 1, k) * gen_binom(Rational(2 * n + 1 - k), k) / Rational(4).pow(k);
  return make_identity_check("knuth-a", {{"n", Rational(n)}, {"k", Rational(k)}}, lhs, rhs);
}

IdentityCheck knuth_identity_b(const Rational& r, long k) {
  const Rational lhs = gen_binom(-r, k);
  const Rational rhs = minus_one_pow(k) * gen_binom(r + Rational(k - 1), k);
  return make_identity_check("knuth-b", {{"r", r}, {"k", Rational(k)}}, lhs, rhs);
}

IdentityCheck absorption(const Rational& r, long k) {
  if (r == Rational(k)) throw std::domain_error("absorption: requires r != k");
  const Rational lhs = gen_binom(r, k);
  const Rational rhs = r / (r - Rational(k)) * gen_binom(r - Rational(1), k);
  return make_identity_check("absorption", {{"r", r}, {"k", Rational(k)}}, lhs, rhs);
}

Rational lemma2_bruteforce(long n) {
  require_positive(n, "lemma2_bruteforce");
  Rational sum(0);
  for (long m = 0; m <= n; ++m)
    sum += minus_one_pow(m) / Rational(2).pow(m) * binom(2 * m, m) * binom(n, m);
  return sum;
}

Rational lemma2_closedform(long n) {
  require_positive(n, "lemma2_closedform");
  if (n % 2 != 0) return Rational(0);
  return binom(n, n / 2) / Rational(4).pow(n / 2);
}

IdentityCheck lemma2_twoform(long n) {
  require_positive(n, "lemma2-twoform");
  // First form: G_n(x) = sum_m (1-x/2)^(2m) * C(n,m) * x^(n-m), assembled as
  // a truncated series of order n. (1-x/2)^(2m) is grown incrementally by one
  // factor of (1-x/2)^2 = 1 - x + x^2/4 per step.
  std::vector<Rational> sq(static_cast<std::size_t>(n) + 1, Rational(0));
  sq[0] = Rational(1);
  if (n >= 1) sq[1] = Rational(-1);
  if (n >= 2) sq[2] = Rational(1, 4);
  const TruncatedSeries square(std::move(sq));
  TruncatedSeries power = TruncatedSeries::constant(Rational(1), static_cast<int>(n));
  TruncatedSeries g(static_cast<int>(n));
  for (long m = 0; m <= n; ++m) {
    if (m > 0) power = mul(power, square);
    g = add(g, scale_shift(power, binom(n, m), static_cast<int>(n - m)));
  }
  const Rational first_form = g.coeff(static_cast<int>(n));

  // Second form: G_n(x) = (1+x^2/4)^n; its x^n coefficient by the binomial
  // theorem is C(n, n/2)/4^(n/2) for even n and 0 for odd n.
  const Rational second_form = (n % 2 == 0) ? binom(n, n / 2) / Rational(4).pow(n / 2) : Rational(0);

  return make_identity_check("lemma2-twoform", {{"n", Rational(n)}}, first_form, second_form);
}

IdentityCheck vandermonde(const Rational& a, const Rational& b, long n) {
  if (n < 0) throw std::domain_error("vandermonde: requires n >= 0");
  Rational convolution(0);
  for (long m = 0; m <= n; ++m) convolution += gen_binom(a, m) * gen_binom(b, n - m);
  return make_identity_check("vandermonde", {{"a", a}, {"b", b}, {"n", Rational(n)}},
                             convolution, gen_binom(a + b, n));
}

}  // namespace landen
