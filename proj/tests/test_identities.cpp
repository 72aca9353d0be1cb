#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "landen/identities.hpp"

using namespace landen;

TEST_CASE("lemma1 sides: pinned values") {
  CHECK(lemma1_lhs(1, 1) == Rational(-3, 2));
  CHECK(lemma1_lhs(0, 2) == Rational(3, 8));
  CHECK(lemma1_lhs(5, 0) == Rational(1));
  CHECK(lemma1_rhs(1, 1) == Rational(-3, 2));
  CHECK(lemma1_rhs(0, 2) == Rational(3, 8));
  for (long n : {0L, 3L, 7L, 19L}) CHECK(lemma1_rhs(n, 0) == Rational(1));
}

TEST_CASE("lemma1 holds on the sweep") {
  for (long n = 0; n <= 60; ++n)
    for (long k = 0; k <= 60; ++k) {
      const IdentityCheck c = lemma1_check(n, k);
      CHECK(c.holds);
    }
  // k < 0 is satisfied trivially: both sides vanish
  for (long n = 0; n <= 10; ++n)
    for (long k = -5; k <= -1; ++k) {
      CHECK(lemma1_lhs(n, k) == Rational(0));
      CHECK(lemma1_rhs(n, k) == Rational(0));
      CHECK(lemma1_check(n, k).holds);
    }
}

TEST_CASE("knuth identity a: C(n,k)C(n+1/2,k) = C(2n+1,k)C(2n+1-k,k)/4^k") {
  const IdentityCheck c11 = knuth_identity_a(1, 1);
  CHECK(c11.holds);
  CHECK(c11.lhs == Rational(3, 2));
  CHECK(c11.rhs == Rational(3, 2));
  const IdentityCheck c00 = knuth_identity_a(0, 0);
  CHECK(c00.holds);
  CHECK(c00.lhs == Rational(1));
  CHECK(knuth_identity_a(2, 2).holds);
  for (long n = 0; n <= 40; ++n)
    for (long k = 0; k <= 40; ++k) CHECK(knuth_identity_a(n, k).holds);
}

TEST_CASE("knuth identity b: C(-r,k) = (-1)^k C(r+k-1,k)") {
  const IdentityCheck c32 = knuth_identity_b(Rational(3), 2);
  CHECK(c32.holds);
  CHECK(c32.lhs == Rational(6));
  const IdentityCheck chalf = knuth_identity_b(Rational(1, 2), 1);
  CHECK(chalf.holds);
  CHECK(chalf.lhs == Rational(-1, 2));
  CHECK(knuth_identity_b(Rational(22, 7), 0).lhs == Rational(1));

  std::mt19937 rng(777);
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 20);
  for (int i = 0; i < 60; ++i) {
    const Rational r(num(rng), den(rng));
    for (long k = 0; k <= 60; k += 7) CHECK(knuth_identity_b(r, k).holds);
  }
}

TEST_CASE("absorption: C(r,k) = r/(r-k) C(r-1,k)") {
  const IdentityCheck c = absorption(Rational(1, 2), 1);
  CHECK(c.holds);
  CHECK(c.lhs == Rational(1, 2));
  CHECK(absorption(Rational(-3, 2), 3).holds);  // r = -m+1/2 at m = 2, the step1 shape
  const IdentityCheck c52 = absorption(Rational(5), 2);
  CHECK(c52.holds);
  CHECK(c52.lhs == Rational(10));
  CHECK_THROWS_AS(absorption(Rational(3), 3), std::domain_error);
  CHECK_THROWS_AS(absorption(Rational(0), 0), std::domain_error);

  for (long m = 0; m <= 50; ++m) {
    const Rational r = Rational(1, 2) - Rational(m);
    for (long k = 0; k <= 50; ++k) CHECK(absorption(r, k).holds);
  }
}

TEST_CASE("lemma2: brute force, closed form, and the polynomial route agree") {
  CHECK(lemma2_bruteforce(1) == Rational(0));
  CHECK(lemma2_bruteforce(2) == Rational(1, 2));
  CHECK(lemma2_bruteforce(3) == Rational(0));
  CHECK(lemma2_closedform(2) == Rational(1, 2));
  CHECK(lemma2_closedform(4) == Rational(3, 8));
  CHECK(lemma2_closedform(7) == Rational(0));
  CHECK_THROWS_AS(lemma2_bruteforce(0), std::domain_error);
  CHECK_THROWS_AS(lemma2_closedform(0), std::domain_error);
  CHECK_THROWS_AS(lemma2_twoform(0), std::domain_error);

  const IdentityCheck two2 = lemma2_twoform(2);
  CHECK(two2.holds);
  CHECK(two2.lhs == Rational(1, 2));
  const IdentityCheck two3 = lemma2_twoform(3);
  CHECK(two3.holds);
  CHECK(two3.lhs == Rational(0));
  const IdentityCheck two6 = lemma2_twoform(6);
  CHECK(two6.holds);
  CHECK(two6.lhs == Rational(5, 16));

  for (long n = 1; n <= 60; ++n) {
    const Rational brute = lemma2_bruteforce(n);
    CHECK(brute == lemma2_closedform(n));
    const IdentityCheck two = lemma2_twoform(n);
    CHECK(two.holds);
    CHECK(two.lhs == brute);
    if (n % 2 == 1) CHECK(brute == Rational(0));
  }
}

TEST_CASE("vandermonde convolution") {
  const IdentityCheck c111 = vandermonde(Rational(1), Rational(1), 1);
  CHECK(c111.holds);
  CHECK(c111.lhs == Rational(2));
  CHECK(vandermonde(Rational(-5, 2), Rational(3), 3).holds);  // a = -n+1/2 at n = 3, the step2 shape
  // half-integer pair: the convolution telescopes to C(1,2) = 0
  const IdentityCheck chh = vandermonde(Rational(1, 2), Rational(1, 2), 2);
  CHECK(chh.holds);
  CHECK(chh.lhs == Rational(0));
  CHECK(chh.rhs == Rational(0));

  std::mt19937 rng(31415);
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 20);
  std::uniform_int_distribution<long> nd(0, 30);
  for (int i = 0; i < 120; ++i) {
    const Rational a(num(rng), den(rng));
    const Rational b(num(rng), den(rng));
    CHECK(vandermonde(a, b, nd(rng)).holds);
  }
}
