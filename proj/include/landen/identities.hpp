#pragma once

#include <string>
#include <utility>
#include <vector>

#include "landen/rational.hpp"

namespace landen {

/// Uniform result record for all identity oracles: both sides evaluated
/// exactly, with holds = (lhs == rhs).
struct IdentityCheck {
  std::string name;
  std::vector<std::pair<std::string, Rational>> parameters;
  Rational lhs;
  Rational rhs;
  bool holds = false;
};

IdentityCheck make_identity_check(std::string name,
                                  std::vector<std::pair<std::string, Rational>> parameters,
                                  Rational lhs, Rational rhs);

/// C(-n-1/2, k), the half-integer binomial on the left of the lemma1 claim.
/// Zero for k < 0.
Rational lemma1_lhs(long n, long k);

/// [C(2n+2k, n+k) * C(n+k, k) / C(2n, n)] * (-1)^k / 4^k, the central-binomial
/// form on the right of the lemma1 claim. Zero for k < 0.
Rational lemma1_rhs(long n, long k);

/// lemma1 claim: lemma1_lhs(n, k) = lemma1_rhs(n, k).
IdentityCheck lemma1_check(long n, long k);

/// C(n,k) * C(n+1/2,k)  =  C(2n+1,k) * C(2n+1-k,k) / 4^k.
IdentityCheck knuth_identity_a(long n, long k);

/// C(-r,k) = (-1)^k * C(r+k-1,k), evaluated with gen_binom on both sides.
IdentityCheck knuth_identity_b(const Rational& r, long k);

/// Absorption: C(r,k) = r/(r-k) * C(r-1,k). Requires r != k; throws
/// std::domain_error otherwise.
IdentityCheck absorption(const Rational& r, long k);

/// S_n = sum_{m=0}^{n} (-1)^m/2^m * C(2m,m) * C(n,m), term by term.
/// Requires n >= 1.
Rational lemma2_bruteforce(long n);

/// Closed form of S_n: C(n, n/2) / 4^(n/2) for even n, 0 for odd n.
/// Requires n >= 1.
Rational lemma2_closedform(long n);

/// Two-form check on the polynomial G_n(x): the x^n coefficient of
/// sum_m (1-x/2)^(2m) * C(n,m) * x^(n-m), built explicitly as a truncated
/// series, against the x^n coefficient of (1+x^2/4)^n. Both must equal S_n.
/// Requires n >= 1.
IdentityCheck lemma2_twoform(long n);

/// Vandermonde convolution: sum_{m=0}^{n} C(a,m)*C(b,n-m) = C(a+b,n).
IdentityCheck vandermonde(const Rational& a, const Rational& b, long n);

}  // namespace landen
