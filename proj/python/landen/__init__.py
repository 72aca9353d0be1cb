"""Exact verification of the Landen series transformation and certified
ellipse perimeters, backed by the C++ core."""

from ._core import (
    BoundedDecimal,
    ConvergenceComparison,
    DegenerateInputError,
    EllipseParams,
    IdentityCheck,
    Mismatch,
    PiApprox,
    PrecisionUnreachableError,
    Rational,
    TruncatedSeries,
    VerificationReport,
    absorption,
    binom,
    binomial_series,
    compare_convergence,
    gen_binom,
    intermediate_coeff,
    ivory_coeff,
    knuth_identity_a,
    knuth_identity_b,
    lemma1_check,
    lemma2_bruteforce,
    lemma2_closedform,
    lemma2_twoform,
    maclaurin_coeff,
    params_from_axes,
    perimeter_ivory,
    perimeter_maclaurin,
    pi_approx,
    series_add,
    series_mul,
    step2_coefficient_collapse,
    vandermonde,
    verify_step1,
    verify_step1_negative_control,
    verify_step2,
    verify_step2_negative_control,
    verify_theorem1,
)

__all__ = [name for name in dir() if not name.startswith("_")]
