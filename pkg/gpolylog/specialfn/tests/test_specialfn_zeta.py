"""Testing for the zeta-family special functions."""
# License: GNU AGPLv3

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis.strategies import floats
from mpmath import mp, mpf, mpc, pi, power, conj, zeta
from scipy.special import zeta as scipy_zeta

from gpolylog.exceptions import DomainError
from gpolylog.mpcore import PrecisionContext
from gpolylog.specialfn import HurwitzParams, hurwitz_params, hurwitz_zeta, \
    zeta_half, zeta_neg_half, reflection_sign, eta_even, eta_even_rational

ctx = PrecisionContext(50)


def _direct_hurwitz(s, a, n_terms=10 ** 5):
    """Double-precision oracle: direct summation plus the leading
    Euler-Maclaurin tail."""
    n = np.arange(n_terms)
    head = np.sum((n + a) ** (-s))
    w = n_terms + a
    return head + w ** (1 - s) / (s - 1) + w ** (-s) / 2 \
        + s * w ** (-s - 1) / 12


@pytest.mark.parametrize("n, expected",
                         [(0, 2.6123753486854883), (1, 1.3414872572509171)])
def test_zeta_half_values(n, expected):
    value = zeta_half(n, ctx)
    assert abs(float(value) - expected) < 1e-15
    with ctx.workdps():
        assert abs(value - zeta(mpf(2 * n + 3) / 2)) < ctx.eps


def test_zeta_half_large_index():
    assert 0 < zeta_half(18, ctx) - 1 < 1e-5


@pytest.mark.parametrize("n, expected",
                         [(0, -0.2078862250), (1, -0.0254852019)])
def test_zeta_neg_half_values(n, expected):
    value = zeta_neg_half(n, ctx)
    assert abs(float(value) - expected) < 1e-10
    with ctx.workdps():
        assert abs(value - zeta(-n - mpf(1) / 2)) < ctx.eps


def test_reflection_sign_pattern():
    assert [reflection_sign(n) for n in range(8)] == \
        [1, 1, -1, -1, 1, 1, -1, -1]


@pytest.mark.parametrize("n, expected",
                         [(0, Fraction(1, 2)), (1, Fraction(1, 12)),
                          (2, Fraction(7, 720))])
def test_eta_even_rational(n, expected):
    assert eta_even_rational(n) == expected


def test_eta_even_against_direct_zeta():
    with ctx.workdps():
        assert eta_even(0, ctx) == mpf(1) / 2
        assert abs(eta_even(1, ctx) - pi ** 2 / 12) < ctx.eps
        for n in range(1, 9):
            reference = (1 - power(2, 1 - 2 * n)) * \
                hurwitz_zeta(2 * n, 1, ctx).real
            assert abs(eta_even(n, ctx) - reference) < ctx.eps


@pytest.mark.parametrize("a, expected",
                         [(1, 2.6123753486854883),
                          (Fraction(1, 2), 4.7755141056)])
def test_hurwitz_real_shift(a, expected):
    value = hurwitz_zeta(Fraction(3, 2), a, ctx)
    assert abs(value.imag) < ctx.eps
    assert abs(float(value.real) - expected) < 1e-9
    assert abs(float(value.real)
               - scipy_zeta(1.5, float(a))) < 1e-13


def test_hurwitz_dyadic_identity():
    with ctx.workdps():
        half = hurwitz_zeta(1.5, mpf(1) / 2, ctx)
        one = hurwitz_zeta(1.5, 1, ctx)
        assert abs(half - (power(2, 1.5) - 1) * one) < ctx.eps * 10


def test_hurwitz_complex_shift_direct_summation():
    a = 0.5 - 10j / (2 * np.pi)
    with ctx.workdps():
        value = hurwitz_zeta(1.5, mpc(a), ctx)
    assert abs(complex(value) - _direct_hurwitz(1.5, a)) < 1e-10


@pytest.mark.parametrize("s, a", [(1, 1), (0.5, 1), (1.5, 0), (1.5, -1 + 2j)])
def test_hurwitz_domain(s, a):
    with pytest.raises(DomainError):
        hurwitz_zeta(s, a, ctx)


def test_hurwitz_params_invariant():
    params = hurwitz_params(1.5, 0.5 + 95j, ctx.working_digits)
    assert params.em_terms + 0.5 > 95
    assert params.em_order <= ctx.working_digits // 2
    with pytest.raises(ValueError):
        HurwitzParams(1.5, 0.5 + 95j, 10, 5)


@pytest.mark.parametrize("a", [1, 0.5 + 3j, 2.5 - 40j, 0.1 + 0.1j])
def test_hurwitz_parameter_doubling(a):
    with ctx.workdps():
        params = hurwitz_params(1.5, a, ctx.working_digits)
        value = hurwitz_zeta(1.5, a, ctx, params=params)
        refined = hurwitz_zeta(1.5, a, ctx, params=params.refined())
        assert abs(value - refined) < ctx.eps


def _check_shift_and_conjugation(s, re_a, im_a):
    with ctx.workdps():
        a = mpc(re_a, im_a)
        value = hurwitz_zeta(s, a, ctx)
        shifted = power(a, -s) + hurwitz_zeta(s, a + 1, ctx)
        scale = max(mpf(1), abs(value))
        assert abs(value - shifted) < 10 * ctx.eps * scale
        assert abs(hurwitz_zeta(s, conj(a), ctx) - conj(value)) \
            < 10 * ctx.eps * scale


@settings(max_examples=200, deadline=None)
@given(floats(1.05, 6.), floats(0.05, 20.), floats(-60., 60.))
def test_hurwitz_shift_and_conjugation(s, re_a, im_a):
    _check_shift_and_conjugation(s, re_a, im_a)


@settings(max_examples=30, deadline=None)
@given(floats(0.1, 5.), floats(-30., 30.))
def test_hurwitz_precision_doubling(re_a, im_a):
    a = complex(re_a, im_a)
    lo = ctx.round(hurwitz_zeta(1.5, a, ctx))
    hi = ctx.round(hurwitz_zeta(1.5, a, ctx.doubled()))
    assert ctx.agree(lo, hi, ulps=4)


@pytest.mark.slow
@settings(max_examples=10 ** 4, deadline=None)
@given(floats(1.05, 6.), floats(0.05, 20.), floats(-60., 60.))
def test_hurwitz_identities_full_suite(s, re_a, im_a):
    _check_shift_and_conjugation(s, re_a, im_a)
