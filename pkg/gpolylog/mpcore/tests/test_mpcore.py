"""Testing for the precision contract, Bernoulli numbers and half-integer
Gamma values."""
# License: GNU AGPLv3

import pickle
from fractions import Fraction
from math import comb

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis.strategies import floats, integers
from mpmath import mp, mpf, mpc, bernfrac, gamma, pi, exp, mpmathify

from gpolylog.exceptions import DomainError
from gpolylog.mpcore import PrecisionContext, bernoulli, bernoulli_numbers, \
    gamma_half, gamma_half_rational, cpow_neg32, to_mpf, to_fraction

ctx = PrecisionContext(50)


@pytest.mark.parametrize("digits, guard", [(29, 20), (30, 9), (30.5, 20)])
def test_context_invalid(digits, guard):
    with pytest.raises((ValueError, TypeError)):
        PrecisionContext(digits, guard)


def test_context_pickle_hash():
    other = pickle.loads(pickle.dumps(ctx))
    assert other == ctx
    assert hash(other) == hash(ctx)
    assert ctx.working_digits == 70
    assert ctx.doubled() == PrecisionContext(100, 20)


def test_context_workdps_restores():
    dps = mp.dps
    with ctx.workdps():
        assert mp.dps == 70
    assert mp.dps == dps


def test_to_fraction_exact():
    with ctx.workdps():
        assert to_fraction(mpf(0.375)) == Fraction(3, 8)
        assert to_fraction(mpf(12)) == 12
        assert to_fraction(mpf(-3)) == -3
        assert to_fraction(mpf(-1) / 2) == Fraction(-1, 2)
        assert to_fraction(mpf(0)) == 0
        assert to_fraction(-0.375) == Fraction(-3, 8)
        assert to_mpf(Fraction(1, 3)) == mpf(1) / 3


@pytest.mark.parametrize("n, expected",
                         [(0, Fraction(1)), (1, Fraction(-1, 2)),
                          (2, Fraction(1, 6)), (4, Fraction(-1, 30)),
                          (12, Fraction(-691, 2730)), (7, Fraction(0))])
def test_bernoulli_values(n, expected):
    assert bernoulli(n) == expected


def test_bernoulli_recurrence_and_oracle():
    numbers = bernoulli_numbers(60)
    for n in range(1, 60):
        assert sum(comb(n + 1, j) * numbers[j] for j in range(n + 1)) == 0
    for n in range(0, 61, 2):
        assert numbers[n] == Fraction(*map(int, bernfrac(n)))


def test_bernoulli_invalid():
    with pytest.raises(ValueError):
        bernoulli(-2)


@pytest.mark.parametrize("m, expected",
                         [(0, "1.77245385090551602729816748334"),
                          (2, "1.32934038817913702047362561251"),
                          (10, "1133278.38894878556733")])
def test_gamma_half_values(m, expected):
    with ctx.workdps():
        value = gamma_half(m, ctx)
        assert abs(value - mpf(expected)) < mpf(10) ** -15 * abs(value)
        assert abs(value - gamma(m + mpf(1) / 2)) <= 4 * ctx.eps * value


def test_gamma_half_recurrence():
    for m in range(30):
        assert gamma_half_rational(m + 1) == \
            gamma_half_rational(m) * Fraction(2 * m + 1, 2)


@pytest.mark.parametrize("w, expected",
                         [(1, mpc(1)), (-1, mpc(0, 1)), (4, mpc(0.125))])
def test_cpow_neg32_values(w, expected):
    with ctx.workdps():
        assert abs(cpow_neg32(w, ctx) - expected) < ctx.eps


def test_cpow_neg32_zero():
    with pytest.raises(DomainError):
        cpow_neg32(0, ctx)


def test_cpow_neg32_identity():
    rng = np.random.default_rng(0)
    with ctx.workdps():
        for _ in range(100):
            r = exp(mpf(rng.uniform(-5, 5)))
            arg = mpf(rng.uniform(-0.499, 0.499)) * pi
            w = mpc(r * mp.cos(arg), r * mp.sin(arg))
            p = cpow_neg32(w, ctx)
            assert abs(p * p * w ** 3 - 1) < 10 * ctx.eps


@settings(max_examples=50, deadline=None)
@given(floats(0.01, 100), floats(-3.1, 3.1), integers(0, 40))
def test_precision_doubling_stability(r, arg, m):
    w = mpmathify(r) * exp(mpc(0, arg))
    with ctx.workdps():
        w = mpc(w)
    lo = ctx.round(cpow_neg32(w, ctx))
    hi = ctx.round(cpow_neg32(w, ctx.doubled()))
    assert ctx.agree(lo, hi)
    lo = ctx.round(gamma_half(m, ctx))
    hi = ctx.round(gamma_half(m, ctx.doubled()))
    assert ctx.agree(lo, hi)
