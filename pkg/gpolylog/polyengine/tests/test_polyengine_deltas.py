"""Testing for the difference polynomials and the g sequence."""
# License: GNU AGPLv3

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis.strategies import fractions, lists
from mpmath import mpf, sin, pi

from gpolylog.mpcore import PrecisionContext
from gpolylog.polyengine import RationalPolynomial, USeries, delta_table, \
    g_sequence, resurgence_residual, delta_sinusoid_check, antidifference, \
    bernoulli_polynomial, p_prime_values, mean_constant

ctx = PrecisionContext(60)

G_PRINTED = [Fraction(1), Fraction(1, 12), Fraction(1, 288),
             Fraction(-139, 51840), Fraction(-571, 2488320)]


def test_g_sequence_values():
    assert g_sequence(4) == G_PRINTED


def test_delta_low_orders():
    deltas = delta_table(2)
    assert deltas[0] == RationalPolynomial([1])
    assert deltas[1] == RationalPolynomial([Fraction(-1, 24), 0, 2])
    assert deltas[1](Fraction(-1, 4)) == Fraction(1, 12)


def test_delta_degrees():
    for k, delta in enumerate(delta_table(15)):
        assert delta.degree == 2 * k


def test_g_is_delta_at_minus_quarter():
    K = 40
    deltas = delta_table(K)
    assert g_sequence(K) == [d(Fraction(-1, 4)) for d in deltas]


@pytest.mark.parametrize("K", [0, 1, 5, 10])
def test_delta_routes_agree(K):
    assert delta_table(K, method='series') == \
        delta_table(K, method='stirling')


def test_delta_table_bad_arguments():
    with pytest.raises(ValueError, match="method"):
        delta_table(3, method='taylor')
    with pytest.raises(ValueError, match="non-negative"):
        delta_table(-1)


def test_g_factorial_growth():
    """Odd-index terms grow like Gamma(k) / (2 pi)^k."""
    g = g_sequence(41)
    for k in range(21, 39, 2):
        ratio = abs(g[k + 2] / g[k]) * float(4 * pi ** 2) / (k * (k + 1))
        assert abs(ratio - 1) < 0.2


@pytest.mark.parametrize("m, bound", [(6, 0.1), (10, 0.01)])
@pytest.mark.parametrize("parity", ['even', 'odd'])
def test_resurgence_residual(m, parity, bound):
    assert resurgence_residual(m, parity, ctx) < bound


@pytest.mark.parametrize("parity", ['even', 'odd'])
def test_resurgence_residual_improves(parity):
    assert resurgence_residual(10, parity, ctx) \
        < resurgence_residual(6, parity, ctx)


def test_resurgence_residual_absolute():
    relative = resurgence_residual(8, 'even', ctx)
    absolute = resurgence_residual(8, 'even', ctx, relative=False)
    with ctx.workdps():
        target = abs(mpf(g_sequence(16)[16].numerator)
                     / g_sequence(16)[16].denominator)
        assert abs(absolute / target - relative) < ctx.eps


def test_resurgence_residual_bad_arguments():
    with pytest.raises(ValueError, match="parity"):
        resurgence_residual(4, 'both', ctx)
    with pytest.raises(ValueError, match="at least 2"):
        resurgence_residual(1, 'even', ctx)


def test_delta_sinusoid_k40():
    assert delta_sinusoid_check(40, Fraction(3, 10), ctx) < 0.1


@pytest.mark.slow
def test_delta_sinusoid_trend():
    x = Fraction(3, 10)
    at_40 = delta_sinusoid_check(40, x, ctx)
    at_80 = delta_sinusoid_check(80, x, ctx)
    assert at_80 < 0.05
    assert at_80 < at_40


def test_delta_sinusoid_bad_arguments():
    with pytest.raises(ValueError, match="at least 10"):
        delta_sinusoid_check(5, 0, ctx)
    with pytest.raises(ValueError, match="not in"):
        delta_sinusoid_check(12, 1, ctx)


def test_odd_g_sign_matches_sinusoid():
    g = g_sequence(31)
    for k in range(1, 32, 2):
        with ctx.workdps():
            expected = sin(k * pi / 2)
        assert (g[k] > 0) == (expected > 0)


def test_antidifference_examples():
    assert antidifference(RationalPolynomial([1])) == \
        RationalPolynomial([0, 1])
    F_1 = antidifference(delta_table(1)[1])
    assert F_1 == RationalPolynomial([0, Fraction(7, 24), -1,
                                      Fraction(2, 3)])
    assert antidifference(RationalPolynomial()) == RationalPolynomial()


@settings(max_examples=200, deadline=None)
@given(lists(fractions(max_denominator=1000), max_size=16))
def test_antidifference_identity(coefficients):
    q = RationalPolynomial(coefficients)
    F = antidifference(q)
    assert F.shift(1) - F == q
    assert F(0) == 0


def test_bernoulli_polynomial():
    assert bernoulli_polynomial(2) == \
        RationalPolynomial([Fraction(1, 6), -1, 1])
    for n in range(1, 12):
        B = bernoulli_polynomial(n)
        assert B.shift(1) - B == n * RationalPolynomial.monomial(n - 1)


def test_p_prime_values():
    values = p_prime_values(2)
    assert values[0] == (1, 0)
    assert values[1] == (Fraction(7, 24), -2)
    assert values[2] == (Fraction(-73, 1920), Fraction(2, 3))


def test_p_prime_values_match_antidifference():
    for k, (first, second) in enumerate(p_prime_values(12)):
        F = antidifference(delta_table(k)[k])
        assert F.derivative()(0) == first
        assert F.derivative(2)(0) == second


def test_mean_constant_closure():
    for k in range(6):
        F = antidifference(delta_table(k)[k])
        assert (F + mean_constant(k)).integral(0, 1) == 0
    assert abs(mean_constant(1) - Fraction(47, 2160)) < Fraction(1, 1000)


def test_useries_exp_log_inverse():
    t = RationalPolynomial([0, 1])
    series = USeries([0, t, Fraction(1, 3), t * t], 5)
    assert series.exp().log() == series


def test_useries_times_u():
    series = USeries([0, 1, 2], 2)
    assert series.times_u() == USeries([1, 2], 1)
    with pytest.raises(ValueError):
        USeries([1, 1], 1).times_u()
