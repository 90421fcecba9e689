"""Testing for the phase, amplitude and constant extraction."""
# License: GNU AGPLv3

from fractions import Fraction

import pytest
from mpmath import mp, mpf, pi, sin, cos, exp

from gpolylog.exceptions import DegenerateError, UnwrapError
from gpolylog.fitlab import phase_amplitude, extract_CR, \
    constants_from_phases, unwrap_differences, conjecture_residual, \
    model_amplitude, matching_digits, ConstantsEstimate, REFERENCE_C, \
    REFERENCE_R
from gpolylog.fitlab.constants import _phase_amplitude
from gpolylog.mpcore import PrecisionContext
from gpolylog.polyengine import mean_constant

ctx = PrecisionContext(60)


def test_phase_amplitude_synthetic():
    with ctx.workdps():
        first = -2 * pi * cos(pi / 3)
        second = -(2 * pi) ** 2 * sin(pi / 3)
    theta, amplitude = _phase_amplitude(1, first, second, ctx)
    with ctx.workdps():
        assert abs(theta - pi / 3) < 10 * ctx.eps
        assert abs(amplitude - 1) < 10 * ctx.eps


def test_phase_amplitude_first_index():
    theta, amplitude = phase_amplitude(1, ctx)
    assert 0 < theta < pi
    assert amplitude > 0
    theta, _ = phase_amplitude(1, ctx, variant='value',
                               constant=Fraction(47, 2160))
    assert pi / 2 < theta < pi


def test_phase_amplitude_precision_independent():
    theta, amplitude = phase_amplitude(12, ctx)
    theta_2, amplitude_2 = phase_amplitude(12, ctx.doubled())
    assert ctx.agree(theta, theta_2)
    assert ctx.agree(amplitude, amplitude_2)


def test_phase_amplitude_errors():
    with pytest.raises(ValueError, match="at least 1"):
        phase_amplitude(0, ctx)
    with pytest.raises(ValueError, match="variant"):
        phase_amplitude(2, ctx, variant='integral')
    with pytest.raises(DegenerateError):
        _phase_amplitude(3, 0, 0, ctx)


def test_amplitude_growth():
    amplitudes = [phase_amplitude(k, ctx)[1] for k in (60, 61)]
    ratio = amplitudes[1] / (amplitudes[0] * (60 + mpf(1) / 2))
    with ctx.workdps():
        assert abs(ratio / mpf(REFERENCE_R) ** 2 - 1) < 0.01


def test_unwrap_differences():
    with ctx.workdps():
        thetas = [mpf(3), mpf(-1), mpf(1)]
        differences = unwrap_differences(thetas)
        assert abs(differences[0] - (2 * pi - 4)) < ctx.eps
        assert abs(differences[1] - 2) < ctx.eps
        with pytest.raises(UnwrapError):
            unwrap_differences([mpf(0), mpf('0.0001')])


def test_constants_from_synthetic_phases():
    ks = list(range(10, 61))
    with ctx.workdps():
        C, R = mpf(REFERENCE_C), mpf(REFERENCE_R)
        thetas = [((2 * k + 1) * C + pi) % (2 * pi) - pi for k in ks]
        amplitudes = [model_amplitude(k, R) for k in ks]
    estimate = constants_from_phases(ks, thetas, amplitudes, ctx)
    with ctx.workdps():
        assert matching_digits(estimate.C, REFERENCE_C) >= ctx.digits - 3
        assert matching_digits(estimate.R, REFERENCE_R) >= ctx.digits - 3
    assert estimate.stable_digits >= ctx.digits - 3
    assert estimate.k_window == (10, 60)
    with ctx.workdps():
        assert abs(estimate.amplitude - 1) < 10 ** (3 - ctx.digits)


def test_constants_from_phases_short_window():
    with pytest.raises(ValueError, match="21"):
        constants_from_phases(range(5), [0] * 5, [1] * 5, ctx)


def test_extract_CR():
    estimate = extract_CR(20, 60, ctx)
    with ctx.workdps():
        assert matching_digits(estimate.C, REFERENCE_C) >= 6
        assert matching_digits(estimate.R, REFERENCE_R) >= 6
        assert estimate.D > 0.523
    assert estimate.stable_digits >= 1
    rows = estimate.rows(ctx)
    assert [row['name'] for row in rows] == \
        ['C', 'R', 'D', 'amplitude', 'stable_digits']


def test_extract_CR_amplitude_normalisation():
    estimate = extract_CR(20, 60, ctx)
    with ctx.workdps():
        assert abs(estimate.amplitude - 1) < 1e-4
    row = estimate.rows(ctx)[3]
    assert row['name'] == 'amplitude'
    assert row['reference_digits'] >= 4


def test_extract_CR_window_shift():
    estimate = extract_CR(20, 60, ctx)
    shifted = extract_CR(30, 70, ctx)
    with ctx.workdps():
        tolerance = mpf(10) ** -estimate.stable_digits
        assert abs(shifted.C - estimate.C) < tolerance
        assert abs(shifted.R - estimate.R) < tolerance


def test_extract_CR_window():
    with pytest.raises(ValueError, match="window"):
        extract_CR(20, 30, ctx)


@pytest.mark.slow
def test_extract_CR_deep():
    estimate = extract_CR(100, 150, ctx)
    with ctx.workdps():
        assert matching_digits(estimate.C, REFERENCE_C) >= 25
        assert matching_digits(estimate.R, REFERENCE_R) >= 25
        assert matching_digits(estimate.amplitude, 1) >= 20


def test_constants_estimate_corridor():
    with pytest.raises(ValueError, match="C ="):
        ConstantsEstimate(mpf(2), mpf('0.52'), 3, (1, 30))


def test_conjecture_residual():
    grid = [Fraction(i, 4) for i in range(4)]
    at_30 = conjecture_residual(30, grid, REFERENCE_C, REFERENCE_R, ctx)
    at_60 = conjecture_residual(60, grid, REFERENCE_C, REFERENCE_R, ctx)
    with ctx.workdps():
        assert at_30 < exp(-0.523 * 30) * 1000
        assert at_60 < at_30
        ratio = at_60 / at_30 / exp(-0.523 * 30)
        assert mpf('0.01') < ratio < 100


def test_conjecture_frequency():
    """P_k(x) completes a single period over [0, 1]."""
    from gpolylog.polyengine import antidifference, delta_table
    k = 30
    P = antidifference(delta_table(k)[k]) + mean_constant(k)
    values = [P(Fraction(i, 64)) for i in range(65)]
    changes = sum((a > 0) != (b > 0) for a, b in zip(values[:-1], values[1:]))
    assert changes == 2


def test_constant_sign_follows_sinusoid():
    with ctx.workdps():
        C = mpf(REFERENCE_C)
        for k in range(20, 41):
            s = sin((2 * k + 1) * C)
            if abs(s) > 1e-3:
                assert (mean_constant(k) > 0) == (s > 0)


def test_matching_digits():
    with mp.workdps(30):
        assert matching_digits(mpf('1.0688'), REFERENCE_C) == 4
        assert matching_digits(mpf(REFERENCE_C), REFERENCE_C) == mp.dps
