"""Phase and amplitude of the polynomials P_k and the asymptotic constants
C and R governing them."""
# License: GNU AGPLv3

import logging
from dataclasses import dataclass
from numbers import Integral

from mpmath import mp, mpf, atan2, hypot, pi, sqrt, sin, gamma, log, log10, \
    floor, fsum

from ..exceptions import DegenerateError, UnwrapError
from ..mpcore import to_mpf
from ..polyengine import p_prime_values, mean_constant, antidifference, \
    delta_table

logger = logging.getLogger(__name__)

REFERENCE_C = "1.068853915867953012157109719181185297952532469390117623" \
    "122615884099900607451406841033559634662009219352"
REFERENCE_R = "0.518183978981555872673915697709296473054425425379186245" \
    "211522277584117542967758199301076306776194323459"

UNWRAP_MARGIN = 1e-3
C_CORRIDOR = (1, 1.2)
R_CORRIDOR = (0.5, 0.55)


def matching_digits(value, reference):
    """Number of leading significant decimal digits on which `value` and
    `reference` agree, at the current mpmath precision."""
    reference = mpf(reference)
    difference = abs(mpf(value) - reference)
    if not difference:
        return mp.dps
    return max(0, int(floor(-log10(difference / abs(reference)))))


def phase_amplitude(k, ctx, variant='derivatives', constant=None):
    """Phase :math:`\\theta_k` and amplitude :math:`A_k` of the model
    :math:`P_k(x) \\approx A_k \\sin(\\theta_k - 2\\pi x)` near
    :math:`x = 0`.

    With ``variant='derivatives'``, the exact values :math:`P_k'(0)` and
    :math:`P_k''(0)` give :math:`A_k \\sin\\theta_k = -P_k''(0) / (2\\pi)^2`
    and :math:`A_k \\cos\\theta_k = -P_k'(0) / (2\\pi)`; no sample of
    :math:`S(u)` is needed. With ``variant='value'``, :math:`P_k(0)`
    replaces the second derivative through
    :math:`A_k \\sin\\theta_k = P_k(0)`.

    Parameters
    ----------
    k : int, required
        At least 1.

    ctx : :class:`gpolylog.mpcore.PrecisionContext`, required
        Working precision.

    variant : ``'derivatives'`` | ``'value'``, optional, default: \
        ``'derivatives'``
        Which pair of exact values to use.

    constant : rational scalar or None, optional, default: ``None``
        :math:`P_k(0)` for the ``'value'`` variant. ``None`` means
        :func:`gpolylog.polyengine.mean_constant`.

    Returns
    -------
    theta : :class:`mpmath.mpf`
        In :math:`(-\\pi, \\pi]`.

    amplitude : :class:`mpmath.mpf`

    Raises
    ------
    DegenerateError
        If both values vanish.

    """
    if not isinstance(k, Integral) or k < 1:
        raise ValueError(f"Parameter `k` is {k!r}, which is not an integer "
                         f"of at least 1.")
    first, second = p_prime_values(k)[k]
    return _phase_amplitude(k, first, second, ctx, variant, constant)


def _phase_amplitude(k, first, second, ctx, variant='derivatives',
                     constant=None):
    if variant not in ('derivatives', 'value'):
        raise ValueError(f"Parameter `variant` is {variant!r}, which is not "
                         f"in ('derivatives', 'value').")
    with ctx.workdps():
        cosine = -to_mpf(first) / (2 * pi)
        if variant == 'derivatives':
            sine = -to_mpf(second) / (2 * pi) ** 2
        else:
            sine = to_mpf(mean_constant(k) if constant is None else constant)
        if not sine and not cosine:
            raise DegenerateError(f"Both model components of P_{k} vanish, "
                                  f"its phase is undefined.")
        return atan2(sine, cosine), hypot(sine, cosine)


@dataclass(frozen=True)
class ConstantsEstimate:
    """Estimate of the constants of the large-k form
    :math:`P_k(x) \\sim R^{2k+1} \\Gamma(k + 1/2) \\sin((2k+1)C - 2\\pi x)
    / \\sqrt{2\\pi}`.

    Parameters
    ----------
    C : :class:`mpmath.mpf`
    R : :class:`mpmath.mpf`
    stable_digits : int
        Digits on which two adjacent windows of k agree.
    k_window : tuple of int
        ``(k_lo, k_hi)``.
    amplitude : :class:`mpmath.mpf` or None
        :math:`A_k \\sqrt{2\\pi} / (R^{2k+1} \\Gamma(k + 1/2))` at
        :math:`k = k_\\mathrm{hi}`, which tends to 1.

    """
    C: mpf
    R: mpf
    stable_digits: int
    k_window: tuple
    amplitude: mpf = None

    def __post_init__(self):
        if not C_CORRIDOR[0] < self.C < C_CORRIDOR[1]:
            raise ValueError(f"C = {float(self.C)} lies outside "
                             f"{C_CORRIDOR}.")
        if not R_CORRIDOR[0] < self.R < R_CORRIDOR[1]:
            raise ValueError(f"R = {float(self.R)} lies outside "
                             f"{R_CORRIDOR}.")

    @property
    def D(self):
        """Decay rate :math:`\\log(2\\pi R^2)` of the corrections."""
        return log(2 * pi * self.R ** 2)

    def rows(self, ctx):
        digits = max(self.stable_digits, 1)
        with ctx.workdps():
            C_digits = matching_digits(self.C, REFERENCE_C)
            R_digits = matching_digits(self.R, REFERENCE_R)
            D = ctx.nstr(self.D, 10)
            rows = [{'name': 'C', 'value': ctx.nstr(self.C, digits),
                     'reference_digits': C_digits},
                    {'name': 'R', 'value': ctx.nstr(self.R, digits),
                     'reference_digits': R_digits},
                    {'name': 'D', 'value': D, 'reference_digits': ''}]
            if self.amplitude is not None:
                rows.append({'name': 'amplitude',
                             'value': ctx.nstr(self.amplitude, digits),
                             'reference_digits': matching_digits(
                                 self.amplitude, 1)})
        rows.append({'name': 'stable_digits',
                     'value': str(self.stable_digits),
                     'reference_digits': ''})
        return rows


def unwrap_differences(thetas):
    """Consecutive phase differences reduced to :math:`(0, 2\\pi)`.

    Raises
    ------
    UnwrapError
        If a difference lies within ``1e-3`` of a multiple of
        :math:`2\\pi`.

    """
    differences = []
    for i, (a, b) in enumerate(zip(thetas[:-1], thetas[1:])):
        d = (b - a) % (2 * pi)
        if d < 0:
            d += 2 * pi
        if d < UNWRAP_MARGIN or d > 2 * pi - UNWRAP_MARGIN:
            raise UnwrapError(f"The phase difference after position {i} is "
                              f"{float(d)}, too close to a multiple of 2 pi "
                              f"to unwrap.")
        differences.append(d)
    return differences


def _window_estimate(ks, thetas, amplitudes):
    """Average 2C and R^2 over the upper half of one window."""
    differences = unwrap_differences(thetas)
    ratios = [b / (a * (k + mpf(1) / 2))
              for k, a, b in zip(ks, amplitudes[:-1], amplitudes[1:])]
    start = len(differences) // 2
    n = len(differences) - start
    C = fsum(differences[start:]) / (2 * n)
    R = sqrt(fsum(ratios[start:]) / n)
    return C, R


def constants_from_phases(ks, thetas, amplitudes, ctx):
    """Estimate :math:`C` and :math:`R` from phases and amplitudes at
    consecutive indices `ks`, see :func:`extract_CR`."""
    ks = list(ks)
    if len(ks) < 21 or any(b != a + 1 for a, b in zip(ks[:-1], ks[1:])):
        raise ValueError("At least 21 consecutive indices are needed.")
    with ctx.workdps():
        C, R = _window_estimate(ks, thetas, amplitudes)
        k_hi = ks[-1]
        if len(ks) > 40:
            split, lower = len(ks) - 21, len(ks) - 41
        else:
            split, lower = len(ks) // 2, 0
        C_low, R_low = _window_estimate(ks[lower:split + 1],
                                        thetas[lower:split + 1],
                                        amplitudes[lower:split + 1])
        C_high, R_high = _window_estimate(ks[split:], thetas[split:],
                                          amplitudes[split:])
        stable = min(matching_digits(C_low, C_high),
                     matching_digits(R_low, R_high), ctx.digits)
        amplitude = amplitudes[-1] / model_amplitude(k_hi, R)
    logger.info("C and R stable to %d digits over k in [%d, %d]", stable,
                ks[0], k_hi)
    return ConstantsEstimate(C, R, stable, (ks[0], k_hi), amplitude)


def extract_CR(k_lo, k_hi, ctx):
    """Estimate the constants :math:`C` and :math:`R` from the exact
    derivatives :math:`P_k'(0), P_k''(0)` for
    :math:`k_\\mathrm{lo} \\leq k \\leq k_\\mathrm{hi}`.

    Consecutive phases differ by :math:`2C` modulo :math:`2\\pi` and
    consecutive amplitudes by the factor :math:`R^2 (k + 1/2)`, up to
    corrections decaying like :math:`e^{-Dk}`. Both are averaged over the
    upper half of the window. Agreement between the windows
    :math:`[k_\\mathrm{hi} - 40, k_\\mathrm{hi} - 20]` and
    :math:`[k_\\mathrm{hi} - 20, k_\\mathrm{hi}]` gives the number of stable
    digits. The amplitude at :math:`k_\\mathrm{hi}`, divided by
    :math:`R^{2k+1} \\Gamma(k + 1/2) / \\sqrt{2\\pi}`, checks the
    normalisation of the large-k form.

    Parameters
    ----------
    k_lo, k_hi : int, required
        Window, with ``k_hi >= k_lo + 20`` and ``k_lo >= 1``.

    ctx : :class:`gpolylog.mpcore.PrecisionContext`, required
        Working precision.

    Returns
    -------
    estimate : :class:`ConstantsEstimate`

    Raises
    ------
    UnwrapError
        If the phase sequence cannot be unwrapped unambiguously.

    """
    if not (isinstance(k_lo, Integral) and isinstance(k_hi, Integral)) \
            or k_lo < 1 or k_hi < k_lo + 20:
        raise ValueError(f"The window [{k_lo}, {k_hi}] must satisfy "
                         f"1 <= k_lo and k_lo + 20 <= k_hi.")
    values = p_prime_values(k_hi)
    ks = list(range(k_lo, k_hi + 1))
    thetas, amplitudes = [], []
    for k in ks:
        theta, amplitude = _phase_amplitude(k, *values[k], ctx)
        thetas.append(theta)
        amplitudes.append(amplitude)
    return constants_from_phases(ks, thetas, amplitudes, ctx)


def model_amplitude(k, R):
    """:math:`A_k = R^{2k+1} \\Gamma(k + 1/2) / \\sqrt{2\\pi}`."""
    return R ** (2 * k + 1) * gamma(k + mpf(1) / 2) / sqrt(2 * pi)


def conjecture_residual(k, x_grid, C, R, ctx, constant=None):
    """Largest deviation of :math:`P_k(x) / A_k` from
    :math:`\\sin((2k+1)C - 2\\pi x)` over `x_grid`; of order
    :math:`e^{-Dk}`.

    Parameters
    ----------
    k : int, required

    x_grid : iterable of real scalars, required
        Points of :math:`[0, 1)`.

    C, R : real scalars, required
        Constants of the large-k form.

    ctx : :class:`gpolylog.mpcore.PrecisionContext`, required
        Working precision.

    constant : rational scalar or None, optional, default: ``None``
        :math:`P_k(0)`. ``None`` closes :math:`P_k` with
        :func:`gpolylog.polyengine.mean_constant`, which makes its integral
        over a period vanish.

    Returns
    -------
    residual : :class:`mpmath.mpf`

    """
    F_k = antidifference(delta_table(k)[k])
    P_k = F_k + (mean_constant(k) if constant is None else constant)
    with ctx.workdps():
        C, R = mpf(C), mpf(R)
        amplitude = model_amplitude(k, R)
        return max(abs(to_mpf(P_k(x)) / amplitude
                       - sin((2 * k + 1) * C - 2 * pi * to_mpf(x)))
                   for x in x_grid)
