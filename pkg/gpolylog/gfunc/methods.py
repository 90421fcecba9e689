"""The evaluation strategies for :math:`G(z) = \\sum_{n > 0} \\sqrt{n}
z^n` and its analytic continuation off :math:`[1, \\infty)`."""
# License: GNU AGPLv3

from mpmath import mpf, mpc, sqrt, pi, floor

from .point import EvalResult, as_point, rounding_slack
from ..exceptions import DomainError
from ..mpcore import cpow_neg32, gamma_half, to_mpf
from ..specialfn import hurwitz_zeta_with_bound, reflection_sign, zeta_half

SERIES_RADIUS = 0.5
ZETA_EXPANSION_MARGIN = 0.95


def _require_log(p, method):
    if p.logz is None:
        raise DomainError(f"Method '{method}' needs log z, which is "
                          f"undefined at z = 0.")


def g_series(p, ctx):
    """Power series :math:`\\sum_{n > 0} \\sqrt{n} z^n` for
    :math:`|z| \\leq 1/2`.

    Partial sums stop once the geometric bound on the tail drops below one
    unit in the last working place; that bound is the truncation part of
    `err`.

    Parameters
    ----------
    p : :class:`ZPoint` or complex scalar, required
        Evaluation point.

    ctx : :class:`gpolylog.mpcore.PrecisionContext`, required
        Working precision.

    Returns
    -------
    result : :class:`EvalResult`

    Raises
    ------
    DomainError
        If :math:`|z| > 1/2`.

    """
    p = as_point(p, ctx)
    with ctx.workdps():
        z = p.z
        r = abs(z)
        if r > SERIES_RADIUS:
            raise DomainError(f"Method 'series' needs |z| <= "
                              f"{SERIES_RADIUS}, got |z| = {r}.")
        total = mpc(0)
        if not r:
            return EvalResult(total, rounding_slack(ctx, 0), 'series')
        tol = ctx.working_eps
        power_z = mpc(1)
        r_power = mpf(1)
        magnitude = mpf(0)
        n = 0
        while True:
            n += 1
            power_z *= z
            r_power *= r
            root = sqrt(n)
            total += root * power_z
            magnitude += root * r_power
            rho = r * sqrt(mpf(n + 2) / (n + 1))
            tail = sqrt(n + 1) * r_power * r / (1 - rho)
            if tail < tol:
                break
        return EvalResult(total, tail + rounding_slack(ctx, magnitude, n),
                          'series')


def g_zeta_expansion(p, ctx):
    """Expansion in powers of :math:`L = \\log z`,

    .. math::
        G(z) = \\frac{\\sqrt{\\pi}}{2} (-L)^{-3/2}
        + \\sum_{n \\geq 0} \\zeta(-n - 1/2) \\frac{L^n}{n!},

    valid for :math:`|L| < 2\\pi` and used for :math:`|L| < 0.95 \\cdot 2\\pi`.

    The coefficients :math:`\\zeta(-n - 1/2) / n!` come from the reflection
    formula, with the ratio :math:`\\Gamma(n + 3/2) / ((2\\pi)^{n + 3/2} n!)`
    updated term by term.

    Raises
    ------
    DomainError
        If :math:`z = 0` or :math:`|L| \\geq 0.95 \\cdot 2\\pi`.

    BranchCutError
        If `z` lies on :math:`[1, \\infty)`.

    """
    p = as_point(p, ctx)
    _require_log(p, 'zeta_expansion')
    with ctx.workdps():
        L = p.logz
        abs_L = abs(L)
        two_pi = 2 * pi
        if abs_L >= ZETA_EXPANSION_MARGIN * two_pi:
            raise DomainError(
                f"Method 'zeta_expansion' needs |log z| < "
                f"{ZETA_EXPANSION_MARGIN} * 2 pi, got {float(abs_L)}.")
        total = sqrt(pi) / 2 * cpow_neg32(-L, ctx)
        magnitude = abs(total)
        tol = ctx.working_eps
        root2 = sqrt(2)
        coeff = gamma_half(1, ctx) / two_pi ** mpf(1.5)
        L_power = mpc(1)
        n = 0
        while True:
            term = -reflection_sign(n) * root2 * coeff * zeta_half(n, ctx) \
                * L_power
            total += term
            size = abs(term)
            magnitude += size
            ratio = abs_L * (n + mpf(3) / 2) / (two_pi * (n + 1))
            if ratio < 1:
                tail = size * ratio / (1 - ratio)
                if tail < tol:
                    break
            coeff *= (n + mpf(3) / 2) / (two_pi * (n + 1))
            L_power *= L
            n += 1
        return EvalResult(total, tail + rounding_slack(ctx, magnitude, n),
                          'zeta_expansion')


def g_bilateral(p, ctx, log_shift=0):
    """Bilateral sum

    .. math::
        G(z) = \\frac{\\sqrt{\\pi}}{2} \\sum_{n=-\\infty}^{\\infty}
        (2n\\pi i - L)^{-3/2},

    evaluated as its central term plus two Hurwitz zeta values.

    With :math:`L' = L + 2\\pi i \\cdot` `log_shift` and central index
    :math:`c = \\lfloor \\Im L' / (2\\pi) + 1/2 \\rfloor`,

    .. math::
        \\frac{2}{\\sqrt{\\pi}} G = (2c\\pi i - L')^{-3/2}
        + (2\\pi i)^{-3/2} \\zeta\\left(\\tfrac32, 1 + c
        - \\tfrac{L'}{2\\pi i}\\right)
        + (-2\\pi i)^{-3/2} \\zeta\\left(\\tfrac32, 1 - c
        + \\tfrac{L'}{2\\pi i}\\right).

    Both Hurwitz shifts have real part at least 1/2, so splitting the
    powers stays on the principal branch. A non-zero `log_shift` moves the
    logarithm to another sheet and is absorbed by recentring.

    Parameters
    ----------
    p : :class:`ZPoint` or complex scalar, required
        Evaluation point.

    ctx : :class:`gpolylog.mpcore.PrecisionContext`, required
        Working precision.

    log_shift : int, optional, default: ``0``
        Integer multiple of :math:`2\\pi i` added to :math:`\\log z`.

    Returns
    -------
    result : :class:`EvalResult`

    """
    p = as_point(p, ctx)
    _require_log(p, 'bilateral')
    with ctx.workdps():
        two_pi = 2 * pi
        two_pi_i = mpc(0, two_pi)
        L = p.logz + two_pi_i * int(log_shift)
        c = int(floor(L.imag / two_pi + mpf(1) / 2))
        centre = cpow_neg32(c * two_pi_i - L, ctx)
        zeta_plus, err_plus = hurwitz_zeta_with_bound(
            1.5, 1 + c - L / two_pi_i, ctx)
        zeta_minus, err_minus = hurwitz_zeta_with_bound(
            1.5, 1 - c + L / two_pi_i, ctx)
        # |(+-2 pi i)^(-3/2)| = (2 pi)^(-3/2)
        factor_plus = cpow_neg32(two_pi_i, ctx)
        factor_minus = cpow_neg32(-two_pi_i, ctx)
        prefactor = sqrt(pi) / 2
        parts = (centre, factor_plus * zeta_plus, factor_minus * zeta_minus)
        value = prefactor * sum(parts)
        err = prefactor * two_pi ** mpf(-1.5) * (err_plus + err_minus) \
            + rounding_slack(ctx, prefactor * sum(abs(x) for x in parts))
        return EvalResult(value, err, 'bilateral')


def g_inversion(p, ctx):
    """Inversion formula for :math:`|z| \\geq 1`: for
    :math:`\\Im z \\geq 0`,

    .. math::
        G(z) = i G(1/z) + \\frac{i - 1}{4\\pi}
        \\zeta\\left(\\tfrac32, \\tfrac{L}{2\\pi i}\\right),

    with :math:`G(1/z)` from :func:`g_series` or :func:`g_zeta_expansion`.
    Points in the lower half-plane are handled by conjugation.

    Raises
    ------
    DomainError
        If :math:`|z| < 1`.

    """
    p = as_point(p, ctx)
    with ctx.workdps():
        if abs(p.z) < 1:
            raise DomainError(f"Method 'inversion' needs |z| >= 1, got "
                              f"|z| = {abs(p.z)}.")
        if p.z.imag < 0:
            return g_inversion(p.conjugate(), ctx).conjugate()
        q = p.reciprocal()
        if abs(q.z) <= SERIES_RADIUS:
            inner = g_series(q, ctx)
        else:
            inner = g_zeta_expansion(q, ctx)
        hurwitz, hurwitz_err = hurwitz_zeta_with_bound(
            1.5, p.logz / mpc(0, 2 * pi), ctx)
        factor = mpc(-1, 1) / (4 * pi)
        parts = (mpc(0, 1) * inner.value, factor * hurwitz)
        value = sum(parts)
        err = inner.err + abs(factor) * hurwitz_err \
            + rounding_slack(ctx, sum(abs(x) for x in parts))
        return EvalResult(value, err, 'inversion')


def g_negative_axis(u, ctx):
    """:math:`G(-e^u)` for :math:`u \\geq 0` as

    .. math::
        \\Re\\left[\\frac{i - 1}{4\\pi}
        \\zeta\\left(\\tfrac32, \\tfrac12 - \\tfrac{iu}{2\\pi}\\right)\\right].

    The returned value has zero imaginary part.

    Examples
    --------
    >>> from gpolylog.mpcore import PrecisionContext
    >>> from gpolylog.gfunc import g_negative_axis
    >>> ctx = PrecisionContext(30)
    >>> print(ctx.nstr(g_negative_axis(0, ctx).value.real, 10))
    -0.3801048126

    """
    with ctx.workdps():
        u = to_mpf(u)
        if u < 0:
            raise DomainError(f"Parameter `u` is {u}, the negative-axis "
                              f"formula needs u >= 0.")
        hurwitz, hurwitz_err = hurwitz_zeta_with_bound(
            1.5, mpc(mpf(1) / 2, -u / (2 * pi)), ctx)
        factor = mpc(-1, 1) / (4 * pi)
        product = factor * hurwitz
        err = abs(factor) * hurwitz_err + rounding_slack(ctx, abs(product))
        return EvalResult(mpc(product.real, 0), err, 'neg_axis')
