"""Region dispatch and cross-checking between the evaluation methods."""
# License: GNU AGPLv3

import logging

from mpmath import pi

from .methods import g_series, g_zeta_expansion, g_bilateral, g_inversion, \
    g_negative_axis, SERIES_RADIUS, ZETA_EXPANSION_MARGIN
from .point import METHODS, as_point
from ..exceptions import CrossCheckError, DomainError

logger = logging.getLogger(__name__)

INVERSION_RADIUS = 20


def _g_negative_axis_point(p, ctx):
    if p.z.imag != 0 or p.z.real > -1:
        raise DomainError("Method 'neg_axis' needs a real z <= -1.")
    return g_negative_axis(p.logz.real, ctx)


_EVALUATORS = {
    'series': g_series,
    'zeta_expansion': g_zeta_expansion,
    'bilateral': g_bilateral,
    'inversion': g_inversion,
    'neg_axis': _g_negative_axis_point
    }


def applicable_methods(z, ctx):
    """Methods whose domain contains `z`, in the order of :data:`METHODS`.

    Parameters
    ----------
    z : :class:`ZPoint` or complex scalar, required
        Evaluation point off the branch cut.

    ctx : :class:`gpolylog.mpcore.PrecisionContext`, required
        Working precision.

    Returns
    -------
    methods : list of str

    """
    p = as_point(z, ctx)
    with ctx.workdps():
        r = abs(p.z)
        methods = []
        if r <= SERIES_RADIUS:
            methods.append('series')
        if p.logz is not None:
            if abs(p.logz) < ZETA_EXPANSION_MARGIN * 2 * pi:
                methods.append('zeta_expansion')
            methods.append('bilateral')
        if r >= 1:
            methods.append('inversion')
            if p.z.imag == 0:
                methods.append('neg_axis')
        return methods


def select_method(z, ctx):
    """Method chosen by :func:`g_auto` for `z`.

    :math:`|z| \\leq 1/2` uses the power series; otherwise the expansion in
    :math:`\\log z` is used while :math:`|\\log z| < 0.95 \\cdot 2\\pi` and
    :math:`|z| \\leq 20`; beyond :math:`|z| = 20` the inversion formula is
    used, and the bilateral sum covers whatever is left.

    """
    p = as_point(z, ctx)
    with ctx.workdps():
        r = abs(p.z)
        if r <= SERIES_RADIUS:
            return 'series'
        if r > INVERSION_RADIUS:
            return 'inversion'
        if abs(p.logz) < ZETA_EXPANSION_MARGIN * 2 * pi:
            return 'zeta_expansion'
        return 'bilateral'


def evaluate(z, ctx, method):
    """Evaluate :math:`G(z)` with a named method.

    Raises
    ------
    DomainError
        If `z` lies outside the domain of `method`.

    """
    if method not in _EVALUATORS:
        raise ValueError(f"Parameter `method` is {method!r}, which is not "
                         f"in {METHODS}.")
    return _EVALUATORS[method](as_point(z, ctx), ctx)


def cross_check(result, z, ctx):
    """Re-evaluate `z` with an alternate method and compare with `result`.

    The bilateral sum is preferred as the alternate, being valid everywhere
    except at the origin. Returns the alternate :class:`EvalResult`, or
    ``None`` when no other method applies.

    Raises
    ------
    CrossCheckError
        If the two values differ by more than the sum of their error
        bounds.

    """
    p = as_point(z, ctx)
    candidates = [m for m in applicable_methods(p, ctx)
                  if m != result.method]
    if not candidates:
        logger.warning("No alternate method applies at z = %s, cross-check "
                       "skipped.", p.z)
        return None
    method = 'bilateral' if 'bilateral' in candidates else candidates[0]
    other = evaluate(p, ctx, method)
    with ctx.workdps():
        difference = abs(result.value - other.value)
        if difference > result.err + other.err:
            raise CrossCheckError(
                f"Methods '{result.method}' and '{other.method}' disagree "
                f"at z = {p.z}: |difference| = {float(difference):.3e} "
                f"exceeds the combined bound "
                f"{float(result.err + other.err):.3e}.")
    logger.debug("Cross-check %s/%s at z = %s: difference %s", result.method,
                 other.method, p.z, difference)
    return other


def g_auto(z, ctx, crosscheck=False, method=None):
    """Evaluate :math:`G(z)` off the branch cut with the method selected by
    :func:`select_method`, or with `method` when given.

    Parameters
    ----------
    z : complex scalar or :class:`ZPoint`, required
        Evaluation point.

    ctx : :class:`gpolylog.mpcore.PrecisionContext`, required
        Working precision.

    crosscheck : bool, optional, default: ``False``
        Whether to also evaluate with an alternate method and raise
        :class:`CrossCheckError` on disagreement.

    method : str or None, optional, default: ``None``
        Force one of :data:`METHODS`.

    Returns
    -------
    result : :class:`EvalResult`

    Raises
    ------
    BranchCutError
        If `z` lies on :math:`[1, \\infty)`.

    Examples
    --------
    >>> from gpolylog.mpcore import PrecisionContext
    >>> from gpolylog.gfunc import g_auto
    >>> ctx = PrecisionContext(30)
    >>> g_auto(0.25, ctx).method
    'series'
    >>> g_auto(100j, ctx).method
    'inversion'

    """
    p = as_point(z, ctx)
    if method is None:
        method = select_method(p, ctx)
    logger.debug("Evaluating G at z = %s with method %s", p.z, method)
    result = evaluate(p, ctx, method)
    if crosscheck:
        cross_check(result, p, ctx)
    return result
