"""Recovery of the exact constants P_k(0) from samples of S(u) at even u."""
# License: GNU AGPLv3

import logging
from dataclasses import dataclass
from fractions import Fraction
from numbers import Integral, Real

import numpy as np
from mpmath import mpf, matrix, qr_solve, power, gamma, sqrt, pi
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted
from sympy import Rational, primerange
from sympy.ntheory.continued_fraction import continued_fraction_iterator, \
    continued_fraction_convergents

from .config import FitConfig
from .sampling import sample_residuals, ResidualSampler
from ..exceptions import ReconstructionError
from ..mpcore import PrecisionContext, DEFAULT_GUARD, to_mpf, to_fraction
from ..polyengine import is_smooth, smoothness_bound, denominator_ratio
from ..resurgent import s_predicted
from ..utils.intervals import Interval
from ..utils.validation import validate_params, check_integer_grid

logger = logging.getLogger(__name__)


def smooth_numbers(bound, limit):
    """All `bound`-smooth integers up to `limit`, in increasing order."""
    numbers = [1]
    for p in primerange(2, bound + 1):
        extended = []
        for n in numbers:
            while n <= limit:
                extended.append(n)
                n *= p
        numbers = extended
    return sorted(numbers)


def rationalize(value, err, k, gap=1e10, prior_denominator=None,
                multiplier_bound=10 ** 6):
    """Exact rational for a fitted constant :math:`P_k(0)`.

    The continued-fraction convergents of `value` are scanned for the first
    one lying within `err` of `value`, whose denominator is
    :math:`(2k + 3)`-smooth, and whose successor has a denominator at least
    `gap` times larger. A terminating expansion whose last convergent
    qualifies returns that convergent. If none qualifies and
    `prior_denominator` is given, denominators ``prior_denominator * m``
    are tried for smooth multipliers ``m <= multiplier_bound``, with the
    same confidence requirement ``err < 1 / (gap * D ** 2)``.

    Parameters
    ----------
    value : :class:`mpmath.mpf`, required
        Fitted value.

    err : :class:`mpmath.mpf`, required
        Error estimate of `value`.

    k : int, required
        Index of the constant, fixing the smoothness bound.

    gap : float, optional, default: ``1e10``
        Confidence margin.

    prior_denominator : int or None, optional, default: ``None``
        Denominator of :math:`P_{k-1}(0)`.

    multiplier_bound : int, optional, default: ``10 ** 6``
        Largest multiplier tried in the fallback search.

    Returns
    -------
    constant : :class:`fractions.Fraction`

    Raises
    ------
    ReconstructionError
        If no rational qualifies.

    """
    exact = to_fraction(value)
    tolerance = to_fraction(err)
    bound = smoothness_bound(k)
    convergents = continued_fraction_convergents(
        continued_fraction_iterator(Rational(exact.numerator,
                                             exact.denominator)))
    previous = None
    for convergent in convergents:
        convergent = Fraction(int(convergent.p), int(convergent.q))
        if previous is not None \
                and convergent.denominator >= gap * previous.denominator:
            return previous
        if tolerance * gap * convergent.denominator ** 2 >= 1:
            break
        previous = None
        if abs(convergent - exact) <= tolerance \
                and is_smooth(convergent.denominator, bound):
            previous = convergent
    else:
        if previous is not None:
            return previous

    if prior_denominator is not None:
        for multiplier in smooth_numbers(bound, multiplier_bound):
            denominator = prior_denominator * multiplier
            if tolerance * gap * denominator ** 2 >= 1:
                break
            candidate = Fraction(round(exact * denominator), denominator)
            if abs(candidate - exact) <= tolerance:
                logger.debug("P_%d(0) found from D_%d * %d", k, k - 1,
                             multiplier)
                return candidate
    raise ReconstructionError(
        f"No {bound}-smooth rational found for P_{k}(0) = "
        f"{float(value)} within +/- {float(err):.3g}.", k=k, value=value,
        error=err)


def _leading_coefficient(us, residuals, k, n_max, noise):
    """Least-squares estimate of :math:`c_k` in
    :math:`r(u) u^k = c_k + c_{k+1}/u + \\ldots`, choosing the number of
    fitted terms where consecutive estimates agree best."""
    u_ref = us[0]
    scaled = [u_ref / u for u in us]
    targets = [r * power(u, k) for r, u in zip(residuals, us)]
    estimates = []
    for n_terms in range(1, n_max + 2):
        A = matrix([[y ** i for i in range(n_terms)] for y in scaled])
        coefficients, _ = qr_solve(A, matrix(targets))
        estimates.append(coefficients[0])
    spreads = [abs(b - a) for a, b in zip(estimates[:-1], estimates[1:])]
    best = min(range(len(spreads)), key=spreads.__getitem__)
    spread = max(spreads[best:best + 2])
    floor = noise * power(max(us), k)
    return estimates[best], 10 * spread + floor, best + 1


class ConstantPeeler(BaseEstimator):
    """Peel the constants :math:`P_k(0)` off samples of :math:`S(u)` at even
    `u`, one index at a time.

    At even `u`, :math:`S(u) = \\sum_k P_k(0) u^{-k}` up to exponentially
    small terms. For :math:`k = 0, \\ldots, K`, the leading unknown is
    estimated by a least-squares fit in :math:`1/u` at full precision,
    rationalised by :func:`rationalize`, and its exact contribution is
    subtracted from every sample before moving on.

    Parameters
    ----------
    K : int, optional, default: ``12``
        Highest index.

    digits : int, optional, default: ``450``
        Quoted precision of the fit.

    guard : int, optional, default: ``20``
        Guard digits.

    max_terms : int or None, optional, default: ``None``
        Largest number of terms in the least-squares fits. ``None`` means
        two less than the number of samples, capped at 48.

    gap : float, optional, default: ``1e10``
        Confidence margin of the rationalisation.

    multiplier_bound : int, optional, default: ``10 ** 6``
        Largest multiplier of the fallback denominator search.

    prior_denominators : list of int or None, optional, default: ``None``
        Known denominators :math:`D_k`, used by the fallback search.

    Attributes
    ----------
    constants_ : list of :class:`fractions.Fraction`
        :math:`P_0(0), \\ldots, P_K(0)`.

    values_ : list of :class:`mpmath.mpf`
        Fitted value of each constant.

    errors_ : list of :class:`mpmath.mpf`
        Error estimate of each fitted value.

    n_terms_ : list of int
        Number of terms of the fit retained for each constant.

    """

    _hyperparameters = {
        'K': {'type': Integral, 'in': Interval(0, np.inf, closed='left')},
        'digits': {'type': Integral, 'in': Interval(30, np.inf,
                                                    closed='left')},
        'guard': {'type': Integral, 'in': Interval(10, np.inf,
                                                   closed='left')},
        'max_terms': {'type': (Integral, type(None)),
                      'in': Interval(1, np.inf, closed='left')},
        'gap': {'type': Real, 'in': Interval(1, np.inf, closed='left')},
        'multiplier_bound': {'type': Integral,
                             'in': Interval(1, np.inf, closed='left')},
        'prior_denominators': {'type': (list, tuple, type(None)),
                               'of': {'type': Integral}}
        }

    def __init__(self, K=12, digits=450, guard=DEFAULT_GUARD, max_terms=None,
                 gap=1e10, multiplier_bound=10 ** 6, prior_denominators=None):
        self.K = K
        self.digits = digits
        self.guard = guard
        self.max_terms = max_terms
        self.gap = gap
        self.multiplier_bound = multiplier_bound
        self.prior_denominators = prior_denominators

    def fit(self, X, y=None):
        """Recover :math:`P_0(0), \\ldots, P_K(0)`.

        Parameters
        ----------
        X : list of :class:`gpolylog.resurgent.ResidualSample`
            Samples at even, strictly increasing `u`, at least ``K + 5`` of
            them.

        y : None
            Ignored.

        Returns
        -------
        self : object

        Raises
        ------
        ReconstructionError
            If some constant cannot be rationalised.

        """
        validate_params(self.get_params(), self._hyperparameters)
        check_integer_grid([sample.u for sample in X], parity='even',
                           name='u')
        if len(X) < self.K + 5:
            raise ValueError(f"{len(X)} samples given, at least K + 5 = "
                             f"{self.K + 5} are needed.")
        ctx = PrecisionContext(self.digits, self.guard)
        n_max = min(len(X) - 2, 48) if self.max_terms is None \
            else min(self.max_terms, len(X) - 2)

        self.constants_, self.values_, self.errors_, self.n_terms_ = \
            [], [], [], []
        with ctx.workdps():
            us = [to_mpf(sample.u) for sample in X]
            residuals = [sample.s for sample in X]
            noise = mpf(10) ** -min(sample.digits_effective for sample in X)
            for k in range(self.K + 1):
                value, err, n_terms = _leading_coefficient(
                    us, residuals, k, n_max, noise)
                prior = self._prior_denominator(k)
                constant = rationalize(value, err, k, gap=self.gap,
                                       prior_denominator=prior,
                                       multiplier_bound=self.multiplier_bound)
                logger.info("P_%d(0) = %s (%d terms, error %s)", k, constant,
                            n_terms, ctx.nstr(err, 3))
                self.constants_.append(constant)
                self.values_.append(value)
                self.errors_.append(err)
                self.n_terms_.append(n_terms)
                term = to_mpf(constant)
                residuals = [r - term / power(u, k)
                             for r, u in zip(residuals, us)]
        return self

    def _prior_denominator(self, k):
        if self.prior_denominators is not None \
                and k - 1 < len(self.prior_denominators) and k:
            return self.prior_denominators[k - 1]
        if k:
            return self.constants_[k - 1].denominator
        return None

    def predict(self, X):
        """:math:`\\sum_{k \\leq K} P_k(0) u^{-k}` for every `u` in `X`, at
        the precision of the fit."""
        check_is_fitted(self, 'constants_')
        ctx = PrecisionContext(self.digits, self.guard)
        with ctx.workdps():
            predictions = []
            for u in X:
                inv_u = 1 / to_mpf(u)
                total = mpf(0)
                for constant in reversed(self.constants_):
                    total = total * inv_u + to_mpf(constant)
                predictions.append(total)
        return predictions


def peel_constants(samples, K, prior_denoms=None, **peeler_params):
    """Exact constants :math:`P_0(0), \\ldots, P_K(0)` recovered from
    `samples`, see :class:`ConstantPeeler`.

    Examples
    --------
    >>> from fractions import Fraction
    >>> from mpmath import mp, mpf
    >>> from gpolylog.fitlab import peel_constants
    >>> from gpolylog.resurgent import ResidualSample
    >>> with mp.workdps(90):
    ...     samples = [ResidualSample(u, Fraction(0),
    ...                               mpf(-2) / 3 + mpf(1) / (12 * u), 80)
    ...                for u in range(100, 140, 2)]
    >>> peel_constants(samples, 1, digits=80)
    [Fraction(-2, 3), Fraction(1, 12)]

    """
    peeler = ConstantPeeler(K=K, prior_denominators=prior_denoms,
                            **peeler_params)
    return peeler.fit(samples).constants_


@dataclass(frozen=True)
class FitReport:
    """Outcome of :func:`fit_constants`.

    Parameters
    ----------
    config : :class:`FitConfig`
    constants : list of :class:`fractions.Fraction`
    values : list of :class:`mpmath.mpf`
    errors : list of :class:`mpmath.mpf`
    holdout : list of tuple
        ``(u, |S(u) - prediction|, bound)`` per holdout sample.

    """
    config: FitConfig
    constants: list
    values: list
    errors: list
    holdout: list

    @property
    def denominator_ratios(self):
        return denominator_ratio(self.constants)

    def rows(self, ctx=None):
        """One dictionary per recovered constant."""
        ctx = self.config.ctx if ctx is None else ctx
        ratios = [None] + self.denominator_ratios
        return [{'k': k, 'constant': f"{c.numerator}/{c.denominator}",
                 'value': ctx.nstr(v, 30), 'error': ctx.nstr(e, 3),
                 'denominator_ratio': '' if r is None else str(r)}
                for k, (c, v, e, r) in enumerate(
                    zip(self.constants, self.values, self.errors, ratios))]


def holdout_bound(u, K):
    """Plausible size of the first omitted term
    :math:`|P_{K+1}(0)| u^{-(K+1)}`, from the growth
    :math:`\\Gamma(k + 1/2) R^{2k+1} / \\sqrt{2\\pi}` of the constants,
    with a tenfold margin."""
    return 10 * gamma(K + mpf(3) / 2) * mpf('0.52') ** (2 * K + 3) \
        / sqrt(2 * pi) / power(u, K + 1)


def fit_constants(cfg, n_jobs=None):
    """Sample :math:`S(u)` on the grid of `cfg`, peel the constants off the
    fitted part and validate them on the holdout part.

    Parameters
    ----------
    cfg : :class:`FitConfig`, required

    n_jobs : int or None, optional, default: ``None``
        The number of jobs to use for the sampling.

    Returns
    -------
    report : :class:`FitReport`

    """
    samples = sample_residuals(cfg, n_jobs=n_jobs)
    fitted, held = cfg.split(samples)
    peeler = ConstantPeeler(K=cfg.K, digits=cfg.digits, guard=cfg.guard)
    peeler.fit(fitted)
    holdout = []
    with cfg.ctx.workdps():
        predictions = peeler.predict([sample.u for sample in held])
        for sample, prediction in zip(held, predictions):
            deviation = abs(sample.s - prediction)
            bound = holdout_bound(sample.u, cfg.K)
            if deviation > bound:
                logger.warning("Holdout S(%d) deviates by %s from the fitted "
                               "constants.", sample.u, cfg.ctx.nstr(deviation,
                                                                    3))
            holdout.append((sample.u, deviation, bound))
    return FitReport(cfg, peeler.constants_, peeler.values_, peeler.errors_,
                     holdout)


def odd_u_validation(table, u_values, ctx, n_jobs=None):
    """Out-of-sample check of assembled polynomials at odd `u`, where
    :math:`x = 1/2`.

    Parameters
    ----------
    table : :class:`gpolylog.polyengine.PolyTable`, required
        Table with constant terms.

    u_values : iterable of int, required
        Odd, strictly increasing abscissae.

    ctx : :class:`gpolylog.mpcore.PrecisionContext`, required
        Working precision of the samples.

    n_jobs : int or None, optional, default: ``None``
        The number of jobs to use for the sampling.

    Returns
    -------
    residual : :class:`mpmath.mpf`
        :math:`\\max_u |S(u) - \\sum_{k \\leq K} P_k(1/2) u^{-k}|`.

    """
    grid = check_integer_grid(u_values, parity='odd', name='u_values')
    polys = table.polys
    sampler = ResidualSampler(digits=ctx.digits, guard=ctx.guard,
                              parity='odd', n_jobs=n_jobs)
    samples = sampler.fit_transform(grid)
    with ctx.workdps():
        return max(abs(sample.s - s_predicted(sample.u, polys, ctx))
                   for sample in samples)
