"""Parallel sampling of the residual S(u)."""
# License: GNU AGPLv3

import logging
from numbers import Integral

import numpy as np
from joblib import Parallel, delayed
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from ..mpcore import PrecisionContext, DEFAULT_GUARD
from ..resurgent import s_of_u
from ..utils.intervals import Interval
from ..utils.validation import validate_params, check_integer_grid

logger = logging.getLogger(__name__)


class ResidualSampler(BaseEstimator, TransformerMixin):
    """Evaluate :math:`S(u)` on a grid of integer abscissae.

    Every sample is independent, so the grid is distributed over `n_jobs`
    processes. The default :mod:`joblib` backend runs each job in its own
    process, which keeps the process-wide mpmath precision of concurrent
    evaluations apart.

    Parameters
    ----------
    digits : int, optional, default: ``450``
        Quoted working precision.

    guard : int, optional, default: ``20``
        Guard digits.

    target_digits : int, optional, default: ``10``
        Digits of :math:`S(u)` that must survive the cancellation, see
        :func:`gpolylog.resurgent.s_of_u`.

    parity : ``'even'`` | ``'odd'`` | None, optional, default: ``None``
        If not ``None``, the parity required of every abscissa.

    n_jobs : int or None, optional, default: ``None``
        The number of jobs to use for the computation. ``None`` means 1
        unless in a :obj:`joblib.parallel_backend` context. ``-1`` means
        using all processors.

    Attributes
    ----------
    ctx_ : :class:`gpolylog.mpcore.PrecisionContext`
        Precision built in :meth:`fit`.

    Examples
    --------
    >>> from gpolylog.fitlab import ResidualSampler
    >>> samples = ResidualSampler(digits=60).fit_transform([4, 6])
    >>> [sample.x for sample in samples]
    [Fraction(0, 1), Fraction(0, 1)]

    """

    _hyperparameters = {
        'digits': {'type': Integral, 'in': Interval(30, np.inf,
                                                    closed='left')},
        'guard': {'type': Integral, 'in': Interval(10, np.inf,
                                                   closed='left')},
        'target_digits': {'type': Integral, 'in': Interval(1, np.inf,
                                                           closed='left')},
        'parity': {'type': (str, type(None)), 'in': ['even', 'odd', None]}
        }

    def __init__(self, digits=450, guard=DEFAULT_GUARD, target_digits=10,
                 parity=None, n_jobs=None):
        self.digits = digits
        self.guard = guard
        self.target_digits = target_digits
        self.parity = parity
        self.n_jobs = n_jobs

    def fit(self, X=None, y=None):
        """Validate the hyperparameters and build :attr:`ctx_`. Then, return
        the estimator.

        This method is here to implement the usual scikit-learn API and hence
        work in pipelines.

        Parameters
        ----------
        X : ignored

        y : None
            There is no need for a target in a transformer, yet the pipeline
            API requires this parameter.

        Returns
        -------
        self : object

        """
        validate_params(
            self.get_params(), self._hyperparameters, exclude=['n_jobs'])
        self.ctx_ = PrecisionContext(self.digits, self.guard)
        return self

    def transform(self, X, y=None):
        """Compute :math:`S(u)` for every abscissa in `X`.

        Parameters
        ----------
        X : iterable of int
            Strictly increasing abscissae.

        y : None
            There is no need for a target in a transformer, yet the pipeline
            API requires this parameter.

        Returns
        -------
        samples : list of :class:`gpolylog.resurgent.ResidualSample`
            In the order of `X`.

        """
        check_is_fitted(self, 'ctx_')
        grid = check_integer_grid(X, parity=self.parity, name='X')
        logger.info("Sampling S(u) at %d points in [%d, %d] with %d digits",
                    len(grid), grid[0], grid[-1], self.ctx_.digits)
        samples = Parallel(n_jobs=self.n_jobs)(
            delayed(s_of_u)(u, self.ctx_, self.target_digits) for u in grid)
        logger.debug("Sampled S(%d) = %s", grid[-1],
                     self.ctx_.nstr(samples[-1].s, 20))
        return samples


def sample_residuals(cfg, n_jobs=None):
    """Samples of :math:`S(u)` on the even grid of `cfg`.

    Parameters
    ----------
    cfg : :class:`gpolylog.fitlab.FitConfig`, required
        Grid and precision.

    n_jobs : int or None, optional, default: ``None``
        The number of jobs to use for the computation.

    Returns
    -------
    samples : list of :class:`gpolylog.resurgent.ResidualSample`
        Ordered by `u`, all with :math:`x = 0`.

    Raises
    ------
    PrecisionError
        If ``cfg.digits`` cannot keep ten digits of :math:`S(u)` at
        ``cfg.u_max``.

    """
    sampler = ResidualSampler(digits=cfg.digits, guard=cfg.guard,
                              parity='even', n_jobs=n_jobs)
    return sampler.fit_transform(cfg.grid())
