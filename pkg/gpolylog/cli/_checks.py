"""End-to-end checks run by ``gpolylog verify-all``.

Each check returns ``(passed, detail)``. With ``quick=True`` the checks
run on reduced grids, windows and sample counts in a few minutes; otherwise
they run at full scale.
"""
# License: GNU AGPLv3

import logging
from fractions import Fraction

import numpy as np
from joblib import Parallel, delayed
from mpmath import mpf, mpc, sqrt, pi, zeta, exp, log, power, conj

from ..fitlab import FitConfig, extract_CR, fit_constants, holdout_bound, \
    odd_u_validation, conjecture_residual, matching_digits, REFERENCE_C, \
    REFERENCE_R
from ..gfunc import evaluate, applicable_methods
from ..mpcore import PrecisionContext, DEFAULT_GUARD, to_mpf
from ..polyengine import BUILTIN_CONSTANTS, RationalPolynomial, \
    antidifference, assemble, delta_table, g_sequence, resurgence_residual
from ..resurgent import RESIDUAL_RANGE, required_digits, s_of_u
from ..specialfn import hurwitz_zeta

logger = logging.getLogger(__name__)

F = Fraction
PRINTED = (
    (F(-2, 3), 1),
    (F(47, 2160), F(7, 24), -1, F(2, 3)),
    (F(-433, 24192), F(-73, 1920), F(1, 3), F(-1, 36), F(-2, 3), F(2, 5)),
    (F(28583, 2488320), F(-106619, 2903040), F(-223, 1152), F(433, 1728),
     F(31, 72), F(-5, 12), F(-2, 9), F(4, 21))
    )
LEADING_G = (F(1), F(1, 12), F(1, 288), F(-139, 51840), F(-571, 2488320))
REGIONS = ((0.01, 0.5), (0.5, 1.), (1., 20.), (20., 500.))


def _random_points(rng, r_lo, r_hi, count):
    radii = np.exp(rng.uniform(np.log(r_lo), np.log(r_hi), count))
    angles = rng.uniform(-np.pi, np.pi, count)
    return [complex(r * np.cos(t), r * np.sin(t))
            for r, t in zip(radii, angles)]


def check_special_value(quick, n_jobs=None):
    ctx = PrecisionContext(50 if quick else 100)
    methods = applicable_methods(-1, ctx)
    with ctx.workdps():
        expected = (1 - 2 * sqrt(2)) * zeta(mpf(3) / 2) / (4 * pi)
        worst = mpf(0)
        for method in methods:
            result = evaluate(-1, ctx, method)
            deviation = abs(result.value - expected)
            if deviation > result.err + ctx.eps * abs(expected):
                return False, f"{method} misses G(-1) by " \
                              f"{ctx.nstr(deviation, 3)}"
            worst = max(worst, deviation)
    return True, f"{len(methods)} methods, largest deviation " \
                 f"{ctx.nstr(worst, 3)} at {ctx.digits} digits"


def _pairwise_excess(z, ctx):
    """Largest ratio of the disagreement of two methods at `z` to the sum
    of their error bounds."""
    results = [evaluate(z, ctx, method)
               for method in applicable_methods(z, ctx)]
    worst = 0.
    with ctx.workdps():
        for i, a in enumerate(results):
            for b in results[i + 1:]:
                difference, bound = abs(a.value - b.value), a.err + b.err
                if difference:
                    excess = float(difference / bound) if bound else np.inf
                    worst = max(worst, excess)
    return worst


def check_cross_methods(quick, n_jobs=None):
    ctx = PrecisionContext(30 if quick else 100)
    rng = np.random.default_rng(0)
    count = 5 if quick else 50
    points = [z for r_lo, r_hi in REGIONS
              for z in _random_points(rng, r_lo, r_hi, count)]
    excess = Parallel(n_jobs=n_jobs)(delayed(_pairwise_excess)(z, ctx)
                                     for z in points)
    return max(excess) <= 1, f"{len(points)} points, largest " \
                             f"disagreement/bound {max(excess):.3g}"


def check_polynomials(quick, n_jobs=None):
    polys = assemble(3, BUILTIN_CONSTANTS).polys
    expected = [RationalPolynomial(c) for c in PRINTED]
    return polys == expected, \
        f"P_3 linear coefficient {polys[3].coefficient(1)}"


def check_g_sequence(quick, n_jobs=None):
    K = 20 if quick else 40
    g = g_sequence(K)
    deltas = delta_table(K)
    quarter = all(deltas[k](F(-1, 4)) == g[k] for k in range(K + 1))
    return tuple(g[:5]) == LEADING_G and quarter, \
        f"g_k = Delta_k(-1/4) for k <= {K}"


def check_residuals(quick, n_jobs=None):
    us = (6, 10, 50) if quick else (6, 10, 50, 100, 300)
    ctx = PrecisionContext(required_digits(max(us), 10, DEFAULT_GUARD))
    samples = Parallel(n_jobs=n_jobs)(delayed(s_of_u)(u, ctx) for u in us)
    with ctx.workdps():
        for sample in samples:
            leading = to_mpf(sample.x) - mpf(2) / 3
            if not RESIDUAL_RANGE[0] < sample.s < RESIDUAL_RANGE[1] \
                    or abs(sample.s - leading) >= mpf(5) / sample.u:
                return False, f"S({sample.u}) = {ctx.nstr(sample.s, 10)}"
    return True, f"u in {us}"


def check_fit(quick, n_jobs=None):
    if quick:
        cfg = FitConfig(u_min=200, u_max=258, count=30, digits=200, K=2)
    else:
        cfg = FitConfig()
    report = fit_constants(cfg, n_jobs=n_jobs)
    known = min(cfg.K + 1, len(BUILTIN_CONSTANTS))
    if list(report.constants[:known]) != list(BUILTIN_CONSTANTS[:known]):
        return False, f"P_k(0) for k < {known} differ from the known values"
    failures = sum(deviation > bound for _, deviation, bound
                   in report.holdout)
    if failures:
        return False, f"{failures} holdout samples out of bound"
    table = assemble(cfg.K, report.constants)
    odd = cfg.odd_grid(3 if quick else 5)
    residual = odd_u_validation(table, odd, cfg.ctx, n_jobs=n_jobs)
    detail = f"K = {cfg.K}, {len(report.holdout)} holdout samples, odd-u " \
             f"residual {cfg.ctx.nstr(residual, 3)} over {odd[0]}..{odd[-1]}"
    return residual <= holdout_bound(odd[0], cfg.K), detail


def check_constants(quick, n_jobs=None):
    ctx = PrecisionContext(50 if quick else 60)
    window, needed, normalised = ((20, 60), 6, 4) if quick \
        else ((100, 150), 25, 20)
    estimate = extract_CR(*window, ctx)
    with ctx.workdps():
        digits = min(matching_digits(estimate.C, REFERENCE_C),
                     matching_digits(estimate.R, REFERENCE_R))
        normalisation = matching_digits(estimate.amplitude, 1)
    passed = digits >= needed and normalisation >= normalised
    if not quick:
        passed = passed and estimate.stable_digits >= needed - 5
    return passed, f"{digits} digits of C and R over k in {window}, " \
                   f"{estimate.stable_digits} stable, amplitude " \
                   f"normalisation to {normalisation} digits"


def check_conjecture(quick, n_jobs=None):
    ctx = PrecisionContext(60)
    grid = [F(i, 4) for i in range(4)]
    at_30 = conjecture_residual(30, grid, REFERENCE_C, REFERENCE_R, ctx)
    at_60 = conjecture_residual(60, grid, REFERENCE_C, REFERENCE_R, ctx)
    with ctx.workdps():
        D = log(2 * pi * mpf(REFERENCE_R) ** 2)
        ratio = at_60 / at_30 / exp(-30 * D)
        passed = D > mpf('0.523') and mpf('0.01') < ratio < 100
        return passed, f"D = {ctx.nstr(D, 6)}, observed/predicted decay " \
                       f"{ctx.nstr(ratio, 3)}"


def check_resurgence(quick, n_jobs=None):
    ctx = PrecisionContext(50)
    details = []
    passed = True
    for parity in ('even', 'odd'):
        at_6 = resurgence_residual(6, parity, ctx)
        at_10 = resurgence_residual(10, parity, ctx)
        passed = passed and at_6 < mpf('0.1') and at_10 < mpf('0.01') \
            and at_10 < at_6
        details.append(f"{parity} {ctx.nstr(at_6, 2)} -> "
                       f"{ctx.nstr(at_10, 2)}")
    return passed, ", ".join(details)


def _random_fraction(rng):
    return F(int(rng.integers(-50, 51)), int(rng.integers(1, 50)))


def _hurwitz_identities(s, re_a, im_a, ctx):
    with ctx.workdps():
        a = mpc(re_a, im_a)
        value = hurwitz_zeta(s, a, ctx)
        scale = max(mpf(1), abs(value))
        shift = abs(value - power(a, -s) - hurwitz_zeta(s, a + 1, ctx))
        mirror = abs(hurwitz_zeta(s, conj(a), ctx) - conj(value))
        return max(shift, mirror) < 10 * ctx.eps * scale


def check_properties(quick, n_jobs=None):
    rng = np.random.default_rng(1)
    n_polys, n_hurwitz = (20, 20) if quick else (200, 10 ** 4)
    for _ in range(n_polys):
        degree = int(rng.integers(0, 16))
        q = RationalPolynomial([_random_fraction(rng)
                                for _ in range(degree + 1)])
        F_q = antidifference(q)
        if F_q.shift(1) - F_q != q or F_q(0) != 0:
            return False, f"antidifference identity fails for {q}"
    ctx = PrecisionContext(50)
    cases = zip(rng.uniform(1.05, 6., n_hurwitz),
                rng.uniform(0.05, 20., n_hurwitz),
                rng.uniform(-60., 60., n_hurwitz))
    hurwitz = Parallel(n_jobs=n_jobs)(
        delayed(_hurwitz_identities)(float(s), float(re_a), float(im_a), ctx)
        for s, re_a, im_a in cases)
    if not all(hurwitz):
        return False, f"{hurwitz.count(False)} Hurwitz identity failures"
    for z in (0.2 - 0.4j, -0.9 + 0.5j, 4 + 1j, -30 + 2j):
        for method in applicable_methods(z, ctx):
            result = evaluate(z, ctx, method)
            refined = evaluate(z, ctx.doubled(), method)
            with ctx.workdps():
                if abs(result.value - refined.value) > result.err:
                    return False, f"{method} unstable at z = {z}"
    return True, f"{n_polys} antidifferences, {n_hurwitz} Hurwitz cases, " \
                 f"precision doubling"


CHECKS = (
    ('special_value', check_special_value),
    ('cross_methods', check_cross_methods),
    ('polynomials', check_polynomials),
    ('g_sequence', check_g_sequence),
    ('residuals', check_residuals),
    ('fit', check_fit),
    ('constants', check_constants),
    ('conjecture', check_conjecture),
    ('resurgence', check_resurgence),
    ('properties', check_properties)
    )


def run_checks(quick=False, n_jobs=None):
    """Run every check of :data:`CHECKS` and collect one row per check.

    Domain and arithmetic errors raised by a check mark it as failed
    instead of aborting the run.

    """
    rows = []
    for name, check in CHECKS:
        logger.info("Running check %s", name)
        try:
            passed, detail = check(quick, n_jobs=n_jobs)
        except (ArithmeticError, ValueError, KeyError) as error:
            passed, detail = False, f"{type(error).__name__}: {error}"
        rows.append({'check': name, 'status': 'pass' if passed else 'FAIL',
                     'detail': detail})
    return rows
