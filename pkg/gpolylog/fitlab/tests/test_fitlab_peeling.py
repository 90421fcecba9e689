"""Testing for the configuration, sampling and constant peeling."""
# License: GNU AGPLv3

from fractions import Fraction

import numpy as np
import pytest
from mpmath import mp, mpf
from sklearn.exceptions import NotFittedError

from gpolylog.exceptions import ReconstructionError
from gpolylog.fitlab import FitConfig, ResidualSampler, ConstantPeeler, \
    peel_constants, rationalize, smooth_numbers, fit_constants, \
    odd_u_validation, holdout_bound, minimal_digits
from gpolylog.mpcore import PrecisionContext, to_mpf
from gpolylog.polyengine import assemble, is_smooth, smoothness_bound, \
    BUILTIN_CONSTANTS
from gpolylog.resurgent import ResidualSample

SYNTHETIC = list(BUILTIN_CONSTANTS) + [Fraction(5, 2 ** 7 * 3 ** 2 * 11),
                                       Fraction(-7, 2 ** 10 * 13),
                                       Fraction(-3, 2 ** 5 * 5 ** 3 * 13)]


def _synthetic_samples(constants, us, noise, digits=80):
    rng = np.random.default_rng(0)
    samples = []
    with mp.workdps(digits):
        for u in us:
            value = sum(mpf(c.numerator) / c.denominator / mpf(u) ** k
                        for k, c in enumerate(constants))
            value += mpf(noise) * rng.uniform(-1, 1)
            samples.append(ResidualSample(u, Fraction(0), value, 40))
    return samples


def test_fit_config_defaults():
    cfg = FitConfig()
    assert cfg.as_dict() == {'u_min': 402, 'u_max': 600, 'count': 100,
                             'digits': 450, 'K': 12, 'holdout': 0.1,
                             'guard': 20}
    grid = cfg.grid()
    assert len(grid) == 100
    assert grid[0] == 402 and grid[-1] == 600
    assert all(u % 2 == 0 for u in grid)
    assert all(b > a for a, b in zip(grid[:-1], grid[1:]))


@pytest.mark.parametrize("params, match",
                         [({'u_min': 401}, "even"),
                          ({'u_min': 40}, "4 \\* K"),
                          ({'digits': 300}, "digits"),
                          ({'count': 200}, "count"),
                          ({'count': 20, 'holdout': 0.5}, "remain"),
                          ({'holdout': 1.}, "holdout")])
def test_fit_config_invariants(params, match):
    with pytest.raises(ValueError, match=match):
        FitConfig(**params)


def test_fit_config_types():
    with pytest.raises(TypeError):
        FitConfig(u_min=402.)


def test_minimal_digits():
    assert minimal_digits(600, 402, 12) == 358


def test_fit_config_split():
    cfg = FitConfig(count=40, holdout=0.25)
    fitted, held = cfg.split(list(range(40)))
    assert len(held) == 10
    assert len(fitted) == 30
    assert not set(fitted) & set(held)


def test_sampler():
    samples = ResidualSampler(digits=60, parity='even').fit_transform(
        [4, 6, 8])
    assert [sample.u for sample in samples] == [4, 6, 8]
    assert all(sample.x == 0 for sample in samples)
    assert all(-0.7 < sample.s < 0.4 for sample in samples)


def test_sampler_parallel_matches_sequential():
    grid = [5, 9, 13]
    sequential = ResidualSampler(digits=50).fit_transform(grid)
    parallel = ResidualSampler(digits=50, n_jobs=2).fit_transform(grid)
    assert [s.s for s in sequential] == [s.s for s in parallel]


def test_sampler_validation():
    with pytest.raises(NotFittedError):
        ResidualSampler().transform([4])
    with pytest.raises(ValueError):
        ResidualSampler(digits=10).fit()
    with pytest.raises(ValueError, match="even"):
        ResidualSampler(digits=50, parity='even').fit_transform([5])


def test_smooth_numbers():
    assert smooth_numbers(3, 20) == [1, 2, 3, 4, 6, 8, 9, 12, 16, 18]


def test_rationalize():
    with mp.workdps(80):
        value = mpf(-2) / 3 + mpf(10) ** -60
        assert rationalize(value, mpf(10) ** -50, 0) == Fraction(-2, 3)


@pytest.mark.parametrize("value, expected",
                         [(mpf(3) / 8, Fraction(3, 8)), (mpf(0), Fraction(0)),
                          (mpf(-2), Fraction(-2)),
                          (mpf(-5) / 16, Fraction(-5, 16))])
def test_rationalize_exact_binary(value, expected):
    with mp.workdps(80):
        assert rationalize(value, mpf(10) ** -50, 2) == expected


def test_rationalize_rough_denominator():
    with mp.workdps(80):
        value = mpf(1) / 7
        with pytest.raises(ReconstructionError) as excinfo:
            rationalize(value, mpf(10) ** -50, 0)
    assert excinfo.value.k == 0
    assert excinfo.value.value == value


def test_peel_synthetic():
    samples = _synthetic_samples(SYNTHETIC, range(200, 400, 2), 1e-40)
    peeler = ConstantPeeler(K=6, digits=60, max_terms=14).fit(samples)
    assert peeler.constants_ == SYNTHETIC
    with mp.workdps(80):
        assert all(abs(v - mpf(c.numerator) / c.denominator) <= e
                   for v, e, c in zip(peeler.values_, peeler.errors_,
                                      peeler.constants_))
        prediction = peeler.predict([500])[0]
        expected = sum(mpf(c.numerator) / c.denominator / mpf(500) ** k
                       for k, c in enumerate(SYNTHETIC))
        assert abs(prediction - expected) < mpf(10) ** -55


def test_peel_too_few_samples():
    samples = _synthetic_samples(SYNTHETIC[:2], range(200, 210, 2), 1e-40)
    with pytest.raises(ValueError, match="K \\+ 5"):
        peel_constants(samples, 3, digits=60)


def test_peel_not_fitted():
    with pytest.raises(NotFittedError):
        ConstantPeeler().predict([400])


def test_fit_constants_small_grid():
    cfg = FitConfig(u_min=200, u_max=258, count=30, digits=200, K=2,
                    holdout=0.1)
    report = fit_constants(cfg)
    assert report.constants == list(BUILTIN_CONSTANTS[:3])
    assert report.denominator_ratios == [Fraction(720), Fraction(56, 5)]
    assert len(report.holdout) == 3
    assert all(deviation <= bound for _, deviation, bound in report.holdout)
    assert report.rows()[1]['constant'] == "47/2160"


def test_peel_disjoint_grids_agree():
    low = _synthetic_samples(SYNTHETIC, range(200, 300, 2), 1e-55,
                             digits=100)
    high = _synthetic_samples(SYNTHETIC, range(300, 400, 2), 1e-55,
                              digits=100)
    assert peel_constants(low, 6, digits=80, max_terms=14) == \
        peel_constants(high, 6, digits=80, max_terms=14) == SYNTHETIC


@pytest.mark.slow
def test_fit_constants_disjoint_grids():
    low = fit_constants(FitConfig(u_min=200, u_max=258, count=30,
                                  digits=240, K=2, holdout=0.))
    high = fit_constants(FitConfig(u_min=260, u_max=318, count=30,
                                   digits=240, K=2, holdout=0.))
    assert low.constants == high.constants == list(BUILTIN_CONSTANTS[:3])


@pytest.mark.slow
def test_fit_constants_default_config(default_fit):
    cfg = FitConfig()
    report = default_fit
    assert report.config == cfg
    assert len(report.constants) == cfg.K + 1
    assert report.constants[:4] == list(BUILTIN_CONSTANTS)
    assert report.denominator_ratios[:3] == \
        [Fraction(720), Fraction(56, 5), Fraction(720, 7)]
    for k, constant in enumerate(report.constants):
        assert is_smooth(constant.denominator, smoothness_bound(k))
    with cfg.ctx.workdps():
        for value, error, constant in zip(report.values, report.errors,
                                          report.constants):
            assert abs(value - to_mpf(constant)) <= error
    assert len(report.holdout) == cfg.n_holdout == 10
    assert all(deviation <= bound for _, deviation, bound in report.holdout)

    table = assemble(cfg.K, report.constants)
    odd = cfg.odd_grid()
    assert odd[0] == cfg.u_min + 1 and odd[-1] == cfg.u_max - 1
    residual = odd_u_validation(table, odd, cfg.ctx, n_jobs=-1)
    assert residual < holdout_bound(odd[0], cfg.K)


def test_odd_grid():
    assert FitConfig().odd_grid() == [403, 453, 501, 549, 599]
    cfg = FitConfig(u_min=60, u_max=78, count=10, digits=120, K=2,
                    holdout=0.)
    assert cfg.odd_grid(20) == list(range(61, 78, 2))


def test_odd_u_validation():
    ctx = PrecisionContext(200)
    full = assemble(3, BUILTIN_CONSTANTS)
    leading = assemble(0, BUILTIN_CONSTANTS[:1])
    residual = odd_u_validation(full, [201, 203], ctx)
    assert residual < holdout_bound(201, 3)
    rough = odd_u_validation(leading, [201, 203], ctx)
    assert rough < mpf(1) / 201
    assert residual < rough
    with pytest.raises(ValueError, match="odd"):
        odd_u_validation(full, [200], ctx)
