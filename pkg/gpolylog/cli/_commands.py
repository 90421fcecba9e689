"""Implementations of the ``gpolylog`` subcommands.

Every command takes the parsed arguments and returns the primary output as
a string together with the exit status. Diagnostics go to the logger or to
standard error, never into the primary output.
"""
# License: GNU AGPLv3

import logging
import sys
from math import floor

from joblib import Parallel, delayed
from mpmath import mpmathify
from sympy import factorint

from ..exceptions import MissingConstantsError, PrecisionError
from ..fitlab import FitConfig, extract_CR, fit_constants
from ..gfunc import g_auto
from ..mpcore import PrecisionContext, DEFAULT_GUARD
from ..polyengine import BUILTIN_CONSTANTS, assemble, delta_table, \
    g_sequence, read_constants, smoothness_bound, write_constants
from ..resurgent import required_digits, s_of_u, s_predicted
from ._checks import run_checks
from ._output import render

logger = logging.getLogger(__name__)


def parse_complex(text, ctx):
    """Parse a complex literal such as ``-1``, ``0.5+0.2j`` or ``3i`` at the
    working precision of `ctx`."""
    text = text.strip().replace(" ", "").replace("i", "j")
    try:
        with ctx.workdps():
            return mpmathify(text)
    except (ValueError, TypeError, AttributeError):
        raise ValueError(f"Parameter `z` is {text!r}, which is not a "
                         f"complex literal.")


def constants_for(K, path=None):
    """Constant terms :math:`P_0(0), \\ldots, P_K(0)` from `path`, or from
    the built-in values when `path` is ``None``."""
    if path is not None:
        return read_constants(path, K)
    if K < len(BUILTIN_CONSTANTS):
        return list(BUILTIN_CONSTANTS[:K + 1])
    raise MissingConstantsError(
        f"P_k(0) is built in for k < {len(BUILTIN_CONSTANTS)} only, K = {K} "
        f"was requested. Run `gpolylog fit --K {K} --constants FILE` and "
        f"pass `--constants FILE`.")


def cmd_eval(args):
    ctx = PrecisionContext(args.digits)
    z = parse_complex(args.z, ctx)
    result = g_auto(z, ctx, crosscheck=args.crosscheck, method=args.method)
    with ctx.workdps():
        row = {'z': ctx.nstr(z), 'real': ctx.nstr(result.value.real),
               'imag': ctx.nstr(result.value.imag),
               'err': ctx.nstr(result.err, 5), 'method': result.method,
               'digits': ctx.digits}
    return render([row], args.format), 0


def scan_grid(u_min, u_max, count):
    """`count` equally spaced exact abscissae from `u_min` to `u_max`."""
    if count < 1:
        raise ValueError(f"Parameter `count` is {count}, which is not "
                         f"positive.")
    if count == 1:
        return [u_min]
    if not 0 < u_min <= u_max:
        raise ValueError(f"The grid [{u_min}, {u_max}] must satisfy "
                         f"0 < u_min <= u_max.")
    step = (u_max - u_min) / (count - 1)
    return [u_min + i * step for i in range(count)]


def cmd_scan(args):
    grid = scan_grid(args.u_min, args.u_max, args.count)
    needed = required_digits(grid[-1], args.target_digits, DEFAULT_GUARD)
    digits = needed if args.digits is None else args.digits
    if digits < needed:
        raise PrecisionError(
            f"A scan up to u = {grid[-1]} needs at least {needed} digits, "
            f"got {digits}.")
    if args.K > floor(grid[0]):
        raise ValueError(f"Parameter `K` is {args.K}, the expansion in 1/u "
                         f"is truncated at k = floor(u_min) = "
                         f"{floor(grid[0])}.")
    polys = assemble(args.K, constants_for(args.K, args.constants)).polys
    ctx = PrecisionContext(digits)
    logger.info("Scanning S(u) at %d points with %d digits", len(grid),
                digits)
    samples = Parallel(n_jobs=args.threads)(
        delayed(s_of_u)(u, ctx, args.target_digits) for u in grid)
    rows = []
    with ctx.workdps():
        for sample in samples:
            predicted = s_predicted(sample.u, polys, ctx)
            shown = max(sample.digits_effective, 1)
            rows.append({'u': str(sample.u), 'x': str(sample.x),
                         'S(u)': ctx.nstr(sample.s, shown),
                         'predicted': ctx.nstr(predicted, shown),
                         'residual': ctx.nstr(sample.s - predicted, 5)})
    return render(rows, args.format), 0


def cmd_deltas(args):
    deltas = delta_table(args.K, method=args.route)
    rows = [{'k': k, 'g_k': str(g), 'delta': str(delta)}
            for k, (g, delta) in enumerate(zip(g_sequence(args.K), deltas))]
    return render(rows, args.format), 0


def _largest_prime(denominator):
    return max(factorint(denominator), default=1)


def cmd_polys(args):
    table = assemble(args.K, constants_for(args.K, args.constants))
    for k, poly in enumerate(table.polys):
        prime = max(_largest_prime(d) for d in poly.denominators())
        print(f"P_{k}: degree {poly.degree}, largest denominator prime "
              f"{prime} <= {smoothness_bound(k)}", file=sys.stderr)
    if args.format == 'text':
        return table.to_text(), 0
    rows = [{'k': k, 'polynomial': str(poly)}
            for k, poly in enumerate(table.polys)]
    return render(rows, args.format), 0


def cmd_fit(args):
    cfg = FitConfig(u_min=args.u_min, u_max=args.u_max, count=args.count,
                    digits=args.digits, K=args.K, holdout=args.holdout)
    report = fit_constants(cfg, n_jobs=args.threads)
    worst = max((deviation / bound for _, deviation, bound
                 in report.holdout), default=None)
    if worst is not None:
        print(f"holdout: {len(report.holdout)} samples, largest "
              f"deviation/bound {cfg.ctx.nstr(worst, 3)}", file=sys.stderr)
    if args.constants is not None:
        write_constants(report.constants, args.constants)
        logger.info("Constants written to %s", args.constants)
    return render(report.rows(), args.format), 0


def cmd_constants(args):
    k_lo = max(1, args.k_hi - 50) if args.k_lo is None else args.k_lo
    ctx = PrecisionContext(args.digits)
    estimate = extract_CR(k_lo, args.k_hi, ctx)
    return render(estimate.rows(ctx), args.format), 0


def cmd_verify_all(args):
    rows = run_checks(quick=args.quick, n_jobs=args.threads)
    failed = [row['check'] for row in rows if row['status'] != 'pass']
    if failed:
        logger.error("Failed checks: %s", ", ".join(failed))
    return render(rows, args.format), 1 if failed else 0


COMMANDS = {
    'eval': cmd_eval,
    'scan': cmd_scan,
    'deltas': cmd_deltas,
    'polys': cmd_polys,
    'fit': cmd_fit,
    'constants': cmd_constants,
    'verify-all': cmd_verify_all
    }


def config_of(args):
    """Options of `args` that can change the primary output."""
    skip = {'verbose', 'threads', 'out'}
    return {key: value for key, value in sorted(vars(args).items())
            if key not in skip}

