"""Argument parsing and dispatch of the ``gpolylog`` command."""
# License: GNU AGPLv3

import argparse
import sys
import time
from fractions import Fraction

from .._version import __version__
from ..exceptions import DomainError, PrecisionError, ReconstructionError, \
    MissingConstantsError, CrossCheckError
from ..fitlab import FitConfig
from ..gfunc import METHODS
from ..utils._logging import configure_logging
from ._commands import COMMANDS, config_of
from ._output import FORMATS, RunManifest, digest

_FAILURES = (DomainError, PrecisionError, ReconstructionError,
             MissingConstantsError, CrossCheckError, ArithmeticError,
             ValueError, OSError)
_DEFAULTS = FitConfig()


def _common():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default='text',
                        help="Output format of the primary output "
                             "(default: text).")
    common.add_argument("--out", default=None,
                        help="Write the primary output to this file instead "
                             "of standard output.")
    common.add_argument("--threads", type=int, default=-1,
                        help="Number of worker processes, -1 for all cores "
                             "(default: -1).")
    common.add_argument("-v", "--verbose", action="count", default=0,
                        help="Log progress (-v) or details (-vv) to "
                             "standard error.")
    return common


def build_parser():
    """Parser of the ``gpolylog`` command line."""
    common = _common()
    parser = argparse.ArgumentParser(
        prog="gpolylog",
        description="High-precision evaluation of G(z) = sum sqrt(n) z^n and "
                    "the exact polynomials of its resurgent residual.")
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("eval", parents=[common],
                            help="Evaluate G at a complex point.")
    p.add_argument("-z", required=True,
                   help="Complex literal such as -1, 30i or, written as "
                        "-z=-0.5+0.2j, a value with a leading minus sign.")
    p.add_argument("--digits", type=int, default=30,
                   help="Decimal digits (default: 30).")
    p.add_argument("--method", choices=METHODS, default=None,
                   help="Force an evaluation method.")
    p.add_argument("--crosscheck", action="store_true",
                   help="Compare with an alternate method.")

    p = commands.add_parser("scan", parents=[common],
                            help="Tabulate S(u) against the prediction of "
                                 "the polynomials P_0..P_K.")
    p.add_argument("--u-min", type=Fraction, default=Fraction(10))
    p.add_argument("--u-max", type=Fraction, default=Fraction(20))
    p.add_argument("--count", type=int, default=21)
    p.add_argument("--digits", type=int, default=None,
                   help="Decimal digits, by default the least that keeps "
                        "--target-digits digits of S(u).")
    p.add_argument("--target-digits", type=int, default=10)
    p.add_argument("--K", type=int, default=3)
    p.add_argument("--constants", default=None,
                   help="File of constant terms P_k(0) written by `fit`.")

    p = commands.add_parser("deltas", parents=[common],
                            help="Tabulate g_k and the difference "
                                 "polynomials Delta_k.")
    p.add_argument("--K", type=int, default=6)
    p.add_argument("--route", choices=('stirling', 'series'),
                   default='stirling',
                   help="Generating-function route (default: stirling).")

    p = commands.add_parser("polys", parents=[common],
                            help="Write the polynomial table P_0..P_K.")
    p.add_argument("--K", type=int, default=3)
    p.add_argument("--constants", default=None,
                   help="File of constant terms P_k(0) written by `fit`.")

    p = commands.add_parser("fit", parents=[common],
                            help="Recover the constant terms P_k(0) from "
                                 "samples of S(u).")
    p.add_argument("--u-min", type=int, default=_DEFAULTS.u_min)
    p.add_argument("--u-max", type=int, default=_DEFAULTS.u_max)
    p.add_argument("--count", type=int, default=_DEFAULTS.count)
    p.add_argument("--digits", type=int, default=_DEFAULTS.digits)
    p.add_argument("--K", type=int, default=_DEFAULTS.K)
    p.add_argument("--holdout", type=float, default=_DEFAULTS.holdout)
    p.add_argument("--constants", default=None,
                   help="Also write the recovered constants to this file.")

    p = commands.add_parser("constants", parents=[common],
                            help="Estimate C and R from exact derivative "
                                 "data.")
    p.add_argument("--k-lo", type=int, default=None,
                   help="Lowest index, by default k_hi - 50.")
    p.add_argument("--k-hi", type=int, default=150)
    p.add_argument("--digits", type=int, default=60)

    p = commands.add_parser("verify-all", parents=[common],
                            help="Run the end-to-end checks.")
    p.add_argument("--quick", action="store_true",
                   help="Reduced grids and sample counts.")
    return parser


def main(argv=None):
    """Entry point of the ``gpolylog`` console script.

    Returns
    -------
    status : int
        ``0`` on success, ``1`` on domain, precision or reconstruction
        failures and failed checks, ``2`` on usage errors.

    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_:
        return exit_.code
    configure_logging(args.verbose)
    start = time.perf_counter()
    try:
        output, status = COMMANDS[args.command](args)
        if args.out is None:
            sys.stdout.write(output)
        else:
            with open(args.out, "w") as stream:
                stream.write(output)
    except _FAILURES as error:
        message = error.args[0] if error.args else str(error)
        print(f"gpolylog {args.command}: error: {message}", file=sys.stderr)
        return 1
    manifest = RunManifest(args.command, config_of(args), __version__,
                           time.perf_counter() - start, digest(output))
    print(manifest.to_json(), file=sys.stderr)
    return status
