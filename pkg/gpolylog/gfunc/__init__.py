"""The module :mod:`gpolylog.gfunc` evaluates :math:`G(z) = \\sum_{n > 0}
\\sqrt{n} z^n` and its analytic continuation to the plane cut along
:math:`[1, \\infty)` by several independent methods."""

from .point import EvalResult, ZPoint, METHODS
from .methods import g_series, g_zeta_expansion, g_bilateral, g_inversion, \
    g_negative_axis
from .dispatch import g_auto, evaluate, select_method, applicable_methods, \
    cross_check

__all__ = [
    "EvalResult",
    "ZPoint",
    "METHODS",
    "g_series",
    "g_zeta_expansion",
    "g_bilateral",
    "g_inversion",
    "g_negative_axis",
    "g_auto",
    "evaluate",
    "select_method",
    "applicable_methods",
    "cross_check"
    ]
