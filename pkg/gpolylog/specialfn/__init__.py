"""The module :mod:`gpolylog.specialfn` implements the zeta-family special
functions: Riemann zeta at half-integers and their reflections, Dirichlet
eta at even integers and the Hurwitz zeta function of complex shift."""

from .hurwitz import HurwitzParams, hurwitz_params, hurwitz_zeta, \
    hurwitz_zeta_with_bound
from .zeta import zeta_half, zeta_neg_half, reflection_sign, eta_even, \
    eta_even_rational, zeta_even_rational

__all__ = [
    "HurwitzParams",
    "hurwitz_params",
    "hurwitz_zeta",
    "hurwitz_zeta_with_bound",
    "zeta_half",
    "zeta_neg_half",
    "reflection_sign",
    "eta_even",
    "eta_even_rational",
    "zeta_even_rational"
    ]
