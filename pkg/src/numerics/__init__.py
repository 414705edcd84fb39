"""Half-line quadrature and numerical Laplace / Mellin / Riemann-Liouville transforms."""

from .quadrature import (
    DEFAULT_QUADRATURE,
    QuadratureSpec,
    Scheme,
    gauss_legendre_nodes,
    integrate_halfline,
    integrate_interval,
)
from .transforms import (
    TimeFunction,
    check_lemma1,
    check_lemma2,
    default_s_grid,
    laplace,
    mellin,
    mellin_factor,
    mellin_from_laplace,
    riemann_liouville,
)

__all__ = [
    "DEFAULT_QUADRATURE",
    "QuadratureSpec",
    "Scheme",
    "gauss_legendre_nodes",
    "integrate_halfline",
    "integrate_interval",
    "TimeFunction",
    "check_lemma1",
    "check_lemma2",
    "default_s_grid",
    "laplace",
    "mellin",
    "mellin_factor",
    "mellin_from_laplace",
    "riemann_liouville",
]
