"""
Heat kernel in n dimensions and its fractional counterpart.

Kernels are radial: G(x, y; t) = G(r, t) with r = |x - y|.

    G(r, t)       = (4 pi t)^(-n/2) exp(-r^2 / (4 t))
    G_alpha(r, t) = t^-alpha int_0^inf f_alpha(t^-alpha z) G(r, z) dz

The fractional kernel is checked through its Mellin transform in t, which is
known in closed form, instead of through a Fox H-function evaluator.
"""

import logging
import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np
import pandas as pd
from scipy.special import gamma, rgamma

from ..errors import SingularOriginError, StripViolationError
from ..numerics.quadrature import DEFAULT_QUADRATURE, QuadratureSpec, integrate_interval
from ..numerics.transforms import TimeFunction
from ..special.mittag_leffler import density_cutoff, ml_density
from .subordination import (
    SubordinationRequest,
    SubordinationResult,
    effective_quadrature,
    subordinate,
    subordination_nodes,
)

logger = logging.getLogger(__name__)

_MAX_DIMENSION = 10
# exp(-r^2 / 4t) < e^-45 beyond r = sqrt(180 t)
_GAUSS_TAIL = 180.0


@dataclass(frozen=True)
class KernelQuery:
    """Radial distance r >= 0, time t > 0, dimension 1 <= n <= 10, order alpha in (0, 1]."""

    r: float
    t: float
    n: int = 1
    alpha: float = 1.0

    def __post_init__(self) -> None:
        if not (math.isfinite(self.r) and self.r >= 0):
            raise ValueError(f"r must be finite and >= 0; got {self.r}")
        if not (math.isfinite(self.t) and self.t > 0):
            raise ValueError(f"t must be positive and finite; got {self.t}")
        _validate_dimension(self.n)
        if not (math.isfinite(self.alpha) and 0.0 < self.alpha <= 1.0):
            raise ValueError(f"alpha must satisfy 0 < alpha <= 1; got {self.alpha}")


def _validate_dimension(n: int) -> None:
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or not 1 <= n <= _MAX_DIMENSION:
        raise ValueError(f"n must be an integer between 1 and {_MAX_DIMENSION}; got {n!r}")


def heat_kernel_values(r, t, n: int = 1) -> np.ndarray:
    """Vectorized G(r, t); broadcasts r against t. G(r, 0) is 0 for r > 0 and inf at r = 0."""
    r = np.asarray(r, dtype=float)
    t = np.asarray(t, dtype=float)
    with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
        value = (4.0 * math.pi * t) ** (-0.5 * n) * np.exp(-(r**2) / (4.0 * t))
    return np.where(t > 0, value, np.where(r > 0, 0.0, np.inf))


def heat_kernel(q: KernelQuery) -> float:
    """Classical heat kernel at (q.r, q.t) in q.n dimensions; q.alpha is ignored."""
    return (4.0 * math.pi * q.t) ** (-0.5 * q.n) * math.exp(-(q.r**2) / (4.0 * q.t))


def _check_origin(r, n: int, alpha: float) -> None:
    if alpha < 1.0 and n >= 2 and np.any(np.asarray(r) == 0.0):
        raise SingularOriginError(
            f"G_alpha(0, t) diverges for n={n} >= 2 and alpha={alpha} < 1 "
            "(subordination integrand ~ z^(-n/2) at z = 0)"
        )


def frac_heat_kernel(q: KernelQuery, quad: QuadratureSpec = DEFAULT_QUADRATURE) -> SubordinationResult:
    """
    Fractional heat kernel G_alpha(q.r, q.t) by subordination of the time slice z -> G(r, z).

    alpha = 1 returns heat_kernel(q) unchanged.
    """
    if q.alpha == 1.0:
        return SubordinationResult(heat_kernel(q), 1.0)
    _check_origin(q.r, q.n, q.alpha)
    time_slice = TimeFunction(lambda z: heat_kernel_values(q.r, z, q.n), label=f"heat kernel r={q.r:g} n={q.n}")
    return subordinate(SubordinationRequest(time_slice, q.alpha, q.t, quad))


def frac_heat_kernel_values(
    r,
    t,
    n: int = 1,
    alpha: float = 1.0,
    quad: QuadratureSpec = DEFAULT_QUADRATURE,
) -> np.ndarray:
    """Vectorized G_alpha(r, t); broadcasts r against t (t > 0)."""
    _validate_dimension(n)
    r, t = np.broadcast_arrays(np.asarray(r, dtype=float), np.asarray(t, dtype=float))
    if np.any(r < 0) or np.any(t <= 0):
        raise ValueError("r must be >= 0 and t must be > 0")
    if alpha == 1.0:
        return heat_kernel_values(r, t, n)
    _check_origin(r, n, alpha)
    quad, _ = effective_quadrature(alpha, quad)
    z, weights = subordination_nodes(alpha, quad)
    times = (t.reshape(-1, 1) ** alpha) * z[None, :]
    return (heat_kernel_values(r.reshape(-1, 1), times, n) @ weights).reshape(r.shape)


def frac_heat_kernel_1d_closed(r: float, t: float, alpha: float) -> float:
    """One-dimensional G_alpha(r, t) = t^(-alpha/2) / 2 * f_(alpha/2)(r t^(-alpha/2))."""
    q = KernelQuery(r, t, 1, alpha)
    if alpha == 1.0:
        return heat_kernel(q)
    scale = t ** (-0.5 * alpha)
    return 0.5 * scale * ml_density(0.5 * alpha, r * scale).value


def frac_kernel_mellin_closed(r: float, s: float, n: int, alpha: float) -> float:
    """
    Mellin transform in t of G_alpha(r, t):

        (1/alpha) pi^(-n/2) 2^(-2s/alpha) r^(2s/alpha - n) Gamma(n/2 - s/alpha) Gamma(1 - s/alpha) / Gamma(1 - s)

    valid for 0 < s < alpha * min(n/2, 1).
    """
    _validate_dimension(n)
    if not (math.isfinite(r) and r > 0):
        raise ValueError(f"r must be positive and finite; got {r}")
    if not (math.isfinite(alpha) and 0.0 < alpha <= 1.0):
        raise ValueError(f"alpha must satisfy 0 < alpha <= 1; got {alpha}")
    upper = alpha * min(0.5 * n, 1.0)
    if not 0.0 < s < upper:
        raise StripViolationError(f"s={s} outside the strip 0 < s < {upper:g} (alpha={alpha}, n={n})")
    ratio = s / alpha
    return (
        math.pi ** (-0.5 * n)
        * 2.0 ** (-2.0 * ratio)
        * r ** (2.0 * ratio - n)
        * float(gamma(0.5 * n - ratio) * gamma(1.0 - ratio) * rgamma(1.0 - s))
        / alpha
    )


def mass_check(t: float, n: int = 1, alpha: float = 1.0, quad: QuadratureSpec = DEFAULT_QUADRATURE) -> float:
    """
    Total mass int_R G_alpha(|x|, t) dx of the one-dimensional kernel.

    The r-range is cut where the kernel falls below e^-45 of its scale:
    sqrt(180 t) for alpha = 1, t^(alpha/2) Z_max(alpha/2) otherwise.
    """
    if n != 1:
        raise ValueError(f"mass_check supports n = 1 only; got n={n}")
    KernelQuery(0.0, t, n, alpha)
    if alpha == 1.0:
        reach = math.sqrt(_GAUSS_TAIL * t)
    else:
        reach = t ** (0.5 * alpha) * density_cutoff(0.5 * alpha)
    mass = 2.0 * integrate_interval(lambda r: frac_heat_kernel_values(r, t, 1, alpha, quad), 0.0, reach, quad)
    logger.info("kernel mass at t=%g, alpha=%g: %.12f", t, alpha, mass)
    return mass


def tabulate_frac_kernel(
    r_grid: Iterable[float],
    t_grid: Iterable[float],
    n: int = 1,
    alpha: float = 1.0,
    quad: QuadratureSpec = DEFAULT_QUADRATURE,
) -> pd.DataFrame:
    """
    G_alpha over an (r, t) grid, t outer and r inner.

    Returns
    -------
    pd.DataFrame
        Columns: r, t, n, alpha, value, mass_used.
    """
    rows = []
    for t in t_grid:
        for r in r_grid:
            result = frac_heat_kernel(KernelQuery(float(r), float(t), n, alpha), quad)
            rows.append(
                {"r": float(r), "t": float(t), "n": n, "alpha": alpha,
                 "value": result.value, "mass_used": result.density_mass_used}
            )
    logger.info("tabulated fractional heat kernel: %d rows (n=%d, alpha=%g)", len(rows), n, alpha)
    return pd.DataFrame(rows, columns=["r", "t", "n", "alpha", "value", "mass_used"])
