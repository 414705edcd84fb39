"""
Fractional extension of a known solution by subordination.

Given the solution u(t) of du/dt = L u, u(0) = f, the solution of the
fractional integral equation u_alpha = f + I^alpha[L u_alpha] is

    u_alpha(t) = int_0^inf f_alpha(z) u(t^alpha z) dz                (default form)
               = t^-alpha int_0^inf f_alpha(t^-alpha w) u(w) dw       (form="theorem1")

with f_alpha the Mittag-Leffler form factor. The default form samples the form
factor on a node set that does not depend on t (z = v^4, v in [0, Z_max^(1/4)]),
so the weights are computed once per (alpha, quadrature) and reused across
time grids. alpha = 1 is the Dirac mass at z = 1 and returns u(t) unchanged.
"""

import logging
import math
from dataclasses import dataclass, field, replace
from functools import lru_cache
from typing import Callable, Iterable

import numpy as np

from ..errors import FracEvoError
from ..numerics.quadrature import (
    DEFAULT_QUADRATURE,
    QuadratureSpec,
    Scheme,
    gauss_legendre_nodes,
    integrate_interval,
)
from ..numerics.transforms import TimeFunction
from ..special.mittag_leffler import DEFAULT_SERIES, SeriesConfig, density_cutoff, ml_density_values

logger = logging.getLogger(__name__)

FORMS = ("lemma3", "theorem1")
_MASS_GATE = 1e-3
_NEAR_ONE = 0.95


@dataclass(frozen=True)
class SubordinationRequest:
    """A solution, an order alpha in (0, 1] and a time t >= 0."""

    solution: TimeFunction
    alpha: float
    t: float
    quad: QuadratureSpec = DEFAULT_QUADRATURE
    form: str = "lemma3"
    series: SeriesConfig = DEFAULT_SERIES

    def __post_init__(self) -> None:
        if not isinstance(self.solution, TimeFunction):
            object.__setattr__(self, "solution", TimeFunction(self.solution))
        _validate_alpha(self.alpha)
        if not (math.isfinite(self.t) and self.t >= 0):
            raise ValueError(f"t must be finite and >= 0; got {self.t}")
        if self.form not in FORMS:
            raise ValueError(f"form must be one of {FORMS}; got {self.form!r}")


@dataclass
class SubordinationResult:
    value: float
    density_mass_used: float
    warnings: list[str] = field(default_factory=list)


def _validate_alpha(alpha: float) -> None:
    if not (math.isfinite(alpha) and 0.0 < alpha <= 1.0):
        raise ValueError(f"alpha must satisfy 0 < alpha <= 1; got {alpha}")


def effective_quadrature(alpha: float, quad: QuadratureSpec) -> tuple[QuadratureSpec, list[str]]:
    """Quadrature actually used at this alpha: panel count doubled above 0.95."""
    if alpha <= _NEAR_ONE or alpha == 1.0:
        return quad, []
    doubled = replace(quad, panels=2 * quad.panels)
    note = (
        f"alpha={alpha:g} > {_NEAR_ONE}: form factor is sharply peaked near z=1; "
        f"panels doubled to {doubled.panels}"
    )
    return doubled, [note]


@lru_cache(maxsize=64)
def subordination_nodes(
    alpha: float,
    quad: QuadratureSpec = DEFAULT_QUADRATURE,
    cfg: SeriesConfig = DEFAULT_SERIES,
) -> tuple[np.ndarray, np.ndarray]:
    """
    Nodes z and weights for int_0^Z_max g(z) f_alpha(z) dz, 0 < alpha < 1.

    The weights already contain f_alpha(z) and the Jacobian of z = v^4, so the
    integral is weights @ g(z). Arrays are cached and read-only.
    """
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"subordination_nodes needs 0 < alpha < 1; got {alpha}")
    v, w = gauss_legendre_nodes(0.0, density_cutoff(alpha) ** 0.25, quad.panels, quad.nodes_per_panel)
    z = v**4
    weights = w * 4.0 * v**3 * ml_density_values(alpha, z, cfg)
    z.setflags(write=False)
    weights.setflags(write=False)
    logger.debug("subordination nodes for alpha=%g: %d nodes, mass %.12f", alpha, z.size, weights.sum())
    return z, weights


def _mass_warnings(mass: float) -> list[str]:
    if abs(mass - 1.0) <= _MASS_GATE:
        return []
    return [f"density mass used {mass:.6f} outside [{1 - _MASS_GATE:g}, {1 + _MASS_GATE:g}]"]


def _adaptive_lemma3(req: SubordinationRequest, quad: QuadratureSpec) -> tuple[float, float]:
    alpha, scale = req.alpha, req.t**req.alpha

    def weighted_density(v):
        v = np.asarray(v, dtype=float)
        return 4.0 * v**3 * ml_density_values(alpha, v**4, req.series)

    upper = density_cutoff(alpha) ** 0.25
    value = integrate_interval(lambda v: weighted_density(v) * req.solution(scale * np.asarray(v) ** 4), 0.0, upper, quad)
    mass = integrate_interval(weighted_density, 0.0, upper, quad)
    return value, mass


def _theorem1(req: SubordinationRequest, quad: QuadratureSpec) -> tuple[float, float]:
    alpha, scale = req.alpha, req.t**req.alpha

    def kernel(w):
        w = np.asarray(w, dtype=float)
        return ml_density_values(alpha, w / scale, req.series) / scale

    upper = scale * density_cutoff(alpha)
    value = integrate_interval(
        lambda w: kernel(w) * req.solution(w), 0.0, upper, quad, singular_order=0.25, endpoint="left"
    )
    mass = integrate_interval(kernel, 0.0, upper, quad, singular_order=0.25, endpoint="left")
    return value, mass


def subordinate(req: SubordinationRequest) -> SubordinationResult:
    """
    u_alpha(t) from u(t).

    Returns
    -------
    SubordinationResult
        value, the integral of f_alpha over the node set actually used, and
        warnings (mass outside 1 +/- 1e-3, alpha close to 1).

    Raises
    ------
    RangeExceededError
        If t^alpha * Z_max(alpha) exceeds solution.t_max.
    """
    if req.alpha == 1.0:
        req.solution.require(req.t)
        return SubordinationResult(req.solution(req.t), 1.0)
    if req.t == 0.0:
        return SubordinationResult(req.solution(0.0), 1.0)

    req.solution.require(req.t**req.alpha * density_cutoff(req.alpha))
    quad, notes = effective_quadrature(req.alpha, req.quad)
    if req.form == "theorem1":
        value, mass = _theorem1(req, quad)
    elif quad.scheme is Scheme.ADAPTIVE_SIMPSON:
        value, mass = _adaptive_lemma3(req, quad)
    else:
        z, weights = subordination_nodes(req.alpha, quad, req.series)
        value = float(weights @ req.solution(req.t**req.alpha * z))
        mass = float(weights.sum())

    notes += _mass_warnings(mass)
    for note in notes:
        logger.warning("subordinate %s: %s", req.solution.label or "solution", note)
    return SubordinationResult(value, mass, notes)


def subordinate_values(
    solution: TimeFunction,
    alpha: float,
    t,
    quad: QuadratureSpec = DEFAULT_QUADRATURE,
    cfg: SeriesConfig = DEFAULT_SERIES,
) -> np.ndarray:
    """
    Vectorized u_alpha over an array of times (default form).

    solution is evaluated once on a (len(t), nodes) array of rescaled times.
    """
    solution = solution if isinstance(solution, TimeFunction) else TimeFunction(solution)
    _validate_alpha(alpha)
    t = np.asarray(t, dtype=float)
    if not np.all(np.isfinite(t)) or np.any(t < 0):
        raise ValueError("t must be finite and >= 0")
    if alpha == 1.0:
        solution.require(float(np.max(t, initial=0.0)))
        return np.asarray(solution(t), dtype=float).reshape(t.shape)
    quad, _ = effective_quadrature(alpha, quad)
    solution.require(float(np.max(t, initial=0.0)) ** alpha * density_cutoff(alpha))
    z, weights = subordination_nodes(alpha, quad, cfg)
    scaled = (t.reshape(-1, 1) ** alpha) * z[None, :]
    values = (solution(scaled) @ weights).reshape(t.shape)
    return np.where(t == 0.0, float(solution(0.0)), values)


def subordinate_grid(
    solution: TimeFunction,
    alpha: float,
    t_grid: Iterable[float],
    quad: QuadratureSpec = DEFAULT_QUADRATURE,
) -> list[SubordinationResult]:
    """
    subordinate at every t of t_grid, in order.

    A failing element yields value NaN with the error message in its warnings;
    the remaining elements are still computed.
    """
    t_grid = list(t_grid)
    if not t_grid:
        raise ValueError("t_grid must not be empty")
    results = []
    for t in t_grid:
        try:
            results.append(subordinate(SubordinationRequest(solution, alpha, float(t), quad)))
        except (FracEvoError, ValueError) as exc:
            logger.warning("subordinate at t=%s failed: %s", t, exc)
            results.append(SubordinationResult(math.nan, math.nan, [f"{type(exc).__name__}: {exc}"]))
    logger.info("subordinated %d time points at alpha=%g", len(results), alpha)
    return results


def subordinate_kernel(
    kernel: Callable,
    alpha: float,
    t: float,
    quad: QuadratureSpec = DEFAULT_QUADRATURE,
) -> Callable:
    """
    Fractional Green's function y -> G_alpha(y; t) from G(y; t) = kernel(y, t).

    Each evaluation subordinates the time slice z -> kernel(y, z).
    """
    _validate_alpha(alpha)

    def evaluate_at(y: float) -> float:
        if alpha == 1.0:
            return float(kernel(y, t))
        slice_ = TimeFunction(lambda z: kernel(y, z), label=f"kernel(y={y:g})")
        return subordinate(SubordinationRequest(slice_, alpha, t, quad)).value

    return evaluate_at
