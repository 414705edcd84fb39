"""
Numerical Laplace and Mellin transforms and the Riemann-Liouville fractional
integral of functions of time, plus the two transform identities that relate a
solution u(t) to its fractional extension u_alpha(t):

- Laplace:  u_alpha~(p) = p^(alpha-1) * u~(p^alpha)
- Mellin:   u_alpha^(s) = (1/alpha) * Gamma(1 - s/alpha) / Gamma(1 - s) * u^(s/alpha)

Laplace integrals are truncated at t = tail_cutoff / p; [0, 1] is integrated
with t = w^4 and [1, tail_cutoff / p] in ln t. Mellin integrals use
t = v^(4/s) on [0, 1] and blocks in ln t on [1, inf) until two consecutive
blocks fall below abs_tol.
"""

import logging
import math
from dataclasses import dataclass, replace
from typing import Callable, Iterable, Optional

import numpy as np
from scipy.special import gamma, rgamma

from ..errors import DivergentStripError, RangeExceededError
from .quadrature import DEFAULT_QUADRATURE, QuadratureSpec, Scheme, evaluate, integrate_interval

logger = logging.getLogger(__name__)

_MELLIN_BLOCK = 8.0
_MELLIN_BLOCK_PANELS = 4
_MAX_LOG_T = 700.0
_DIVERGENCE_GUARD = 1e15


@dataclass(frozen=True)
class TimeFunction:
    """
    A real function of time t > 0, finite on (0, t_max].

    eval may be vectorized (array in, array out) or scalar-only; calls go
    through quadrature.evaluate either way.
    """

    eval: Callable
    label: str = ""
    t_max: float = math.inf

    def __post_init__(self) -> None:
        if not callable(self.eval):
            raise ValueError(f"eval must be callable; got {type(self.eval).__name__}")
        if not self.t_max > 0:
            raise ValueError(f"t_max must be positive; got {self.t_max}")

    def __call__(self, t):
        values = evaluate(self.eval, t)
        return float(values) if np.ndim(values) == 0 else values

    def require(self, t_needed: float) -> None:
        """Raise RangeExceededError if t_needed lies beyond t_max."""
        if t_needed > self.t_max:
            raise RangeExceededError(
                f"{self.label or 'function'} is defined up to t_max={self.t_max:g}; "
                f"the integral needs t up to {t_needed:g}"
            )


def _as_time_function(f) -> TimeFunction:
    return f if isinstance(f, TimeFunction) else TimeFunction(f)


def laplace(f: TimeFunction, p: float, spec: QuadratureSpec = DEFAULT_QUADRATURE) -> float:
    """
    Laplace transform int_0^inf exp(-p t) f(t) dt, truncated at t = spec.tail_cutoff / p.

    Parameters
    ----------
    f : TimeFunction
        Function of time (plain callables are wrapped).
    p : float
        Transform variable, p > 0.
    spec : QuadratureSpec
        Resolution of each piece.

    Returns
    -------
    float
        The truncated transform.
    """
    f = _as_time_function(f)
    p = float(p)
    if not (math.isfinite(p) and p > 0):
        raise ValueError(f"p must be positive and finite; got {p}")
    upper = spec.tail_cutoff / p
    f.require(upper)

    head_end = min(1.0, upper)
    value = integrate_interval(
        lambda t: np.exp(-p * t) * f(t), 0.0, head_end, spec, singular_order=0.25, endpoint="left"
    )
    if upper > 1.0:

        def tail(y):
            t = np.exp(y)
            return np.exp(y - p * t) * f(t)

        value += integrate_interval(tail, 0.0, math.log(upper), spec)
    return value


def mellin(f: TimeFunction, s: float, spec: QuadratureSpec = DEFAULT_QUADRATURE) -> float:
    """
    Mellin transform int_0^inf t^(s-1) f(t) dt for 0 < s < 1.

    Raises DivergentStripError for s outside (0, 1), or when the ln t blocks
    keep contributing past t = e^700 or the partial sum exceeds 1e15.
    """
    f = _as_time_function(f)
    s = float(s)
    if not 0.0 < s < 1.0:
        raise DivergentStripError(f"mellin supports 0 < s < 1; got s={s}")

    exponent = 4.0 / s

    def head(v):
        v = np.asarray(v, dtype=float)
        return exponent * v**3 * f(v**exponent)

    value = integrate_interval(head, 0.0, 1.0, spec)

    def tail(y):
        return np.exp(s * y) * f(np.exp(y))

    block_spec = spec
    if spec.scheme is Scheme.GAUSS_LEGENDRE_PANELS:
        block_spec = replace(spec, panels=_MELLIN_BLOCK_PANELS)
    lo, quiet_blocks, blocks = 0.0, 0, 0
    while quiet_blocks < 2:
        hi = lo + _MELLIN_BLOCK
        if hi > _MAX_LOG_T:
            raise DivergentStripError(
                f"mellin at s={s}: integrand of {f.label or 'function'} still contributes at ln t={lo:g}"
            )
        f.require(math.exp(hi))
        block = integrate_interval(tail, lo, hi, block_spec)
        value += block
        blocks += 1
        if not math.isfinite(value) or abs(value) > _DIVERGENCE_GUARD:
            raise DivergentStripError(f"mellin at s={s}: partial sum {value:.3e} exceeds {_DIVERGENCE_GUARD:g}")
        quiet_blocks = quiet_blocks + 1 if abs(block) < spec.abs_tol else 0
        lo = hi
    logger.debug("mellin at s=%g used %d tail blocks up to ln t=%g", s, blocks, lo)
    return value


def riemann_liouville(
    f: TimeFunction,
    alpha: float,
    t: float,
    spec: QuadratureSpec = DEFAULT_QUADRATURE,
) -> float:
    """
    Fractional integral I^alpha f(t) = 1/Gamma(alpha) int_0^t (t - x)^(alpha-1) f(x) dx.

    With w = (t - x)^alpha this is 1/Gamma(alpha + 1) int_0^(t^alpha) f(t - w^(1/alpha)) dw,
    which has no endpoint singularity.
    """
    f = _as_time_function(f)
    alpha, t = float(alpha), float(t)
    if not 0.0 < alpha <= 1.0:
        raise ValueError(f"alpha must satisfy 0 < alpha <= 1; got {alpha}")
    if not (math.isfinite(t) and t > 0):
        raise ValueError(f"t must be positive and finite; got {t}")
    f.require(t)
    power = 1.0 / alpha

    def integrand(w):
        w = np.asarray(w, dtype=float)
        return f(np.maximum(t - w**power, 0.0))

    return float(rgamma(alpha + 1.0)) * integrate_interval(integrand, 0.0, t**alpha, spec)


def mellin_from_laplace(f: TimeFunction, s: float, spec: QuadratureSpec = DEFAULT_QUADRATURE) -> float:
    """Mellin transform at s through the Laplace transform: 1/Gamma(1-s) int_0^inf p^(-s) f~(p) dp."""
    f = _as_time_function(f)
    s = float(s)
    if not 0.0 < s < 1.0:
        raise DivergentStripError(f"mellin_from_laplace supports 0 < s < 1; got s={s}")
    transformed = TimeFunction(np.vectorize(lambda p: laplace(f, p, spec)), label=f"laplace[{f.label}]")
    return mellin(transformed, 1.0 - s, spec) * float(rgamma(1.0 - s))


def _validate_alpha(alpha: float) -> None:
    if not (math.isfinite(alpha) and 0.0 < alpha <= 1.0):
        raise ValueError(f"alpha must satisfy 0 < alpha <= 1; got {alpha}")


def check_lemma1(
    u: TimeFunction,
    u_alpha: TimeFunction,
    alpha: float,
    p_grid: Iterable[float],
    spec: QuadratureSpec = DEFAULT_QUADRATURE,
) -> float:
    """
    Max over p_grid of |L[u_alpha](p) - p^(alpha-1) L[u](p^alpha)|.

    A pair (u, u_alpha) related by subordination gives deviations at the
    level of the quadrature error.
    """
    _validate_alpha(alpha)
    p_grid = [float(p) for p in p_grid]
    if not p_grid or any(not p > 0 for p in p_grid):
        raise ValueError(f"p_grid must be a non-empty list of positive values; got {p_grid}")
    deviations = [
        abs(laplace(u_alpha, p, spec) - p ** (alpha - 1.0) * laplace(u, p**alpha, spec)) for p in p_grid
    ]
    logger.info("Laplace identity at alpha=%g over %d points: max deviation %.3e", alpha, len(p_grid), max(deviations))
    return max(deviations)


def default_s_grid(alpha: float) -> list[float]:
    """{alpha/4, alpha/2, 3 alpha/4}, kept inside (0, 1)."""
    _validate_alpha(alpha)
    return [s for s in (0.25 * alpha, 0.5 * alpha, 0.75 * alpha) if 0.0 < s < 1.0]


def mellin_factor(alpha: float, s: float) -> float:
    """(1/alpha) Gamma(1 - s/alpha) / Gamma(1 - s); requires 0 < s < 1 and s/alpha < 1."""
    if not (0.0 < s < 1.0 and s / alpha < 1.0):
        raise DivergentStripError(f"need 0 < s < 1 and s/alpha < 1; got s={s}, alpha={alpha}")
    return float(gamma(1.0 - s / alpha) * rgamma(1.0 - s)) / alpha


def check_lemma2(
    u: TimeFunction,
    u_alpha: TimeFunction,
    alpha: float,
    s_grid: Optional[Iterable[float]] = None,
    spec: QuadratureSpec = DEFAULT_QUADRATURE,
) -> float:
    """Max over s_grid of |M[u_alpha](s) - mellin_factor(alpha, s) * M[u](s/alpha)|."""
    _validate_alpha(alpha)
    s_grid = default_s_grid(alpha) if s_grid is None else [float(s) for s in s_grid]
    if not s_grid:
        raise ValueError("s_grid must not be empty")
    factors = [mellin_factor(alpha, s) for s in s_grid]
    deviations = [
        abs(mellin(u_alpha, s, spec) - factor * mellin(u, s / alpha, spec)) for s, factor in zip(s_grid, factors)
    ]
    logger.info("Mellin identity at alpha=%g over %d points: max deviation %.3e", alpha, len(s_grid), max(deviations))
    return max(deviations)
