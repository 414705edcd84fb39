"""
Quadrature over the half-line [0, tail_cutoff] and over finite intervals.

Schemes:
- gauss_legendre_panels: composite Gauss-Legendre on equal panels. The integrand
  receives the whole node array at once, so vectorized callables are evaluated in
  one call; the summation order is fixed, results are reproducible.
- adaptive_simpson: recursive Simpson with Richardson correction on scalar calls;
  raises ToleranceNotMetError once panels * nodes_per_panel evaluations are spent.

Integrable endpoint singularities of the form (b - x)**(order - 1) are removed by
x = b - w**(1/order) (or x = a + w**(1/order) at the left end). Pass the full
integrand together with singular_order to integrate_interval; the Jacobian
w**(1/order - 1) / order is applied here.
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Callable, Optional

import numpy as np

from ..errors import ToleranceNotMetError

logger = logging.getLogger(__name__)

_MAX_NODES = 10**6
_ENDPOINTS = ("left", "right")


class Scheme(str, Enum):
    ADAPTIVE_SIMPSON = "adaptive_simpson"
    GAUSS_LEGENDRE_PANELS = "gauss_legendre_panels"


@dataclass(frozen=True)
class QuadratureSpec:
    """
    Settings for one integral.

    Parameters
    ----------
    scheme : Scheme or str
        "gauss_legendre_panels" (default) or "adaptive_simpson".
    panels : int
        Number of equal panels (Gauss) or initial budget factor (Simpson).
    nodes_per_panel : int
        Gauss nodes per panel; for Simpson, panels * nodes_per_panel is the
        function-evaluation budget.
    tail_cutoff : float
        Upper limit used by integrate_halfline.
    abs_tol : float
        Absolute tolerance of the adaptive scheme.
    """

    scheme: Scheme = Scheme.GAUSS_LEGENDRE_PANELS
    panels: int = 64
    nodes_per_panel: int = 16
    tail_cutoff: float = 40.0
    abs_tol: float = 1e-10

    def __post_init__(self) -> None:
        try:
            object.__setattr__(self, "scheme", Scheme(self.scheme))
        except ValueError:
            valid = [s.value for s in Scheme]
            raise ValueError(f"scheme must be one of {valid}; got {self.scheme!r}") from None
        if not isinstance(self.panels, int) or self.panels < 1:
            raise ValueError(f"panels must be a positive integer; got {self.panels!r}")
        if not isinstance(self.nodes_per_panel, int) or self.nodes_per_panel < 1:
            raise ValueError(f"nodes_per_panel must be a positive integer; got {self.nodes_per_panel!r}")
        if self.panels * self.nodes_per_panel > _MAX_NODES:
            raise ValueError(
                f"panels * nodes_per_panel must not exceed {_MAX_NODES}; "
                f"got {self.panels} * {self.nodes_per_panel}"
            )
        if not (self.tail_cutoff > 0 and math.isfinite(self.tail_cutoff)):
            raise ValueError(f"tail_cutoff must be a positive finite number; got {self.tail_cutoff!r}")
        if not (self.abs_tol > 0):
            raise ValueError(f"abs_tol must be positive; got {self.abs_tol!r}")


DEFAULT_QUADRATURE = QuadratureSpec()


@lru_cache(maxsize=32)
def _reference_rule(n: int) -> tuple[np.ndarray, np.ndarray]:
    x, w = np.polynomial.legendre.leggauss(n)
    x.setflags(write=False)
    w.setflags(write=False)
    return x, w


@lru_cache(maxsize=256)
def gauss_legendre_nodes(a: float, b: float, panels: int, nodes_per_panel: int) -> tuple[np.ndarray, np.ndarray]:
    """
    Composite Gauss-Legendre nodes and weights on [a, b].

    Returns read-only arrays (cached); nodes are ordered left to right.
    """
    ref_x, ref_w = _reference_rule(nodes_per_panel)
    edges = np.linspace(a, b, panels + 1)
    half = 0.5 * np.diff(edges)
    mid = 0.5 * (edges[:-1] + edges[1:])
    x = (mid[:, None] + half[:, None] * ref_x[None, :]).ravel()
    w = (half[:, None] * ref_w[None, :]).ravel()
    x.setflags(write=False)
    w.setflags(write=False)
    return x, w


def evaluate(f: Callable, x) -> np.ndarray:
    """
    Evaluate f on an array of points.

    Vectorized callables are called once; callables that only accept scalars
    (or return a scalar for an array) are evaluated point by point.
    """
    x = np.asarray(x, dtype=float)
    try:
        y = np.asarray(f(x), dtype=float)
    except (TypeError, ValueError):
        y = None
    if y is None or (y.shape != x.shape and x.size != 1):
        y = np.array([float(f(xi)) for xi in x.ravel()]).reshape(x.shape)
    return np.broadcast_to(y, x.shape)


def _gauss(f: Callable, a: float, b: float, spec: QuadratureSpec) -> float:
    x, w = gauss_legendre_nodes(float(a), float(b), spec.panels, spec.nodes_per_panel)
    return float(np.sum(w * evaluate(f, x)))


def _scalar(f: Callable, x: float, inward: float) -> float:
    v = float(evaluate(f, x))
    if not math.isfinite(v):
        # endpoint of a substituted integrand: step inside once
        v = float(evaluate(f, x + inward))
    return v


def _adaptive_simpson(f: Callable, a: float, b: float, spec: QuadratureSpec) -> float:
    budget = spec.panels * spec.nodes_per_panel
    nudge = 1e-12 * (b - a)
    fa = _scalar(f, a, nudge)
    fb = _scalar(f, b, -nudge)
    m = 0.5 * (a + b)
    fm = _scalar(f, m, nudge)
    evaluations = 3
    whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    stack = [(a, b, fa, fm, fb, whole, spec.abs_tol)]
    total = 0.0
    while stack:
        lo, hi, flo, fmid, fhi, estimate, tol = stack.pop()
        mid = 0.5 * (lo + hi)
        fl = _scalar(f, 0.5 * (lo + mid), nudge)
        fr = _scalar(f, 0.5 * (mid + hi), nudge)
        evaluations += 2
        left = (mid - lo) / 6.0 * (flo + 4.0 * fl + fmid)
        right = (hi - mid) / 6.0 * (fmid + 4.0 * fr + fhi)
        delta = left + right - estimate
        if abs(delta) <= 15.0 * tol:
            total += left + right + delta / 15.0
            continue
        if evaluations >= budget:
            raise ToleranceNotMetError(
                f"adaptive_simpson exhausted {budget} evaluations on [{a}, {b}] "
                f"(local error {abs(delta) / 15.0:.3e} > {tol:.3e})"
            )
        # left half is popped first: fixed summation order
        stack.append((mid, hi, fmid, fr, fhi, right, 0.5 * tol))
        stack.append((lo, mid, flo, fl, fmid, left, 0.5 * tol))
    logger.debug("adaptive_simpson on [%g, %g] used %d evaluations", a, b, evaluations)
    return total


def _integrate(f: Callable, a: float, b: float, spec: QuadratureSpec) -> float:
    if spec.scheme is Scheme.ADAPTIVE_SIMPSON:
        return _adaptive_simpson(f, a, b, spec)
    return _gauss(f, a, b, spec)


def integrate_interval(
    f: Callable,
    a: float,
    b: float,
    spec: QuadratureSpec = DEFAULT_QUADRATURE,
    singular_order: Optional[float] = None,
    endpoint: str = "right",
) -> float:
    """
    Integrate f over [a, b].

    Parameters
    ----------
    f : callable
        Integrand; vectorized callables are evaluated on whole node arrays.
    a, b : float
        Finite limits with a < b.
    spec : QuadratureSpec
        Scheme and resolution.
    singular_order : float, optional
        If given (order > 0), f is assumed to carry a factor
        (b - x)**(order - 1) (or (x - a)**(order - 1) when endpoint="left")
        and the substitution removing it is applied.
    endpoint : {"right", "left"}
        Which end carries the singular factor.

    Returns
    -------
    float
        The integral.
    """
    if not (math.isfinite(a) and math.isfinite(b)) or not a < b:
        raise ValueError(f"integration limits must be finite with a < b; got a={a}, b={b}")
    if singular_order is None:
        return _integrate(f, a, b, spec)
    if not singular_order > 0:
        raise ValueError(f"singular_order must be positive; got {singular_order}")
    if endpoint not in _ENDPOINTS:
        raise ValueError(f"endpoint must be one of {_ENDPOINTS}; got {endpoint!r}")

    power = 1.0 / singular_order
    span = (b - a) ** singular_order

    def substituted(w):
        w = np.asarray(w, dtype=float)
        offset = w ** power
        x = b - offset if endpoint == "right" else a + offset
        with np.errstate(divide="ignore", invalid="ignore"):
            return evaluate(f, x) * (power * w ** (power - 1.0))

    return _integrate(substituted, 0.0, span, spec)


def integrate_halfline(f: Callable, spec: QuadratureSpec = DEFAULT_QUADRATURE) -> float:
    """
    Integrate f over [0, spec.tail_cutoff].

    The caller picks tail_cutoff so that the discarded tail is below abs_tol
    (see specialfn.density_cutoff for integrals against the form factor).
    """
    return _integrate(f, 0.0, spec.tail_cutoff, spec)
