"""
European call pricing in rescaled variables, and its fractional extension.

With tau = sigma^2 (T - t) / 2 and lambda0 = 2 r / sigma^2 the Black-Scholes
equation becomes the forward evolution

    dA/dtau = S^2 A_SS + lambda0 S A_S - lambda0 A,    A(S, 0) = max(S - E, 0)

solved by A(S, tau) = S N(d1) - E exp(-lambda0 tau) N(d2),
d1,2 = (ln(S/E) + (lambda0 +/- 1) tau) / sqrt(2 tau). The fractional price
A_alpha(S, tau) subordinates A(S, .) against the Mittag-Leffler form factor.
"""

import logging
import math
import warnings
from dataclasses import dataclass
from typing import Callable, Iterable

import numpy as np
import pandas as pd
from scipy.special import erfc

from ..errors import KinkError, KinkWarning
from ..numerics.quadrature import DEFAULT_QUADRATURE, QuadratureSpec
from ..numerics.transforms import TimeFunction, riemann_liouville
from .subordination import (
    SubordinationRequest,
    SubordinationResult,
    effective_quadrature,
    subordinate,
    subordination_nodes,
)

logger = logging.getLogger(__name__)

_KINK_LOG_MONEYNESS = 0.05
_KINK_MIN_TAU = 0.01
_FIRST_STEP = 1e-4
_SECOND_STEP = 1e-3


@dataclass(frozen=True)
class OptionSpec:
    """Spot, strike, rate, volatility and expiry of a European call."""

    spot: float
    strike: float
    rate: float
    sigma: float
    expiry: float

    def __post_init__(self) -> None:
        for name in ("spot", "strike", "sigma", "expiry"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise ValueError(f"{name} must be positive and finite; got {value}")
        if not (math.isfinite(self.rate) and self.rate >= 0):
            raise ValueError(f"rate must be finite and >= 0; got {self.rate}")


@dataclass(frozen=True)
class TransformedCoords:
    """Rescaled time to expiry tau >= 0 and dimensionless rate lambda0 >= 0."""

    tau: float
    lambda0: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.tau) and self.tau >= 0):
            raise ValueError(f"tau must be finite and >= 0; got {self.tau}")
        if not (math.isfinite(self.lambda0) and self.lambda0 >= 0):
            raise ValueError(f"lambda0 must be finite and >= 0; got {self.lambda0}")


def to_transformed(opt: OptionSpec, t: float = 0.0) -> TransformedCoords:
    """Calendar time t <= T to (tau, lambda0)."""
    if not t <= opt.expiry:
        raise ValueError(f"t must not exceed expiry {opt.expiry}; got {t}")
    return TransformedCoords(0.5 * opt.sigma**2 * (opt.expiry - t), 2.0 * opt.rate / opt.sigma**2)


def _validate_prices(S, E) -> None:
    if not (np.all(np.isfinite(S)) and np.all(np.asarray(S) > 0)):
        raise ValueError(f"spot must be positive and finite; got {S}")
    if not (math.isfinite(E) and E > 0):
        raise ValueError(f"strike must be positive and finite; got {E}")


def payoff(S: float, E: float) -> float:
    """max(S - E, 0)."""
    _validate_prices(S, E)
    return max(S - E, 0.0)


def norm_cdf(d):
    """Standard normal CDF as erfc(-d / sqrt 2) / 2, accurate in both tails."""
    return 0.5 * erfc(-np.asarray(d, dtype=float) / math.sqrt(2.0))


def bs_price_values(S, E: float, tau, lambda0: float) -> np.ndarray:
    """Vectorized A(S, tau); broadcasts S against tau. tau = 0 gives the payoff."""
    S = np.asarray(S, dtype=float)
    tau = np.asarray(tau, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore"):
        root = np.sqrt(2.0 * tau)
        log_moneyness = np.log(S / E)
        d1 = (log_moneyness + (lambda0 + 1.0) * tau) / root
        d2 = (log_moneyness + (lambda0 - 1.0) * tau) / root
        price = S * norm_cdf(d1) - E * np.exp(-lambda0 * tau) * norm_cdf(d2)
    return np.where(tau > 0, price, np.maximum(S - E, 0.0))


def bs_price(S: float, E: float, coords: TransformedCoords) -> float:
    """Closed-form call price A(S, tau); the payoff at tau = 0."""
    _validate_prices(S, E)
    if coords.tau == 0.0:
        return payoff(S, E)
    return float(bs_price_values(S, E, coords.tau, coords.lambda0))


def frac_bs_price(
    S: float,
    E: float,
    alpha: float,
    tau: float,
    lambda0: float,
    quad: QuadratureSpec = DEFAULT_QUADRATURE,
) -> SubordinationResult:
    """
    Fractional price A_alpha(S, tau) = int_0^inf f_alpha(z) A(S, tau^alpha z) dz.

    alpha = 1 returns bs_price unchanged.
    """
    _validate_prices(S, E)
    coords = TransformedCoords(tau, lambda0)
    if alpha == 1.0:
        return SubordinationResult(bs_price(S, E, coords), 1.0)
    price_in_time = TimeFunction(lambda z: bs_price_values(S, E, z, lambda0), label=f"call S={S:g} E={E:g}")
    return subordinate(SubordinationRequest(price_in_time, alpha, tau, quad))


def frac_bs_price_values(
    S,
    E: float,
    alpha: float,
    tau,
    lambda0: float,
    quad: QuadratureSpec = DEFAULT_QUADRATURE,
) -> np.ndarray:
    """Vectorized A_alpha(S, tau); broadcasts S against tau (tau >= 0)."""
    S, tau = np.broadcast_arrays(np.asarray(S, dtype=float), np.asarray(tau, dtype=float))
    _validate_prices(S, E)
    if np.any(tau < 0):
        raise ValueError("tau must be >= 0")
    if alpha == 1.0:
        return bs_price_values(S, E, tau, lambda0)
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"alpha must satisfy 0 < alpha <= 1; got {alpha}")
    quad, _ = effective_quadrature(alpha, quad)
    z, weights = subordination_nodes(alpha, quad)
    times = (tau.reshape(-1, 1) ** alpha) * z[None, :]
    values = (bs_price_values(S.reshape(-1, 1), E, times, lambda0) @ weights).reshape(S.shape)
    return np.where(tau == 0.0, np.maximum(S - E, 0.0), values)


def integral_equation_residual(
    price_fn: Callable,
    S: float,
    initial_value: float,
    alpha: float,
    tau_grid: Iterable[float],
    lambda0: float,
    quad: QuadratureSpec = DEFAULT_QUADRATURE,
) -> float:
    """
    Max over tau_grid of |A(S, tau) - A(S, 0) - I^alpha[S^2 A_SS + lambda0 S A_S - lambda0 A](tau)|.

    price_fn(S, tau) must broadcast over arrays. A_S uses a central difference
    with step 1e-4 S, A_SS the five-point stencil with step 1e-3 S.
    """
    tau_grid = [float(t) for t in tau_grid]
    if not tau_grid or any(not t > 0 for t in tau_grid):
        raise ValueError(f"tau_grid must be a non-empty list of positive values; got {tau_grid}")
    h1, h2 = _FIRST_STEP * S, _SECOND_STEP * S
    spots = np.array([S - 2 * h2, S - h2, S - h1, S, S + h1, S + h2, S + 2 * h2])

    def generator(z):
        z = np.asarray(z, dtype=float)
        prices = np.asarray(price_fn(spots.reshape((-1,) + (1,) * z.ndim), z), dtype=float)
        far_lo, lo, near_lo, mid, near_hi, hi, far_hi = prices
        first = (near_hi - near_lo) / (2.0 * h1)
        second = (-far_hi + 16.0 * hi - 30.0 * mid + 16.0 * lo - far_lo) / (12.0 * h2**2)
        return S**2 * second + lambda0 * S * first - lambda0 * mid

    residuals = []
    for tau in tau_grid:
        price = float(np.asarray(price_fn(S, tau)))
        drift = riemann_liouville(TimeFunction(generator, label="generator"), alpha, tau, quad)
        residuals.append(abs(price - initial_value - drift))
        logger.debug("integral equation residual at tau=%g: %.3e", tau, residuals[-1])
    return max(residuals)


def frac_bs_residual(
    S: float,
    E: float,
    alpha: float,
    tau_grid: Iterable[float],
    lambda0: float,
    quad: QuadratureSpec = DEFAULT_QUADRATURE,
) -> float:
    """
    Residual of the fractional Black-Scholes integral equation at spot S.

    Raises KinkError when S is within 5% (in log) of the strike and the grid has
    tau < 0.01; warns with KinkWarning when only the first condition holds.
    """
    _validate_prices(S, E)
    tau_grid = list(tau_grid)
    if abs(math.log(S / E)) < _KINK_LOG_MONEYNESS:
        if any(t < _KINK_MIN_TAU for t in tau_grid):
            raise KinkError(
                f"S={S:g} is next to the strike E={E:g} and tau_grid has values below {_KINK_MIN_TAU}; "
                "the second derivative of the price is not resolved there"
            )
        message = f"S={S:g} within {_KINK_LOG_MONEYNESS:g} log-moneyness of E={E:g}; residual may be large"
        logger.warning(message)
        warnings.warn(message, KinkWarning, stacklevel=2)

    def price_fn(spots, tau):
        return frac_bs_price_values(spots, E, alpha, tau, lambda0, quad)

    residual = integral_equation_residual(price_fn, S, payoff(S, E), alpha, tau_grid, lambda0, quad)
    logger.info("fractional Black-Scholes residual (alpha=%g, S=%g, E=%g): %.3e", alpha, S, E, residual)
    return residual


def price_surface(
    spot_grid: Iterable[float],
    tau_grid: Iterable[float],
    strike: float,
    alpha: float,
    lambda0: float,
    quad: QuadratureSpec = DEFAULT_QUADRATURE,
) -> pd.DataFrame:
    """
    A_alpha over a (spot, tau) grid, tau outer and spot inner.

    Returns
    -------
    pd.DataFrame
        Columns: spot, strike, tau, lambda0, alpha, value, mass_used.
    """
    rows = []
    for tau in tau_grid:
        for spot in spot_grid:
            result = frac_bs_price(float(spot), strike, alpha, float(tau), lambda0, quad)
            rows.append(
                {"spot": float(spot), "strike": strike, "tau": float(tau), "lambda0": lambda0,
                 "alpha": alpha, "value": result.value, "mass_used": result.density_mass_used}
            )
    logger.info("priced %d (spot, tau) points at alpha=%g", len(rows), alpha)
    return pd.DataFrame(rows, columns=["spot", "strike", "tau", "lambda0", "alpha", "value", "mass_used"])
