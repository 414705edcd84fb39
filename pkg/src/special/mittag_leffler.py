"""
Generalized Mittag-Leffler functions F_ab(z) = Gamma(b) * sum_k (-z)^k / Gamma(b + a k)
and their form factors (probability densities on [0, inf)).

Series are summed in log-magnitude form from cached coefficient tables; a term
whose reciprocal Gamma hits a pole is exactly zero. Summation stops once two
consecutive terms fall below rel_tol * |partial sum|.

The alternating series cancel catastrophically for large arguments. When the
largest term exceeds _CANCELLATION_LIMIT * |sum| (or the series does not stop)
and beta = 1, the value is taken from a positive integral representation:

    E_a(-x) = sin(a pi)/(a pi) * x * int_0^inf exp(-v^(1/a)) / (v^2 + 2 v x cos(a pi) + x^2) dv
    f_a(x)  = x^(a/(1-a)) / (pi (1-a)) * int_0^pi A(phi) exp(-x^(1/(1-a)) A(phi)) dphi
    A(phi)  = (sin(a phi)/sin(phi))^(1/(1-a)) * sin((1-a) phi) / sin(a phi)

For a = 1 the series is rewritten with Kummer's transformation as
exp(-z) * sum_k (b-1)/(b-1+k) z^k/k!, which has positive terms only.
"""

import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Union

import numpy as np
from scipy.special import gammaln, rgamma

from ..errors import DiracCaseError
from ..numerics.quadrature import gauss_legendre_nodes

logger = logging.getLogger(__name__)

_CANCELLATION_LIMIT = 1e3
_DECAY_EXPONENT = 45.0
_POLE_TOL = 1e-12
_TINY = 1e-300
_ANGULAR_PANELS, _ANGULAR_NODES = 64, 16
_RAY_PANELS, _RAY_NODES = 128, 16

ArrayLike = Union[float, np.ndarray]


@dataclass(frozen=True)
class MLParams:
    """Order alpha in (0, 1] and second parameter beta >= alpha."""

    alpha: float
    beta: float = 1.0

    def __post_init__(self) -> None:
        if not (math.isfinite(self.alpha) and 0.0 < self.alpha <= 1.0):
            raise ValueError(f"alpha must satisfy 0 < alpha <= 1; got {self.alpha}")
        if not (math.isfinite(self.beta) and self.beta >= self.alpha):
            raise ValueError(f"beta must satisfy beta >= alpha (alpha={self.alpha}); got {self.beta}")


@dataclass(frozen=True)
class SeriesConfig:
    """Truncation rule shared by every power series."""

    rel_tol: float = 1e-14
    max_terms: int = 500

    def __post_init__(self) -> None:
        if not (self.rel_tol > 0):
            raise ValueError(f"rel_tol must be positive; got {self.rel_tol}")
        if not isinstance(self.max_terms, int) or self.max_terms < 8:
            raise ValueError(f"max_terms must be an integer >= 8; got {self.max_terms!r}")


@dataclass(frozen=True)
class EvalResult:
    value: float
    terms_used: int
    converged: bool
    method: str = "series"


DEFAULT_SERIES = SeriesConfig()


def _is_pole(x: np.ndarray) -> np.ndarray:
    return (x <= 0) & (np.abs(x - np.round(x)) <= _POLE_TOL)


def reciprocal_gamma(x: float) -> float:
    """1/Gamma(x); exactly 0 at the poles x = 0, -1, -2, ..."""
    x = float(x)
    if _is_pole(np.asarray(x)):
        return 0.0
    return float(rgamma(x))


def _log_reciprocal_gamma(x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Sign and log-magnitude of 1/Gamma(x); sign 0 and log -inf at poles."""
    pole = _is_pole(x)
    # Gamma(x) < 0 on (-n, -n + 1) for odd n
    sign = np.where(x > 0, 1.0, np.where(np.ceil(-x) % 2 == 1, -1.0, 1.0))
    with np.errstate(divide="ignore", invalid="ignore"):
        log_mag = -gammaln(np.where(pole, 1.0, x))
    return np.where(pole, 0.0, sign), np.where(pole, -np.inf, log_mag)


def _freeze(*arrays: np.ndarray) -> tuple[np.ndarray, ...]:
    for a in arrays:
        a.setflags(write=False)
    return arrays


@lru_cache(maxsize=128)
def _ml_coefficients(alpha: float, beta: float, max_terms: int) -> tuple[np.ndarray, np.ndarray]:
    k = np.arange(max_terms, dtype=float)
    log_coef = gammaln(beta) - gammaln(beta + alpha * k)
    sign = np.where(k % 2 == 0, 1.0, -1.0)
    return _freeze(log_coef, sign)


@lru_cache(maxsize=128)
def _density_coefficients(alpha: float, beta: float, max_terms: int) -> tuple[np.ndarray, np.ndarray]:
    k = np.arange(max_terms, dtype=float)
    rg_sign, rg_log = _log_reciprocal_gamma(beta - alpha - alpha * k)
    log_coef = gammaln(beta) + rg_log - gammaln(k + 1.0)
    sign = np.where(k % 2 == 0, 1.0, -1.0) * rg_sign
    return _freeze(log_coef, sign)


@lru_cache(maxsize=32)
def _kummer_coefficients(beta: float, max_terms: int) -> tuple[np.ndarray, np.ndarray]:
    k = np.arange(max_terms, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore"):
        log_coef = np.log(beta - 1.0) - np.log(beta - 1.0 + k) - gammaln(k + 1.0)
    log_coef[0] = 0.0
    return _freeze(log_coef, np.ones(max_terms))


def _sum_series(
    log_coef: np.ndarray,
    sign: np.ndarray,
    z: float,
    cfg: SeriesConfig,
) -> tuple[float, int, bool, float]:
    """Partial sums until two consecutive small terms; returns (value, terms_used, converged, max |term|)."""
    k = np.arange(cfg.max_terms, dtype=float)
    with np.errstate(over="ignore", divide="ignore", invalid="ignore"):
        if z == 0.0:
            terms = np.where(k == 0, sign * np.exp(log_coef), 0.0)
        else:
            terms = sign * np.exp(log_coef + k * math.log(z))
        partial = np.cumsum(terms)
        small = np.abs(terms) < cfg.rel_tol * np.maximum(np.abs(partial), _TINY)
    stops = np.flatnonzero(small[1:] & small[:-1])
    if stops.size:
        last, converged = int(stops[0]) + 1, True
    else:
        last, converged = cfg.max_terms - 1, False
    max_term = float(np.max(np.abs(terms[: last + 1])))
    return float(partial[last]), last + 1, converged, max_term


def _cancels(value: float, converged: bool, max_term: float) -> bool:
    return (not converged) or not math.isfinite(max_term) or max_term > _CANCELLATION_LIMIT * abs(value)


def _ml_ray_integral(alpha: float, x: np.ndarray) -> np.ndarray:
    theta = math.pi * alpha
    # v = V s^4: exp(-v^(1/a)) is not smooth at v = 0 unless 1/a is an integer
    upper = _DECAY_EXPONENT**alpha
    s, ws = gauss_legendre_nodes(0.0, 1.0, _RAY_PANELS, _RAY_NODES)
    v = upper * s**4
    weight = np.exp(-(v ** (1.0 / alpha))) * 4.0 * upper * s**3 * ws
    with np.errstate(over="ignore"):
        denom = v[None, :] ** 2 + 2.0 * math.cos(theta) * v[None, :] * x[:, None] + x[:, None] ** 2
        return math.sin(theta) / theta * x * np.sum(weight[None, :] / denom, axis=1)


def _density_angular_integral(alpha: float, x: np.ndarray) -> np.ndarray:
    phi, w = gauss_legendre_nodes(0.0, math.pi, _ANGULAR_PANELS, _ANGULAR_NODES)
    p = 1.0 / (1.0 - alpha)
    with np.errstate(over="ignore"):
        shape = (np.sin(alpha * phi) / np.sin(phi)) ** p * np.sin((1.0 - alpha) * phi) / np.sin(alpha * phi)
    with np.errstate(over="ignore", under="ignore", invalid="ignore"):
        integrand = shape[None, :] * np.exp(-(x[:, None] ** p) * shape[None, :])
        # shape overflows next to phi = pi for alpha close to 1; the integrand vanishes there
        integrand = np.where(np.isinf(shape)[None, :], 0.0, integrand)
        return x ** (alpha * p) / (math.pi * (1.0 - alpha)) * np.sum(integrand * w[None, :], axis=1)


def density_cutoff(alpha: float) -> float:
    """
    Z_max(alpha): argument beyond which f_alpha is negligible (exp factor < e^-45).

    Large-z decay of the form factor is exp(-(1-a) a^(a/(1-a)) z^(1/(1-a))).
    """
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"density_cutoff needs 0 < alpha < 1; got {alpha}")
    rate = (1.0 - alpha) * alpha ** (alpha / (1.0 - alpha))
    return (_DECAY_EXPONENT / rate) ** (1.0 - alpha)


def _validate_argument(name: str, z: np.ndarray) -> None:
    if not np.all(np.isfinite(z)) or np.any(z < 0):
        raise ValueError(f"{name} must be finite and >= 0; got {z if z.ndim == 0 else z[(z < 0) | ~np.isfinite(z)]}")


def _ml_evaluate(alpha: float, beta: float, z: np.ndarray, cfg: SeriesConfig) -> list[EvalResult]:
    results: list = [None] * z.size
    fallback = []
    for i, zi in enumerate(z.ravel()):
        zi = float(zi)
        if alpha == 1.0:
            s, n, ok, _ = _sum_series(*_kummer_coefficients(beta, cfg.max_terms), zi, cfg)
            results[i] = EvalResult(math.exp(-zi) * s, n, ok, "kummer")
            continue
        s, n, ok, max_term = _sum_series(*_ml_coefficients(alpha, beta, cfg.max_terms), zi, cfg)
        if _cancels(s, ok, max_term):
            if beta == 1.0:
                fallback.append(i)
                results[i] = (n, zi)
                continue
            logger.warning(
                "F_%g,%g(%g): series unreliable (converged=%s, max term %.3e vs sum %.3e)",
                alpha, beta, zi, ok, max_term, s,
            )
            ok = False
        results[i] = EvalResult(s, n, ok, "series")
    if fallback:
        x = np.array([results[i][1] for i in fallback])
        values = _ml_ray_integral(alpha, x)
        for i, v in zip(fallback, values):
            results[i] = EvalResult(float(v), results[i][0], True, "integral")
    return results


def _density_evaluate(alpha: float, beta: float, z: np.ndarray, cfg: SeriesConfig) -> list[EvalResult]:
    results: list = [None] * z.size
    fallback = []
    z_max = density_cutoff(alpha) if beta == 1.0 else math.inf
    for i, zi in enumerate(z.ravel()):
        zi = float(zi)
        s, n, ok, max_term = _sum_series(*_density_coefficients(alpha, beta, cfg.max_terms), zi, cfg)
        if _cancels(s, ok, max_term):
            if beta == 1.0:
                fallback.append(i)
                results[i] = (n, zi)
                continue
            ok = False
        results[i] = EvalResult(s, n, ok and zi <= z_max, "series")
    if fallback:
        x = np.array([results[i][1] for i in fallback])
        values = _density_angular_integral(alpha, x)
        for i, v in zip(fallback, values):
            zi = results[i][1]
            results[i] = EvalResult(float(v), results[i][0], zi <= z_max, "integral")
    return results


def ml_generalized(params: MLParams, z: float, cfg: SeriesConfig = DEFAULT_SERIES) -> EvalResult:
    """
    F_{alpha,beta}(z) = Gamma(beta) * sum_k (-z)^k / Gamma(beta + alpha k), z >= 0.

    Returns
    -------
    EvalResult
        converged=False flags a truncated or cancellation-dominated estimate;
        the value is still the best available.
    """
    z_arr = np.asarray(float(z))
    _validate_argument("z", z_arr)
    return _ml_evaluate(params.alpha, params.beta, z_arr.reshape(1), cfg)[0]


def ml_standard(alpha: float, z: float, cfg: SeriesConfig = DEFAULT_SERIES) -> EvalResult:
    """E_alpha(-z), the beta = 1 case of ml_generalized."""
    return ml_generalized(MLParams(alpha, 1.0), z, cfg)


def ml_standard_values(alpha: float, z: ArrayLike, cfg: SeriesConfig = DEFAULT_SERIES) -> np.ndarray:
    """Vectorized E_alpha(-z); same code path as ml_standard."""
    MLParams(alpha, 1.0)
    z = np.asarray(z, dtype=float)
    _validate_argument("z", z)
    results = _ml_evaluate(alpha, 1.0, z.reshape(-1), cfg)
    return np.array([r.value for r in results]).reshape(z.shape)


def _validate_density_alpha(alpha: float) -> None:
    if not (math.isfinite(alpha) and 0.0 < alpha < 1.0):
        raise ValueError(
            f"ml_density needs 0 < alpha < 1 (alpha = 1 is a Dirac mass at z = 1); got {alpha}"
        )


def ml_density(alpha: float, z: float, cfg: SeriesConfig = DEFAULT_SERIES) -> EvalResult:
    """
    Form factor f_alpha(z) = sum_k (-z)^k / (Gamma(1 - alpha - alpha k) k!).

    converged=False beyond density_cutoff(alpha); the returned value there is
    still the (positive) integral-representation estimate.
    """
    _validate_density_alpha(alpha)
    z_arr = np.asarray(float(z))
    _validate_argument("z", z_arr)
    return _density_evaluate(alpha, 1.0, z_arr.reshape(1), cfg)[0]


def ml_density_values(alpha: float, z: ArrayLike, cfg: SeriesConfig = DEFAULT_SERIES) -> np.ndarray:
    """Vectorized f_alpha(z); same code path as ml_density."""
    _validate_density_alpha(alpha)
    z = np.asarray(z, dtype=float)
    _validate_argument("z", z)
    results = _density_evaluate(alpha, 1.0, z.reshape(-1), cfg)
    return np.array([r.value for r in results]).reshape(z.shape)


def ml_density_generalized(params: MLParams, x: float, cfg: SeriesConfig = DEFAULT_SERIES) -> EvalResult:
    """
    Form factor f_{alpha,beta}(x) of the generalized Mittag-Leffler function.

    alpha < 1: Gamma(beta) * sum_k (-x)^k / (Gamma(beta - alpha - alpha k) k!).
    alpha = 1, beta > 1: (beta - 1)(1 - x)^(beta - 2) on [0, 1], 0 beyond.
    alpha = beta = 1 is the Dirac mass at 1 and raises DiracCaseError.
    """
    x_arr = np.asarray(float(x))
    _validate_argument("x", x_arr)
    x = float(x)
    if params.alpha == 1.0:
        if params.beta == 1.0:
            raise DiracCaseError("f_11 is the Dirac mass at x = 1; branch on alpha = 1 before evaluating")
        if x > 1.0:
            return EvalResult(0.0, 0, True, "closed_form")
        if x == 1.0 and params.beta < 2.0:
            return EvalResult(math.inf, 0, True, "closed_form")
        return EvalResult((params.beta - 1.0) * (1.0 - x) ** (params.beta - 2.0), 0, True, "closed_form")
    return _density_evaluate(params.alpha, params.beta, x_arr.reshape(1), cfg)[0]
