"""Mittag-Leffler functions and their form factors."""

from .mittag_leffler import (
    DEFAULT_SERIES,
    EvalResult,
    MLParams,
    SeriesConfig,
    density_cutoff,
    ml_density,
    ml_density_generalized,
    ml_density_values,
    ml_generalized,
    ml_standard,
    ml_standard_values,
    reciprocal_gamma,
)

__all__ = [
    "DEFAULT_SERIES",
    "EvalResult",
    "MLParams",
    "SeriesConfig",
    "density_cutoff",
    "ml_density",
    "ml_density_generalized",
    "ml_density_values",
    "ml_generalized",
    "ml_standard",
    "ml_standard_values",
    "reciprocal_gamma",
]
