"""Subordination of known solutions, fractional heat kernels and fractional Black-Scholes prices."""

from .blackscholes import (
    OptionSpec,
    TransformedCoords,
    bs_price,
    bs_price_values,
    frac_bs_price,
    frac_bs_price_values,
    frac_bs_residual,
    integral_equation_residual,
    payoff,
    price_surface,
    to_transformed,
)
from .diffusion import (
    KernelQuery,
    frac_heat_kernel,
    frac_heat_kernel_1d_closed,
    frac_heat_kernel_values,
    frac_kernel_mellin_closed,
    heat_kernel,
    heat_kernel_values,
    mass_check,
    tabulate_frac_kernel,
)
from .subordination import (
    SubordinationRequest,
    SubordinationResult,
    subordinate,
    subordinate_grid,
    subordinate_kernel,
    subordinate_values,
    subordination_nodes,
)

__all__ = [
    "OptionSpec",
    "TransformedCoords",
    "bs_price",
    "bs_price_values",
    "frac_bs_price",
    "frac_bs_price_values",
    "frac_bs_residual",
    "integral_equation_residual",
    "payoff",
    "price_surface",
    "to_transformed",
    "KernelQuery",
    "frac_heat_kernel",
    "frac_heat_kernel_1d_closed",
    "frac_heat_kernel_values",
    "frac_kernel_mellin_closed",
    "heat_kernel",
    "heat_kernel_values",
    "mass_check",
    "tabulate_frac_kernel",
    "SubordinationRequest",
    "SubordinationResult",
    "subordinate",
    "subordinate_grid",
    "subordinate_kernel",
    "subordinate_values",
    "subordination_nodes",
]
