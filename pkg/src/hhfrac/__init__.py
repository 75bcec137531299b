"""Fractional Hermite-Hadamard inequalities for harmonically convex functions."""

from .errors import DomainError, HHFracError, NumericalConsistencyError, NumericalError, QuadratureError
from .fracint import (
    HarmonicInterval,
    classical_remainder,
    classical_remainder_kernel,
    hh_middle_classical,
    hh_middle_fractional,
    if_remainder,
    if_remainder_kernel,
    rl_left,
    rl_right,
)
from .harmonic import (
    ConvexityResult,
    TestFunction,
    catalog,
    get_function,
    is_harmonically_convex,
    power_subadditivity_holds,
    reciprocal_convexity_check,
)
from .quadrature import DEFAULT_CONFIG, QuadratureConfig, integrate
from .specfun import Hyp2F1Params, beta_fn, gamma_fn, hyp2f1, log_mean_power
from .theorems import (
    BoundConstant,
    ExponentPair,
    bound_thm13,
    bound_thm14,
    bound_thm22,
    bound_thm23,
    bound_thm24,
    bound_thm25,
    bound_thm26,
    closed_form,
    constant_oracle,
    evaluate_constant,
    hh_chain,
)
from .verify import MarginReport, SweepGrid, SweepResult, default_grid, full_verification, run_sweep

__version__ = "0.1.0"

__all__ = [
    "beta_fn",
    "bound_thm13",
    "bound_thm14",
    "bound_thm22",
    "bound_thm23",
    "bound_thm24",
    "bound_thm25",
    "bound_thm26",
    "BoundConstant",
    "catalog",
    "classical_remainder",
    "classical_remainder_kernel",
    "closed_form",
    "constant_oracle",
    "ConvexityResult",
    "DEFAULT_CONFIG",
    "default_grid",
    "DomainError",
    "evaluate_constant",
    "ExponentPair",
    "full_verification",
    "gamma_fn",
    "get_function",
    "HarmonicInterval",
    "hh_chain",
    "hh_middle_classical",
    "hh_middle_fractional",
    "HHFracError",
    "hyp2f1",
    "Hyp2F1Params",
    "if_remainder",
    "if_remainder_kernel",
    "integrate",
    "is_harmonically_convex",
    "log_mean_power",
    "MarginReport",
    "NumericalConsistencyError",
    "NumericalError",
    "power_subadditivity_holds",
    "QuadratureConfig",
    "QuadratureError",
    "reciprocal_convexity_check",
    "rl_left",
    "rl_right",
    "run_sweep",
    "SweepGrid",
    "SweepResult",
    "TestFunction",
]
