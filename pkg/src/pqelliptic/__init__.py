"""Generalized (p, q)-elliptic integrals, the generalized trigonometric
layer they are built on, the difference function connecting the first and
second kinds, and numerical certification of the identities and sharp
inequalities these objects satisfy."""

from .claims import CLAIMS, AxisRange, ClaimResult, ScanGrid, build_report, run_claim
from .delta_analysis import (
    CancellationWarning,
    DeltaConstants,
    H_closed,
    H_def,
    InadmissibleWarning,
    admissible,
    condition1,
    delta,
    delta_prime,
    delta_second,
    delta_second_sign_variant,
    delta_via_elliptic,
    epsilon,
    product_gap,
    product_gap_in_bounds,
    sharp_linear_bounds,
)
from .elliptic import (
    E_comp,
    E_pq,
    K_comp,
    K_pq,
    K_theta_integral,
    Modulus,
    borwein_E,
    borwein_K,
    euler_integral_oracle,
    legendre_E_agm,
    legendre_K_agm,
    takeuchi_bridge_residual,
)
from .gentrig import PQParams, arcsin_pq, pi_pq, sin_pq
from .special import (
    DivergenceError,
    DomainError,
    EvalResult,
    HypArgs,
    beta,
    contiguous_residual,
    f21_derivative,
    gauss_2f1,
    gauss_value_at_one,
    inc_beta,
    ln_gamma,
)

__version__ = "0.1.0"

__all__ = [
    "AxisRange",
    "CLAIMS",
    "CancellationWarning",
    "ClaimResult",
    "DeltaConstants",
    "DivergenceError",
    "DomainError",
    "E_comp",
    "E_pq",
    "EvalResult",
    "H_closed",
    "H_def",
    "HypArgs",
    "InadmissibleWarning",
    "K_comp",
    "K_pq",
    "K_theta_integral",
    "Modulus",
    "PQParams",
    "ScanGrid",
    "admissible",
    "arcsin_pq",
    "beta",
    "borwein_E",
    "borwein_K",
    "build_report",
    "condition1",
    "contiguous_residual",
    "delta",
    "delta_prime",
    "delta_second",
    "delta_second_sign_variant",
    "delta_via_elliptic",
    "epsilon",
    "euler_integral_oracle",
    "f21_derivative",
    "gauss_2f1",
    "gauss_value_at_one",
    "inc_beta",
    "legendre_E_agm",
    "legendre_K_agm",
    "ln_gamma",
    "pi_pq",
    "product_gap",
    "product_gap_in_bounds",
    "run_claim",
    "sharp_linear_bounds",
    "sin_pq",
    "takeuchi_bridge_residual",
]
