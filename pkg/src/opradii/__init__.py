"""Operator radii and constrained von Neumann inequalities.

Numerical tools for the radii ``w_rho`` of matrices, the finite model
operators that are extremal for constrained contractions, sharp coefficient
bounds for positive trigonometric polynomials and rational functions, and
randomized suites that check these inequalities.
"""

from .bounds import (
    combined_bound,
    eps_fejer_bound,
    es_omega,
    herrero_delta,
    hh_bound,
    interp_bound,
    two_coeff_closed,
)
from .errors import FactorizationError, ModelError, ValidationError
from .harness import SuiteConfig, VerificationReport, replay, reproduce_constants, run_all
from .linalg import herm_eig, jacobi_eigh, operator_norm, spectral_radius
from .models import (
    ModelOperator,
    bergman_cell,
    hereditary_kernel_model,
    jordan_cell,
    kernel_model,
)
from .radii import c_rho_membership, diam_numerical_range, numerical_radius, omega_rho
from .rational import (
    RationalTorusFunction,
    check_rational_bound,
    fourier_coeffs,
    model_space_function,
    single_pole_function,
)
from .trigpoly import (
    TrigPoly,
    certify_positive,
    check_classical_bounds,
    check_two_coeff,
    extremal_witness,
    fejer_riesz,
    from_analytic,
    random_positive,
)

__version__ = "0.1.0"

__all__ = [
    "FactorizationError",
    "ModelError",
    "ModelOperator",
    "RationalTorusFunction",
    "SuiteConfig",
    "TrigPoly",
    "ValidationError",
    "VerificationReport",
    "bergman_cell",
    "c_rho_membership",
    "certify_positive",
    "check_classical_bounds",
    "check_rational_bound",
    "check_two_coeff",
    "combined_bound",
    "diam_numerical_range",
    "eps_fejer_bound",
    "es_omega",
    "extremal_witness",
    "fejer_riesz",
    "fourier_coeffs",
    "from_analytic",
    "hereditary_kernel_model",
    "herm_eig",
    "herrero_delta",
    "hh_bound",
    "interp_bound",
    "jacobi_eigh",
    "jordan_cell",
    "kernel_model",
    "model_space_function",
    "numerical_radius",
    "omega_rho",
    "operator_norm",
    "random_positive",
    "replay",
    "reproduce_constants",
    "run_all",
    "single_pole_function",
    "spectral_radius",
    "two_coeff_closed",
]
