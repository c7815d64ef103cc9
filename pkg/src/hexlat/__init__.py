"""hexlat: two-dimensional lattice energy sums for non-monotone potentials,
minimizer location over the moduli space of unit-density lattices, and
numerical verification of the bounds behind the hexagonal/nonexistent
phase classification."""

from .config import DEFAULT_CONFIG, SeriesConfig
from .energy import (
    B_CRITICAL,
    Gaussian,
    GaussianDiff,
    LaplaceWeighted,
    PolyGaussian,
    PotentialSpec,
    YukawaDiff,
    closed_form_energy,
    dx_w,
    dx_w_double_sum,
    dy_w,
    laplace_energy,
    lattice_energy,
    theta_difference,
    theta_lattice,
    w_b,
    w_b_via_theta_derivative,
)
from .minimize import (
    Minimizer,
    MinimizeOutcome,
    NoMinimizer,
    PhaseScanResult,
    ThetaDiffProblem,
    WProblem,
    minimize_generic,
    minimize_theta_difference,
    minimize_w,
    phase_scan,
)
from .moduli import (
    Generator,
    UpperHalfPoint,
    apply_word,
    hexagonal_point,
    in_fundamental_domain,
    lattice_norms,
    reduce_to_fundamental,
)
from .theta1d import jacobi_theta, jacobi_theta_partial, mu, nu, theta_envelope

__all__ = [
    "B_CRITICAL",
    "DEFAULT_CONFIG",
    "Gaussian",
    "GaussianDiff",
    "Generator",
    "LaplaceWeighted",
    "Minimizer",
    "MinimizeOutcome",
    "NoMinimizer",
    "PhaseScanResult",
    "PolyGaussian",
    "PotentialSpec",
    "SeriesConfig",
    "ThetaDiffProblem",
    "UpperHalfPoint",
    "WProblem",
    "YukawaDiff",
    "apply_word",
    "closed_form_energy",
    "dx_w",
    "dx_w_double_sum",
    "dy_w",
    "hexagonal_point",
    "in_fundamental_domain",
    "jacobi_theta",
    "jacobi_theta_partial",
    "laplace_energy",
    "lattice_energy",
    "lattice_norms",
    "minimize_generic",
    "minimize_theta_difference",
    "minimize_w",
    "mu",
    "nu",
    "phase_scan",
    "reduce_to_fundamental",
    "theta_difference",
    "theta_envelope",
    "theta_lattice",
    "w_b",
    "w_b_via_theta_derivative",
]

__version__ = "0.1.0"
