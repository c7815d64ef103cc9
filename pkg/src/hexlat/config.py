"""Truncation policy shared by every series evaluation in the package."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidParameter


@dataclass(frozen=True)
class SeriesConfig:
    """Controls how exponential series are truncated.

    rel_tol: a series is cut once the bound on the next term drops below
        rel_tol times the running scale (max of |partial sum| and the
        leading term bound, so alternating sums that cancel to ~0 still
        terminate); two further guard terms are always added.
    max_terms: hard cap on the number of terms; exceeding it raises
        TruncationFailure.
    poisson_switch: theta(X; Y) and its partials use the defining Fourier
        series for X >= poisson_switch and the Poisson-resummed Gaussian
        comb below it.  Both representations are valid on all of X > 0;
        X = 1 is the self-dual point, where the two decay rates coincide.
    """

    rel_tol: float = 1e-14
    max_terms: int = 256
    poisson_switch: float = 1.0

    def __post_init__(self) -> None:
        if not 0.0 < self.rel_tol < 1e-6:
            raise InvalidParameter(f"rel_tol must lie in (0, 1e-6), got {self.rel_tol}")
        if self.max_terms < 8:
            raise InvalidParameter(f"max_terms must be >= 8, got {self.max_terms}")
        if not self.poisson_switch > 0:
            raise InvalidParameter(f"poisson_switch must be > 0, got {self.poisson_switch}")


DEFAULT_CONFIG = SeriesConfig()
