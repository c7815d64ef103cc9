"""One-dimensional Jacobi theta function, selected partials, and tail majorants.

theta(X; Y) = sum_{n in Z} exp(-pi n^2 X) exp(2 pi i n Y) is real for real
arguments (cosine form).  Below the configured switch point the Poisson
resummation

    theta(X; Y) = X^{-1/2} sum_{n in Z} exp(-pi (n - Y)^2 / X)

converges faster and is used instead; both branches are valid on all of
X > 0, which the consistency checks exploit.

Only the four partial derivatives the two-dimensional expansions actually
need are implemented: theta_X, theta_Y, theta_XY and theta_XX.
"""

from __future__ import annotations

import math

from .config import DEFAULT_CONFIG, SeriesConfig
from .errors import NonPositiveX, TruncationFailure, UnsupportedOrder

_TWO_PI = 2.0 * math.pi
_PI = math.pi

#: Derivative orders supported by jacobi_theta_partial, as (x_order, y_order).
SUPPORTED_ORDERS = ((1, 0), (0, 1), (1, 1), (2, 0))


def _check_x(X: float) -> None:
    if not (X > 0.0 and math.isfinite(X)):
        raise NonPositiveX(f"theta requires finite X > 0, got {X}")


def _reduce_y(Y: float) -> float:
    # Period-1 reduction; done up front so equal arguments mod 1 produce
    # bit-identical truncated series.
    return Y - math.floor(Y)


def _fourier_term(X: float, Y: float, xo: int, yo: int, n: int) -> tuple[float, float]:
    """n-th term of the differentiated Fourier series and its magnitude bound."""
    e = math.exp(-_PI * n * n * X)
    if (xo, yo) == (0, 0):
        return 2.0 * e * math.cos(_TWO_PI * n * Y), 2.0 * e
    if (xo, yo) == (1, 0):
        b = _TWO_PI * n * n * e
        return -b * math.cos(_TWO_PI * n * Y), b
    if (xo, yo) == (0, 1):
        b = 4.0 * _PI * n * e
        return -b * math.sin(_TWO_PI * n * Y), b
    if (xo, yo) == (1, 1):
        b = 4.0 * _PI * _PI * n**3 * e
        return b * math.sin(_TWO_PI * n * Y), b
    # (2, 0)
    b = 2.0 * _PI * _PI * n**4 * e
    return b * math.cos(_TWO_PI * n * Y), b


def _poisson_term(X: float, Y: float, xo: int, yo: int, n: int) -> tuple[float, float]:
    """Term of the differentiated Poisson comb at integer n, plus a bound."""
    d = n - Y
    e = math.exp(-_PI * d * d / X)
    if (xo, yo) == (0, 0):
        v = X**-0.5 * e
        return v, v
    if (xo, yo) == (0, 1):
        v = _TWO_PI * X**-1.5 * d * e
        return v, abs(v)
    if (xo, yo) == (1, 0):
        v = X**-2.5 * (_PI * d * d - 0.5 * X) * e
        return v, X**-2.5 * (_PI * d * d + 0.5 * X) * e
    if (xo, yo) == (1, 1):
        v = _PI * X**-3.5 * (2.0 * _PI * d**3 - 3.0 * X * d) * e
        return v, _PI * X**-3.5 * (2.0 * _PI * abs(d) ** 3 + 3.0 * X * abs(d)) * e
    # (2, 0)
    v = X**-4.5 * (_PI * _PI * d**4 - 3.0 * _PI * X * d * d + 0.75 * X * X) * e
    return v, X**-4.5 * (_PI * _PI * d**4 + 3.0 * _PI * X * d * d + 0.75 * X * X) * e


def _sum_fourier(X: float, Y: float, xo: int, yo: int, cfg: SeriesConfig) -> float:
    acc = 1.0 if (xo, yo) == (0, 0) else 0.0
    scale = abs(acc)
    guard = 0
    for n in range(1, cfg.max_terms + 1):
        term, bound = _fourier_term(X, Y, xo, yo, n)
        acc += term
        scale = max(scale, bound, abs(acc), 5e-324)
        if bound <= cfg.rel_tol * scale:
            guard += 1
            if guard > 2:
                return acc
        else:
            guard = 0
    raise TruncationFailure(
        f"Fourier theta series not converged within {cfg.max_terms} terms (X={X}, Y={Y})"
    )


def _sum_poisson(X: float, Y: float, xo: int, yo: int, cfg: SeriesConfig) -> float:
    # Y is in [0, 1); the dominant comb points are n = 0 and n = 1, so sum
    # outward in pairs (1 + j, -j).
    acc = 0.0
    scale = 0.0
    guard = 0
    for j in range(cfg.max_terms + 1):
        t_hi, b_hi = _poisson_term(X, Y, xo, yo, 1 + j)
        t_lo, b_lo = _poisson_term(X, Y, xo, yo, -j)
        acc += t_hi + t_lo
        bound = max(b_hi, b_lo)
        scale = max(scale, bound, abs(acc), 5e-324)
        if bound <= cfg.rel_tol * scale:
            guard += 1
            if guard > 2:
                return acc
        else:
            guard = 0
    raise TruncationFailure(
        f"Poisson theta series not converged within {cfg.max_terms} terms (X={X}, Y={Y})"
    )


def jacobi_theta(X: float, Y: float, cfg: SeriesConfig = DEFAULT_CONFIG) -> float:
    """theta(X; Y), real cosine form; X > 0, Y arbitrary (period 1)."""
    _check_x(X)
    Yr = _reduce_y(Y)
    if X < cfg.poisson_switch:
        return _sum_poisson(X, Yr, 0, 0, cfg)
    return _sum_fourier(X, Yr, 0, 0, cfg)


def jacobi_theta_partial(
    X: float, Y: float, x_order: int, y_order: int, cfg: SeriesConfig = DEFAULT_CONFIG
) -> float:
    """Partial derivative of theta(X; Y) of order (x_order, y_order).

    Supported orders are exactly (1,0), (0,1), (1,1) and (2,0); anything
    else raises UnsupportedOrder.
    """
    _check_x(X)
    if (x_order, y_order) not in SUPPORTED_ORDERS:
        raise UnsupportedOrder(
            f"order ({x_order}, {y_order}) not in {SUPPORTED_ORDERS}"
        )
    Yr = _reduce_y(Y)
    if X < cfg.poisson_switch:
        return _sum_poisson(X, Yr, x_order, y_order, cfg)
    return _sum_fourier(X, Yr, x_order, y_order, cfg)


def _power_tail(X: float, power: int, cfg: SeriesConfig) -> float:
    """sum_{n>=2} n^power exp(-pi (n^2 - 1) X)."""
    _check_x(X)
    acc = 0.0
    scale = 0.0
    guard = 0
    for n in range(2, cfg.max_terms + 2):
        term = float(n) ** power * math.exp(-_PI * (n * n - 1) * X)
        acc += term
        scale = max(scale, term, acc)
        if term <= cfg.rel_tol * max(scale, 5e-324):
            guard += 1
            if guard > 2:
                return acc
        else:
            guard = 0
    raise TruncationFailure(f"tail majorant series not converged (X={X})")


def mu(X: float, cfg: SeriesConfig = DEFAULT_CONFIG) -> float:
    """mu(X) = sum_{n>=2} n^2 exp(-pi (n^2 - 1) X); decreasing in X."""
    return _power_tail(X, 2, cfg)


def nu(X: float, cfg: SeriesConfig = DEFAULT_CONFIG) -> float:
    """nu(X) = sum_{n>=2} n^4 exp(-pi (n^2 - 1) X); decreasing in X."""
    return _power_tail(X, 4, cfg)


#: Validity thresholds of the two envelope estimates for -theta_Y / sin(2 pi Y).
ENVELOPE_LARGE_X = 0.2           # large-X envelope needs X > 1/5
ENVELOPE_SMALL_X = _PI / (_PI + 2.0)  # small-X envelope needs X below this


def theta_envelope(X: float, cfg: SeriesConfig = DEFAULT_CONFIG) -> tuple[float, float]:
    """Envelope (lower, upper) with lower*sin <= -theta_Y(X;Y) <= upper*sin.

    Here sin = sin(2 pi Y) > 0; for sin < 0 the inequalities flip.  Two
    estimates exist: 4 pi e^{-pi X} (1 -+ mu(X)) for X > 1/5 and
    (pi e^{-pi/4X} X^{-3/2}, X^{-3/2}) for X < pi/(pi+2).  On the overlap
    both hold simultaneously, so the pointwise tighter pair is returned.
    """
    _check_x(X)
    lowers: list[float] = []
    uppers: list[float] = []
    if X > ENVELOPE_LARGE_X:
        m = mu(X, cfg)
        base = 4.0 * _PI * math.exp(-_PI * X)
        lowers.append(base * (1.0 - m))
        uppers.append(base * (1.0 + m))
    if X < ENVELOPE_SMALL_X:
        lowers.append(_PI * math.exp(-_PI / (4.0 * X)) * X**-1.5)
        uppers.append(X**-1.5)
    return max(lowers), min(uppers)
