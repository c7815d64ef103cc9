"""Lattice theta function, the polynomial-Gaussian energy W_b, their
derivatives, and the generic potential energies.

All two-dimensional sums are evaluated through the one-dimensional theta
expansion

    theta(alpha; z) = sqrt(y/alpha) sum_n e^{-alpha pi y n^2} theta(y/alpha; n x)

whose inner factors come from :mod:`hexlat.theta1d`.  Conventions: theta and
W_b sum over the full lattice including the origin (the origin contributes 1
to theta and -b/alpha to W_b); the potential energies E_f exclude the origin.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Union

from .config import DEFAULT_CONFIG, SeriesConfig
from .errors import (
    InvalidParameter,
    NonPositiveAlpha,
    QuadratureDivergence,
    TailTooLarge,
    TruncationFailure,
)
from .moduli import UpperHalfPoint, lattice_norms
from .quadrature import gauss_panel, integrate
from .theta1d import jacobi_theta, jacobi_theta_partial

_PI = math.pi

#: Critical coupling of the polynomial-Gaussian problem, b_c = 1/(2 pi).
B_CRITICAL = 1.0 / (2.0 * math.pi)


def _check_alpha(alpha: float) -> None:
    if not (alpha > 0.0 and math.isfinite(alpha)):
        raise NonPositiveAlpha(f"alpha must be finite and > 0, got {alpha}")


def _abs_bound(X: float, power: int, prefactor: float, cfg: SeriesConfig) -> float:
    """prefactor * sum_k k^power e^{-pi k^2 X}: a majorant for |theta partials|."""
    acc = 0.0
    for k in range(1, cfg.max_terms + 1):
        t = float(k) ** power * math.exp(-_PI * k * k * X)
        acc += t
        if t <= cfg.rel_tol * max(acc, 5e-324):
            break
    return prefactor * acc


# ---------------------------------------------------------------------------
# theta(alpha; z) and W_b(alpha; z)
# ---------------------------------------------------------------------------


def theta_lattice(alpha: float, z: UpperHalfPoint, cfg: SeriesConfig = DEFAULT_CONFIG) -> float:
    """theta(alpha; z) = sum over the full lattice of e^{-pi alpha |P|^2}."""
    _check_alpha(alpha)
    x, y = z.x, z.y
    X0 = y / alpha
    th_max = jacobi_theta(X0, 0.0, cfg)  # theta(X;Y) <= theta(X;0)
    acc = th_max
    guard = 0
    for n in range(1, cfg.max_terms + 1):
        w = 2.0 * math.exp(-alpha * _PI * y * n * n)
        bound = w * th_max
        if bound <= cfg.rel_tol * acc:
            guard += 1
            if guard > 2:
                break
        else:
            guard = 0
        acc += w * jacobi_theta(X0, n * x, cfg)
    else:
        raise TruncationFailure(f"theta_lattice not converged (alpha={alpha}, z={z})")
    return math.sqrt(X0) * acc


def w_b(alpha: float, b: float, z: UpperHalfPoint, cfg: SeriesConfig = DEFAULT_CONFIG) -> float:
    """W_b(alpha; z) = sum over the full lattice of (|P|^2 - b/alpha) e^{-pi alpha |P|^2}.

    Evaluated through the exponential expansion

        (1/pi) alpha^{-5/2} y^{3/2} [ (1/2)(1 - 2 pi b)(alpha/y) S0
                                      + pi alpha^2 S2 + SX ]

    with S0 = sum_n e^{-alpha pi y n^2} theta(y/alpha; n x), S2 the same sum
    weighted by n^2, and SX the sum with theta replaced by theta_X.
    """
    _check_alpha(alpha)
    x, y = z.x, z.y
    X0 = y / alpha
    c0 = 0.5 * (1.0 - 2.0 * _PI * b) * (alpha / y)
    c2 = _PI * alpha * alpha
    th_max = jacobi_theta(X0, 0.0, cfg)
    thx_max = abs(jacobi_theta_partial(X0, 0.0, 1, 0, cfg))  # |theta_X(X;Y)| <= |theta_X(X;0)|
    acc = c0 * th_max + jacobi_theta_partial(X0, 0.0, 1, 0, cfg)
    scale = abs(c0) * th_max + thx_max
    guard = 0
    for n in range(1, cfg.max_terms + 1):
        w = 2.0 * math.exp(-alpha * _PI * y * n * n)
        bound = w * ((abs(c0) + c2 * n * n) * th_max + thx_max)
        if bound <= cfg.rel_tol * max(scale, 5e-324):
            guard += 1
            if guard > 2:
                break
        else:
            guard = 0
        th = jacobi_theta(X0, n * x, cfg)
        thx = jacobi_theta_partial(X0, n * x, 1, 0, cfg)
        acc += w * ((c0 + c2 * n * n) * th + thx)
        scale = max(scale, abs(acc))
    else:
        raise TruncationFailure(f"w_b not converged (alpha={alpha}, z={z})")
    return y**1.5 / (_PI * alpha**2.5) * acc


def w_b_via_theta_derivative(
    alpha: float, b: float, z: UpperHalfPoint, cfg: SeriesConfig = DEFAULT_CONFIG
) -> float:
    """Independent route W_b = -(1/pi) d(theta)/d(alpha) - (b/alpha) theta.

    The alpha-derivative is a central finite difference with relative step
    1e-5; this cross-checks the exponential expansion in :func:`w_b`.
    """
    _check_alpha(alpha)
    h = 1e-5 * alpha
    dtheta = (theta_lattice(alpha + h, z, cfg) - theta_lattice(alpha - h, z, cfg)) / (2.0 * h)
    return -dtheta / _PI - (b / alpha) * theta_lattice(alpha, z, cfg)


# ---------------------------------------------------------------------------
# Derivatives of W at the critical coupling b = 1/(2 pi)
# ---------------------------------------------------------------------------


def dx_w(alpha: float, z: UpperHalfPoint, cfg: SeriesConfig = DEFAULT_CONFIG) -> float:
    """d/dx of W_{1/(2 pi)}(alpha; z), by the theta_Y / theta_XY series."""
    _check_alpha(alpha)
    x, y = z.x, z.y
    X0 = y / alpha
    c3 = _PI * alpha * alpha
    thy_max = _abs_bound(X0, 1, 4.0 * _PI, cfg)
    thxy_max = _abs_bound(X0, 3, 4.0 * _PI * _PI, cfg)
    acc = 0.0
    scale = math.exp(-alpha * _PI * y) * (c3 * thy_max + thxy_max)
    guard = 0
    for n in range(1, cfg.max_terms + 1):
        w = 2.0 * math.exp(-alpha * _PI * y * n * n)
        bound = w * (c3 * n**3 * thy_max + n * thxy_max)
        if bound <= cfg.rel_tol * max(scale, 5e-324):
            guard += 1
            if guard > 2:
                break
        else:
            guard = 0
        thy = jacobi_theta_partial(X0, n * x, 0, 1, cfg)
        thxy = jacobi_theta_partial(X0, n * x, 1, 1, cfg)
        acc += w * (c3 * n**3 * thy + n * thxy)
        scale = max(scale, abs(acc))
    else:
        raise TruncationFailure(f"dx_w not converged (alpha={alpha}, z={z})")
    return y**1.5 / (_PI * alpha**2.5) * acc


def coupling_coefficient(n: int, m: int, alpha: float, y: float) -> float:
    """A_{n,m}(alpha; y) = n^3 m (alpha^2 e^{-pi y(alpha n^2 + m^2/alpha)}
    - e^{-pi y(alpha m^2 + n^2/alpha)}), the coefficient of sin(2 m n pi x)
    in the double-sum form of -d/dx W_{1/(2 pi)}."""
    return n**3 * m * (
        alpha * alpha * math.exp(-_PI * y * (alpha * n * n + m * m / alpha))
        - math.exp(-_PI * y * (alpha * m * m + n * n / alpha))
    )


def dx_w_double_sum(
    alpha: float, z: UpperHalfPoint, cfg: SeriesConfig = DEFAULT_CONFIG
) -> float:
    """d/dx of W_{1/(2 pi)} by the A_{n,m} sin(2 m n pi x) double sum."""
    _check_alpha(alpha)
    x, y = z.x, z.y
    decay = _PI * y * min(alpha, 1.0 / alpha)
    nmax = 3
    while nmax < 64 and (nmax**4) * math.exp(-decay * (nmax * nmax + 1)) > 1e-22:
        nmax += 1
    s = 0.0
    for n in range(1, nmax + 1):
        for m in range(1, nmax + 1):
            s += coupling_coefficient(n, m, alpha, y) * math.sin(2.0 * m * n * _PI * x)
    return -8.0 * _PI * alpha**-2.5 * y**1.5 * s


def dy_w(alpha: float, z: UpperHalfPoint, cfg: SeriesConfig = DEFAULT_CONFIG) -> float:
    """d/dy of W_{1/(2 pi)}(alpha; z), valid for every z (not only on the
    vertical line x = 1/2 where the minimization uses it)."""
    _check_alpha(alpha)
    x, y = z.x, z.y
    X0 = y / alpha
    c2 = _PI * alpha * alpha
    c4 = _PI * _PI * alpha**3
    th_max = jacobi_theta(X0, 0.0, cfg)
    thx_max = _abs_bound(X0, 2, 2.0 * _PI, cfg)
    thxx_max = _abs_bound(X0, 4, 2.0 * _PI * _PI, cfg)
    s_low = jacobi_theta_partial(X0, 0.0, 1, 0, cfg)       # pi a^2 S2 + SX, n = 0 part
    s_high = jacobi_theta_partial(X0, 0.0, 2, 0, cfg) / alpha  # -pi^2 a^3 S4 + SXX/alpha
    scale = thx_max + thxx_max / alpha
    guard = 0
    for n in range(1, cfg.max_terms + 1):
        w = 2.0 * math.exp(-alpha * _PI * y * n * n)
        bound = w * (
            (c2 * n * n + c4 * n**4) * th_max + thx_max + thxx_max / alpha
        )
        if bound <= cfg.rel_tol * max(scale, 5e-324):
            guard += 1
            if guard > 2:
                break
        else:
            guard = 0
        th = jacobi_theta(X0, n * x, cfg)
        thx = jacobi_theta_partial(X0, n * x, 1, 0, cfg)
        thxx = jacobi_theta_partial(X0, n * x, 2, 0, cfg)
        s_low += w * (c2 * n * n * th + thx)
        s_high += w * (-c4 * n**4 * th + thxx / alpha)
        scale = max(scale, abs(s_low), abs(s_high))
    else:
        raise TruncationFailure(f"dy_w not converged (alpha={alpha}, z={z})")
    return (1.5 * math.sqrt(y) * s_low + y**1.5 * s_high) / (_PI * alpha**2.5)


def theta_difference(
    alpha: float, a: float, b: float, z: UpperHalfPoint, cfg: SeriesConfig = DEFAULT_CONFIG
) -> float:
    """theta(alpha; z) - b * theta(a alpha; z), for a > 1."""
    _check_alpha(alpha)
    if not a > 1.0:
        raise InvalidParameter(f"theta difference requires a > 1, got {a}")
    return theta_lattice(alpha, z, cfg) - b * theta_lattice(a * alpha, z, cfg)


def theta_difference_via_w_integral(
    alpha: float, a: float, z: UpperHalfPoint, cfg: SeriesConfig = DEFAULT_CONFIG
) -> float:
    """theta(alpha;z) - sqrt(a) theta(a alpha;z) as pi alpha int_1^a sqrt(t) W_{1/(2pi)}(t alpha; z) dt.

    This is the exact form of the fundamental-theorem identity
    d/dt [sqrt(t) theta(t alpha; z)] = -pi alpha sqrt(t) W_{1/(2 pi)}(t alpha; z);
    the sqrt(t) weight and the alpha factor are required for it to hold.
    """
    _check_alpha(alpha)
    if not a > 1.0:
        raise InvalidParameter(f"requires a > 1, got {a}")
    val = gauss_panel(lambda t: math.sqrt(t) * w_b(t * alpha, B_CRITICAL, z, cfg), 1.0, a, nodes=64)
    return _PI * alpha * val


# ---------------------------------------------------------------------------
# Potential families and generic energies
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Gaussian:
    """f(r^2) = e^{-pi alpha r^2}."""

    alpha: float

    def __post_init__(self) -> None:
        _check_alpha(self.alpha)


@dataclass(frozen=True)
class GaussianDiff:
    """f(r^2) = e^{-pi alpha r^2} - b e^{-pi a alpha r^2}, a > 1."""

    alpha: float
    a: float
    b: float

    def __post_init__(self) -> None:
        _check_alpha(self.alpha)
        if not self.a > 1.0:
            raise InvalidParameter(f"GaussianDiff requires a > 1, got {self.a}")


@dataclass(frozen=True)
class PolyGaussian:
    """f(r^2) = (r^2 - b/alpha) e^{-pi alpha r^2}."""

    alpha: float
    b: float

    def __post_init__(self) -> None:
        _check_alpha(self.alpha)


@dataclass(frozen=True)
class YukawaDiff:
    """f applied at r^2: h(q) = e^{-pi alpha q}/q - b e^{-pi a alpha q}/q, a > 1."""

    alpha: float
    a: float
    b: float

    def __post_init__(self) -> None:
        _check_alpha(self.alpha)
        if not self.a > 1.0:
            raise InvalidParameter(f"YukawaDiff requires a > 1, got {self.a}")


@dataclass(frozen=True)
class LaplaceWeighted:
    """Laplace-transform family with nonnegative weight P on [1, inf).

    family "f": f(q) = int_1^inf (e^{-pi alpha x q} - b e^{-pi a alpha x q}) P(x) dx
    family "g": f(q) = int_1^inf (q x - b/alpha) e^{-pi alpha x q} P(x) dx
    """

    alpha: float
    a: float
    b: float
    weight: Callable[[float], float]
    family: str = "f"

    def __post_init__(self) -> None:
        _check_alpha(self.alpha)
        if not self.a > 1.0:
            raise InvalidParameter(f"LaplaceWeighted requires a > 1, got {self.a}")
        if self.family not in ("f", "g"):
            raise InvalidParameter(f"family must be 'f' or 'g', got {self.family!r}")


PotentialSpec = Union[Gaussian, GaussianDiff, PolyGaussian, YukawaDiff, LaplaceWeighted]


def potential_value(p: PotentialSpec, q: float) -> float:
    """Pointwise potential at squared distance q > 0."""
    if isinstance(p, Gaussian):
        return math.exp(-_PI * p.alpha * q)
    if isinstance(p, GaussianDiff):
        return math.exp(-_PI * p.alpha * q) - p.b * math.exp(-_PI * p.a * p.alpha * q)
    if isinstance(p, PolyGaussian):
        return (q - p.b / p.alpha) * math.exp(-_PI * p.alpha * q)
    if isinstance(p, YukawaDiff):
        return (math.exp(-_PI * p.alpha * q) - p.b * math.exp(-_PI * p.a * p.alpha * q)) / q
    # LaplaceWeighted: integrate the defining x-integral pointwise.
    if p.family == "f":
        integrand = lambda x: p.weight(x) * (
            math.exp(-_PI * p.alpha * x * q) - p.b * math.exp(-_PI * p.a * p.alpha * x * q)
        )
    else:
        integrand = lambda x: p.weight(x) * (q * x - p.b / p.alpha) * math.exp(-_PI * p.alpha * x * q)
    return _laplace_panels(integrand, rel_tol=1e-12)


def _tail_majorant(p: PotentialSpec, t0: float) -> float:
    """Upper bound on the absolute lattice-sum tail over norms^2 > t0.

    A unit-density lattice has ~pi dt points with norm^2 in [t, t+dt]; the
    factor 2 in front is margin for shell-count fluctuations.
    """
    if isinstance(p, Gaussian):
        return 2.0 * math.exp(-_PI * p.alpha * t0) / p.alpha
    if isinstance(p, (GaussianDiff, YukawaDiff)):
        # |f| <= (1 + |b|) e^{-pi alpha t} for t >= 1 in both cases
        return 2.0 * (1.0 + abs(p.b)) * math.exp(-_PI * p.alpha * t0) / p.alpha
    if isinstance(p, PolyGaussian):
        c = abs(p.b) / p.alpha
        return (
            2.0 * math.exp(-_PI * p.alpha * t0) * ((t0 + c) / p.alpha + 1.0 / (_PI * p.alpha * p.alpha))
        )
    # LaplaceWeighted decays at least like the x = 1 endpoint of its integral;
    # use the sampled potential at t0 and integrate the matching exponential.
    g0 = abs(potential_value(p, t0))
    return 4.0 * g0 * (t0 / (_PI * p.alpha) + 1.0 / (_PI * p.alpha) ** 2) / max(t0, 1.0) * _PI


def lattice_energy(p: PotentialSpec, z: UpperHalfPoint, cutoff_radius: float) -> float:
    """E_f(L) = sum over nonzero lattice points of f(|P|^2), by direct summation.

    Raises TailTooLarge when the tail majorant beyond the cutoff is not
    below 1e-12 of the accumulated absolute sum.
    """
    if not cutoff_radius > 0.0:
        raise InvalidParameter(f"cutoff_radius must be > 0, got {cutoff_radius}")
    total = 0.0
    total_abs = 0.0
    for q, _mn in lattice_norms(z, cutoff_radius):
        if q == 0.0:
            continue
        v = potential_value(p, q)
        total += v
        total_abs += abs(v)
    tail = _tail_majorant(p, cutoff_radius * cutoff_radius)
    if tail > 1e-12 * max(total_abs, 1e-300):
        raise TailTooLarge(
            f"tail bound {tail:.3g} exceeds 1e-12 of the summed magnitude {total_abs:.3g}"
        )
    return total


def _laplace_panels(integrand: Callable[[float], float], rel_tol: float = 1e-12) -> float:
    """Integrate over [1, inf) with doubling panels until the tail is negligible."""
    acc = 0.0
    lo = 1.0
    quiet = 0
    while lo <= 1e4:
        hi = 2.0 * lo
        # Panels whose integrand is at roundoff level relative to the total
        # cannot stabilize in a relative sense and contribute nothing.
        probe = max(abs(integrand(lo)), abs(integrand(0.5 * (lo + hi))), abs(integrand(hi)))
        if probe * (hi - lo) < 1e-15 * abs(acc):
            part = 0.0
        else:
            part = integrate(
                integrand, lo, hi, rel_tol=rel_tol, nodes=16, abs_tol=1e-13 * abs(acc)
            )
        acc += part
        if abs(part) < 1e-10 * max(abs(acc), 1e-300):
            quiet += 1
            if quiet >= 2:
                return acc
        else:
            quiet = 0
        lo = hi
    raise QuadratureDivergence("Laplace-weighted integral tail not converged by x = 1e4")


def laplace_energy(
    p: LaplaceWeighted, z: UpperHalfPoint, cfg: SeriesConfig = DEFAULT_CONFIG
) -> float:
    """E for a LaplaceWeighted potential by integrating closed-form inner
    energies over the transform variable (Fubini)."""
    if not isinstance(p, LaplaceWeighted):
        raise InvalidParameter("laplace_energy requires a LaplaceWeighted spec")

    if p.family == "f":
        def inner(x: float) -> float:
            return (theta_lattice(x * p.alpha, z, cfg) - 1.0) - p.b * (
                theta_lattice(x * p.a * p.alpha, z, cfg) - 1.0
            )
    else:
        def inner(x: float) -> float:
            return x * w_b(x * p.alpha, 0.0, z, cfg) - (p.b / p.alpha) * (
                theta_lattice(x * p.alpha, z, cfg) - 1.0
            )

    def integrand(x: float) -> float:
        w = p.weight(x)
        if w < 0.0:
            raise InvalidParameter(f"weight must be nonnegative, got P({x}) = {w}")
        return w * inner(x)

    return _laplace_panels(integrand, rel_tol=1e-12)


def closed_form_energy(
    p: PotentialSpec, z: UpperHalfPoint, cfg: SeriesConfig = DEFAULT_CONFIG
) -> float:
    """Origin-free energy E_f(L) via the theta / W_b closed forms where one
    exists, falling back to direct summation for YukawaDiff and to the
    Fubini route for LaplaceWeighted."""
    if isinstance(p, Gaussian):
        return theta_lattice(p.alpha, z, cfg) - 1.0
    if isinstance(p, GaussianDiff):
        return (theta_lattice(p.alpha, z, cfg) - 1.0) - p.b * (
            theta_lattice(p.a * p.alpha, z, cfg) - 1.0
        )
    if isinstance(p, PolyGaussian):
        return w_b(p.alpha, p.b, z, cfg) + p.b / p.alpha
    if isinstance(p, YukawaDiff):
        return lattice_energy(p, z, cutoff_radius=8.0 / math.sqrt(min(p.alpha, 1.0)))
    return laplace_energy(p, z, cfg)
