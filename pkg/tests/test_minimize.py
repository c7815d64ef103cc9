"""Tests for minimizer location and phase classification."""

import math

import pytest

from hexlat import (
    B_CRITICAL,
    Gaussian,
    GaussianDiff,
    LaplaceWeighted,
    Minimizer,
    NoMinimizer,
    PolyGaussian,
    ThetaDiffProblem,
    UpperHalfPoint,
    WProblem,
    YukawaDiff,
    hexagonal_point,
    minimize_generic,
    minimize_theta_difference,
    minimize_w,
    phase_scan,
    theta_lattice,
    w_b,
)
from hexlat.errors import InvalidParameter, NonPositiveAlpha
from hexlat.moduli import in_fundamental_domain

RT3_2 = math.sqrt(3.0) / 2.0
HEX = hexagonal_point()


def test_w_baseline_hexagonal():
    out = minimize_w(1.0, 0.0)
    assert isinstance(out, Minimizer)
    assert out.distance_to_hex < 1e-6
    assert not out.advisory


def test_w_boundary_coupling_inclusive():
    out = minimize_w(2.0, B_CRITICAL)
    assert isinstance(out, Minimizer)
    assert out.distance_to_hex < 1e-6


def test_w_flat_case_alpha_one():
    # W_{1/(2 pi)}(1; .) vanishes identically; the canonical minimizer is returned
    out = minimize_w(1.0, B_CRITICAL)
    assert isinstance(out, Minimizer)
    assert out.distance_to_hex == 0.0
    assert abs(out.value) < 1e-12


def test_w_supercritical_no_minimizer():
    out = minimize_w(1.0, 0.2)
    assert isinstance(out, NoMinimizer)
    assert out.asymptotic_slope_sign == -1
    assert list(out.witness_y) == sorted(out.witness_y)
    assert all(b < a for a, b in zip(out.witness_values, out.witness_values[1:]))
    assert out.witness_values[-1] < w_b(1.0, 0.2, HEX)


def test_w_witness_adaptive_start():
    # for larger alpha the energy first rises along x = 1/2, so the witness
    # may not start at y = rt3/2; it must still be strictly decreasing
    out = minimize_w(4.0, B_CRITICAL + 0.01)
    assert isinstance(out, NoMinimizer)
    assert len(out.witness_y) >= 13
    assert all(b < a for a, b in zip(out.witness_values, out.witness_values[1:]))
    assert out.witness_values[-1] < w_b(4.0, B_CRITICAL + 0.01, HEX)


def test_w_advisory_flag_below_alpha_one():
    out = minimize_w(0.5, 0.0)
    assert isinstance(out, Minimizer)
    assert out.advisory
    # outside the theorem hypotheses the minimizer is genuinely not hexagonal
    assert out.distance_to_hex > 0.1
    assert out.value < w_b(0.5, 0.0, HEX)


def test_w_invalid_alpha():
    with pytest.raises(NonPositiveAlpha):
        minimize_w(0.0, 0.0)


def test_comparison_principle():
    ref = minimize_w(1.5, B_CRITICAL)
    assert isinstance(ref, Minimizer)
    for b in (0.1, 0.0, -0.3):
        out = minimize_w(1.5, b)
        assert isinstance(out, Minimizer)
        assert math.hypot(out.z_star.x - ref.z_star.x, out.z_star.y - ref.z_star.y) < 1e-5


@pytest.mark.parametrize("alpha", [1.05, 1.5, 3.0])
def test_gamma_line_matches_2d_optimum(alpha):
    from scipy.optimize import minimize_scalar

    res = minimize_scalar(
        lambda y: w_b(alpha, B_CRITICAL, UpperHalfPoint(0.5, y)),
        bounds=(RT3_2, 50.0),
        method="bounded",
        options={"xatol": 1e-10},
    )
    out = minimize_w(alpha, B_CRITICAL)
    assert isinstance(out, Minimizer)
    assert abs(float(res.fun) - out.value) < 1e-7


def test_thetadiff_boundary_cases():
    out = minimize_theta_difference(1.0, 2.0, math.sqrt(2.0))
    assert isinstance(out, Minimizer) and out.distance_to_hex < 1e-6
    out = minimize_theta_difference(1.0, 3.0, 1.8)  # 1.8 > sqrt(3)
    assert isinstance(out, NoMinimizer)
    out = minimize_theta_difference(1.0, 2.0, 0.0)  # Montgomery case
    assert isinstance(out, Minimizer) and out.distance_to_hex < 1e-6


def test_thetadiff_requires_a_above_one():
    with pytest.raises(InvalidParameter):
        minimize_theta_difference(1.0, 1.0, 0.5)


def test_minimizer_in_closed_domain():
    out = minimize_w(2.0, 0.1)
    assert isinstance(out, Minimizer)
    assert in_fundamental_domain(out.z_star, tol=1e-9)


def test_no_minimizer_invariant_enforced():
    with pytest.raises(InvalidParameter):
        NoMinimizer(witness_y=(1.0, 2.0), witness_values=(1.0, 2.0), asymptotic_slope_sign=-1)
    with pytest.raises(InvalidParameter):
        NoMinimizer(witness_y=(2.0, 1.0), witness_values=(2.0, 1.0), asymptotic_slope_sign=-1)


def test_generic_gaussian_diff():
    out = minimize_generic(GaussianDiff(alpha=1.0, a=2.0, b=1.0))
    assert isinstance(out, Minimizer)
    assert out.distance_to_hex < 1e-5


def test_generic_yukawa():
    out = minimize_generic(YukawaDiff(alpha=1.0, a=4.0, b=0.5))
    assert isinstance(out, Minimizer)
    assert out.distance_to_hex < 1e-5


def test_generic_gaussian_matches_theta():
    out = minimize_generic(Gaussian(alpha=1.0))
    assert isinstance(out, Minimizer)
    assert out.distance_to_hex < 1e-5
    assert abs(out.value - (theta_lattice(1.0, HEX) - 1.0)) < 1e-10


def test_generic_poly_gaussian_supercritical_diverges():
    out = minimize_generic(PolyGaussian(alpha=1.0, b=0.3))
    assert isinstance(out, NoMinimizer)
    assert all(b < a for a, b in zip(out.witness_values, out.witness_values[1:]))


def test_generic_laplace_weighted():
    p = LaplaceWeighted(alpha=1.0, a=2.0, b=0.5, weight=lambda x: 1.0, family="f")
    out = minimize_generic(p)
    assert isinstance(out, Minimizer)
    assert out.distance_to_hex < 1e-4


def test_phase_scan_w_boundary_constant():
    res = phase_scan([1.0, 2.0, 4.0], [0.10, 0.15, 0.159, 0.17], WProblem())
    boundaries = set(res.boundaries.values())
    assert boundaries == {0.159}
    for cell in res.rows:
        expect = "hexagonal" if cell.b <= B_CRITICAL else "no-minimizer"
        assert cell.classification == expect


def test_phase_scan_thetadiff_boundary():
    res = phase_scan([1.0], [1.40, 1.4142, 1.45], ThetaDiffProblem(a=2.0))
    assert res.boundaries[1.0] == 1.4142  # sqrt(2) = 1.41421...
    res = phase_scan([1.0, 2.0], [0.05, 0.10], WProblem())
    assert all(c.classification == "hexagonal" for c in res.rows)


def test_phase_scan_validation():
    with pytest.raises(InvalidParameter):
        phase_scan([], [0.1], WProblem())
    with pytest.raises(InvalidParameter):
        ThetaDiffProblem(a=1.0)
