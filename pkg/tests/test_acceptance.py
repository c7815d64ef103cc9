"""Acceptance criteria, one test per criterion, at their stated tolerances.

Run with ``pytest tests/test_acceptance.py -s`` to see one PASS/FAIL line per
criterion.  Two sub-criteria are expected to fail and are left failing on
purpose (see the README section "Known discrepancies"): the alpha =
0.5 instance of criterion 3 (the energy there is genuinely minimized by a
non-hexagonal lattice, consistent with the alpha >= 1 hypothesis of the
theorems) and criterion 9's inner-region floor of 1/2 (the printed expression
bottoms out at ~0.45 at the region corner).
"""

import math

import numpy as np
import pytest

from conftest import brute_energy, brute_theta, brute_w
from hexlat import (
    B_CRITICAL,
    GaussianDiff,
    Minimizer,
    NoMinimizer,
    PolyGaussian,
    UpperHalfPoint,
    dx_w,
    dy_w,
    hexagonal_point,
    lattice_energy,
    minimize_theta_difference,
    minimize_w,
    mu,
    nu,
    theta_difference,
    theta_lattice,
    w_b,
)
from hexlat.energy import theta_difference_via_w_integral
from hexlat.verify import (
    eps_c_terms,
    eps_d1,
    eps_d2,
    geometric_tail_constant,
    la_function,
    lb_lower_bound,
    ld_function,
    rc_inner_expression,
)

PI = math.pi
RT3_2 = math.sqrt(3.0) / 2.0
HEX = hexagonal_point()


def report(criterion: str, ok: bool, detail: str) -> None:
    print(f"ACCEPTANCE {criterion}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, f"criterion {criterion}: {detail}"


def _random_domain_points(seed: int, count: int, y_max: float = 10.0):
    rng = np.random.default_rng(seed)
    pts = []
    while len(pts) < count:
        x = float(rng.uniform(1e-6, 0.5 - 1e-6))
        ymin = math.sqrt(max(1.0 - x * x, 0.75)) + 1e-6
        pts.append(UpperHalfPoint(x, float(rng.uniform(ymin, y_max))))
    return pts


def test_criterion_1_vanishing_identity():
    worst = max(abs(w_b(1.0, B_CRITICAL, z)) for z in _random_domain_points(101, 100))
    report("1", worst < 1e-10, f"|W(1;z)| sup over 100 seeded z = {worst:.3g} (< 1e-10)")


def test_criterion_2_duality():
    zs = _random_domain_points(102, 5)
    worst = 0.0
    for alpha in (0.1, 0.5, 1.0, 2.0, 10.0):
        for z in zs:
            t = theta_lattice(alpha, z)
            worst = max(worst, abs(theta_lattice(1.0 / alpha, z) - alpha * t) / t)
    report("2", worst < 1e-12, f"duality residual sup = {worst:.3g} (< 1e-12)")


@pytest.mark.parametrize("alpha", [0.5, 1.0, 2.0, 5.0])
def test_criterion_3_montgomery_baseline(alpha):
    out = minimize_w(alpha, 0.0)
    ok = isinstance(out, Minimizer) and out.distance_to_hex < 1e-5
    detail = (
        f"alpha={alpha}: distance to hexagonal = "
        f"{out.distance_to_hex if isinstance(out, Minimizer) else 'n/a'}"
    )
    if alpha == 0.5 and not ok:
        detail += " (expected failure: below the alpha >= 1 hypothesis the minimizer is genuinely non-hexagonal)"
    report("3", ok, detail)


@pytest.mark.parametrize("alpha", [1.0, 1.5, 2.0, 4.0])
def test_criterion_4_w_phase(alpha):
    below = minimize_w(alpha, B_CRITICAL - 0.01)
    ok = isinstance(below, Minimizer) and below.distance_to_hex < 1e-5
    above = minimize_w(alpha, B_CRITICAL + 0.01)
    ok = ok and isinstance(above, NoMinimizer)
    if ok:
        vals = above.witness_values
        ok = all(b < a for a, b in zip(vals, vals[1:]))
        ok = ok and vals[-1] < w_b(alpha, B_CRITICAL + 0.01, HEX)
    report("4", ok, f"alpha={alpha}: hexagonal below b_c, decreasing witness above")


@pytest.mark.parametrize("alpha", [1.0, 2.0])
def test_criterion_5_theta_difference_phase(alpha):
    ok = True
    for a, b in ((2.0, math.sqrt(2.0)), (3.0, math.sqrt(3.0)), (4.0, 2.0)):
        out = minimize_theta_difference(alpha, a, b)
        ok = ok and isinstance(out, Minimizer) and out.distance_to_hex < 1e-5
    for a, b in ((2.0, 1.5), (3.0, 1.8), (4.0, 2.1)):
        out = minimize_theta_difference(alpha, a, b)
        ok = ok and isinstance(out, NoMinimizer)
    report("5", ok, f"alpha={alpha}: boundary-inclusive hexagonal side, nonexistence above sqrt(a)")


def test_criterion_6_mixed_derivative_constant():
    h = k = 5e-4

    def wyy(alpha: float) -> float:
        up = w_b(alpha, B_CRITICAL, UpperHalfPoint(0.5, RT3_2 + h))
        mid = w_b(alpha, B_CRITICAL, UpperHalfPoint(0.5, RT3_2))
        dn = w_b(alpha, B_CRITICAL, UpperHalfPoint(0.5, RT3_2 - h))
        return (up - 2 * mid + dn) / (h * h)

    val = (wyy(1.0 + k) - wyy(1.0 - k)) / (2 * k)
    report("6", abs(val - 1.127521373) < 1e-5, f"nested FD gives {val:.9f} (target 1.127521373 +- 1e-5)")


def test_criterion_7_constant_suite():
    checks = []
    m, n = mu(0.5), nu(0.5)
    checks.append(abs((1 + n) / (1 - m) - 1.186694067) < 1e-8)
    checks.append(abs((1 + m) / (1 - m) - 1.074612508) < 1e-8)
    checks.append(abs((1 + n) / (1 + m) - 1.104299511) < 1e-8)
    lo, hi = 0.25, 0.35
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        if 1.0 - nu(mid) > 0:
            hi = mid
        else:
            lo = mid
    checks.append(abs(0.5 * (lo + hi) - 0.2989938127) < 1e-9)
    checks.append(abs(PI * PI - 3.5 * PI + 1.5 - 0.374030114) < 1e-9)

    def ratio(alpha: float) -> float:
        c = 2.0 * math.sqrt(3.0) * PI
        v = c / alpha - 1.5 - alpha**2 * (c * alpha - 1.5) * math.exp(-c * (alpha - 1 / alpha))
        return v / (alpha * alpha - 1.0)

    limit = 0.5 * (ratio(1 + 1e-6) + ratio(1 - 1e-6))
    checks.append(abs(limit - 81.84546604) < 1e-3)
    checks.append(sum(k**6 * math.exp(-math.sqrt(3) * PI * k) for k in range(2, 60)) <= 1.27e-3)
    report("7", all(checks), f"constant suite results: {checks}")


def test_criterion_8_error_term_ceilings():
    # Ceilings are printed to 3-4 significant digits; comparisons allow
    # half a unit in the last printed digit.  sigma3's printed exponent is
    # corrected from 1e-6 to 1e-5: its own defining series at the stated
    # extremal point evaluates to 1.776e-5 (mantissa matches the print).
    m, n = mu(0.5), nu(0.5)
    t4 = sum(k**4 * math.exp(-1.1 * PI * RT3_2 * (k * k - 1)) for k in range(2, 40))
    t2 = sum(k * k * math.exp(-1.1 * PI * RT3_2 * (k * k - 1)) for k in range(2, 40))
    sigma1 = (1 + m) / (1 - m) * t4
    sigma2 = (1 + n) / (1 - m) * t2
    rt3 = math.sqrt(3.0)
    e4 = sum(k**4 * math.exp(-rt3 * PI * ((k * k - 1) * RT3_2 - 1 / (2 * rt3))) for k in range(2, 40))
    e2 = sum(k * k * math.exp(-rt3 * PI * ((k * k - 1) * RT3_2 - 1 / (2 * rt3))) for k in range(2, 40))
    sigma3 = e4 / PI
    sigma4 = (3 / PI) * (1 + PI / 3) * e2
    ec1, ec2, ec3, ec4 = (float(v) for v in eps_c_terms(1.2, 1.0))
    ed1 = float(eps_d1(1.2, RT3_2))
    ed2 = float(eps_d2(1.2, RT3_2))
    bounds = [
        ("sigma1", sigma1, 2.169e-3, 5e-7),
        ("sigma2", sigma2, 6.75e-4, 5e-6),
        ("sigma3", sigma3, 1.777e-5, 5e-9),   # corrected exponent, see note above
        ("sigma4", sigma4, 2.727e-5, 5e-9),
        ("eps_c1", ec1, 5.68e-4, 5e-7),
        ("eps_c2", ec2, 1.23e-5, 5e-8),
        ("eps_c3", ec3, 2.27e-3, 5e-6),
        ("eps_c4", ec4, 1.24e-5, 5e-8),
        ("eps_d1", ed1, 3.92e-4, 5e-7),
        ("eps_d2", ed2, 9.27e-4, 5e-7),
    ]
    bad = [name for name, got, cap, slack in bounds if got > cap + slack]
    report("8", not bad, f"ceiling violations: {bad or 'none'}")


def _grid_min(fn, a_lo, a_hi, y_lo, y_hi, npts):
    worst = math.inf
    for a in np.linspace(a_lo, a_hi, npts):
        lo = y_lo(a) if callable(y_lo) else y_lo
        hi = y_hi(a) if callable(y_hi) else y_hi
        worst = min(worst, float(np.min(fn(float(a), np.linspace(lo, hi, npts)))))
    return worst


def _stable(fn, lims) -> bool:
    coarse = _grid_min(fn, *lims, 60)
    fine = _grid_min(fn, *lims, 120)
    return abs(fine - coarse) / max(abs(coarse), abs(fine), 1e-12) < 0.10


def test_criterion_9_lb_floor():
    def gap(a, ys):
        bmax = np.maximum(geometric_tail_constant(ys, 1.0 / a), geometric_tail_constant(ys, a))
        return lb_lower_bound(a, ys, bmax) - 0.316 * (a * a - 1.0)

    lims = (1.0, 1.2, 1.0, 6.0)
    worst = _grid_min(gap, *lims, 60)
    report("9a", worst >= -1e-9 and _stable(gap, lims),
           f"L_b - 0.316(alpha^2-1) grid min = {worst:.4g}, stable under refinement")


def test_criterion_9_ld_positive():
    lims = (1.2, 6.0, RT3_2, lambda a: 5.0 * a / 6.0)
    worst = _grid_min(ld_function, *lims, 60)
    report("9b", worst > 0 and _stable(ld_function, lims),
           f"L_d grid min = {worst:.4g} (> 0), stable under refinement")


def test_criterion_9_la_floor():
    lims = (1.0, 1.2, RT3_2, 1.0)
    worst = _grid_min(la_function, *lims, 60)
    report("9c", worst >= 0.5 - 1e-9 and _stable(la_function, lims),
           f"L_a grid min = {worst:.4g} (>= 0.5), stable under refinement")


def test_criterion_9_rc_inner_floor():
    lims = (1.2, 6.0, lambda a: 5.0 * a / 6.0, 8.0)
    worst = _grid_min(rc_inner_expression, *lims, 60)
    ok = worst >= 0.5 - 1e-9 and _stable(rc_inner_expression, lims)
    detail = f"inner-region expression grid min = {worst:.5f} (claimed >= 0.5)"
    if not ok:
        detail += (" - expected failure: the printed floor fails at the region corner "
                   "(alpha, y) = (1.2, 1); positivity holds and the minimum is refinement-stable")
    report("9d", ok, detail)


def _domain_grid(nx, ny, y_max):
    pts = []
    for i in range(nx):
        x = 0.02 + (0.48 - 0.02) * i / (nx - 1)
        ymin = math.sqrt(max(1.0 - x * x, 0.75)) + 1e-3
        for j in range(ny):
            pts.append(UpperHalfPoint(x, ymin + (y_max - ymin) * j / (ny - 1)))
    return pts


def test_criterion_10_monotonicity():
    grid = _domain_grid(20, 20, 5.0)
    worst_dx = max(dx_w(alpha, z) for alpha in (1.05, 1.2, 2.0, 5.0) for z in grid)
    worst_dy = min(
        dy_w(alpha, UpperHalfPoint(0.5, float(y)))
        for alpha in (1.1, 1.5, 3.0)
        for y in np.linspace(RT3_2, 6.0, 40)
    )
    worst_flat = max(abs(dx_w(1.0, z)) for z in grid[::13])
    ok = worst_dx < 0 and worst_dy >= -1e-12 and worst_flat < 1e-10
    report("10", ok,
           f"max dx_w = {worst_dx:.3g} (< 0), min dy_w on the line = {worst_dy:.3g} "
           f"(>= -1e-12), |dx_w| at alpha=1 = {worst_flat:.3g} (< 1e-10)")


def test_criterion_11_oracle_equivalence():
    rng = np.random.default_rng(111)
    worst = 0.0
    for _ in range(10):
        alpha = float(rng.uniform(1.0, 2.5))
        a = float(rng.uniform(1.5, 3.0))
        b = float(rng.uniform(-0.5, 0.5))
        z = _random_domain_points(int(rng.integers(1, 10**6)), 1, y_max=2.5)[0]
        t = theta_lattice(alpha, z)
        worst = max(worst, abs(t - brute_theta(alpha, z)) / t)
        wv = w_b(alpha, b, z)
        worst = max(worst, abs(wv - brute_w(alpha, b, z)) / max(abs(wv), 1e-3))
        td = theta_difference(alpha, a, b, z)
        td_ref = brute_theta(alpha, z) - b * brute_theta(a * alpha, z)
        worst = max(worst, abs(td - td_ref) / max(abs(td), 1e-3))
        pg = lattice_energy(PolyGaussian(alpha=alpha, b=b), z, 8.0)
        pg_ref = brute_energy(lambda q: (q - b / alpha) * math.exp(-PI * alpha * q), z)
        worst = max(worst, abs(pg - pg_ref) / max(abs(pg_ref), 1e-3))
        gd = lattice_energy(GaussianDiff(alpha=alpha, a=a, b=b), z, 8.0)
        gd_ref = brute_energy(
            lambda q: math.exp(-PI * alpha * q) - b * math.exp(-PI * a * alpha * q), z
        )
        worst = max(worst, abs(gd - gd_ref) / max(abs(gd_ref), 1e-3))
    report("11", worst < 1e-11, f"closed forms vs radius-8 direct sums: sup residual {worst:.3g}")


def test_criterion_12_integral_identity():
    worst = 0.0
    zs = [HEX, UpperHalfPoint(0.3, 1.2), UpperHalfPoint(0.1, 1.6)]
    for alpha, a in ((1.0, 2.0), (1.3, 3.0)):
        for z in zs:
            lhs = theta_difference(alpha, a, math.sqrt(a), z)
            rhs = theta_difference_via_w_integral(alpha, a, z)
            worst = max(worst, abs(lhs - rhs) / abs(lhs))
    report("12", worst < 1e-8, f"integral identity residual sup = {worst:.3g} (< 1e-8)")


def test_criterion_13_derivative_cross_checks():
    h = 1e-6
    worst = 0.0
    for alpha, z in (
        (1.5, UpperHalfPoint(0.25, 1.0)),
        (2.0, UpperHalfPoint(0.37, 1.3)),
        (1.1, UpperHalfPoint(0.12, 1.6)),
    ):
        fx = (
            w_b(alpha, B_CRITICAL, UpperHalfPoint(z.x + h, z.y))
            - w_b(alpha, B_CRITICAL, UpperHalfPoint(z.x - h, z.y))
        ) / (2 * h)
        vx = dx_w(alpha, z)
        if abs(vx) > 1e-8:
            worst = max(worst, abs(vx - fx) / abs(vx))
        fy = (
            w_b(alpha, B_CRITICAL, UpperHalfPoint(z.x, z.y + h))
            - w_b(alpha, B_CRITICAL, UpperHalfPoint(z.x, z.y - h))
        ) / (2 * h)
        vy = dy_w(alpha, z)
        if abs(vy) > 1e-8:
            worst = max(worst, abs(vy - fy) / abs(vy))
    report("13", worst < 1e-6, f"derivatives vs finite differences: sup rel err {worst:.3g}")
