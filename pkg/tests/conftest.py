"""Shared fixtures and brute-force oracles.

The oracles build on nothing but direct lattice enumeration, so they stay
independent of the series expansions they are used to check.
"""

from __future__ import annotations

import math

import pytest

from hexlat import UpperHalfPoint, lattice_norms

RT3_2 = math.sqrt(3.0) / 2.0


def brute_theta(alpha: float, z: UpperHalfPoint, radius: float = 8.0) -> float:
    return sum(math.exp(-math.pi * alpha * q) for q, _ in lattice_norms(z, radius))


def brute_w(alpha: float, b: float, z: UpperHalfPoint, radius: float = 8.0) -> float:
    return sum(
        (q - b / alpha) * math.exp(-math.pi * alpha * q) for q, _ in lattice_norms(z, radius)
    )


def brute_energy(f, z: UpperHalfPoint, radius: float = 8.0) -> float:
    """sum of f(norm^2) over nonzero lattice points."""
    return sum(f(q) for q, _ in lattice_norms(z, radius) if q > 0.0)


@pytest.fixture
def sample_points() -> list[UpperHalfPoint]:
    return [
        UpperHalfPoint(0.5, RT3_2),
        UpperHalfPoint(0.0, 1.0),
        UpperHalfPoint(0.3, 1.2),
        UpperHalfPoint(0.13, 2.6),
        UpperHalfPoint(0.47, 0.95),
    ]
