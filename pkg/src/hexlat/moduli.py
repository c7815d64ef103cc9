"""Moduli parameter z in the upper half-plane, its symmetry group, and
fundamental-domain reduction.

A unit-density lattice is parametrized as L = sqrt(1/y) (Z + z Z) with
z = x + iy, y > 0.  The symmetry group of the lattice sums is generated by
z -> -1/z, z -> z + 1 and z -> -conj(z); its fundamental domain is
D = { |z| > 1, 0 < x < 1/2 } (half of the classical modular domain).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import InvalidParameter, RadiusTooLarge, ReductionDivergence

RT3_2 = math.sqrt(3.0) / 2.0

#: Group words are capped at this many generators.
MAX_WORD_LENGTH = 100

#: Hard cap on lattice enumeration size.
MAX_ENUMERATION = 10**8

#: Numerical slack for the closed-domain membership conditions.
BOUNDARY_TOL = 1e-12


@dataclass(frozen=True)
class UpperHalfPoint:
    """Point z = x + iy with y > 0."""

    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y) and self.y > 0.0):
            raise InvalidParameter(f"upper half-plane point needs finite x, y > 0; got ({self.x}, {self.y})")

    def as_complex(self) -> complex:
        return complex(self.x, self.y)

    def abs2(self) -> float:
        return self.x * self.x + self.y * self.y


class Generator(Enum):
    """Generators of the symmetry group (plus the inverse shift, for words)."""

    INVERT = "invert"        # z -> -1/z
    SHIFT_PLUS = "shift+"    # z -> z + 1
    SHIFT_MINUS = "shift-"   # z -> z - 1
    REFLECT = "reflect"      # z -> -conj(z)


GroupWord = tuple[Generator, ...]


def apply_generator(gen: Generator, z: UpperHalfPoint) -> UpperHalfPoint:
    if gen is Generator.INVERT:
        r2 = z.abs2()
        return UpperHalfPoint(-z.x / r2, z.y / r2)
    if gen is Generator.SHIFT_PLUS:
        return UpperHalfPoint(z.x + 1.0, z.y)
    if gen is Generator.SHIFT_MINUS:
        return UpperHalfPoint(z.x - 1.0, z.y)
    return UpperHalfPoint(-z.x, z.y)


def apply_word(word: GroupWord | list[Generator], z: UpperHalfPoint) -> UpperHalfPoint:
    """Apply generators left-to-right.  All generators preserve y > 0."""
    if len(word) > MAX_WORD_LENGTH:
        raise InvalidParameter(f"group word longer than {MAX_WORD_LENGTH}")
    for gen in word:
        z = apply_generator(gen, z)
    return z


def hexagonal_point() -> UpperHalfPoint:
    """z = exp(i pi / 3), the unit-density hexagonal lattice."""
    return UpperHalfPoint(0.5, RT3_2)


def in_fundamental_domain(z: UpperHalfPoint, tol: float = BOUNDARY_TOL) -> bool:
    """Membership in the closure of D = {|z| > 1, 0 < x < 1/2}."""
    return (
        -tol <= z.x <= 0.5 + tol
        and z.abs2() >= (1.0 - tol) * (1.0 - tol)
    )


def reduce_to_fundamental(z: UpperHalfPoint) -> tuple[UpperHalfPoint, GroupWord]:
    """Map z into the closure of the fundamental domain.

    Iterates: shift x into (-1/2, 1/2], invert if |z| < 1; finally reflect
    to x >= 0.  Returns the reduced point and the generator word realizing
    it (word applied to the input reproduces the output).  Points already in
    the closed domain come back unchanged with an empty word.
    """
    word: list[Generator] = []
    current = z
    for _ in range(100):
        k = math.ceil(current.x - 0.5)  # shift so that x lands in (-1/2, 1/2]
        if k != 0:
            if len(word) + abs(k) > MAX_WORD_LENGTH:
                raise ReductionDivergence("input too far from the fundamental domain (word cap)")
            gen = Generator.SHIFT_MINUS if k > 0 else Generator.SHIFT_PLUS
            word.extend([gen] * abs(k))
            current = UpperHalfPoint(current.x - k, current.y)
        if current.abs2() < 1.0 - BOUNDARY_TOL:
            if len(word) + 1 > MAX_WORD_LENGTH:
                raise ReductionDivergence("inversion loop exceeded the word cap")
            word.append(Generator.INVERT)
            current = apply_generator(Generator.INVERT, current)
            continue
        break
    else:
        raise ReductionDivergence("fundamental-domain reduction did not converge in 100 iterations")
    if current.x < 0.0:
        word.append(Generator.REFLECT)
        current = apply_generator(Generator.REFLECT, current)
    if not in_fundamental_domain(current, tol=1e-9):
        raise ReductionDivergence(f"reduction produced a point outside the closed domain: {current}")
    return current, tuple(word)


def lattice_norms(
    z: UpperHalfPoint, radius: float
) -> list[tuple[float, tuple[int, int]]]:
    """All (m, n) with |m z + n|^2 / y <= radius^2, with their norms.

    Returns (norm^2, (m, n)) pairs sorted by norm^2, origin included.  The
    enumeration bound comes from |m z + n|^2 / y >= m^2 y, so |m| <=
    radius / sqrt(y), and for each m the admissible n form the interval
    |m x + n| <= sqrt(y (radius^2 - m^2 y)).
    """
    if not radius > 0.0:
        raise InvalidParameter(f"radius must be > 0, got {radius}")
    x, y = z.x, z.y
    r2 = radius * radius
    mmax = int(math.floor(radius / math.sqrt(y)))
    estimate = math.pi * r2 + 2.0 * (mmax + 1) + 4.0 * radius
    if estimate > MAX_ENUMERATION:
        raise RadiusTooLarge(f"enumeration would visit ~{estimate:.3g} points")
    out: list[tuple[float, tuple[int, int]]] = []
    count = 0
    for m in range(-mmax, mmax + 1):
        rem = y * (r2 - m * m * y)
        if rem < 0.0:
            continue
        half = math.sqrt(rem)
        nlo = math.ceil(-m * x - half)
        nhi = math.floor(-m * x + half)
        count += max(0, nhi - nlo + 1)
        if count > MAX_ENUMERATION:
            raise RadiusTooLarge(f"enumeration exceeded {MAX_ENUMERATION} points")
        for n in range(nlo, nhi + 1):
            u = m * x + n
            q = (u * u + m * m * y * y) / y
            if q <= r2 * (1.0 + 1e-12):
                out.append((q, (m, n)))
    out.sort(key=lambda item: (item[0], item[1]))
    return out
