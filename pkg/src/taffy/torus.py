"""Linear maps of the unit torus with exact rational arithmetic.

A map is an integer matrix ``[[a, b], [c, d]]`` with determinant one, acting
on points of ``[0, 1)^2`` by ``x -> M x mod 1``.  The involution
``x -> -x mod 1`` commutes with every such map; its four fixed points
``W0..W3`` are the half-integer points.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .errors import NotAnosov, NotUnimodular

__all__ = [
    "TorusMap",
    "TorusPoint",
    "PeriodicOrbit",
    "QuadraticDilatation",
    "W0",
    "W1",
    "W2",
    "W3",
    "HALF_POINTS",
    "make_map",
    "apply",
    "involution",
    "dilatation",
    "quadratic_dilatation",
    "half_point_permutation",
    "periodic_point_count",
    "periodic_orbits",
    "conjugate",
]


@dataclass(frozen=True)
class TorusMap:
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.det != 1:
            raise NotUnimodular(
                f"matrix ({self.a} {self.b}; {self.c} {self.d}) has determinant {self.det}"
            )

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    @property
    def trace(self) -> int:
        return self.a + self.d

    @property
    def rows(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.a, self.b), (self.c, self.d))

    @property
    def is_anosov(self) -> bool:
        return abs(self.trace) > 2

    def __matmul__(self, other: TorusMap) -> TorusMap:
        a, b, c, d = _mul(self.rows, other.rows)
        return TorusMap(a, b, c, d)

    def inverse(self) -> TorusMap:
        return TorusMap(self.d, -self.b, -self.c, self.a)

    def __pow__(self, n: int) -> TorusMap:
        base = self if n >= 0 else self.inverse()
        result = TorusMap(1, 0, 0, 1)
        for _ in range(abs(n)):
            result = result @ base
        return result

    def __str__(self):
        return f"({self.a} {self.b}; {self.c} {self.d})"


def _mul(m, n):
    (a, b), (c, d) = m
    (e, f), (g, h) = n
    return a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h


def make_map(a: int, b: int, c: int, d: int) -> TorusMap:
    """Build a torus map, raising :class:`NotUnimodular` unless ``ad - bc = 1``."""
    return TorusMap(int(a), int(b), int(c), int(d))


@dataclass(frozen=True, order=True)
class TorusPoint:
    """A point of the torus stored with canonical coordinates in ``[0, 1)``."""

    x: Fraction
    y: Fraction

    def __post_init__(self):
        x, y = Fraction(self.x), Fraction(self.y)
        object.__setattr__(self, "x", x - math.floor(x))
        object.__setattr__(self, "y", y - math.floor(y))

    def __iter__(self) -> Iterator[Fraction]:
        yield self.x
        yield self.y

    def __str__(self):
        return f"({self.x}, {self.y})"


W0 = TorusPoint(Fraction(0), Fraction(0))
W1 = TorusPoint(Fraction(1, 2), Fraction(0))
W2 = TorusPoint(Fraction(1, 2), Fraction(1, 2))
W3 = TorusPoint(Fraction(0), Fraction(1, 2))
HALF_POINTS = (W0, W1, W2, W3)


@dataclass(frozen=True)
class PeriodicOrbit:
    period: int
    points: tuple[TorusPoint, ...]

    def __post_init__(self):
        if len(self.points) != self.period:
            raise ValueError("orbit length does not match its period")

    def is_involution_invariant(self) -> bool:
        return {involution(p) for p in self.points} == set(self.points)


def apply(m: TorusMap, p: TorusPoint) -> TorusPoint:
    return TorusPoint(m.a * p.x + m.b * p.y, m.c * p.x + m.d * p.y)


def involution(p: TorusPoint) -> TorusPoint:
    return TorusPoint(-p.x, -p.y)


@dataclass(frozen=True)
class QuadraticDilatation:
    """Exact form ``(|t| + sqrt(t^2 - 4)) / 2`` of an Anosov dilatation."""

    trace: int
    discriminant: int

    @property
    def value(self) -> float:
        return (abs(self.trace) + math.sqrt(self.discriminant)) / 2

    def polynomial(self) -> tuple[int, int, int]:
        """Coefficients (constant first) of ``x^2 - |t| x + 1``."""
        return (1, -abs(self.trace), 1)

    def closed_form(self) -> str:
        """E.g. ``"3+2√2"`` for trace 6 or ``"(3+√5)/2"`` for trace 3."""
        t = abs(self.trace)
        square, free = _split_square(self.discriminant)
        halve = t % 2 == 0 and square % 2 == 0
        whole, k = (t // 2, square // 2) if halve else (t, square)
        surd = f"{'' if k == 1 else k}√{free}"
        return f"{whole}+{surd}" if halve else f"({whole}+{surd})/2"


def _split_square(n: int) -> tuple[int, int]:
    """Write ``n = s^2 * r`` with ``r`` squarefree; returns ``(s, r)``."""
    s, r, f = 1, n, 2
    while f * f <= r:
        while r % (f * f) == 0:
            r //= f * f
            s *= f
        f += 1
    return s, r


def quadratic_dilatation(m: TorusMap) -> QuadraticDilatation:
    if not m.is_anosov:
        raise NotAnosov(f"map {m} has trace {m.trace}")
    return QuadraticDilatation(m.trace, m.trace * m.trace - 4)


def dilatation(m: TorusMap) -> float:
    """Spectral radius of the matrix; :class:`NotAnosov` when ``|trace| <= 2``."""
    return quadratic_dilatation(m).value


def half_point_permutation(m: TorusMap) -> tuple[int, int, int, int]:
    """Induced permutation of ``(W0, W1, W2, W3)``: entry ``i`` is the index of ``M Wi``."""
    return tuple(HALF_POINTS.index(apply(m, w)) for w in HALF_POINTS)


def _power_minus_identity(m: TorusMap, n: int) -> tuple[int, int, int, int]:
    p = m**n
    return p.a - 1, p.b, p.c, p.d - 1


def periodic_point_count(m: TorusMap, n: int) -> int:
    """Number of points whose period divides ``n``, i.e. ``|det(M^n - I)|``."""
    if n < 1:
        raise ValueError("n must be positive")
    if not m.is_anosov:
        raise NotAnosov(f"map {m} has trace {m.trace}")
    a, b, c, d = _power_minus_identity(m, n)
    return abs(a * d - b * c)


def _column_hermite(a: int, b: int, c: int, d: int) -> tuple[int, int, int]:
    """Lower-triangular ``(h11, h21, h22)`` spanning the same lattice as the columns."""
    # extended gcd on the first row via column operations
    col1, col2 = [a, c], [b, d]
    while col2[0] != 0:
        q = col1[0] // col2[0]
        col1 = [col1[0] - q * col2[0], col1[1] - q * col2[1]]
        col1, col2 = col2, col1
    if col1[0] < 0:
        col1 = [-col1[0], -col1[1]]
    if col2[1] < 0:
        col2 = [-col2[0], -col2[1]]
    return col1[0], col1[1], col2[1]


def _solutions(m: TorusMap, n: int) -> list[TorusPoint]:
    """All ``x`` in the torus with ``(M^n - I) x = 0 mod 1``."""
    a, b, c, d = _power_minus_identity(m, n)
    det = a * d - b * c
    h11, _, h22 = _column_hermite(a, b, c, d)
    # y ranges over representatives of Z^2 / (M^n - I) Z^2; x = (M^n - I)^{-1} y
    points = set()
    for y1 in range(h11):
        for y2 in range(h22):
            x = Fraction(d * y1 - b * y2, det)
            y = Fraction(-c * y1 + a * y2, det)
            points.add(TorusPoint(x, y))
    return sorted(points)


def periodic_orbits(m: TorusMap, n: int) -> list[PeriodicOrbit]:
    """All orbits of exact period ``n``, each starting from its smallest point."""
    periodic_point_count(m, n)  # validates n and the Anosov condition
    seen: set[TorusPoint] = set()
    orbits = []
    for p in _solutions(m, n):
        if p in seen:
            continue
        orbit = [p]
        q = apply(m, p)
        while q != p:
            orbit.append(q)
            q = apply(m, q)
        seen.update(orbit)
        if len(orbit) == n:
            orbits.append(PeriodicOrbit(n, tuple(orbit)))
    return orbits


def conjugate(m: TorusMap, g: TorusMap) -> TorusMap:
    """``g M g^{-1}``."""
    if not isinstance(g, TorusMap):
        g = make_map(*g)
    return g @ m @ g.inverse()
