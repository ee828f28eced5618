"""Dynnikov coordinates of multiloops on the punctured disk and braid entropy.

A multiloop on the disk with ``n`` punctures is encoded by ``2n - 4`` integers
``(a_1..a_{n-2}, b_1..b_{n-2})``.  Artin generators act by exact
piecewise-linear (max/min) formulas, so iterating a braid on a loop and
watching the coordinates grow gives the topological entropy without floating
point in the dynamics.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .braids import BraidWord
from .errors import IndexOutOfRange, TooFewPunctures, TooFewStrands

__all__ = [
    "LoopCoords",
    "EntropyEstimate",
    "canonical_loop",
    "apply_generator",
    "apply_braid",
    "complexity",
    "entropy",
]


@dataclass(frozen=True)
class LoopCoords:
    a: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self):
        a = tuple(int(x) for x in self.a)
        b = tuple(int(x) for x in self.b)
        if len(a) != len(b):
            raise ValueError("a and b must have the same length")
        if len(a) < 1:
            raise TooFewPunctures("loop coordinates need at least 3 punctures")
        if not any(a) and not any(b):
            raise ValueError("the zero vector encodes no loop")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def n_punctures(self) -> int:
        return len(self.a) + 2


def canonical_loop(n: int) -> LoopCoords:
    """The loop ``a = 0, b = -1``, which meets every curve separating punctures."""
    if n < 3:
        raise TooFewPunctures(f"need at least 3 punctures, got {n}")
    return LoopCoords((0,) * (n - 2), (-1,) * (n - 2))


def _pos(x: int) -> int:
    return x if x > 0 else 0


def _neg(x: int) -> int:
    return x if x < 0 else 0


def _act(a: list[int], b: list[int], k: int) -> None:
    """Apply letter ``k`` to the coordinate lists in place."""
    n = len(a) + 2
    i = abs(k)
    if k > 0:
        if i == 1:
            a0, b0 = a[0], b[0]
            a[0] = -b0 + _pos(a0 + _pos(b0))
            b[0] = a0 + _pos(b0)
        elif i == n - 1:
            a0, b0 = a[-1], b[-1]
            a[-1] = -b0 + _neg(a0 + _neg(b0))
            b[-1] = a0 + _neg(b0)
        else:
            a1, a2, b1, b2 = a[i - 2], a[i - 1], b[i - 2], b[i - 1]
            c = a1 - a2 - _pos(b2) + _neg(b1)
            a[i - 2] = a1 - _pos(b1) - _pos(_pos(b2) + c)
            b[i - 2] = b2 + _neg(c)
            a[i - 1] = a2 - _neg(b2) - _neg(_neg(b1) - c)
            b[i - 1] = b1 - _neg(c)
    else:
        if i == 1:
            a0, b0 = a[0], b[0]
            a[0] = b0 - _pos(_pos(b0) - a0)
            b[0] = _pos(b0) - a0
        elif i == n - 1:
            a0, b0 = a[-1], b[-1]
            a[-1] = b0 - _neg(_neg(b0) - a0)
            b[-1] = _neg(b0) - a0
        else:
            a1, a2, b1, b2 = a[i - 2], a[i - 1], b[i - 2], b[i - 1]
            d = a1 - a2 + _pos(b2) - _neg(b1)
            a[i - 2] = a1 + _pos(b1) + _pos(_pos(b2) - d)
            b[i - 2] = b2 - _pos(d)
            a[i - 1] = a2 + _neg(b2) + _neg(_neg(b1) + d)
            b[i - 1] = b1 + _pos(d)


def apply_generator(loop: LoopCoords, k: int) -> LoopCoords:
    if k == 0 or abs(k) > loop.n_punctures - 1:
        raise IndexOutOfRange(f"generator {k} on {loop.n_punctures} punctures")
    a, b = list(loop.a), list(loop.b)
    _act(a, b, k)
    return LoopCoords(a, b)


def apply_braid(loop: LoopCoords, braid: BraidWord) -> LoopCoords:
    if braid.n_strands != loop.n_punctures:
        raise ValueError("braid and loop have different puncture counts")
    a, b = list(loop.a), list(loop.b)
    for k in braid.letters:
        _act(a, b, k)
    return LoopCoords(a, b)


def complexity(loop: LoopCoords) -> int:
    """Sum of absolute coordinates, a proxy for the loop's length."""
    return sum(map(abs, loop.a)) + sum(map(abs, loop.b))


@dataclass(frozen=True)
class EntropyEstimate:
    value: float
    iterations: int
    converged: bool
    residual: float


def entropy(
    braid: BraidWord,
    tol: float = 1e-4,
    max_iter: int = 60,
    loop: LoopCoords | None = None,
) -> EntropyEstimate:
    """Estimate the growth exponent of loop complexity per application of ``braid``.

    The raw estimate after ``k`` applications is the increment
    ``h_k = log C_k - log C_{k-1}``.  Polynomial growth contributes a ``d/k``
    bias to ``h_k``, which Richardson extrapolation ``k h_k - (k-1) h_{k-1}``
    removes; convergence is declared once three successive extrapolated
    estimates agree to within ``tol`` and the latest raw increment agrees with
    them too.  Non-pseudo-Anosov braids typically return ``converged=False``
    with a value near zero.

    Coordinates are exact integers whose bit length grows linearly in ``k``, so
    total cost is quadratic in the final number of bits.
    """
    if braid.n_strands < 3:
        raise TooFewStrands("entropy needs a braid on at least 3 strands")
    if tol <= 0:
        raise ValueError("tol must be positive")
    if not braid.letters:
        return EntropyEstimate(0.0, 0, True, 0.0)
    start = loop if loop is not None else canonical_loop(braid.n_strands)
    if start.n_punctures != braid.n_strands:
        raise ValueError("seed loop and braid have different puncture counts")

    a, b = list(start.a), list(start.b)
    letters = braid.letters
    log_prev = math.log(complexity(start))
    h_prev = None
    estimates: list[float] = []
    residual = math.inf
    for k in range(1, max_iter + 1):
        for letter in letters:
            _act(a, b, letter)
        log_c = math.log(sum(map(abs, a)) + sum(map(abs, b)))
        h = log_c - log_prev
        log_prev = log_c
        if h_prev is not None:
            estimates.append(k * h - (k - 1) * h_prev)
            if len(estimates) >= 3:
                last = estimates[-3:]
                # a surviving gap between raw and extrapolated values means polynomial growth
                residual = max(max(last) - min(last), abs(h - last[-1]))
                if residual < tol:
                    return EntropyEstimate(max(estimates[-1], 0.0), k, True, residual)
        h_prev = h
    best = max(estimates[-1], 0.0) if estimates else max(h_prev or 0.0, 0.0)
    return EntropyEstimate(best, max_iter, False, residual)
