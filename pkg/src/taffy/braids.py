"""Braid words, the integer Burau representation at ``t = -1``, and exact polynomials.

Convention: the letter ``k`` stands for ``sigma_k``, which exchanges the rods in
positions ``k`` and ``k+1`` *clockwise* as seen from above; ``-k`` is the
counterclockwise exchange.  With this choice the Nitz figure-eight puller is
``sigma_1 sigma_2^-1``.  Letters act left to right.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import IndexOutOfRange, NoRootAboveOne, TooFewStrands

__all__ = [
    "BraidWord",
    "IntPolynomial",
    "permutation",
    "burau_minus_one",
    "char_poly",
    "largest_root",
    "spectral_radius",
    "spectral_radius_bound",
    "dominant_factor",
    "identity_matrix",
    "matmul",
]

IntMatrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class BraidWord:
    n_strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.n_strands < 2:
            raise TooFewStrands(f"a braid needs at least 2 strands, got {self.n_strands}")
        letters = tuple(int(k) for k in self.letters)
        for k in letters:
            if k == 0 or abs(k) >= self.n_strands:
                raise IndexOutOfRange(
                    f"generator {k} is not valid on {self.n_strands} strands"
                )
        object.__setattr__(self, "letters", letters)

    @classmethod
    def parse(cls, text: str, n_strands: int) -> BraidWord:
        """Parse whitespace (or comma) separated signed generator indices, e.g. ``"1 -2"``."""
        tokens = text.replace(",", " ").split()
        return cls(n_strands, tuple(int(tok) for tok in tokens))

    def __mul__(self, other: BraidWord) -> BraidWord:
        if other.n_strands != self.n_strands:
            raise ValueError("cannot concatenate braids on different strand counts")
        return BraidWord(self.n_strands, self.letters + other.letters)

    def __pow__(self, k: int) -> BraidWord:
        base = self if k >= 0 else self.inverse()
        return BraidWord(self.n_strands, base.letters * abs(k))

    def __len__(self):
        return len(self.letters)

    def inverse(self) -> BraidWord:
        return BraidWord(self.n_strands, tuple(-k for k in reversed(self.letters)))

    def mirror(self) -> BraidWord:
        return BraidWord(self.n_strands, tuple(-k for k in self.letters))

    def with_strands(self, n_strands: int) -> BraidWord:
        """The same word on more strands; the new strands sit inert on the right."""
        if n_strands < self.n_strands:
            raise ValueError("cannot drop strands")
        return BraidWord(n_strands, self.letters)

    def __str__(self):
        return " ".join(str(k) for k in self.letters)


def permutation(b: BraidWord) -> tuple[int, ...]:
    """Net permutation of positions: entry ``i`` is where the strand starting at ``i`` ends.

    Positions are 0-based.  For concatenation,
    ``permutation(b1 * b2)[i] == permutation(b2)[permutation(b1)[i]]``.
    """
    at = list(range(b.n_strands))  # at[position] = strand
    for k in b.letters:
        i = abs(k) - 1
        at[i], at[i + 1] = at[i + 1], at[i]
    result = [0] * b.n_strands
    for position, strand in enumerate(at):
        result[strand] = position
    return tuple(result)


def identity_matrix(n: int) -> IntMatrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def matmul(m: IntMatrix, n: IntMatrix) -> IntMatrix:
    cols = list(zip(*n))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in m)


def _generator_rows(m: list[list[int]], k: int) -> None:
    """Right-multiply ``m`` in place by the image of letter ``k``.

    The image of ``sigma_i`` is the identity with entries ``-1`` at ``(i, i-1)``
    and ``+1`` at ``(i, i+1)``; its inverse flips both signs.
    """
    i = abs(k) - 1
    s = 1 if k > 0 else -1
    dim = len(m)
    for row in m:
        ri = row[i]
        if i > 0:
            row[i - 1] -= s * ri
        if i + 1 < dim:
            row[i + 1] += s * ri


def burau_minus_one(b: BraidWord) -> IntMatrix:
    """Reduced Burau matrix at ``t = -1``, an ``(n-1) x (n-1)`` integer matrix."""
    if b.n_strands < 3:
        raise TooFewStrands("the reduced Burau matrix needs at least 3 strands")
    dim = b.n_strands - 1
    m = [list(row) for row in identity_matrix(dim)]
    for k in b.letters:
        _generator_rows(m, k)
    return tuple(tuple(row) for row in m)


class IntPolynomial:
    """Integer polynomial stored constant term first, leading coefficient nonzero."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        c = [int(x) for x in coeffs]
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        if not c:
            c = [0]
        self.coeffs = tuple(c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def reflect(self) -> IntPolynomial:
        """``p(-x)``, renormalised to a positive leading coefficient."""
        c = [x if i % 2 == 0 else -x for i, x in enumerate(self.coeffs)]
        if c[-1] < 0:
            c = [-x for x in c]
        return IntPolynomial(c)

    def __str__(self):
        terms = []
        for power in range(self.degree, -1, -1):
            c = self.coeffs[power]
            if c == 0 and self.degree > 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if power == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + ("x" if power == 1 else f"x^{power}")
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    @classmethod
    def parse(cls, text: str) -> IntPolynomial:
        """Inverse of ``str``: accepts e.g. ``"x^2 - 6x + 1"``."""
        s = text.replace(" ", "").replace("−", "-").replace("**", "^").replace("*", "")
        if s and s[0] not in "+-":
            s = "+" + s
        coeffs: dict[int, int] = {}
        i = 0
        while i < len(s):
            j = i + 1
            while j < len(s) and s[j] not in "+-":
                j += 1
            term, i = s[i:j], j
            sign = -1 if term[0] == "-" else 1
            body = term[1:]
            if "x" in body:
                mag, _, power = body.partition("x")
                power = int(power[1:]) if power.startswith("^") else 1
                mag = int(mag) if mag else 1
            else:
                mag, power = int(body), 0
            coeffs[power] = coeffs.get(power, 0) + sign * mag
        top = max(coeffs)
        return cls(coeffs.get(p, 0) for p in range(top + 1))


def char_poly(m: Sequence[Sequence[int]]) -> IntPolynomial:
    """``det(xI - m)`` by the Faddeev-LeVerrier recursion in exact integers."""
    n = len(m)
    a = [list(map(int, row)) for row in m]
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    mk = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I
        prev = coeffs[n - k + 1]
        mk = [
            [sum(a[i][l] * mk[l][j] for l in range(n)) + (prev if i == j else 0) for j in range(n)]
            for i in range(n)
        ]
        tr = sum(sum(a[i][l] * mk[l][i] for l in range(n)) for i in range(n))
        q, r = divmod(-tr, k)
        assert r == 0, "Faddeev-LeVerrier division must be exact over the integers"
        coeffs[n - k] = q
    return IntPolynomial(coeffs)


# --- exact rational polynomial helpers (coefficient lists, constant first) ---


def _trim(p: list) -> list:
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _divmod(p: list, q: list) -> tuple[list, list]:
    p = [Fraction(x) for x in p]
    q = [Fraction(x) for x in q]
    if len(p) < len(q):
        return [Fraction(0)], _trim(p)
    quot = [Fraction(0)] * (len(p) - len(q) + 1)
    for shift in range(len(p) - len(q), -1, -1):
        c = p[shift + len(q) - 1] / q[-1]
        quot[shift] = c
        for i, qc in enumerate(q):
            p[shift + i] -= c * qc
    return _trim(quot), _trim(p[: len(q) - 1] or [Fraction(0)])


def _derivative(p: list) -> list:
    return _trim([i * c for i, c in enumerate(p)][1:] or [0])


def _gcd(p: list, q: list) -> list:
    while any(q):
        p, q = q, _divmod(p, q)[1]
    return [Fraction(c) / Fraction(p[-1]) for c in p]


def _sturm_chain(p: list) -> list[list]:
    chain = [p, _derivative(p)]
    while len(chain[-1]) > 1:
        r = _divmod(chain[-2], chain[-1])[1]
        if not any(r):
            break
        chain.append([-c for c in r])
    return chain


def _eval(p: list, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _variations(chain: list[list], x: Fraction) -> int:
    signs = [v for v in (_eval(p, x) for p in chain) if v != 0]
    return sum(1 for u, v in zip(signs, signs[1:]) if (u < 0) != (v < 0))


def squarefree_part(p: IntPolynomial) -> list[Fraction]:
    coeffs = [Fraction(c) for c in p.coeffs]
    g = _gcd(coeffs, _derivative(coeffs))
    return _divmod(coeffs, g)[0] if len(g) > 1 else coeffs


def largest_root(p: IntPolynomial, tol: float = 1e-12) -> float:
    """Largest real root of ``p`` above 1, to within ``tol``.

    Roots are counted with a Sturm chain of the squarefree part and bracketed by
    bisection from the Cauchy bound; every sign decision is made in exact
    rational arithmetic.  Raises :class:`NoRootAboveOne` if ``p`` has no real
    root in ``(1, bound]``.
    """
    if p.degree < 1:
        raise NoRootAboveOne(f"constant polynomial {p}")
    q = squarefree_part(p)
    chain = _sturm_chain(q)
    lead = abs(Fraction(p.coeffs[-1]))
    bound = 1 + max(abs(Fraction(c)) for c in p.coeffs[:-1]) / lead
    lo, hi = Fraction(1), Fraction(bound)
    v_hi = _variations(chain, hi)
    if _variations(chain, lo) - v_hi <= 0:
        raise NoRootAboveOne(f"{p} has no real root in (1, {float(bound)}]")
    width = Fraction(tol)
    # invariant: the largest root lies in (lo, hi]
    while hi - lo > width:
        mid = (lo + hi) / 2
        v_mid = _variations(chain, mid)
        if v_mid - v_hi > 0:
            lo = mid
        else:
            hi, v_hi = mid, v_mid
    return float((lo + hi) / 2)


def spectral_radius(p: IntPolynomial, tol: float = 1e-12) -> float:
    """Largest ``|r|`` over the real roots ``r`` of ``p`` exceeding 1 in magnitude, else 1."""
    best = 1.0
    for candidate in (p, p.reflect()):
        try:
            best = max(best, largest_root(candidate, tol))
        except NoRootAboveOne:
            pass
    return best


def spectral_radius_bound(b: BraidWord, tol: float = 1e-12) -> float:
    """Spectral radius of the Burau matrix at ``t = -1``: a lower bound for the dilatation."""
    return spectral_radius(char_poly(burau_minus_one(b)), tol)


def _cyclotomic(k: int, _cache: dict[int, list[int]] = {}) -> list[int]:
    if k not in _cache:
        p = [Fraction(-1)] + [Fraction(0)] * (k - 1) + [Fraction(1)]
        for d in range(1, k):
            if k % d == 0:
                p = _divmod(p, _cyclotomic(d))[0]
        _cache[k] = [int(c) for c in p]
    return _cache[k]


def _totient(k: int) -> int:
    return sum(1 for i in range(1, k + 1) if math.gcd(i, k) == 1)


def dominant_factor(p: IntPolynomial) -> IntPolynomial:
    """Strip cyclotomic factors and orient so the dominant real root is positive.

    For a Burau characteristic polynomial ``(x - 1)(x^2 + 6x + 1)`` this returns
    ``x^2 - 6x + 1``.
    """
    coeffs = list(p.coeffs)
    k = 1
    while len(coeffs) > 1 and k <= 4 * len(coeffs) ** 2:
        if _totient(k) < len(coeffs):
            phi = _cyclotomic(k)
            quot, rem = _divmod(coeffs, phi)
            if len(rem) == 1 and rem[0] == 0:
                coeffs = [int(c) for c in quot]
                continue
        k += 1
    q = IntPolynomial(coeffs)
    if q.degree == 0:
        return q
    try:
        plus = largest_root(q)
    except NoRootAboveOne:
        plus = 1.0
    try:
        minus = largest_root(q.reflect())
    except NoRootAboveOne:
        minus = 1.0
    return q.reflect() if minus > plus else q
