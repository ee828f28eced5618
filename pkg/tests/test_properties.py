"""Randomised checks of the algebraic laws the modules rely on."""

import math
from collections import Counter
from functools import lru_cache

from hypothesis import assume, given, settings
from hypothesis import strategies as st

from taffy.braids import (
    BraidWord,
    burau_minus_one,
    char_poly,
    identity_matrix,
    matmul,
    permutation,
    spectral_radius_bound,
)
from taffy.devices import DEFAULT_AXIS, catalog, compile_braid
from taffy.dynnikov import LoopCoords, apply_braid, apply_generator, entropy

TOL = 1e-4
CATALOG = {spec.name: spec for spec in catalog()}


@st.composite
def loops(draw, min_n=3, max_n=8):
    n = draw(st.integers(min_n, max_n))
    coords = st.lists(st.integers(-10**6, 10**6), min_size=n - 2, max_size=n - 2)
    a, b = draw(coords), draw(coords)
    assume(any(a) or any(b))
    return LoopCoords(a, b)


@st.composite
def words(draw, min_n=3, max_n=7, max_len=12):
    n = draw(st.integers(min_n, max_n))
    gen = st.integers(-(n - 1), n - 2).map(lambda k: k if k < 0 else k + 1)
    return BraidWord(n, tuple(draw(st.lists(gen, max_size=max_len))))


@st.composite
def penner_words(draw, max_n=5):
    """Words with odd generators positive, even ones negative, each used at least once."""
    n = draw(st.integers(3, max_n))
    gens = list(range(1, n))
    extra = draw(st.lists(st.sampled_from(gens), max_size=4))
    order = draw(st.permutations(gens + extra))
    return BraidWord(n, tuple(k if k % 2 else -k for k in order))


# --- loop coordinates -------------------------------------------------------


@given(loops(), st.data())
def test_inverse_law(loop, data):
    k = data.draw(st.integers(1, loop.n_punctures - 1)) * data.draw(st.sampled_from([1, -1]))
    assert apply_generator(apply_generator(loop, k), -k) == loop


@given(loops(min_n=4), st.data())
def test_braid_relation(loop, data):
    k = data.draw(st.integers(1, loop.n_punctures - 2))
    n = loop.n_punctures
    lhs = apply_braid(loop, BraidWord(n, (k, k + 1, k)))
    rhs = apply_braid(loop, BraidWord(n, (k + 1, k, k + 1)))
    assert lhs == rhs


@given(loops(min_n=5), st.data())
def test_far_commutation(loop, data):
    n = loop.n_punctures
    k = data.draw(st.integers(1, n - 3))
    m = data.draw(st.integers(k + 2, n - 1))
    sk, sm = data.draw(st.sampled_from([1, -1])), data.draw(st.sampled_from([1, -1]))
    assert apply_braid(loop, BraidWord(n, (sk * k, sm * m))) == apply_braid(loop, BraidWord(n, (sm * m, sk * k)))


# --- Burau ------------------------------------------------------------------


@given(words(), st.data())
def test_burau_homomorphism(w1, data):
    w2 = BraidWord(w1.n_strands, data.draw(words(w1.n_strands, w1.n_strands)).letters)
    assert burau_minus_one(w1 * w2) == matmul(burau_minus_one(w1), burau_minus_one(w2))


@given(words())
def test_burau_inverse_law(w):
    n = w.n_strands - 1
    assert burau_minus_one(w * w.inverse()) == identity_matrix(n)
    assert matmul(burau_minus_one(w), burau_minus_one(w.inverse())) == identity_matrix(n)


# --- entropy ----------------------------------------------------------------


@given(penner_words(), words(max_len=3))
def test_entropy_conjugation_invariance(b, g):
    g = BraidWord(b.n_strands, tuple(k for k in g.letters if abs(k) < b.n_strands))
    conj = g * b * g.inverse()
    e1, e2 = entropy(b, tol=TOL), entropy(conj, tol=TOL)
    assert e1.converged and e2.converged
    assert abs(e1.value - e2.value) < 3 * TOL


@given(penner_words(max_n=4), st.integers(2, 4))
def test_entropy_power_law(b, k):
    e1, ek = entropy(b, tol=TOL), entropy(b**k, tol=TOL)
    assert e1.converged and ek.converged
    assert abs(ek.value - k * e1.value) < 3 * TOL


# --- compiling rod motions --------------------------------------------------


@lru_cache(maxsize=None)
def reference(name):
    b = compile_braid(CATALOG[name])
    n = max(b.n_strands, 3)
    return b, char_poly(burau_minus_one(b.with_strands(n))), entropy(b.with_strands(n), tol=TOL).value


def cycle_type(perm):
    seen, lengths = set(), []
    for start in range(len(perm)):
        if start in seen:
            continue
        length, i = 0, start
        while i not in seen:
            seen.add(i)
            i = perm[i]
            length += 1
        lengths.append(length)
    return Counter(lengths)


@given(st.sampled_from(sorted(CATALOG)), st.integers(16, 4096))
def test_compile_sampling_robustness(name, samples):
    base, poly, _ = reference(name)
    b = compile_braid(CATALOG[name], samples=samples, axis_angle=DEFAULT_AXIS)
    assert permutation(b) == permutation(base)
    assert char_poly(burau_minus_one(b.with_strands(max(b.n_strands, 3)))) == poly


@given(st.sampled_from(sorted(CATALOG)), st.floats(0, 2 * math.pi, allow_nan=False))
def test_compile_projection_robustness(name, axis):
    base, poly, h = reference(name)
    b = compile_braid(CATALOG[name], axis_angle=axis)
    padded = b.with_strands(max(b.n_strands, 3))
    assert cycle_type(permutation(b)) == cycle_type(permutation(base))
    # a different axis conjugates the braid, which the Burau polynomial cannot see
    assert char_poly(burau_minus_one(padded)) == poly
    assert abs(entropy(padded, tol=TOL).value - h) < 3 * TOL


# --- across modules ---------------------------------------------------------


@settings(max_examples=300)
@given(words(3, 3, 8))
def test_three_strand_entropy_matches_burau(b):
    """On three strands the Burau matrix at t = -1 is the torus lift, so it sees the full dilatation."""
    m = burau_minus_one(b)
    assume(abs(m[0][0] + m[1][1]) > 2)
    e = entropy(b, tol=1e-8, max_iter=200)
    assert e.converged
    assert abs(e.value - math.log(spectral_radius_bound(b))) < 1e-6
