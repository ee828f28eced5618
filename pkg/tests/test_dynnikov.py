import math

import pytest

from taffy.braids import BraidWord
from taffy.dynnikov import LoopCoords, apply_braid, apply_generator, canonical_loop, complexity, entropy
from taffy.errors import IndexOutOfRange, TooFewPunctures, TooFewStrands

LOG_PHI2 = math.log((3 + math.sqrt(5)) / 2)
LOG_CHI2 = math.log(3 + 2 * math.sqrt(2))


def test_canonical_loop():
    assert canonical_loop(4) == LoopCoords((0, 0), (-1, -1))
    with pytest.raises(TooFewPunctures):
        canonical_loop(2)
    with pytest.raises(ValueError):
        LoopCoords((0,), (0,))


def test_generator_bounds():
    with pytest.raises(IndexOutOfRange):
        apply_generator(canonical_loop(3), 3)
    with pytest.raises(IndexOutOfRange):
        apply_generator(canonical_loop(3), 0)


def test_known_orbit_under_sigma1():
    # a single twist: b counts the turns, growth is linear
    loop = canonical_loop(3)
    seen = [loop]
    for _ in range(4):
        seen.append(apply_generator(seen[-1], 1))
    assert [(x.a, x.b) for x in seen] == [((0,), (-1,)), ((1,), (0,)), ((1,), (1,)), ((1,), (2,)), ((1,), (3,))]


def test_nitz_growth_is_exact_and_fibonacci_like():
    b = BraidWord(3, (1, -2))
    loop = canonical_loop(3)
    sizes = []
    for _ in range(12):
        loop = apply_braid(loop, b)
        sizes.append(complexity(loop))
    ratios = [sizes[i + 1] / sizes[i] for i in range(len(sizes) - 1)]
    assert ratios[-1] == pytest.approx((3 + math.sqrt(5)) / 2, rel=1e-6)
    assert all(isinstance(x, int) for x in loop.a + loop.b)


def test_entropy_values():
    e = entropy(BraidWord(3, (1, -2)))
    assert e.converged and e.iterations <= 60
    assert e.value == pytest.approx(LOG_PHI2, abs=1e-4)
    e = entropy(BraidWord(3, (1, 1, -2, -2)))
    assert e.converged
    assert e.value == pytest.approx(LOG_CHI2, abs=1e-4)


def test_entropy_tight_tolerance():
    e = entropy(BraidWord(3, (1, -2)), tol=1e-10)
    assert e.converged
    assert e.value == pytest.approx(LOG_PHI2, abs=1e-9)


def test_entropy_of_trivial_and_reducible_braids():
    empty = entropy(BraidWord(4, ()))
    assert empty.value == 0 and empty.converged
    twist = entropy(BraidWord(3, (1, 1)))
    assert not twist.converged
    assert twist.value < 0.05
    periodic = entropy(BraidWord(3, (1, 2)))
    assert periodic.value < 1e-3


def test_entropy_errors():
    with pytest.raises(TooFewStrands):
        entropy(BraidWord(2, (1,)))
    with pytest.raises(ValueError):
        entropy(BraidWord(3, (1,)), tol=0)
    with pytest.raises(ValueError):
        entropy(BraidWord(3, (1,)), loop=canonical_loop(4))


def test_mixograph_fixture_braid():
    b = BraidWord.parse("3 2 3 5 -6 2 3 4 3 -1 -2 5", 7)
    assert entropy(b).value == pytest.approx(math.log(4.185838503524337), abs=1e-3)
