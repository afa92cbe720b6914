import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from wprm.binomial import (
    Binomial,
    in_defining_lattice,
    in_vanishing_ideal,
    is_homogeneous,
    scale_binomial,
    vanishes_on_affine_torus,
    weighted_degree,
)
from wprm.errors import LengthMismatch, TooLarge, WPRMError
from wprm.field import field_new
from wprm.semigroup import herzog_condition, herzog_generators
from wprm.validation import random_binomials

EXAMPLE_GENERATORS = ["t2^6 - t1^3*t3^3", "t1^9 - t2^3*t3^3", "t1^6*t2^3 - t3^6"]


def test_weighted_degree():
    assert weighted_degree((0, 0, 0), (3, 4, 5)) == 0
    assert weighted_degree((1, 0, 1), (3, 4, 5)) == 8
    assert weighted_degree((12, 0), (2, 3)) == 24
    with pytest.raises(LengthMismatch):
        weighted_degree((1, 2), (1, 2, 3))


def test_zero_binomial_rejected():
    with pytest.raises(WPRMError):
        Binomial((1, 2), (1, 2))
    with pytest.raises(LengthMismatch):
        Binomial((1,), (1, 2))


def test_homogeneity():
    for w1, w2 in [(1, 1), (2, 3), (4, 7)]:
        assert is_homogeneous(Binomial((w2, 0), (0, w1)), (w1, w2))
    assert not is_homogeneous(Binomial((1, 0), (0, 1)), (2, 3))
    assert is_homogeneous(Binomial((0, 6, 0), (3, 0, 3)), (3, 4, 5))


def test_defining_lattice_examples():
    for q in (3, 4, 5, 7):
        for w1, w2 in [(1, 2), (2, 3), (3, 5)]:
            bin = Binomial(((q - 1) * w2, 0), (0, (q - 1) * w1))
            assert in_defining_lattice(bin, q, (w1, w2))
    assert not in_defining_lattice(Binomial((3, 0), (0, 2)), 5, (2, 3))
    assert in_defining_lattice(Binomial((0, 6, 0), (3, 0, 3)), 4, (3, 4, 5))
    with pytest.raises(LengthMismatch):
        in_defining_lattice(Binomial((1, 0), (0, 1)), 3, (1, 1, 1))


def test_scale_binomial():
    bin = Binomial((0, 2), (3, 0))
    assert scale_binomial(bin, 1) == bin
    assert scale_binomial(bin, 4) == Binomial((0, 8), (12, 0))
    assert scale_binomial(Binomial((0, 1), (1, 0)), 6) == Binomial((0, 6), (6, 0))
    with pytest.raises(WPRMError):
        scale_binomial(bin, 0)


def test_affine_vanishing_examples():
    F3, F4 = field_new(3), field_new(4)
    assert vanishes_on_affine_torus(Binomial((2, 5), (4, 1)), field_new(3), (1, 1))
    assert not vanishes_on_affine_torus(Binomial((1, 0), (0, 1)), F3, (1, 1))
    assert vanishes_on_affine_torus(Binomial.parse("t1^9 - t2^3*t3^3"), F4, (3, 4, 5))


def test_vanishing_ideal_examples():
    F4 = field_new(4)
    for text in EXAMPLE_GENERATORS:
        assert in_vanishing_ideal(Binomial.parse(text), F4, (3, 4, 5))
    for q in (3, 4, 5):
        F = field_new(q)
        w = (2, 3, 5)
        for i in range(1, len(w)):
            a = [0] * 3
            b = [0] * 3
            a[i] = w[0] * (q - 1)
            b[0] = w[i] * (q - 1)
            assert in_vanishing_ideal(Binomial(tuple(a), tuple(b)), F, w)
    assert not in_vanishing_ideal(Binomial((1, 0), (0, 1)), field_new(3), (1, 1))


def test_guard(monkeypatch):
    monkeypatch.setenv("WPRM_GUARD_LIMIT", "10")
    with pytest.raises(TooLarge):
        vanishes_on_affine_torus(Binomial((1, 0, 0), (0, 1, 0)), field_new(4), (1, 1, 1))


def test_text_and_json_formats():
    bin = Binomial.parse("t1^9 - t2^3*t3^3")
    assert bin == Binomial((9, 0, 0), (0, 3, 3))
    assert str(bin) == "t1^9 - t2^3*t3^3"
    assert Binomial.from_json(bin.to_json()) == bin
    assert Binomial.parse("t2 - 1", s=3) == Binomial((0, 1, 0), (0, 0, 0))
    assert Binomial((1, 0), (0, 1)) == Binomial((0, 1), (1, 0))
    assert len({Binomial((1, 0), (0, 1)), Binomial((0, 1), (1, 0))}) == 1
    with pytest.raises(WPRMError):
        Binomial.parse("t1 + t2")
    with pytest.raises(LengthMismatch):
        Binomial.parse("t4 - t1", s=2)


exps = st.lists(st.integers(0, 12), min_size=3, max_size=3)


@settings(max_examples=200)
@given(exps, exps)
def test_text_round_trip(a, b):
    if a == b:
        return
    bin = Binomial(tuple(a), tuple(b))
    assert Binomial.parse(str(bin), s=3) == bin
    assert Binomial.from_json(bin.to_json()) == bin


INSTANCES = [(2, (1, 2)), (3, (1, 1)), (4, (2, 3)), (5, (1, 2, 3)), (4, (3, 4, 5)), (9, (2, 5)), (8, (1, 3))]


@pytest.mark.parametrize("q,w", INSTANCES)
def test_lattice_identity_sampled(q, w):
    F = field_new(q)
    rng = random.Random(q * 1000 + sum(w))
    sample = random_binomials(rng, q, w, 400)
    kinds = {(in_defining_lattice(b, q, w), is_homogeneous(b, w)) for b in sample}
    if q > 2:
        assert kinds == {(True, True), (False, True), (False, False)}
    for bin in sample:
        assert in_vanishing_ideal(bin, F, w) == in_defining_lattice(bin, q, w)
        congruent = all(x % (q - 1) == 0 for x in bin.difference())
        assert vanishes_on_affine_torus(bin, F, w) == congruent


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7])
def test_scaled_perp_vectors_lie_in_lattice(q):
    w = (3, 4, 5)
    for v in itertools.product(range(-4, 5), repeat=3):
        if sum(x * y for x, y in zip(v, w)) != 0 or not any(v):
            continue
        a = tuple(max(x, 0) for x in v)
        b = tuple(max(-x, 0) for x in v)
        assert in_defining_lattice(scale_binomial(Binomial(a, b), q - 1), q, w)


@pytest.mark.parametrize("w", [(2, 3), (1, 4, 6), (2, 3, 7), (4, 6, 9)])
@pytest.mark.parametrize("q", [3, 4, 5])
def test_scaled_herzog_generators_vanish(q, w):
    assert herzog_condition(w)
    F = field_new(q)
    for h in herzog_generators(w):
        a, b = h.exponents(len(w))
        assert in_vanishing_ideal(scale_binomial(Binomial(a, b), q - 1), F, w)
