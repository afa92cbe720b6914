"""Acceptance criteria, one PASS/FAIL line each in the terminal summary."""

import itertools
import math
import random
import time

from wprm.binomial import (
    Binomial,
    in_defining_lattice,
    in_vanishing_ideal,
    scale_binomial,
    vanishes_on_affine_torus,
)
from wprm.codes import (
    build_code,
    dimension,
    dimension_formula_1d,
    distance_formula_1d,
    minimum_distance_bruteforce,
    parameter_table,
    regularity_bound_1d,
)
from wprm.field import field_new
from wprm.hilbert import IntegerPolynomial as P, index_of_regularity, torus_hilbert_series
from wprm.semigroup import (
    herzog_condition,
    herzog_condition_any_order,
    herzog_generators,
    semigroup_new,
)
from wprm.torus import lemma_point, orbit_of, torus_points
from wprm.validation import BUDGETS, coprime_pairs, random_binomials, weight_grid

TABLE_DIMS = [1, 0, 0, 1, 1, 1, 1, 1, 2, 2, 2, 2, 3, 3, 3, 4, 4, 4, 5, 5, 6, 6, 6, 7, 7, 8, 8, 7, 9, 9, 8]
TABLE_DELTA = [9, None, None, 9, 9, 9, 9, 9, 6, 6, 6, 6, 6, 6, 6, 3, 3, 4, 3, 3, 3, 3, 3, 2, 2, 2, 2, 2, 1, 1, 2]

GRID = BUDGETS["default"]


def test_c1_table_reproduction(criterion):
    with criterion("C1 q=4 w=(3,4,5) table, d=0..30, exact"):
        start = time.perf_counter()
        rows = parameter_table(field_new(4), (3, 4, 5), 30)
        elapsed = time.perf_counter() - start
        assert [r.dimension for r in rows] == TABLE_DIMS
        assert [r.min_distance for r in rows] == TABLE_DELTA
        assert elapsed < 60, f"{elapsed:.1f}s"


def test_c2_hilbert_golden(criterion):
    with criterion("C2 Hilbert series of q=4 w=(3,4,5), regularity 31 two ways"):
        start = time.perf_counter()
        hs = torus_hilbert_series(4, (3, 4, 5))
        target = P({0: 1, 24: -1, 27: -1, 30: -1, 39: 1, 42: 1})
        denom = P.one_minus_t(5) * P.one_minus_t(4) * P.one_minus_t(3)
        assert hs.numerator * denom == target * hs.denominator
        assert hs.numerator.degree() == target.degree()
        g = semigroup_new((3, 4, 5)).frobenius
        assert index_of_regularity(4, (3, 4, 5), g) == 31
        assert hs.numerator.degree() + 1 - 12 == 31
        assert time.perf_counter() - start < 1


def test_c3_two_weight_closed_forms(criterion):
    with criterion("C3 s=2 dimension, distance and MDS closed forms vs brute force"):
        start = time.perf_counter()
        checked = 0
        for q in (3, 4, 5, 7):
            f = field_new(q)
            for w1, w2 in coprime_pairs(6):
                sg = semigroup_new((w1, w2))
                for d in range(regularity_bound_1d(q, w1, w2) + 1):
                    code = build_code(f, (w1, w2), d)
                    k = dimension(code)
                    assert k == dimension_formula_1d(q, w1, w2, d), (q, w1, w2, d)
                    if sg.contains(d):
                        delta = minimum_distance_bruteforce(code)
                        assert delta == distance_formula_1d(q, w1, w2, d), (q, w1, w2, d)
                        assert delta == code.length - k + 1, (q, w1, w2, d)
                    else:
                        assert k == 0
                    checked += 1
        assert checked > 1000
        assert time.perf_counter() - start < 300


LATTICE_INSTANCES = [
    (2, (2, 3)),
    (3, (1, 1)),
    (4, (1, 2)),
    (5, (2, 3)),
    (7, (2, 5)),
    (8, (3, 4)),
    (9, (2, 3)),
    (4, (3, 4, 5)),
    (5, (1, 2, 3)),
    (7, (3, 4, 5)),
    (16, (1, 2, 3)),
    (5, (1, 2, 3, 4)),
]


def test_c4_lattice_identity(criterion):
    with criterion("C4 vanishing ideal = lattice ideal on 10^4 binomials per instance"):
        start = time.perf_counter()
        rng = random.Random(2024)
        for q, w in LATTICE_INSTANCES:
            assert (q - 1) ** len(w) <= 10**5
            f = field_new(q)
            sample = random_binomials(rng, q, w, 10_000)
            members = 0
            for b in sample:
                lat = in_defining_lattice(b, q, w)
                members += lat
                assert in_vanishing_ideal(b, f, w) == lat, (q, w, str(b))
                congruent = all(x % (q - 1) == 0 for x in b.difference())
                assert vanishes_on_affine_torus(b, f, w) == congruent, (q, w, str(b))
            # both sides of the equivalence must be exercised
            assert 0 < members < len(sample)
        assert time.perf_counter() - start < 120


def test_c5_coefficient_identity(criterion):
    with criterion("C5 Hilbert function equals evaluation rank up to regularity + max(w)"):
        for q in GRID.fields:
            f = field_new(q)
            for w in weight_grid(GRID):
                hs = torus_hilbert_series(q, w)
                top = hs.regularity + max(w)
                coeffs = hs.coefficients(top + 1)
                for d in range(top + 1):
                    assert coeffs[d] == dimension(build_code(f, w, d)), (q, w, d)


def test_c6_length(criterion):
    with criterion("C6 |T(w)| = (q-1)^(s-1), orbits partition (K*)^s"):
        for q in GRID.fields:
            f = field_new(q)
            everything = set(itertools.product(f.nonzero_powers().tolist(), repeat=3))
            for w in weight_grid(GRID) + [(1, 2, 3), (2, 3, 5)]:
                s = len(w)
                pts = torus_points(f, w)
                assert len(pts) == (q - 1) ** (s - 1), (q, w)
                covered = set()
                for p in pts:
                    orbit = set(orbit_of(p.coords, f, w))
                    assert len(orbit) == q - 1
                    assert not covered & orbit
                    covered |= orbit
                assert len(covered) == (q - 1) ** s
                if s == 3:
                    assert covered == everything


def test_c7_single_point_loci(criterion):
    with criterion("C7 t1^w2 - a^r t2^w1 vanishes at exactly one point, r=0..q-2"):
        for q in (2, 3, 4, 5, 7, 8, 9, 11):
            f = field_new(q)
            for w1, w2 in coprime_pairs(6):
                pts = torus_points(f, (w1, w2))
                found = []
                for r in range(q - 1):
                    ar = f.exp(r)
                    zeros = [
                        p for p in pts
                        if f.pow(p.coords[0], w2) == f.mul(ar, f.pow(p.coords[1], w1))
                    ]
                    assert len(zeros) == 1, (q, w1, w2, r)
                    assert zeros[0] == lemma_point(f, w1, w2, r)
                    found.append(zeros[0])
                assert len(set(found)) == q - 1
                assert set(found) == set(pts)


def test_c8_frobenius(criterion):
    with criterion("C8 gaps by DP agree with Sylvester for pairs <= 30; gaps(3,4,5) = {1,2}"):
        for w1, w2 in coprime_pairs(30):
            if w1 == 1:
                assert semigroup_new((w1, w2)).gaps == ()
                continue
            sg = semigroup_new((w1, w2))
            assert sg.frobenius == w1 * w2 - w1 - w2
            assert len(sg.gaps) == (w1 - 1) * (w2 - 1) // 2
        assert set(semigroup_new((3, 4, 5)).gaps) == {1, 2}


def _tuples(first, top=8):
    for s in (3, 4):
        for rest in itertools.product(range(1, top + 1), repeat=s - 1):
            w = (first,) + rest
            if math.gcd(*w) == 1:
                yield w


def test_c9a_herzog_two_weights(criterion):
    with criterion("C9a Herzog condition holds for every coprime pair"):
        for w1, w2 in coprime_pairs(30):
            assert herzog_condition((w1, w2)) and herzog_condition((w2, w1))


def test_c9b_herzog_first_weight_one(criterion):
    with criterion("C9b Herzog condition holds whenever w1 = 1 (s=3,4, entries <= 8)"):
        for w in _tuples(1):
            assert herzog_condition(w), w


def test_c9c_herzog_first_weight_two(criterion):
    with criterion("C9c Herzog condition holds whenever w1 = 2 (s=3,4, entries <= 8)"):
        bad = [w for w in _tuples(2) if not herzog_condition(w)]
        assert not bad, f"{len(bad)} counterexamples, first {bad[0]}"


def test_c9d_no_ordering_for_345(criterion):
    with criterion("C9d no ordering of (3,4,5) satisfies the Herzog condition"):
        assert herzog_condition_any_order((3, 4, 5)) is None


def test_c9e_generators_vanish(criterion):
    with criterion("C9e Herzog generators scaled by q-1 lie in the vanishing ideal"):
        count = 0
        candidates = list(coprime_pairs(7)) + [w for w in _tuples(1, 5)] + [w for w in _tuples(2, 5)]
        for w in candidates:
            if not herzog_condition(w):
                continue
            for q in (2, 3, 4, 5):
                if (q - 1) ** len(w) > 10**4:
                    continue
                f = field_new(q)
                for gen in herzog_generators(w):
                    b = scale_binomial(Binomial(*gen.exponents(len(w))), q - 1)
                    assert in_vanishing_ideal(b, f, w), (w, q, str(b))
                    count += 1
        assert count > 100


def test_c10_example_generators(criterion):
    with criterion("C10 the three listed binomials vanish on T(3,4,5) over GF(4)"):
        f = field_new(4)
        for text in ("t2^6 - t1^3*t3^3", "t1^9 - t2^3*t3^3", "t1^6*t2^3 - t3^6"):
            b = Binomial.parse(text, 3)
            assert in_vanishing_ideal(b, f, (3, 4, 5)), text
            assert in_defining_lattice(b, 4, (3, 4, 5)), text
