"""Formula-versus-brute-force suites used by ``wprm check``."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .binomial import (
    Binomial,
    in_defining_lattice,
    in_vanishing_ideal,
    vanishes_on_affine_torus,
)
from .codes import (
    dimension,
    dimension_formula_1d,
    distance_formula_1d,
    evaluation_matrix,
    EvaluationCode,
    minimum_distance_bruteforce,
    regularity_bound_1d,
)
from .field import GF, field_new
from .hilbert import index_of_regularity, torus_hilbert_series
from .semigroup import semigroup_new
from .torus import lemma_point, monomials_of_degree, torus_points

LATTICE_SAMPLE_LIMIT = 10**5


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failed: int = 0
    failures: list[str] = field(default_factory=list)

    def record(self, ok: bool, message: str) -> None:
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if len(self.failures) < 20:
                self.failures.append(message)

    @property
    def ok(self) -> bool:
        return self.failed == 0


@dataclass(frozen=True)
class Budget:
    fields: tuple[int, ...]
    pair_max: int
    extra_weights: tuple[tuple[int, ...], ...]
    lattice_samples: int


BUDGETS = {
    "small": Budget((2, 3, 4, 5), 4, ((3, 4, 5),), 200),
    "default": Budget((2, 3, 4, 5, 7), 6, ((3, 4, 5),), 1000),
    "large": Budget((2, 3, 4, 5, 7, 8, 9), 8, ((3, 4, 5), (1, 2, 3), (2, 3, 5)), 10_000),
}


def coprime_pairs(top: int) -> list[tuple[int, int]]:
    return [(a, b) for a in range(1, top + 1) for b in range(a + 1, top + 1) if math.gcd(a, b) == 1]


def weight_grid(budget: Budget) -> list[tuple[int, ...]]:
    return list(coprime_pairs(budget.pair_max)) + list(budget.extra_weights)


def _codes_by_degree(f: GF, w: Sequence[int], d_values: Sequence[int]) -> Iterator[EvaluationCode]:
    pts = torus_points(f, w)
    logs = [p.log_coords for p in pts]
    for d in d_values:
        mons = monomials_of_degree(d, w)
        yield EvaluationCode(f, tuple(w), d, pts, mons, evaluation_matrix(f, mons, logs))


def suite_closed_forms(budget: Budget, threads: int = 1) -> SuiteResult:
    res = SuiteResult("s=2 dimension/distance/MDS closed forms")
    for q in budget.fields:
        f = field_new(q)
        for w1, w2 in coprime_pairs(budget.pair_max):
            sg = semigroup_new((w1, w2))
            top = regularity_bound_1d(q, w1, w2)
            for code in _codes_by_degree(f, (w1, w2), range(0, top + 1)):
                d = code.degree
                k = dimension(code)
                tag = f"q={q} w=({w1},{w2}) d={d}"
                res.record(k == dimension_formula_1d(q, w1, w2, d), f"{tag}: dim {k}")
                if sg.contains(d):
                    delta = minimum_distance_bruteforce(code, threads)
                    res.record(delta == distance_formula_1d(q, w1, w2, d), f"{tag}: delta {delta}")
                    res.record(delta == code.length - k + 1, f"{tag}: not MDS")
    return res


def suite_hilbert_coefficients(budget: Budget) -> SuiteResult:
    res = SuiteResult("Hilbert function equals evaluation rank")
    for q in budget.fields:
        f = field_new(q)
        for w in weight_grid(budget):
            hs = torus_hilbert_series(q, w)
            g = semigroup_new(w).frobenius
            reg = index_of_regularity(q, w, g)
            tag = f"q={q} w={w}"
            res.record(reg == hs.numerator.degree() + 1 - sum(w), f"{tag}: regularity formulas disagree")
            top = reg + max(w)
            coeffs = hs.coefficients(top + 1)
            for code in _codes_by_degree(f, w, range(top + 1)):
                k = dimension(code)
                res.record(coeffs[code.degree] == k, f"{tag} d={code.degree}: phi {coeffs[code.degree]} rank {k}")
    return res


def suite_torus_length(budget: Budget) -> SuiteResult:
    res = SuiteResult("torus size (q-1)^(s-1)")
    for q in budget.fields:
        f = field_new(q)
        for w in weight_grid(budget):
            n = len(torus_points(f, w))
            res.record(n == (q - 1) ** (len(w) - 1), f"q={q} w={w}: {n} points")
    return res


def suite_single_point_loci(budget: Budget) -> SuiteResult:
    res = SuiteResult("t1^w2 - a^r t2^w1 has one zero per r")
    for q in budget.fields:
        f = field_new(q)
        for w1, w2 in coprime_pairs(budget.pair_max):
            pts = torus_points(f, (w1, w2))
            seen = set()
            for r in range(q - 1):
                zeros = [
                    p for p in pts
                    if f.pow(p.coords[0], w2) == f.exp(r) * f.pow(p.coords[1], w1)
                ]
                lp = lemma_point(f, w1, w2, r)
                res.record(zeros == [lp], f"q={q} w=({w1},{w2}) r={r}: zeros {zeros}")
                seen.add(lp)
            res.record(len(seen) == len(pts), f"q={q} w=({w1},{w2}): points not exhausted")
    return res


def random_binomials(rng: random.Random, q: int, w: Sequence[int], n: int) -> list[Binomial]:
    """A mix of uniform, lattice, homogeneous-only and congruent-only binomials."""
    s = len(w)
    bound = 2 * (q - 1) * max(w)

    def perp_vector() -> tuple[int, ...] | None:
        for _ in range(50):
            head = [rng.randint(-max(w), max(w)) for _ in range(s - 1)]
            tot = sum(x * y for x, y in zip(head, w))
            if tot % w[-1] == 0:
                v = tuple(head) + (-tot // w[-1],)
                if any(v):
                    return v
        return None

    def from_difference(v: Sequence[int]) -> Binomial | None:
        if max(abs(x) for x in v) > bound:
            return None
        shift = [rng.randint(0, bound - abs(x)) for x in v]
        a = tuple(max(x, 0) + c for x, c in zip(v, shift))
        b = tuple(max(-x, 0) + c for x, c in zip(v, shift))
        return Binomial(a, b) if a != b else None

    out: list[Binomial] = []
    while len(out) < n:
        kind = rng.randrange(4)
        cand = None
        if kind == 0:
            a = tuple(rng.randint(0, bound) for _ in range(s))
            b = tuple(rng.randint(0, bound) for _ in range(s))
            cand = Binomial(a, b) if a != b else None
        elif kind in (1, 2):
            v = perp_vector()
            if v is not None:
                if kind == 1:
                    v = tuple((q - 1) * x for x in v)
                cand = from_difference(v)
        else:
            u = [rng.randint(-2, 2) * (q - 1) for _ in range(s)]
            cand = from_difference(u) if any(u) else None
        if cand is not None:
            out.append(cand)
    return out


def lattice_instances(budget: Budget) -> list[tuple[int, tuple[int, ...]]]:
    return [
        (q, tuple(w))
        for q in budget.fields
        for w in weight_grid(budget)
        if (q - 1) ** len(w) <= LATTICE_SAMPLE_LIMIT
    ]


def suite_lattice_identity(budget: Budget, seed: int = 0) -> SuiteResult:
    res = SuiteResult("vanishing ideal equals lattice ideal on binomials")
    rng = random.Random(seed)
    for q, w in lattice_instances(budget):
        f = field_new(q)
        for bin in random_binomials(rng, q, w, budget.lattice_samples):
            tag = f"q={q} w={w} {bin}"
            res.record(in_vanishing_ideal(bin, f, w) == in_defining_lattice(bin, q, w), f"{tag}: ideal")
            congruent = all(x % (q - 1) == 0 for x in bin.difference())
            res.record(vanishes_on_affine_torus(bin, f, w) == congruent, f"{tag}: affine")
    return res


def run_checks(budget_name: str = "default", threads: int = 1, seed: int = 0) -> list[SuiteResult]:
    budget = BUDGETS[budget_name]
    return [
        suite_closed_forms(budget, threads),
        suite_hilbert_coefficients(budget),
        suite_torus_length(budget),
        suite_single_point_loci(budget),
        suite_lattice_identity(budget, seed),
    ]
