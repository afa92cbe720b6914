"""Numerical semigroups generated by a weight vector.

Gaps, Frobenius number, membership, factorization counts, and Herzog's
ordering condition for complete-intersection presentations.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .errors import ConditionNotSatisfied, InvalidWeights, NegativeInput, TooManyWeights

Weights = tuple[int, ...]

MAX_PERMUTED_WEIGHTS = 8


def validate_weights(w: Iterable[int], require_coprime: bool = True) -> Weights:
    """Normalise ``w`` to a tuple, checking positivity and (by default) gcd 1."""
    w = tuple(int(x) for x in w)
    if not w:
        raise InvalidWeights("weight vector must be nonempty")
    if any(x <= 0 for x in w):
        raise InvalidWeights(f"weights must be positive, got {w}")
    if require_coprime and math.gcd(*w) != 1:
        raise InvalidWeights(f"weights must have gcd 1, got gcd {math.gcd(*w)} for {w}")
    return w


@dataclass(frozen=True)
class NumericalSemigroup:
    """The semigroup ``<w_1, ..., w_s>`` with its gaps precomputed.

    ``frobenius`` is -1 when there are no gaps, so that "every integer
    above the Frobenius number is a member" holds unconditionally.
    """

    weights: Weights
    gaps: tuple[int, ...]
    frobenius: int
    _table: tuple[bool, ...] = field(repr=False, compare=False)

    def contains(self, d: int) -> bool:
        if d < 0:
            raise NegativeInput(f"membership is defined for d >= 0, got {d}")
        if d < len(self._table):
            return self._table[d]
        return True

    __contains__ = contains

    def chi(self, d: int) -> int:
        return int(self.contains(d))

    def factorization_count(self, d: int) -> int:
        return factorization_count(self.weights, d)


@lru_cache(maxsize=None)
def _semigroup(w: Weights) -> NumericalSemigroup:
    top = max(w)
    member = [True]
    run = 1
    n = 0
    # a run of min(w) members already suffices; max(w) keeps the table generous
    while run < top:
        n += 1
        ok = any(n >= x and member[n - x] for x in w)
        member.append(ok)
        run = run + 1 if ok else 0
    for _ in range(top):
        n += 1
        member.append(True)
    gaps = tuple(i for i, ok in enumerate(member) if not ok)
    frob = gaps[-1] if gaps else -1
    return NumericalSemigroup(w, gaps, frob, tuple(member))


def semigroup_new(w: Iterable[int]) -> NumericalSemigroup:
    return _semigroup(validate_weights(w))


def factorization_count(w: Sequence[int], d: int) -> int:
    """Number of ``a in N^s`` with ``sum(a_i * w_i) == d`` (coin-change count)."""
    if d < 0:
        raise NegativeInput(f"factorizations are counted for d >= 0, got {d}")
    ways = [1] + [0] * d
    for x in w:
        for n in range(x, d + 1):
            ways[n] += ways[n - x]
    return ways[d]


def _in_prefix_semigroup(prefix: Sequence[int], target: int) -> bool:
    g = math.gcd(*prefix)
    if target % g:
        return False
    return _semigroup(tuple(x // g for x in prefix)).contains(target // g)


def herzog_condition(w: Sequence[int]) -> bool:
    """True iff ``lcm(gcd(w_1..w_{i-1}), w_i)`` lies in ``<w_1..w_{i-1}>`` for every i >= 2."""
    w = validate_weights(w)
    if len(w) < 2:
        raise InvalidWeights("the Herzog condition needs at least two weights")
    for i in range(1, len(w)):
        prefix = w[:i]
        if not _in_prefix_semigroup(prefix, math.lcm(math.gcd(*prefix), w[i])):
            return False
    return True


def herzog_condition_any_order(w: Sequence[int]) -> Optional[tuple[int, ...]]:
    """First permutation (as an index tuple) under which the condition holds, else ``None``."""
    w = validate_weights(w)
    if len(w) < 2:
        raise InvalidWeights("the Herzog condition needs at least two weights")
    if len(w) > MAX_PERMUTED_WEIGHTS:
        raise TooManyWeights(f"{len(w)} weights; at most {MAX_PERMUTED_WEIGHTS} orderings are searched")
    for perm in itertools.permutations(range(len(w))):
        if herzog_condition([w[j] for j in perm]):
            return perm
    return None


@dataclass(frozen=True)
class HerzogGenerator:
    """Exponents of ``t_i^c - prod_{j<i} t_j^{r_j}`` (``i`` is 1-based)."""

    i: int
    c: int
    r: tuple[int, ...]

    def exponents(self, s: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
        a = [0] * s
        a[self.i - 1] = self.c
        b = list(self.r) + [0] * (s - len(self.r))
        return tuple(a), tuple(b)


def _lex_smallest_representation(prefix: Sequence[int], target: int) -> tuple[int, ...]:
    @lru_cache(maxsize=None)
    def feasible(j: int, rem: int) -> bool:
        if j == len(prefix):
            return rem == 0
        return any(feasible(j + 1, rem - k * prefix[j]) for k in range(rem // prefix[j] + 1))

    out = []
    rem = target
    for j, x in enumerate(prefix):
        for k in range(rem // x + 1):
            if feasible(j + 1, rem - k * x):
                out.append(k)
                rem -= k * x
                break
    return tuple(out)


def herzog_generators(w: Sequence[int]) -> list[HerzogGenerator]:
    w = validate_weights(w)
    if not herzog_condition(w):
        raise ConditionNotSatisfied(f"{w} does not satisfy the Herzog condition in this order")
    gens = []
    for i in range(1, len(w)):
        g_prev, g_here = math.gcd(*w[:i]), math.gcd(*w[: i + 1])
        c = g_prev // g_here
        target = c * w[i]
        assert target == math.lcm(g_prev, w[i])
        r = _lex_smallest_representation(w[:i], target)
        if sum(rj * wj for rj, wj in zip(r, w)) != target:
            raise AssertionError(f"bad representation {r} of {target}")
        gens.append(HerzogGenerator(i + 1, c, r))
    return gens
