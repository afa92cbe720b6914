"""Weighted projective Reed-Muller codes over the torus T(w).

``build_code`` evaluates every monomial of weighted degree ``d`` at the
canonical torus points; dimension is the rank of that matrix and the
minimum distance comes from enumerating all nonzero codewords.  The
closed forms for ``s = 2`` live here too so they can be checked against
the brute-force parameters.
"""

from __future__ import annotations

import itertools
import math
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import Optional, Sequence

import numpy as np

from .errors import NotCoprime, OutOfRange, WPRMError, ZeroCode, check_guard
from .field import GF
from .linalg import row_reduce
from .semigroup import semigroup_new, validate_weights
from .torus import TorusPoint, monomials_of_degree, torus_points

CODEWORD_GUARD = 10**8
_INNER_BLOCK = 2**16


def evaluation_matrix(field: GF, monomials: Sequence[Sequence[int]], log_points) -> np.ndarray:
    """``matrix[i, j] = x_j ** monomials[i]`` for points given by their log coordinates."""
    logs = np.asarray(log_points, dtype=np.int64)
    n_pts = logs.shape[0]
    if len(monomials) == 0:
        return np.zeros((0, n_pts), dtype=np.int64)
    exps = np.asarray(monomials, dtype=np.int64)
    return field.exp_arr((exps @ logs.T) % (field.q - 1))


@dataclass(eq=False)
class EvaluationCode:
    field: GF
    weights: tuple[int, ...]
    degree: int
    points: list[TorusPoint]
    monomials: list[tuple[int, ...]]
    matrix: np.ndarray = dc_field(repr=False)

    @property
    def length(self) -> int:
        return len(self.points)

    @cached_property
    def _echelon(self) -> tuple[np.ndarray, list[int]]:
        if self.matrix.shape[0] == 0:
            return np.zeros((0, self.length), dtype=np.int64), []
        return row_reduce(self.field, self.matrix)

    def basis(self) -> np.ndarray:
        """A row basis of the code (reduced echelon form)."""
        return self._echelon[0]


def build_code(field: GF, w: Sequence[int], d: int) -> EvaluationCode:
    w = validate_weights(w)
    pts = torus_points(field, w)
    mons = monomials_of_degree(d, w)
    mat = evaluation_matrix(field, mons, [p.log_coords for p in pts])
    return EvaluationCode(field, w, d, pts, mons, mat)


def dimension(code: EvaluationCode) -> int:
    return len(code._echelon[1])


def _min_weight_block(field: GF, inner: np.ndarray, multiples, combos, m: int) -> int:
    best = m + 1
    for combo in combos:
        offset = np.zeros(m, dtype=np.int64)
        for mult, c in zip(multiples, combo):
            if c:
                offset = field.add_arr(offset, mult[c])
        words = field.add_arr(inner, offset[None, :]) if any(combo) else inner
        weights = np.count_nonzero(words, axis=1)
        if not any(combo):
            weights = weights[1:]
        if weights.size:
            best = min(best, int(weights.min()))
    return best


def min_weight(field: GF, basis: np.ndarray, threads: int = 1) -> Optional[int]:
    """Minimum Hamming weight over all ``q^k - 1`` nonzero combinations of the rows of ``basis``."""
    k, m = basis.shape
    if k == 0:
        return None
    q = field.q
    check_guard(q**k, CODEWORD_GUARD, f"{q}^{k} codewords")
    scalars = np.arange(q, dtype=np.int64)[:, None]
    multiples = [field.mul_arr(scalars, row[None, :]) for row in basis]
    j = 1
    while j < k and q ** (j + 1) <= _INNER_BLOCK:
        j += 1
    inner = np.zeros((1, m), dtype=np.int64)
    for mult in multiples[:j]:
        inner = field.add_arr(mult[:, None, :], inner[None, :, :]).reshape(-1, m)
    # index 0 of inner is the zero combination
    combos = list(itertools.product(range(q), repeat=k - j))
    outer = multiples[j:]
    if threads <= 1 or len(combos) < 2:
        return _min_weight_block(field, inner, outer, combos, m)
    chunks = [combos[i::threads] for i in range(threads)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        results = pool.map(lambda ch: _min_weight_block(field, inner, outer, ch, m), chunks)
        return min(results)


def minimum_distance_bruteforce(code: EvaluationCode, threads: int = 1) -> Optional[int]:
    """Exact minimum distance, or ``None`` for the zero code."""
    return min_weight(code.field, code.basis(), threads=threads)


@dataclass(frozen=True)
class CodeParameters:
    length: int
    dimension: int
    min_distance: Optional[int]
    mds: Optional[bool]

    def __post_init__(self):
        if not 0 <= self.dimension <= self.length:
            raise AssertionError(f"dimension {self.dimension} outside [0, {self.length}]")
        if self.min_distance is not None:
            if not 1 <= self.min_distance <= self.length - self.dimension + 1:
                raise AssertionError(f"min distance {self.min_distance} violates the Singleton bound")


def code_parameters(code: EvaluationCode, threads: int = 1) -> CodeParameters:
    k = dimension(code)
    delta = minimum_distance_bruteforce(code, threads=threads)
    mds = None if delta is None else delta == code.length - k + 1
    return CodeParameters(code.length, k, delta, mds)


def is_mds(params: CodeParameters) -> bool:
    if params.dimension == 0 or params.min_distance is None:
        raise ZeroCode("MDS is only defined for nonzero codes")
    return params.min_distance == params.length - params.dimension + 1


@dataclass(frozen=True)
class StandardForm:
    matrix: np.ndarray
    permutation: tuple[int, ...]

    @property
    def dimension(self) -> int:
        return self.matrix.shape[0]


def standard_form(code: EvaluationCode) -> StandardForm:
    """Generator matrix ``(I_k | A)`` after moving pivot columns to the front.

    ``permutation[j]`` is the original column placed at position ``j``.
    """
    R, piv = code._echelon
    if not piv:
        raise ZeroCode("the zero code has no generator matrix")
    perm = tuple(piv) + tuple(c for c in range(code.length) if c not in set(piv))
    G = R[:, list(perm)]
    assert np.array_equal(G[:, : len(piv)], np.eye(len(piv), dtype=np.int64))
    return StandardForm(G, perm)


@dataclass(frozen=True)
class TableRow:
    d: int
    dimension: int
    min_distance: Optional[int]


def parameter_table(field: GF, w: Sequence[int], d_max: int, threads: int = 1) -> list[TableRow]:
    if d_max < 0:
        raise WPRMError(f"d_max must be >= 0, got {d_max}")
    w = validate_weights(w)
    pts = torus_points(field, w)
    logs = [p.log_coords for p in pts]
    rows = []
    for d in range(d_max + 1):
        mons = monomials_of_degree(d, w)
        code = EvaluationCode(field, w, d, pts, mons, evaluation_matrix(field, mons, logs))
        rows.append(TableRow(d, dimension(code), minimum_distance_bruteforce(code, threads)))
    return rows


# -- closed forms on the one-dimensional torus T(w1, w2)

def regularity_bound_1d(q: int, w1: int, w2: int) -> int:
    """Largest degree covered by the closed forms: ``w1 w2 (q-1) - w1 - w2``."""
    return w1 * w2 * (q - 1) - w1 - w2


def _split_1d(q: int, w1: int, w2: int, d: int, strict: bool) -> tuple[int, int, int]:
    if math.gcd(w1, w2) != 1:
        raise NotCoprime(f"gcd({w1}, {w2}) != 1")
    if q < 2:
        raise WPRMError(f"q must be >= 2, got {q}")
    top = regularity_bound_1d(q, w1, w2)
    if d < 0:
        raise OutOfRange(f"degree {d} is negative")
    if d > top:
        if strict:
            raise OutOfRange(f"degree {d} exceeds {top} = w1*w2*(q-1) - w1 - w2")
        warnings.warn(
            f"degree {d} is beyond {top}; closed form not established there", RuntimeWarning, stacklevel=3
        )
    k, l = divmod(d, w1 * w2)
    return k, l, semigroup_new((w1, w2)).chi(l)


def dimension_formula_1d(q: int, w1: int, w2: int, d: int, strict: bool = True) -> int:
    k, _, chi = _split_1d(q, w1, w2, d, strict)
    return k + chi


def max_zeros_bound_1d(q: int, w1: int, w2: int, d: int, strict: bool = True) -> int:
    """Upper bound on the zeros in T(w1, w2) of a nonzero form of degree ``d``."""
    k, _, chi = _split_1d(q, w1, w2, d, strict)
    return k - 1 + chi


def distance_formula_1d(q: int, w1: int, w2: int, d: int, strict: bool = True) -> int:
    k, _, chi = _split_1d(q, w1, w2, d, strict)
    if not semigroup_new((w1, w2)).contains(d):
        raise ZeroCode(f"degree {d} is a gap of <{w1},{w2}>, so the code is zero")
    return (q - 1) - k + 1 - chi
