"""The weighted projective torus T(w) and the graded monomial basis.

Points are handled in log space: a point of ``(K*)^s`` is the tuple of
discrete logs of its coordinates, and ``lambda = alpha^c`` acts by adding
``c * w`` modulo ``q - 1``.  Each orbit is represented by its
lexicographically smallest log tuple.
"""

from __future__ import annotations


from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import NegativeDegree, NotCoprime, WPRMError, ZeroCoordinate, check_guard
from .field import GF, ElementLike
from .semigroup import validate_weights

TORUS_GUARD = 10**7


@dataclass(frozen=True)
class TorusPoint:
    """Canonical homogeneous coordinates of a point of T(w).

    ``coords`` holds element encodings, ``log_coords`` their discrete logs.
    """

    coords: tuple[int, ...]
    log_coords: tuple[int, ...]

    def format(self) -> str:
        return "(" + ", ".join(f"a^{k}" for k in self.log_coords) + ")"

    def to_json(self) -> list[int]:
        return list(self.log_coords)


def _point_from_logs(field: GF, logs: Sequence[int]) -> TorusPoint:
    logs = tuple(int(k) % (field.q - 1) for k in logs)
    coords = tuple(int(v) for v in field.exp_arr(np.array(logs, dtype=np.int64)))
    return TorusPoint(coords, logs)


def canonical_logs(logs: Sequence[int], q: int, w: Sequence[int]) -> tuple[int, ...]:
    """Lexicographically smallest member of the orbit of ``logs``."""
    m = q - 1
    return min(tuple((x + c * wi) % m for x, wi in zip(logs, w)) for c in range(m))


def canonicalize(field: GF, logs: Sequence[int], w: Sequence[int]) -> TorusPoint:
    return _point_from_logs(field, canonical_logs(logs, field.q, w))


def orbit_of(point: Sequence[ElementLike], field: GF, w: Sequence[int]) -> list[tuple[int, ...]]:
    """The ``q-1`` tuples ``lambda . point`` for ``lambda = alpha^c``, computed in the field."""
    x = [field(v) for v in point]
    if len(x) != len(w):
        raise WPRMError(f"{len(x)} coordinates for {len(w)} weights")
    if any(v.value == 0 for v in x):
        raise ZeroCoordinate("torus points have all coordinates nonzero")
    out = []
    for c in range(field.q - 1):
        lam = field.exp(c)
        out.append(tuple((lam**wi * xi).value for xi, wi in zip(x, w)))
    return out


def torus_points(field: GF, w: Sequence[int]) -> list[TorusPoint]:
    """Canonical representatives of T(w), sorted by log tuple."""
    w = validate_weights(w)
    m, s = field.q - 1, len(w)
    n_affine = m**s
    check_guard(n_affine, TORUS_GUARD, f"(K*)^{s} over GF({field.q})")
    radix = np.array([m ** (s - 1 - i) for i in range(s)], dtype=np.int64)
    idx = np.arange(n_affine, dtype=np.int64)
    logs = (idx[:, None] // radix[None, :]) % m
    # mixed-radix index order is lexicographic order on log tuples
    canonical = np.ones(n_affine, dtype=bool)
    wv = np.array(w, dtype=np.int64)
    for c in range(1, m):
        shifted = ((logs + c * wv[None, :]) % m) @ radix
        canonical &= idx < shifted
    reps = logs[canonical]
    return [_point_from_logs(field, row) for row in reps]


def _extended_gcd(x: int, y: int) -> tuple[int, int, int]:
    a0, a1, b0, b1 = 1, 0, 0, 1
    while y:
        k = x // y
        x, y = y, x - k * y
        a0, a1 = a1, a0 - k * a1
        b0, b1 = b1, b0 - k * b1
    return x, a0, b0


def lemma_point(field: GF, w1: int, w2: int, r: int) -> TorusPoint:
    """The unique zero of ``t1^w2 - alpha^r t2^w1`` on T(w1, w2)."""
    g, a, b = _extended_gcd(w1, w2)
    if g != 1:
        raise NotCoprime(f"gcd({w1}, {w2}) = {g}")
    if not 0 <= r <= field.q - 2:
        raise WPRMError(f"r must lie in [0, {field.q - 2}], got {r}")
    return canonicalize(field, (r * b, -r * a), (w1, w2))


def monomials_of_degree(d: int, w: Sequence[int]) -> list[tuple[int, ...]]:
    """Exponent vectors of weighted degree ``d``, largest first in lex order."""
    if d < 0:
        raise NegativeDegree(f"degree must be >= 0, got {d}")
    w = tuple(w)
    out: list[tuple[int, ...]] = []

    def rec(i: int, rem: int, prefix: list[int]) -> None:
        if i == len(w) - 1:
            if rem % w[i] == 0:
                out.append(tuple(prefix + [rem // w[i]]))
            return
        for k in range(rem // w[i], -1, -1):
            prefix.append(k)
            rec(i + 1, rem - k * w[i], prefix)
            prefix.pop()

    rec(0, d, [])
    return out


