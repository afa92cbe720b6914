"""Pure binomials ``t^a - t^b`` and their membership in the torus vanishing ideal.

Two independent routes are provided: the lattice test (exponent
differences divisible by q-1 and orthogonal to the weights) and a
brute-force evaluation over every point of ``(K*)^s``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .errors import LengthMismatch, WPRMError, check_guard
from .field import GF

Exponents = tuple[int, ...]

VANISHING_GUARD = 10**7


def _exponents(e: Sequence[int]) -> Exponents:
    e = tuple(int(x) for x in e)
    if any(x < 0 for x in e):
        raise WPRMError(f"exponents must be nonnegative, got {e}")
    return e


def weighted_degree(e: Sequence[int], w: Sequence[int]) -> int:
    if len(e) != len(w):
        raise LengthMismatch(f"exponent length {len(e)} != weight length {len(w)}")
    return sum(x * y for x, y in zip(e, w))


@dataclass(frozen=True, eq=False)
class Binomial:
    """``t^a - t^b``; equality ignores which side is which."""

    a: Exponents
    b: Exponents

    def __post_init__(self):
        object.__setattr__(self, "a", _exponents(self.a))
        object.__setattr__(self, "b", _exponents(self.b))
        if len(self.a) != len(self.b):
            raise LengthMismatch(f"exponent vectors of lengths {len(self.a)} and {len(self.b)}")
        if self.a == self.b:
            raise WPRMError("t^a - t^a is the zero binomial")

    @property
    def s(self) -> int:
        return len(self.a)

    def difference(self) -> tuple[int, ...]:
        return tuple(x - y for x, y in zip(self.a, self.b))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Binomial):
            return NotImplemented
        return (self.a, self.b) in ((other.a, other.b), (other.b, other.a))

    def __hash__(self) -> int:
        return hash(frozenset((self.a, self.b)))

    def __str__(self) -> str:
        return f"{_format_monomial(self.a)} - {_format_monomial(self.b)}"

    def to_json(self) -> str:
        return json.dumps({"a": list(self.a), "b": list(self.b)})

    @classmethod
    def from_json(cls, text: str) -> Binomial:
        data = json.loads(text)
        return cls(tuple(data["a"]), tuple(data["b"]))

    @classmethod
    def parse(cls, text: str, s: int | None = None) -> Binomial:
        """Parse ``"t1^9 - t2^3*t3^3"``; ``s`` defaults to the largest variable index."""
        parts = text.split("-")
        if len(parts) != 2:
            raise WPRMError(f"expected exactly one '-' in binomial {text!r}")
        left, right = (_parse_monomial(p) for p in parts)
        n = max([0, *left, *right]) if s is None else s
        if max([0, *left, *right]) > n:
            raise LengthMismatch(f"variable index exceeds s={n} in {text!r}")
        a = tuple(left.get(i, 0) for i in range(1, n + 1))
        b = tuple(right.get(i, 0) for i in range(1, n + 1))
        return cls(a, b)


def _format_monomial(e: Exponents) -> str:
    factors = [f"t{i + 1}" if x == 1 else f"t{i + 1}^{x}" for i, x in enumerate(e) if x]
    return "*".join(factors) if factors else "1"


_FACTOR_RE = re.compile(r"^t(\d+)(?:\^(\d+))?$")


def _parse_monomial(text: str) -> dict[int, int]:
    text = text.strip()
    if text == "1":
        return {}
    out: dict[int, int] = {}
    for factor in text.split("*"):
        m = _FACTOR_RE.match(factor.strip())
        if not m or int(m.group(1)) < 1:
            raise WPRMError(f"cannot parse monomial factor {factor!r}")
        i = int(m.group(1))
        out[i] = out.get(i, 0) + int(m.group(2) or 1)
    return out


def is_homogeneous(bin: Binomial, w: Sequence[int]) -> bool:
    return weighted_degree(bin.a, w) == weighted_degree(bin.b, w)


def in_defining_lattice(bin: Binomial, q: int, w: Sequence[int]) -> bool:
    """Membership of ``a - b`` in ``(q-1) * (w-perp intersected with Z^s)``."""
    if q < 2:
        raise WPRMError(f"q must be >= 2, got {q}")
    if bin.s != len(w):
        raise LengthMismatch(f"binomial in {bin.s} variables, {len(w)} weights")
    return all(x % (q - 1) == 0 for x in bin.difference()) and is_homogeneous(bin, w)


def scale_binomial(bin: Binomial, m: int) -> Binomial:
    if m < 1:
        raise WPRMError(f"scale factor must be >= 1, got {m}")
    return Binomial(tuple(m * x for x in bin.a), tuple(m * x for x in bin.b))


def affine_torus(field: GF, s: int) -> np.ndarray:
    """All points of ``(K*)^s`` as an ``((q-1)^s, s)`` array of element encodings."""
    check_guard((field.q - 1) ** s, VANISHING_GUARD, f"(K*)^{s} over GF({field.q})")
    return _affine_torus(field, s)


@lru_cache(maxsize=32)
def _affine_torus(field: GF, s: int) -> np.ndarray:
    elems = field.nonzero_powers()
    grids = np.meshgrid(*([elems] * s), indexing="ij")
    pts = np.stack([g.ravel() for g in grids], axis=1)
    pts.setflags(write=False)
    return pts


@lru_cache(maxsize=32)
def _power_table(field: GF) -> np.ndarray:
    # row x holds x^0, ..., x^(q-2), built by repeated field multiplication
    m = field.q - 1
    elems = np.arange(field.q, dtype=np.int64)
    table = np.empty((field.q, m), dtype=np.int64)
    table[:, 0] = 1
    for k in range(1, m):
        table[:, k] = field.mul_arr(table[:, k - 1], elems)
    table.setflags(write=False)
    return table


def evaluate_monomial(field: GF, e: Sequence[int], points: np.ndarray) -> np.ndarray:
    """``x^e`` at each row of ``points`` (all coordinates nonzero) using field multiplication only."""
    table = _power_table(field)
    m = field.q - 1
    val = np.ones(points.shape[0], dtype=np.int64)
    for i, x in enumerate(e):
        if x:
            # x^(q-1) = 1 on the torus
            val = field.mul_arr(val, table[points[:, i], x % m])
    return val


def vanishes_on_affine_torus(bin: Binomial, field: GF, w: Sequence[int]) -> bool:
    if bin.s != len(w):
        raise LengthMismatch(f"binomial in {bin.s} variables, {len(w)} weights")
    pts = affine_torus(field, bin.s)
    lhs = evaluate_monomial(field, bin.a, pts)
    rhs = evaluate_monomial(field, bin.b, pts)
    return bool(np.all(lhs == rhs))


def in_vanishing_ideal(bin: Binomial, field: GF, w: Sequence[int]) -> bool:
    """Homogeneous and zero on every point of the weighted torus."""
    return is_homogeneous(bin, w) and vanishes_on_affine_torus(bin, field, w)
