"""Hilbert series of the torus coordinate ring and of the semigroup algebra.

Series are kept as ``N(t) / prod(1 - t^{w_i})`` with an exact integer
numerator; rational series are compared by cross-multiplication rather
than by reduction to lowest terms.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import InexactDivision, NegativeDegree
from .semigroup import semigroup_new, validate_weights


class IntegerPolynomial:
    """Sparse univariate polynomial with integer coefficients."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[int] = ()):
        if isinstance(coeffs, Mapping):
            items = coeffs.items()
        else:
            items = enumerate(coeffs)
        c: dict[int, int] = {}
        for e, v in items:
            if e < 0:
                raise ValueError(f"negative exponent {e}")
            if v:
                c[int(e)] = c.get(int(e), 0) + int(v)
        self._c = {e: v for e, v in c.items() if v}

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> IntegerPolynomial:
        return cls({e: c})

    @classmethod
    def one_minus_t(cls, e: int) -> IntegerPolynomial:
        """``1 - t^e``."""
        return cls({0: 1}) - cls({e: 1})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def degree(self) -> int:
        return max(self._c) if self._c else -1

    def __getitem__(self, e: int) -> int:
        return self._c.get(e, 0)

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = IntegerPolynomial({0: other})
        return isinstance(other, IntegerPolynomial) and self._c == other._c

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    def __add__(self, other: IntegerPolynomial) -> IntegerPolynomial:
        out = dict(self._c)
        for e, v in other._c.items():
            out[e] = out.get(e, 0) + v
        return IntegerPolynomial(out)

    def __neg__(self) -> IntegerPolynomial:
        return IntegerPolynomial({e: -v for e, v in self._c.items()})

    def __sub__(self, other: IntegerPolynomial) -> IntegerPolynomial:
        return self + (-other)

    def __mul__(self, other: IntegerPolynomial) -> IntegerPolynomial:
        out: dict[int, int] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + v1 * v2
        return IntegerPolynomial(out)

    def divide_exact(self, other: IntegerPolynomial) -> IntegerPolynomial:
        """Quotient ``self / other``; raises :class:`InexactDivision` on a nonzero remainder."""
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        dd, lead = other.degree(), other[other.degree()]
        rem = dict(self._c)
        quot: dict[int, int] = {}
        while rem and max(rem) >= dd:
            top = max(rem)
            c, r = divmod(rem[top], lead)
            if r:
                raise InexactDivision(f"leading coefficient {rem[top]} not divisible by {lead}")
            quot[top - dd] = c
            for e, v in other._c.items():
                k = e + top - dd
                rem[k] = rem.get(k, 0) - c * v
                if rem[k] == 0:
                    del rem[k]
        if rem:
            raise InexactDivision("nonzero remainder")
        q = IntegerPolynomial(quot)
        assert q * other == self
        return q

    def __repr__(self) -> str:
        return f"IntegerPolynomial({self.format()!r})"

    def format(self, var: str = "t") -> str:
        if not self._c:
            return "0"
        parts = []
        for e in sorted(self._c):
            v = self._c[e]
            mono = "" if e == 0 else (var if e == 1 else f"{var}^{e}")
            mag = abs(v)
            body = f"{mag}{mono}" if (mag != 1 or e == 0) else mono
            sign = "-" if v < 0 else "+"
            parts.append((sign, body))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def product_one_minus(exponents: Iterable[int]) -> IntegerPolynomial:
    out = IntegerPolynomial({0: 1})
    for e in exponents:
        out = out * IntegerPolynomial.one_minus_t(e)
    return out


@dataclass(frozen=True)
class HilbertSeries:
    """``numerator / prod(1 - t^w_i)``; ``q`` is 2 for the semigroup algebra."""

    numerator: IntegerPolynomial
    weights: tuple[int, ...]
    q: int

    @property
    def denominator(self) -> IntegerPolynomial:
        return product_one_minus(self.weights)

    @property
    def a_invariant(self) -> int:
        n = self.numerator
        assert n[n.degree()] != 0
        return n.degree() - sum(self.weights)

    @property
    def regularity(self) -> int:
        return max(self.a_invariant + 1, 0)

    def coefficients(self, n: int) -> list[int]:
        """The first ``n`` coefficients of the power-series expansion."""
        if n <= 0:
            return []
        inv = [1] + [0] * (n - 1)
        # 1/prod(1 - t^w) by the denumerant recurrence
        for w in self.weights:
            for d in range(w, n):
                inv[d] += inv[d - w]
        out = [0] * n
        for e, c in self.numerator.coeffs.items():
            for d in range(e, n):
                out[d] += c * inv[d - e]
        return out

    def equals(self, numerator: IntegerPolynomial, denominator: IntegerPolynomial) -> bool:
        """Equality with ``numerator / denominator`` by cross-multiplication."""
        return self.numerator * denominator == numerator * self.denominator

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "numerator": {str(e): c for e, c in sorted(self.numerator.coeffs.items())},
            "denominator_exponents": list(self.weights),
            "a_invariant": self.a_invariant,
            "regularity": self.regularity,
        }


def hilbert_function(hs: HilbertSeries, d: int) -> int:
    if d < 0:
        raise NegativeDegree(f"degree must be >= 0, got {d}")
    return hs.coefficients(d + 1)[d]


def _numerator(gaps: Sequence[int], w: Sequence[int], step: int) -> IntegerPolynomial:
    # (1/(1-t^step) - sum_G t^{a step}) * prod(1 - t^{w_i step}); the first
    # factor 1 - t^{w_1 step} is absorbed into the geometric sum
    first = IntegerPolynomial.one_minus_t(w[0] * step)
    geometric = first.divide_exact(IntegerPolynomial.one_minus_t(step))
    gap_sum = IntegerPolynomial({a * step: 1 for a in gaps})
    head = geometric - gap_sum * first
    return head * product_one_minus(wi * step for wi in w[1:])


def torus_hilbert_series(q: int, w: Sequence[int]) -> HilbertSeries:
    w = validate_weights(w)
    sg = semigroup_new(w)
    return HilbertSeries(_numerator(sg.gaps, w, q - 1), w, q)


def semigroup_hilbert_series(w: Sequence[int]) -> HilbertSeries:
    w = validate_weights(w)
    sg = semigroup_new(w)
    return HilbertSeries(_numerator(sg.gaps, w, 1), w, 2)


def index_of_regularity(q: int, w: Sequence[int], g: int) -> int:
    """Closed form ``(q-2)(sum w + g) + g + 1`` with ``g`` the Frobenius number (-1 if none)."""
    w = validate_weights(w)
    return (q - 2) * (sum(w) + g) + g + 1
