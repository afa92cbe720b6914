"""Arithmetic in GF(q) for prime powers q <= 2**16.

Elements are encoded as integers ``v = c_0 + c_1 p + ... + c_{n-1} p^{n-1}``
where ``c_0 + c_1 x + ... + c_{n-1} x^{n-1}`` is the polynomial-basis
representative modulo the field's irreducible modulus.  Integer order on
this encoding is the coefficient-lexicographic order (highest coefficient
most significant) used to pick the modulus and the generator.

Scalar operations take and return :class:`FieldElement`; the ``*_arr``
methods operate on numpy integer arrays of encodings and are what the
evaluation and linear-algebra code uses.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence, Union

import numpy as np

from .errors import DivisionByZero, NotPrimePower, WPRMError

MAX_ORDER = 2**16

ElementLike = Union["FieldElement", int, str]


def factor_prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, n)`` with ``q == p**n`` or raise :class:`NotPrimePower`."""
    if q < 2:
        raise NotPrimePower(f"field order must be >= 2, got {q}")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    n, rest = 0, q
    while rest % p == 0:
        rest //= p
        n += 1
    if rest != 1:
        raise NotPrimePower(f"{q} has at least two distinct prime factors")
    return p, n


def _prime_factors(m: int) -> list[int]:
    out, d = [], 2
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        out.append(m)
    return out


# -- polynomials over GF(p), coefficient lists low -> high, no trailing zeros

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    r = _trim([c % p for c in a])
    dm = len(m) - 1
    inv_lead = pow(m[-1], -1, p)
    while len(r) - 1 >= dm:
        c = r[-1] * inv_lead % p
        shift = len(r) - 1 - dm
        for i, mc in enumerate(m):
            r[shift + i] = (r[shift + i] - c * mc) % p
        _trim(r)
    return r


def _poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _monic_polys(p: int, deg: int) -> Iterable[list[int]]:
    for tail in range(p**deg):
        coeffs = [(tail // p**i) % p for i in range(deg)]
        yield coeffs + [1]


def is_irreducible(f: Sequence[int], p: int) -> bool:
    """Trial division of ``f`` by every monic polynomial of degree <= deg(f)/2."""
    deg = len(f) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for g in _monic_polys(p, d):
            if not _poly_mod(f, g, p):
                return False
    return True


def smallest_irreducible(p: int, n: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree ``n`` over GF(p)."""
    if n == 1:
        return (0, 1)
    for f in _monic_polys(p, n):
        if is_irreducible(f, p):
            return tuple(f)
    raise AssertionError("unreachable: irreducibles exist in every degree")


class GF:
    """The finite field with ``q`` elements.

    >>> F = GF(4)
    >>> F.alpha * F.alpha == F.alpha + F.one
    True
    """

    def __init__(self, q: int):
        p, n = factor_prime_power(q)
        if q > MAX_ORDER:
            raise WPRMError(f"field order {q} exceeds supported maximum {MAX_ORDER}")
        self.p, self.n, self.q = p, n, q
        self.modulus = smallest_irreducible(p, n)
        if not is_irreducible(self.modulus, p):
            raise AssertionError("modulus failed irreducibility check")
        self._powers_of_p = np.array([p**i for i in range(n)], dtype=np.int64)

        alpha = self._find_generator()
        exp = np.empty(max(q - 1, 1), dtype=np.int64)
        log = np.full(q, -1, dtype=np.int64)
        x = 1
        for k in range(q - 1):
            if log[x] != -1:
                raise AssertionError("generator order is smaller than q - 1")
            exp[k] = x
            log[x] = k
            x = self._mul_poly(x, alpha)
        if x != 1:
            raise AssertionError("generator order does not divide q - 1")
        self._exp = exp
        self._log = log
        self._alpha = alpha

    # -- construction helpers (polynomial arithmetic, used only at init)

    def _digits(self, v: int) -> list[int]:
        return [(v // self.p**i) % self.p for i in range(self.n)]

    def _undigits(self, coeffs: Sequence[int]) -> int:
        return sum(c * self.p**i for i, c in enumerate(coeffs))

    def _mul_poly(self, a: int, b: int) -> int:
        if self.n == 1:
            return a * b % self.p
        prod = _poly_mul(_trim(self._digits(a)), _trim(self._digits(b)), self.p)
        return self._undigits(_poly_mod(prod, self.modulus, self.p))

    def _pow_poly(self, a: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self._mul_poly(result, a)
            a = self._mul_poly(a, a)
            e >>= 1
        return result

    def _find_generator(self) -> int:
        order = self.q - 1
        if order == 1:
            return 1
        primes = _prime_factors(order)
        for g in range(1, self.q):
            if all(self._pow_poly(g, order // r) != 1 for r in primes):
                return g
        raise AssertionError("no generator found")

    # -- identity

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GF) and other.q == self.q

    def __hash__(self) -> int:
        return hash(("GF", self.q))

    def __repr__(self) -> str:
        return f"GF({self.q})"

    # -- elements

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    @property
    def alpha(self) -> FieldElement:
        return FieldElement(self, self._alpha)

    def elements(self) -> list[FieldElement]:
        return [FieldElement(self, v) for v in range(self.q)]

    def nonzero_powers(self) -> np.ndarray:
        """Encodings of ``alpha**k`` for ``k = 0..q-2``."""
        return self._exp.copy()

    def __call__(self, x: ElementLike) -> FieldElement:
        if isinstance(x, FieldElement):
            if x.field != self:
                raise WPRMError(f"element of {x.field} used in {self}")
            return x
        if isinstance(x, str):
            return self.parse(x)
        x = int(x)
        if self.n == 1:
            return FieldElement(self, x % self.p)
        if not 0 <= x < self.q:
            raise WPRMError(f"encoding {x} out of range for {self}")
        return FieldElement(self, x)

    def _v(self, x: ElementLike) -> int:
        return self(x).value

    # -- scalar arithmetic

    def add(self, x: ElementLike, y: ElementLike) -> FieldElement:
        return FieldElement(self, int(self.add_arr(self._v(x), self._v(y))))

    def sub(self, x: ElementLike, y: ElementLike) -> FieldElement:
        return FieldElement(self, int(self.sub_arr(self._v(x), self._v(y))))

    def neg(self, x: ElementLike) -> FieldElement:
        return FieldElement(self, int(self.neg_arr(self._v(x))))

    def mul(self, x: ElementLike, y: ElementLike) -> FieldElement:
        return FieldElement(self, int(self.mul_arr(self._v(x), self._v(y))))

    def inv(self, x: ElementLike) -> FieldElement:
        v = self._v(x)
        if v == 0:
            raise DivisionByZero("zero has no inverse")
        return FieldElement(self, int(self._exp[(-self._log[v]) % (self.q - 1)]))

    def pow(self, x: ElementLike, e: int) -> FieldElement:
        v = self._v(x)
        if v == 0:
            if e > 0:
                return self.zero
            if e == 0:
                return self.one
            raise DivisionByZero("negative power of zero")
        return FieldElement(self, int(self._exp[(self._log[v] * e) % (self.q - 1)]))

    def discrete_log(self, x: ElementLike) -> int:
        v = self._v(x)
        if v == 0:
            raise DivisionByZero("discrete log of zero")
        return int(self._log[v])

    def exp(self, k: int) -> FieldElement:
        """``alpha**k``."""
        return FieldElement(self, int(self._exp[k % (self.q - 1)]))

    # -- vectorised arithmetic on encodings

    def add_arr(self, a, b):
        a, b = np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)
        if self.n == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        for pw in self._powers_of_p:
            out += (((a // pw) + (b // pw)) % self.p) * pw
        return out

    def neg_arr(self, a):
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return a.copy()
        if self.n == 1:
            return (-a) % self.p
        out = np.zeros_like(a)
        for pw in self._powers_of_p:
            out += ((-(a // pw)) % self.p) * pw
        return out

    def sub_arr(self, a, b):
        return self.add_arr(a, self.neg_arr(b))

    def mul_arr(self, a, b):
        a, b = np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)
        if self.q == 2:
            return a & b
        la, lb = self._log[a], self._log[b]
        out = self._exp[(la + lb) % (self.q - 1)]
        return np.where((a == 0) | (b == 0), 0, out)

    def inv_arr(self, a):
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise DivisionByZero("zero has no inverse")
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def pow_arr(self, a, e: int):
        """Elementwise ``a**e`` by square-and-multiply over :meth:`mul_arr`."""
        a = np.asarray(a, dtype=np.int64)
        if e < 0:
            a, e = self.inv_arr(a), -e
        result = np.ones_like(a)
        base = a.copy()
        while e:
            if e & 1:
                result = self.mul_arr(result, base)
            base = self.mul_arr(base, base)
            e >>= 1
        return result

    def log_arr(self, a):
        return self._log[np.asarray(a, dtype=np.int64)]

    def exp_arr(self, k):
        return self._exp[np.asarray(k, dtype=np.int64) % (self.q - 1)]

    # -- text formats

    def format(self, x: ElementLike, style: str = "power") -> str:
        """Render ``x`` as ``"0"``/``"a^k"`` (``style="power"``) or as a polynomial in ``x``."""
        v = self._v(x)
        if style == "power":
            return "0" if v == 0 else f"a^{self.discrete_log(v)}"
        if style == "poly":
            terms = []
            for i, c in reversed(list(enumerate(self._digits(v)))):
                if c == 0:
                    continue
                mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
                coef = str(c) if (c != 1 or i == 0) else ""
                terms.append(coef + mono)
            return "+".join(terms) if terms else "0"
        raise WPRMError(f"unknown element style {style!r}")

    _POWER_RE = re.compile(r"^a(?:\^(-?\d+))?$")
    _TERM_RE = re.compile(r"^(\d*)(x(?:\^(\d+))?)?$")

    def parse(self, text: str) -> FieldElement:
        """Parse ``"0"``, ``"a^k"``, ``"a"``, a polynomial such as ``"x+1"``, or an integer constant."""
        s = text.replace(" ", "")
        if not s:
            raise WPRMError("empty field element")
        m = self._POWER_RE.match(s)
        if m:
            return self.exp(int(m.group(1)) if m.group(1) is not None else 1)
        coeffs = [0] * max(self.n, 1)
        for term in s.split("+"):
            t = self._TERM_RE.match(term)
            if not term or not t or (t.group(1) == "" and t.group(2) is None):
                raise WPRMError(f"cannot parse field element {text!r}")
            c = int(t.group(1)) if t.group(1) else 1
            deg = 0 if t.group(2) is None else int(t.group(3) or 1)
            if self.n == 1 and deg > 0:
                raise WPRMError(f"polynomial element {text!r} in prime field {self}")
            if deg >= self.n:
                # reduce by the modulus
                poly = [0] * deg + [c]
                red = _poly_mod(poly, self.modulus, self.p)
                for i, rc in enumerate(red):
                    coeffs[i] = (coeffs[i] + rc) % self.p
            else:
                coeffs[deg] = (coeffs[deg] + c) % self.p
        return FieldElement(self, self._undigits(coeffs))


@dataclass(frozen=True)
class FieldElement:
    field: GF
    value: int

    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple(self.field._digits(self.value))

    def __int__(self) -> int:
        return self.value

    def __bool__(self) -> bool:
        return self.value != 0

    def __add__(self, other: ElementLike) -> FieldElement:
        return self.field.add(self, other)

    __radd__ = __add__

    def __sub__(self, other: ElementLike) -> FieldElement:
        return self.field.sub(self, other)

    def __rsub__(self, other: ElementLike) -> FieldElement:
        return self.field.sub(other, self)

    def __mul__(self, other: ElementLike) -> FieldElement:
        return self.field.mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other: ElementLike) -> FieldElement:
        return self.field.mul(self, self.field.inv(other))

    def __neg__(self) -> FieldElement:
        return self.field.neg(self)

    def __pow__(self, e: int) -> FieldElement:
        return self.field.pow(self, e)

    def __str__(self) -> str:
        return self.field.format(self)

    def __repr__(self) -> str:
        return f"FieldElement({self.field!r}, {self.field.format(self, 'poly')})"


@lru_cache(maxsize=None)
def field_new(q: int) -> GF:
    """Cached constructor; fields are immutable so sharing is safe."""
    return GF(q)
