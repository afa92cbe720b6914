"""Exception types and enumeration guards shared by every module."""

from __future__ import annotations

import os

GUARD_ENV = "WPRM_GUARD_LIMIT"


class WPRMError(ValueError):
    """Base class for invalid input to any wprm routine."""


class NotPrimePower(WPRMError):
    pass


class DivisionByZero(WPRMError, ZeroDivisionError):
    pass


class InvalidWeights(WPRMError):
    pass


class NegativeInput(WPRMError):
    pass


class NegativeDegree(NegativeInput):
    pass


class TooManyWeights(WPRMError):
    pass


class ConditionNotSatisfied(WPRMError):
    pass


class LengthMismatch(WPRMError):
    pass


class ZeroCoordinate(WPRMError):
    pass


class NotCoprime(WPRMError):
    pass


class OutOfRange(WPRMError):
    pass


class ZeroCode(WPRMError):
    pass


class InexactDivision(WPRMError):
    pass


class TooLarge(WPRMError):
    """An exhaustive enumeration would exceed its guard."""


def guard_limit(default: int) -> int:
    """Return the enumeration limit, honouring the ``WPRM_GUARD_LIMIT`` override."""
    raw = os.environ.get(GUARD_ENV)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(float(raw))
    except ValueError as exc:
        raise WPRMError(f"{GUARD_ENV} must be an integer, got {raw!r}") from exc
    if value <= 0:
        raise WPRMError(f"{GUARD_ENV} must be positive, got {value}")
    return value


def check_guard(size: int, default: int, what: str) -> None:
    limit = guard_limit(default)
    if size > limit:
        raise TooLarge(f"{what}: {size} exceeds enumeration limit {limit}")
