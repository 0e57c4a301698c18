"""Exact integer arithmetic helpers: gcd, pair reduction, modular inverse.

Everything here works on plain Python ints, so values of any width are fine.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError


@dataclass(frozen=True)
class ReducedPair:
    """A pair divided by its gcd: (a_red, b_red) is always coprime."""

    a_red: int
    b_red: int
    d: int


def gcd(a: int, b: int) -> int:
    """Greatest common divisor of two naturals, with gcd(0, b) = b.

    gcd(0, 0) has no sensible value and is rejected.
    """
    if a < 0 or b < 0:
        raise DomainError("gcd expects naturals, got (%d, %d)" % (a, b))
    if a == 0 and b == 0:
        raise DomainError("gcd(0, 0) is undefined")
    return math.gcd(a, b)


def reduce(a: int, b: int) -> ReducedPair:
    """Divide (a, b) by d = gcd(a, b); both inputs must be >= 1."""
    if a < 1 or b < 1:
        raise DomainError("reduce expects positive integers, got (%d, %d)" % (a, b))
    d = math.gcd(a, b)
    return ReducedPair(a // d, b // d, d)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Iterative extended Euclid: returns (g, s, t) with a*s + b*t = g."""
    old_s, s = 1, 0
    old_t, t = 0, 1
    while b:
        q = a // b
        a, b = b, a - q * b
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return a, old_s, old_t


def mod_inverse(a: int, m: int) -> int:
    """The unique t with a*t = 1 (mod m) and 0 < t < m.

    Requires m >= 2 and gcd(a mod m, m) = 1; anything else is rejected.
    """
    if m < 2:
        raise DomainError("modulus must be >= 2, got %d" % m)
    if a < 0:
        raise DomainError("mod_inverse expects a natural, got %d" % a)
    r = a % m
    g, s, _ = _xgcd(r, m)
    if g != 1:
        raise DomainError("%d is not invertible modulo %d (gcd %d)" % (a, m, g))
    return s % m


def theta(a: int, b: int) -> int:
    """Inverse of a/d modulo b/d, where d = gcd(a, b), in the range (0, b/d).

    Defined only when b/d > 1, i.e. when b does not divide a.  Note the
    asymmetry: theta(5, 9) = 2 while theta(9, 5) = 4.
    """
    if a < 1 or b < 1:
        raise DomainError("theta expects positive integers, got (%d, %d)" % (a, b))
    d = math.gcd(a, b)
    modulus = b // d
    if modulus == 1:
        raise DomainError(
            "theta(%d, %d) is undefined: %d divides %d so the modulus is 1" % (a, b, b, a)
        )
    return mod_inverse(a // d, modulus)
