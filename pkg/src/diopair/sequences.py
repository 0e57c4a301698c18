"""Catalog of 1-indexed integer sequences and the tag operator over them.

``delta`` maps a sequence (a_n) to the sequence of equation tags of its
consecutive pairs, tag(a_n, a_{n+1}).  Supported families:

* fibonacci            1, 1, 2, 3, 5, ...
* power k              n^k
* ceilpow2 k           ceil(2^(n+k-1) / (2^k + 1))
* ap a r               a, a+r, a+2r, ...
* sgp a r              a*r^(n-1) + 1   (r >= 2)
* rec2 a b k           a_1=a, a_2=b, a_n = k*a_{n-1} + a_{n-2}
* explicit             terms supplied directly (e.g. loaded from a file)

Recurrence families memoize the prefix they have produced on the spec
instance, so repeated windows over one instance don't recompute terms.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from math import gcd as _gcd
from pathlib import Path

from .errors import DomainError
from .gamma import EquationTag, gamma_criterion


class Family(str, Enum):
    FIBONACCI = "fibonacci"
    POWER = "power"
    CEILPOW2 = "ceilpow2"
    ARITHMETIC = "ap"
    SHIFTED_GEOMETRIC = "sgp"
    RECURRENCE2 = "rec2"
    EXPLICIT = "explicit"


# which named parameters each family requires
_PARAMS: dict[Family, tuple[str, ...]] = {
    Family.FIBONACCI: (),
    Family.POWER: ("k",),
    Family.CEILPOW2: ("k",),
    Family.ARITHMETIC: ("a", "r"),
    Family.SHIFTED_GEOMETRIC: ("a", "r"),
    Family.RECURRENCE2: ("a", "b", "k"),
    Family.EXPLICIT: (),
}


@dataclass
class SequenceSpec:
    family: Family
    k: int | None = None
    a: int | None = None
    b: int | None = None
    r: int | None = None
    terms: tuple[int, ...] | None = None
    _memo: list[int] = field(default_factory=list, repr=False, compare=False)

    def __post_init__(self) -> None:
        try:
            self.family = Family(self.family)
        except ValueError:
            raise DomainError(
                "unknown family %r; expected one of %s"
                % (self.family, ", ".join(f.value for f in Family))
            ) from None
        want = _PARAMS[self.family]
        for name in ("k", "a", "b", "r"):
            value = getattr(self, name)
            if name in want:
                if value is None:
                    raise DomainError(
                        "family %s requires parameter %s" % (self.family.value, name)
                    )
                if value < 1:
                    raise DomainError(
                        "parameter %s must be >= 1, got %d" % (name, value)
                    )
            elif value is not None:
                raise DomainError(
                    "family %s does not take parameter %s" % (self.family.value, name)
                )
        if self.family is Family.EXPLICIT:
            if not self.terms:
                raise DomainError("explicit family requires at least one term")
            self.terms = tuple(self.terms)
            for i, t in enumerate(self.terms, start=1):
                if t < 1:
                    raise DomainError("explicit term %d is %d; terms must be >= 1" % (i, t))
        elif self.terms is not None:
            raise DomainError("only the explicit family takes a term list")
        if self.family is Family.SHIFTED_GEOMETRIC and self.r < 2:
            raise DomainError("sgp requires ratio r >= 2, got %d" % self.r)

    # -- constructors ------------------------------------------------------

    @classmethod
    def fibonacci(cls) -> "SequenceSpec":
        return cls(Family.FIBONACCI)

    @classmethod
    def power(cls, k: int) -> "SequenceSpec":
        return cls(Family.POWER, k=k)

    @classmethod
    def ceilpow2(cls, k: int) -> "SequenceSpec":
        return cls(Family.CEILPOW2, k=k)

    @classmethod
    def arithmetic(cls, a: int, r: int) -> "SequenceSpec":
        return cls(Family.ARITHMETIC, a=a, r=r)

    @classmethod
    def shifted_geometric(cls, a: int, r: int) -> "SequenceSpec":
        return cls(Family.SHIFTED_GEOMETRIC, a=a, r=r)

    @classmethod
    def recurrence2(cls, a: int, b: int, k: int) -> "SequenceSpec":
        return cls(Family.RECURRENCE2, a=a, b=b, k=k)

    @classmethod
    def explicit(cls, terms) -> "SequenceSpec":
        return cls(Family.EXPLICIT, terms=tuple(terms))

    # -- term access -------------------------------------------------------

    def _recurrence_seed(self) -> tuple[int, int, int]:
        if self.family is Family.FIBONACCI:
            return 1, 1, 1
        return self.a, self.b, self.k

    def term(self, n: int) -> int:
        """The n-th term, 1-indexed."""
        if n < 1:
            raise DomainError("term index must be >= 1, got %d" % n)
        f = self.family
        if f is Family.POWER:
            return n**self.k
        if f is Family.CEILPOW2:
            k = self.k
            return (2 ** (n + k - 1) + 2**k) // (2**k + 1)
        if f is Family.ARITHMETIC:
            return self.a + (n - 1) * self.r
        if f is Family.SHIFTED_GEOMETRIC:
            return self.a * self.r ** (n - 1) + 1
        if f is Family.EXPLICIT:
            if n > len(self.terms):
                raise DomainError(
                    "explicit sequence has %d terms; term %d requested"
                    % (len(self.terms), n)
                )
            return self.terms[n - 1]
        # order-2 recurrence (covers fibonacci)
        first, second, mult = self._recurrence_seed()
        memo = self._memo
        if not memo:
            memo.extend((first, second))
        while len(memo) < n:
            memo.append(mult * memo[-1] + memo[-2])
        return memo[n - 1]


def load_explicit(path: str | Path) -> SequenceSpec:
    """Read an explicit sequence: UTF-8 text, one decimal natural per line."""
    text = Path(path).read_text(encoding="utf-8")
    terms: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        # isdigit alone admits unicode digits that int() rejects
        if not (line.isascii() and line.isdigit()):
            raise DomainError("%s:%d: not a decimal natural: %r" % (path, lineno, raw))
        terms.append(int(line))
    if not terms:
        raise DomainError("%s: no terms found" % path)
    return SequenceSpec.explicit(terms)


def term(spec: SequenceSpec, n: int) -> int:
    return spec.term(n)


def delta(spec: SequenceSpec, start: int = 1, count: int = 1) -> list[EquationTag]:
    """Tags of (a_n, a_{n+1}) for n = start .. start+count-1."""
    if start < 1:
        raise DomainError("start must be >= 1, got %d" % start)
    if count < 1:
        raise DomainError("count must be >= 1, got %d" % count)
    terms = [spec.term(n) for n in range(start, start + count + 1)]
    return [gamma_criterion(terms[i], terms[i + 1]) for i in range(count)]


def gcd_consecutive(spec: SequenceSpec, start: int = 1, count: int = 1) -> list[int]:
    """gcd(a_n, a_{n+1}) for n = start .. start+count-1."""
    if start < 1:
        raise DomainError("start must be >= 1, got %d" % start)
    if count < 1:
        raise DomainError("count must be >= 1, got %d" % count)
    terms = [spec.term(n) for n in range(start, start + count + 1)]
    return [_gcd(terms[i], terms[i + 1]) for i in range(count)]


@dataclass(frozen=True)
class DeltaRecord:
    """One row of a tag window: the pair, its gcd, and its tag."""

    n: int
    term: int
    next_term: int
    gcd: int
    tag: EquationTag


def delta_records(spec: SequenceSpec, start: int = 1, count: int = 1) -> list[DeltaRecord]:
    """The tag window with full per-pair detail (n, a_n, a_{n+1}, gcd, tag)."""
    if start < 1:
        raise DomainError("start must be >= 1, got %d" % start)
    if count < 1:
        raise DomainError("count must be >= 1, got %d" % count)
    terms = [spec.term(n) for n in range(start, start + count + 1)]
    out: list[DeltaRecord] = []
    for i in range(count):
        x, y = terms[i], terms[i + 1]
        out.append(DeltaRecord(start + i, x, y, _gcd(x, y), gamma_criterion(x, y)))
    return out
