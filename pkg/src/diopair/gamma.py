"""Which of the two complementary equations does a pair of naturals use?

For coprime a, b exactly one of

    (1)  a*x + b*y     = (a-1)(b-1)/2
    (2)  a*x + b*y + 1 = (a-1)(b-1)/2

has a solution in nonnegative integers x, y, and that solution is unique.
The tag of an arbitrary pair is the tag of its reduced pair (a/d, b/d).

Two independent routes compute the tag:

* ``gamma_criterion`` -- O(log) arithmetic via a parity test on a modular
  inverse: with (p, q) the reduced pair, if p or q is 1 the tag is 1; if p
  is odd the tag is 1 exactly when theta(b, a) is odd; if p is even the tag
  is 1 exactly when theta(a, b) is odd.
* ``gamma_oracle`` -- brute-force enumeration of both equations, which also
  certifies that exactly one solution exists.

They must always agree; ``verify_criterion_oracle`` sweeps that claim.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import IntEnum
from functools import lru_cache
from math import gcd as _gcd

from .arith import ReducedPair, mod_inverse, reduce
from .errors import DomainError, TheoremViolationError


class EquationTag(IntEnum):
    EQ1 = 1
    EQ2 = 2


@dataclass(frozen=True)
class EquationSolution:
    tag: EquationTag
    x: int
    y: int


def equation_target(a: int, b: int) -> int:
    """The shared right-hand side (a-1)(b-1)/2 of equation (1).

    Integral whenever a and b are not both even, in particular for any
    coprime pair.
    """
    prod = (a - 1) * (b - 1)
    if prod % 2:
        raise DomainError("(a-1)(b-1) is odd for (%d, %d); no integer target" % (a, b))
    return prod // 2


def solve_brute(a: int, b: int) -> list[EquationSolution]:
    """Enumerate all nonnegative solutions of equations (1) and (2).

    Requires a coprime pair.  For each equation the target is walked by y
    from 0 to target // b, checking divisibility of the remainder by a.
    Results are ordered equation (1) first, then by y.
    """
    if a < 1 or b < 1:
        raise DomainError("solve_brute expects positive integers, got (%d, %d)" % (a, b))
    if _gcd(a, b) != 1:
        raise DomainError("solve_brute expects a coprime pair, got (%d, %d)" % (a, b))
    target = equation_target(a, b)
    found: list[EquationSolution] = []
    for tag, rhs in ((EquationTag.EQ1, target), (EquationTag.EQ2, target - 1)):
        y = 0
        while b * y <= rhs:
            remainder = rhs - b * y
            if remainder % a == 0:
                found.append(EquationSolution(tag, remainder // a, y))
            y += 1
    return found


def gamma_of_reduced(p: int, q: int) -> int:
    """Tag (1 or 2) of an already-reduced pair; plain ints, no allocation.

    This is the hot path for grid sweeps; callers guarantee gcd(p, q) = 1.
    """
    if p == 1 or q == 1:
        return 1
    if p & 1:
        t = mod_inverse(q, p)
    else:
        t = mod_inverse(p, q)
    return 1 if t & 1 else 2


def gamma_criterion(a: int, b: int) -> EquationTag:
    """Tag of (a, b) via the parity criterion (reduces internally)."""
    if a < 1 or b < 1:
        raise DomainError("gamma expects positive integers, got (%d, %d)" % (a, b))
    d = _gcd(a, b)
    return EquationTag(gamma_of_reduced(a // d, b // d))


@dataclass(frozen=True)
class GammaClassification:
    """Tag plus the working shown: reduction, branch taken, inverse used."""

    a: int
    b: int
    reduced: ReducedPair
    tag: EquationTag
    branch: str  # "divides" | "first-odd" | "first-even"
    theta_used: int | None


def classify(a: int, b: int) -> GammaClassification:
    """Like gamma_criterion, but reporting how the branch was decided."""
    red = reduce(a, b)
    p, q = red.a_red, red.b_red
    if p == 1 or q == 1:
        return GammaClassification(a, b, red, EquationTag.EQ1, "divides", None)
    if p & 1:
        branch = "first-odd"
        t = mod_inverse(q, p)  # theta(b, a)
    else:
        branch = "first-even"
        t = mod_inverse(p, q)  # theta(a, b)
    tag = EquationTag.EQ1 if t & 1 else EquationTag.EQ2
    return GammaClassification(a, b, red, tag, branch, t)


@lru_cache(maxsize=None)
def _brute_tag(p: int, q: int) -> int:
    """Unique tag of a reduced pair by enumeration; aborts if not unique."""
    solutions = solve_brute(p, q)
    if len(solutions) != 1:
        raise TheoremViolationError(
            "pair (%d, %d) has %d solutions across equations (1)/(2): %r"
            % (p, q, len(solutions), solutions)
        )
    return int(solutions[0].tag)


def gamma_oracle(a: int, b: int) -> EquationTag:
    """Tag of (a, b) by brute force, asserting the exactly-one property."""
    red = reduce(a, b)
    p, q = red.a_red, red.b_red
    if p > q:
        p, q = q, p  # the tag is symmetric; canonical order shares the cache
    return EquationTag(_brute_tag(p, q))


@dataclass(frozen=True)
class UniquenessCounterexample:
    a: int
    b: int
    solutions: tuple[EquationSolution, ...]


@dataclass(frozen=True)
class UniquenessReport:
    limit: int
    pairs_checked: int
    counterexamples: tuple[UniquenessCounterexample, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def _uniqueness_chunk(args: tuple[int, int]) -> tuple[int, list[tuple[int, int, int]]]:
    lo, hi = args
    checked = 0
    bad: list[tuple[int, int, int]] = []
    for b in range(lo, hi):
        for a in range(1, b + 1):
            if _gcd(a, b) != 1:
                continue
            checked += 1
            n = len(solve_brute(a, b))
            if n != 1:
                bad.append((a, b, n))
    return checked, bad


def verify_exactly_one(limit: int, jobs: int = 1) -> UniquenessReport:
    """Check every coprime pair 1 <= a <= b <= limit for exactly one solution."""
    if limit < 1:
        raise DomainError("limit must be >= 1, got %d" % limit)
    chunks = _chunks(1, limit + 1, jobs)
    results = _map_chunks(_uniqueness_chunk, chunks, jobs)
    checked = 0
    bad: list[UniquenessCounterexample] = []
    for chunk_checked, chunk_bad in results:
        checked += chunk_checked
        for a, b, _ in chunk_bad:
            bad.append(UniquenessCounterexample(a, b, tuple(solve_brute(a, b))))
    return UniquenessReport(limit, checked, tuple(bad))


@dataclass(frozen=True)
class EquivalenceMismatch:
    a: int
    b: int
    criterion: EquationTag
    oracle: EquationTag


@dataclass(frozen=True)
class EquivalenceReport:
    limit: int
    pairs_checked: int
    mismatches: tuple[EquivalenceMismatch, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def _equivalence_chunk(args: tuple[int, int, int]) -> tuple[int, list[tuple[int, int, int, int]]]:
    lo, hi, limit = args
    checked = 0
    bad: list[tuple[int, int, int, int]] = []
    for a in range(lo, hi):
        for b in range(1, limit + 1):
            fast = int(gamma_criterion(a, b))
            slow = int(gamma_oracle(a, b))
            checked += 1
            if fast != slow:
                bad.append((a, b, fast, slow))
    return checked, bad


def verify_criterion_oracle(limit: int, jobs: int = 1) -> EquivalenceReport:
    """Compare the parity criterion against brute force on the full grid,
    both orientations of every pair up to the limit."""
    if limit < 1:
        raise DomainError("limit must be >= 1, got %d" % limit)
    chunks = [(lo, hi, limit) for lo, hi in _chunks(1, limit + 1, jobs)]
    results = _map_chunks(_equivalence_chunk, chunks, jobs)
    checked = 0
    bad: list[EquivalenceMismatch] = []
    for chunk_checked, chunk_bad in results:
        checked += chunk_checked
        bad.extend(
            EquivalenceMismatch(a, b, EquationTag(f), EquationTag(s))
            for a, b, f, s in chunk_bad
        )
    return EquivalenceReport(limit, checked, tuple(bad))


def _chunks(lo: int, hi: int, jobs: int) -> list[tuple[int, int]]:
    """Contiguous subranges of range(lo, hi), several per worker for balance."""
    span = hi - lo
    if jobs <= 1 or span <= 1:
        return [(lo, hi)]
    step = max(1, span // (jobs * 8))
    return [(start, min(start + step, hi)) for start in range(lo, hi, step)]


def _map_chunks(fn, chunks, jobs: int):
    if jobs <= 1 or len(chunks) == 1:
        return [fn(c) for c in chunks]
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, chunks))
