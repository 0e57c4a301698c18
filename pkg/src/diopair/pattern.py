"""Structure of tag sequences: runs, alternation onset, thresholds, periods.

Two results need real machinery:

* ``compute_Mk`` -- the power sequence (n^k) has a tag sequence that settles
  into strict 1,2,1,2,... alternation once n clears a threshold M_k defined
  by four sign conditions on the truncated polynomial
  g(x) = (1 + x + ... + x^(k-1))^k mod x^k.  Each condition is a polynomial
  in n that must be strictly positive from M_k onward.  "For all n >= M"
  is certified exactly: beyond an integer Cauchy root bound the sign equals
  the (positive) leading coefficient's, and every integer up to the bound
  is checked directly.  No monotonicity in k is assumed.

* ``detect_period`` -- for fixed k, the row (tag(k, n))_n is periodic and
  its period divides k for odd k and 2k for even k, so only those divisors
  are candidate periods.  The scan window is rounded up to a whole number
  of candidate blocks so every candidate divides the window actually used.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, TheoremViolationError
from .gamma import EquationTag, gamma_criterion


@dataclass(frozen=True)
class Run:
    tag: int
    length: int


def run_length(tags) -> list[Run]:
    """Maximal constant blocks of a tag sequence, in order."""
    tags = list(tags)
    if not tags:
        raise DomainError("run_length of an empty sequence")
    runs: list[Run] = []
    current = int(tags[0])
    length = 1
    for t in tags[1:]:
        t = int(t)
        if t == current:
            length += 1
        else:
            runs.append(Run(current, length))
            current, length = t, 1
    runs.append(Run(current, length))
    return runs


def alternation_onset(tags) -> int | None:
    """Smallest 1-based index i such that tags[i:] strictly alternates and
    tags[i] = 1; None when no suffix qualifies."""
    tags = [int(t) for t in tags]
    if not tags:
        raise DomainError("alternation_onset of an empty sequence")
    s = len(tags) - 1
    for i in range(len(tags) - 2, -1, -1):
        if tags[i] != tags[i + 1]:
            s = i
        else:
            break
    if tags[s] == 1:
        return s + 1
    if s + 1 < len(tags):
        return s + 2  # alternating, so the next entry is a 1
    return None


# -- integer polynomials, ascending coefficients -------------------------


def _poly_trim(coeffs: list[int]) -> list[int]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _poly_mul_trunc(p: list[int], q: list[int], k: int) -> list[int]:
    out = [0] * min(k, len(p) + len(q) - 1)
    for i, ci in enumerate(p):
        if ci == 0 or i >= k:
            continue
        for j, cj in enumerate(q):
            if i + j >= k:
                break
            out[i + j] += ci * cj
    return out


def _poly_add(p: list[int], q: list[int]) -> list[int]:
    out = [0] * max(len(p), len(q))
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] += c
    return out


def _poly_neg(p: list[int]) -> list[int]:
    return [-c for c in p]

def _poly_reflect(p: list[int]) -> list[int]:
    """p(-x) as a polynomial in x."""
    return [c if i % 2 == 0 else -c for i, c in enumerate(p)]


def _poly_eval(p: list[int], n: int) -> int:
    acc = 0
    for c in reversed(p):
        acc = acc * n + c
    return acc


def g_polynomial(k: int) -> list[int]:
    """Coefficients of (1 + x + ... + x^(k-1))^k mod x^k, ascending."""
    if k < 1:
        raise DomainError("k must be >= 1, got %d" % k)
    base = [1] * k
    out = [1]
    for _ in range(k):
        out = _poly_mul_trunc(out, base, k)
    return out


def _mk_constraints(k: int) -> list[list[int]]:
    """Four polynomials in n that must all be strictly positive for n >= M_k.

    Odd k:  n^k - g(n) > 0,  g(n) > 0,  g(-n) > 0,  n^k - g(-n) > 0
    Even k: n^k + g(-n) > 0, -g(-n) > 0, g(n) > 0,  n^k - g(n) > 0
    """
    g = g_polynomial(k)
    gr = _poly_reflect(g)
    nk = [0] * k + [1]
    if k % 2:
        constraints = [
            _poly_add(nk, _poly_neg(g)),
            list(g),
            list(gr),
            _poly_add(nk, _poly_neg(gr)),
        ]
    else:
        constraints = [
            _poly_add(nk, gr),
            _poly_neg(gr),
            list(g),
            _poly_add(nk, _poly_neg(g)),
        ]
    return [_poly_trim(c) for c in constraints]


def compute_Mk(k: int) -> int:
    """Smallest M >= 1 with every sign condition holding for all n >= M."""
    last_fail = 0
    for poly in _mk_constraints(k):
        lead = poly[-1]
        if lead <= 0:
            raise TheoremViolationError(
                "constraint polynomial %r has nonpositive leading coefficient" % poly
            )
        rest = max((abs(c) for c in poly[:-1]), default=0)
        # Cauchy: every real root has |root| < 1 + rest/lead <= bound
        bound = 1 + -(-rest // lead)
        for n in range(1, bound + 1):
            if _poly_eval(poly, n) <= 0:
                last_fail = max(last_fail, n)
    return last_fail + 1


def gamma_fixed_k(k: int, count: int) -> list[EquationTag]:
    """The row (tag(k, n)) for n = 1..count."""
    if k < 1:
        raise DomainError("k must be >= 1, got %d" % k)
    if count < 1:
        raise DomainError("count must be >= 1, got %d" % count)
    return [gamma_criterion(k, n) for n in range(1, count + 1)]


@dataclass(frozen=True)
class PeriodReport:
    k: int
    period: int
    ones_per_period: int
    twos_per_period: int
    witness: tuple[int, ...]
    window_used: int


def _divisors(n: int) -> list[int]:
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i != n // i:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def detect_period(k: int, window: int | None = None) -> PeriodReport:
    """Empirically detect the period of (tag(k, n))_n over a finite window.

    Candidate periods are the divisors of k (odd k) or 2k (even k); the
    smallest candidate consistent across the whole window is reported.
    The window defaults to 6k (odd) / 8k (even), must be >= 4k, and is
    rounded up to a multiple of the candidate base.
    """
    if k < 1:
        raise DomainError("k must be >= 1, got %d" % k)
    base = k if k % 2 else 2 * k
    if window is None:
        window = 6 * k if k % 2 else 8 * k
    if window < 4 * k:
        raise DomainError("window must be >= 4k = %d, got %d" % (4 * k, window))
    window_used = -(-window // base) * base
    tags = [int(t) for t in gamma_fixed_k(k, window_used)]
    for candidate in _divisors(base):
        if all(tags[i] == tags[i + candidate] for i in range(window_used - candidate)):
            witness = tuple(tags[:candidate])
            ones = witness.count(1)
            return PeriodReport(k, candidate, ones, candidate - ones, witness, window_used)
    raise TheoremViolationError(
        "no divisor of %d is a period of the tag row for k=%d over %d entries"
        % (base, k, window_used)
    )
