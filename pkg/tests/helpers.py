"""Independent oracles shared by the test modules.

Everything here is deliberately written from first principles (trial
division, literal enumeration, closed forms) so library results are checked
by a second route, not by themselves.
"""

from __future__ import annotations

from math import comb, gcd


def totient_sieve(n: int) -> list[int]:
    """phi[0..n] by the classic sieve."""
    phi = list(range(n + 1))
    for p in range(2, n + 1):
        if phi[p] == p:  # p is prime
            for multiple in range(p, n + 1, p):
                phi[multiple] -= phi[multiple] // p
    return phi


def phi_trial(m: int) -> int:
    """Euler's totient by trial-division factorization."""
    result = m
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def raw_solutions(a: int, b: int) -> list[tuple[int, int, int]]:
    """All nonnegative (equation, x, y) solving the pair's own equations.

    No coprimality assumption and no reduction: this enumerates
    a*x + b*y = t and a*x + b*y = t - 1 with t = (a-1)(b-1)/2 directly,
    skipping an equation whose target is not a nonnegative integer.
    """
    twice_target = (a - 1) * (b - 1)
    out: list[tuple[int, int, int]] = []
    for equation, twice_rhs in ((1, twice_target), (2, twice_target - 2)):
        if twice_rhs < 0 or twice_rhs % 2:
            continue
        rhs = twice_rhs // 2
        for x in range(rhs // a + 1):
            rest = rhs - a * x
            if rest % b == 0:
                out.append((equation, x, rest // b))
    return out


def g_closed_form(k: int) -> list[int]:
    """Coefficients of (1 + x + ... + x^(k-1))^k mod x^k by stars-and-bars:
    below degree k the per-factor cap never binds, so the coefficient of
    x^n is C(n+k-1, k-1)."""
    return [comb(n + k - 1, k - 1) for n in range(k)]


def naive_mk(k: int) -> int:
    """Threshold scan straight from the defining inequalities.

    Uses the closed-form g, evaluates the four conditions literally, and
    accepts the smallest M whose predecessor fails while M..M+1000 all hold.
    """
    g = g_closed_form(k)

    def g_at(x: int) -> int:
        return sum(c * x**i for i, c in enumerate(g))

    def holds(n: int) -> bool:
        nk = n**k
        if k % 2:
            return 0 < nk - g_at(n) < nk and 0 < g_at(-n) < nk
        return 0 < nk + g_at(-n) < nk and 0 < g_at(n) < nk

    last_fail = 0
    n = 1
    while n <= last_fail + 1000:
        if not holds(n):
            last_fail = n
        n += 1
    return last_fail + 1


def coprime(a: int, b: int) -> bool:
    return gcd(a, b) == 1
