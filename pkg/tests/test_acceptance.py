"""Acceptance sweep: thirteen headline checks, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines as they
print; without ``-s`` pytest shows them only for failing checks.
"""

from math import gcd

from diopair import (
    SequenceSpec,
    compute_Mk,
    alternation_onset,
    delta,
    density_scan,
    detect_period,
    gamma_criterion,
    render_ratio,
    run_length,
    theta,
    verify_criterion_oracle,
    verify_exactly_one,
)
from helpers import naive_mk, totient_sieve


def report(num: int, label: str, ok: bool) -> None:
    print("%s criterion %2d: %s" % ("[PASS]" if ok else "[FAIL]", num, label))
    assert ok, "criterion %d failed: %s" % (num, label)


def test_criterion_01_closed_form_equals_enumeration():
    result = verify_criterion_oracle(300)
    ok = result.ok and result.pairs_checked == 300 * 300
    report(1, "closed-form tag matches brute enumeration on all 90000 pairs up to 300", ok)


def test_criterion_02_every_coprime_pair_solves_exactly_one():
    result = verify_exactly_one(300)
    expected_pairs = 1 + sum(totient_sieve(300)[2:])
    ok = result.ok and result.pairs_checked == expected_pairs
    report(2, "each of the %d coprime pairs up to 300 solves exactly one equation" % expected_pairs, ok)


def test_criterion_03_inverse_of_reduced_pair():
    ok = theta(15, 85) == 6
    report(3, "theta(15, 85) = 6", ok)


def test_criterion_04_doubled_and_almost_doubled_pairs():
    ok = all(gamma_criterion(a, 2 * a) == 1 for a in range(1, 501)) and all(
        gamma_criterion(a, 2 * a - 1) == 2 for a in range(2, 501)
    )
    report(4, "tag(a, 2a) = 1 and tag(a, 2a-1) = 2 through a = 500", ok)


def test_criterion_05_ceiling_powers_of_two_blocks():
    ok = True
    for k in range(1, 5):
        got = [int(t) for t in delta(SequenceSpec.ceilpow2(k), 1, 8 * k)]
        ok = ok and got == ([1] * k + [2] * k) * 4
    report(5, "ceilpow2 tags come in k-blocks 1^k 2^k over four periods, k = 1..4", ok)


def test_criterion_06_fourth_powers_window_verbatim():
    expected = [1, 2, 1, 1, 1, 2, 2, 1, 2, 2, 1, 2, 1, 2, 1, 2, 1,
                2, 1, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1]
    got = [int(t) for t in delta(SequenceSpec.power(4), 1, 34)]
    ok = got == expected
    report(6, "the 34 fourth-power tags match the reference window verbatim", ok)


def test_criterion_07_alternation_thresholds():
    ok = [compute_Mk(k) for k in (1, 2, 3)] == [2, 3, 7]
    for k in range(1, 9):
        ok = ok and compute_Mk(k) == naive_mk(k)
    for k in range(1, 7):
        m = compute_Mk(k)
        tags = delta(SequenceSpec.power(k), 1, m + 20)
        onset = alternation_onset(tags)
        ok = ok and onset is not None and onset <= m + 1
    report(7, "M_k matches a naive scan for k <= 8 and power tags settle by M_k + 1", ok)


def test_criterion_08_fixed_k_periods():
    ok = True
    for k in range(1, 51):
        p = detect_period(k)
        expected = k if k % 2 else 2 * k
        surplus = 1 if k % 2 else 2
        ok = ok and p.period == expected and p.ones_per_period - p.twos_per_period == surplus
    report(8, "row period is k (odd) or 2k (even) with one surplus of 1 or 2, k = 1..50", ok)


def test_criterion_09_arithmetic_progressions_alternate():
    ok = True
    for a in range(1, 21):
        for r in range(1, 21):
            tags = delta(SequenceSpec.arithmetic(a, r), 1, 50)
            ok = ok and all(tags[i] != tags[i + 1] for i in range(49))
    report(9, "arithmetic progression tags strictly alternate, a, r <= 20, 50 entries", ok)


def test_criterion_10_shifted_geometric_case_analysis():
    ok = True
    for a in range(1, 13):
        for r in range(2, 13):
            spec = SequenceSpec.shifted_geometric(a, r)
            d = gcd(a + 1, r - 1)
            if d % 2 == 0:
                tags = delta(spec, 2, 20)
                ok = ok and all(tags[i] != tags[i + 1] for i in range(19))
            elif (r - 1) % (a + 1) == 0:
                tags = [int(t) for t in delta(spec, 1, 20)]
                ok = ok and tags[0] == 1 and set(tags[1:]) == {2}
            else:
                tags = delta(spec, 1, 20)
                ok = ok and len(set(tags)) == 1
    report(10, "shifted geometric tags follow the gcd(a+1, r-1) case split, 20 entries", ok)


def test_criterion_11_order_two_recurrence_phases():
    phase = {(1, 1): 3, (1, 0): 2, (0, 1): 1}
    ok = True
    for a in range(1, 11):
        for b in range(1, 11):
            for k in range(1, 9):
                spec = SequenceSpec.recurrence2(a, b, k)
                if k % 2 == 0:
                    tags = delta(spec, 1, 30)
                    ok = ok and len(set(int(t) for t in tags)) == 1
                else:
                    d = gcd(a, b)
                    n0 = phase[((a // d) % 2, (b // d) % 2)]
                    tags = delta(spec, n0, 30)
                    ok = ok and all(r.length == 3 for r in run_length(tags))
    report(11, "recurrence tags: constant for even k, exact runs of 3 from the parity phase for odd k", ok)


def test_criterion_12_headline_densities():
    (h,) = density_scan(3000)
    (g,) = density_scan(3000, coprime_only=True)
    conventions = {
        "diagonal included": (
            (h.gamma1_pairs, h.total_pairs),
            (g.gamma1_pairs, g.total_pairs),
        ),
        "diagonal excluded": (
            (h.gamma1_pairs_offdiag, h.total_pairs_offdiag),
            (g.gamma1_pairs_offdiag, g.total_pairs_offdiag),
        ),
    }
    matched = None
    for name, ((hn, hd), (gn, gd)) in conventions.items():
        digits_ok = (
            render_ratio(hn, hd) == "0.30423059" and render_ratio(gn, gd) == "0.50051166"
        )
        tolerance_ok = (
            abs(hn / hd - 0.30423059) < 5e-4 and abs(gn / gd - 0.50051166) < 5e-4
        )
        if digits_ok and tolerance_ok:
            matched = name
            break
    report(12, "x = 3000 densities print 0.30423059 (all pairs) and 0.50051166 (coprime), %s" % (matched or "no convention matches"), matched is not None)


def test_criterion_13_fibonacci_runs_of_three():
    spec = SequenceSpec.recurrence2(1, 1, 1)
    tags = delta(spec, 1, 60)
    assert tags == delta(SequenceSpec.fibonacci(), 1, 60)
    runs = run_length(tags)
    ok = (
        runs[0].length <= 3
        and runs[-1].length <= 3
        and all(r.length == 3 for r in runs[1:-1])
    )
    report(13, "fibonacci tags fall in runs of 3 (ragged ends allowed), 60 entries", ok)
