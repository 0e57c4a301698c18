"""Empirical densities over the pair grid 1 <= a <= b <= x.

A pair with a common factor d > 1 solves neither equation: d divides
a*x + b*y while (a-1)(b-1) = 1 (mod d), so the target (a-1)(b-1)/2 is
nonzero mod d when d is odd and not an integer when d is even.  The
headline counter ``gamma1_pairs`` therefore tallies pairs whose own
equation (1) is solvable, i.e. coprime pairs with tag 1.  The tag of the
*reduced* pair is defined for every pair, and that tally is carried
alongside as ``reduced_gamma1_pairs``; diagonal-excluded twins of every
counter are kept as well, so either convention can be read off any sample.

The sweep is a single pass b = 1..x_max with an inner loop a = 1..b,
optionally fanned out over column chunks; aggregation is an ordered
reduction, so results never depend on the worker count.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as _gcd
from pathlib import Path

from .errors import DomainError
from .gamma import gamma_of_reduced

_SCALE = 10**8


def render_ratio(num: int, den: int) -> str:
    """num/den as a decimal string with 8 places, round-half-even, exact."""
    if den <= 0:
        raise DomainError("ratio denominator must be positive, got %d" % den)
    if num < 0:
        raise DomainError("ratio numerator must be a natural, got %d" % num)
    q, r = divmod(num * _SCALE, den)
    if 2 * r > den or (2 * r == den and q & 1):
        q += 1
    return "%d.%08d" % divmod(q, _SCALE)


@dataclass(frozen=True)
class DensitySample:
    """Cumulative counts at checkpoint x; see the module note on conventions."""

    x: int
    total_pairs: int
    gamma1_pairs: int
    reduced_gamma1_pairs: int
    total_pairs_offdiag: int
    gamma1_pairs_offdiag: int
    reduced_gamma1_pairs_offdiag: int

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.gamma1_pairs, self.total_pairs)

    def ratio_decimal(self) -> str:
        return render_ratio(self.gamma1_pairs, self.total_pairs)


def _column_counts(b: int) -> tuple[int, int, int]:
    """(coprime, coprime-tag-1, reduced-tag-1) counts over a = 1..b."""
    cop = cop_g1 = red_g1 = 0
    for a in range(1, b + 1):
        d = _gcd(a, b)
        tag = gamma_of_reduced(a // d, b // d)
        if tag == 1:
            red_g1 += 1
            if d == 1:
                cop += 1
                cop_g1 += 1
        elif d == 1:
            cop += 1
    return cop, cop_g1, red_g1


def _scan_chunk(bounds: tuple[int, int]) -> list[tuple[int, int, int]]:
    lo, hi = bounds
    return [_column_counts(b) for b in range(lo, hi)]


def even_checkpoints(x_max: int, samples: int) -> list[int]:
    """`samples` checkpoints evenly spaced over 1..x_max, ending at x_max."""
    if x_max < 1:
        raise DomainError("x_max must be >= 1, got %d" % x_max)
    if samples < 1:
        raise DomainError("samples must be >= 1, got %d" % samples)
    points = {-(-i * x_max // samples) for i in range(1, samples + 1)}
    return sorted(points)


def density_scan(
    x_max: int,
    checkpoints: list[int] | None = None,
    coprime_only: bool = False,
    jobs: int = 1,
) -> list[DensitySample]:
    """Sweep the grid once, emitting one DensitySample per checkpoint.

    With ``coprime_only`` the denominators are the coprime pair counts
    (the numerator family is unchanged: on coprime pairs the pair's own
    tag and its reduced tag coincide).
    """
    if x_max < 1:
        raise DomainError("x_max must be >= 1, got %d" % x_max)
    if checkpoints is None:
        checkpoints = [x_max]
    if not checkpoints:
        raise DomainError("checkpoint list is empty")
    previous = 0
    for c in checkpoints:
        if c <= previous:
            raise DomainError("checkpoints must be strictly increasing naturals")
        previous = c
    if checkpoints[-1] > x_max:
        raise DomainError("checkpoint %d exceeds x_max %d" % (checkpoints[-1], x_max))

    scan_max = checkpoints[-1]  # columns past the last checkpoint can't matter
    if jobs <= 1:
        column_stream = (_column_counts(b) for b in range(1, scan_max + 1))
    else:
        bounds = _column_chunks(scan_max, jobs)
        from concurrent.futures import ProcessPoolExecutor

        def _stream():
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                for chunk in pool.map(_scan_chunk, bounds):
                    yield from chunk

        column_stream = _stream()

    samples: list[DensitySample] = []
    want = iter(checkpoints)
    next_x = next(want)
    tot = cop = cop_g1 = red_g1 = 0
    for b, (col_cop, col_cop_g1, col_red_g1) in enumerate(column_stream, start=1):
        tot += b
        cop += col_cop
        cop_g1 += col_cop_g1
        red_g1 += col_red_g1
        if b == next_x:
            # diagonal pairs: one per column, always reduced-tag-1; the only
            # coprime one is (1, 1)
            if coprime_only:
                samples.append(
                    DensitySample(b, cop, cop_g1, cop_g1, cop - 1, cop_g1 - 1, cop_g1 - 1)
                )
            else:
                samples.append(
                    DensitySample(b, tot, cop_g1, red_g1, tot - b, cop_g1 - 1, red_g1 - b)
                )
            next_x = next(want, None)
            if next_x is None:
                break
    return samples


def _column_chunks(x_max: int, jobs: int) -> list[tuple[int, int]]:
    step = max(1, x_max // (jobs * 16))
    return [(lo, min(lo + step, x_max + 1)) for lo in range(1, x_max + 1, step)]


def emit_csv(samples: list[DensitySample], destination: str | Path) -> None:
    """Header x,total_pairs,gamma1_pairs,ratio then one row per sample."""
    if not samples:
        raise DomainError("no samples to write")
    lines = ["x,total_pairs,gamma1_pairs,ratio"]
    lines.extend(
        "%d,%d,%d,%s" % (s.x, s.total_pairs, s.gamma1_pairs, s.ratio_decimal())
        for s in samples
    )
    Path(destination).write_text("\n".join(lines) + "\n", encoding="utf-8")


_SVG_W, _SVG_H = 800, 480
_ML, _MR, _MT, _MB = 70, 20, 20, 55


def emit_svg(samples: list[DensitySample], destination: str | Path) -> None:
    """Standalone polyline-with-markers plot of ratio against x.

    The vertical axis is fixed to [0, 1] with ticks every 0.1; the
    horizontal axis runs from 0 to the last checkpoint.
    """
    if len(samples) < 2:
        raise DomainError("need at least 2 samples to plot, got %d" % len(samples))
    x_max = samples[-1].x
    plot_w = _SVG_W - _ML - _MR
    plot_h = _SVG_H - _MT - _MB

    def sx(x: float) -> float:
        return _ML + plot_w * x / x_max

    def sy(r: float) -> float:
        return _MT + plot_h * (1.0 - r)

    parts: list[str] = [
        '<svg xmlns="http://www.w3.org/2000/svg" width="%d" height="%d" '
        'viewBox="0 0 %d %d">' % (_SVG_W, _SVG_H, _SVG_W, _SVG_H),
        '<rect width="%d" height="%d" fill="white"/>' % (_SVG_W, _SVG_H),
        '<line x1="%d" y1="%.2f" x2="%d" y2="%.2f" stroke="black"/>'
        % (_ML, sy(0.0), _SVG_W - _MR, sy(0.0)),
        '<line x1="%d" y1="%.2f" x2="%d" y2="%.2f" stroke="black"/>'
        % (_ML, sy(0.0), _ML, sy(1.0)),
    ]
    for i in range(11):
        r = i / 10
        y = sy(r)
        parts.append(
            '<line x1="%.2f" y1="%.2f" x2="%.2f" y2="%.2f" stroke="black"/>'
            % (_ML - 5, y, _ML, y)
        )
        parts.append(
            '<line x1="%d" y1="%.2f" x2="%d" y2="%.2f" stroke="#dddddd"/>'
            % (_ML, y, _SVG_W - _MR, y)
        )
        parts.append(
            '<text x="%d" y="%.2f" text-anchor="end" font-size="12" '
            'font-family="sans-serif">%.1f</text>' % (_ML - 8, y + 4, r)
        )
    for i in range(6):
        x = i * x_max / 5
        px = sx(x)
        parts.append(
            '<line x1="%.2f" y1="%.2f" x2="%.2f" y2="%.2f" stroke="black"/>'
            % (px, sy(0.0), px, sy(0.0) + 5)
        )
        parts.append(
            '<text x="%.2f" y="%.2f" text-anchor="middle" font-size="12" '
            'font-family="sans-serif">%d</text>' % (px, sy(0.0) + 20, round(x))
        )
    parts.append(
        '<text x="%.2f" y="%d" text-anchor="middle" font-size="13" '
        'font-family="sans-serif">x</text>' % (_ML + plot_w / 2, _SVG_H - 12)
    )
    parts.append(
        '<text x="16" y="%.2f" text-anchor="middle" font-size="13" '
        'font-family="sans-serif" transform="rotate(-90 16 %.2f)">ratio</text>'
        % (_MT + plot_h / 2, _MT + plot_h / 2)
    )
    points = " ".join(
        "%.2f,%.2f" % (sx(s.x), sy(s.gamma1_pairs / s.total_pairs)) for s in samples
    )
    parts.append(
        '<polyline points="%s" fill="none" stroke="#1f6fb4" stroke-width="1.5"/>'
        % points
    )
    if len(samples) <= 60:
        for s in samples:
            parts.append(
                '<circle cx="%.2f" cy="%.2f" r="2.5" fill="#1f6fb4"/>'
                % (sx(s.x), sy(s.gamma1_pairs / s.total_pairs))
            )
    parts.append("</svg>")
    Path(destination).write_text("\n".join(parts) + "\n", encoding="utf-8")
