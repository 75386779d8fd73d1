"""Deterministic SVG: eigenvalue histogram with a density curve on top.

Output depends only on the inputs; numbers are written with fixed
precision so repeated runs are byte-identical.
"""

from __future__ import annotations

from typing import Sequence
from xml.sax.saxutils import escape

WIDTH, HEIGHT = 800, 500
MARGIN_L, MARGIN_R, MARGIN_T, MARGIN_B = 60, 20, 30, 50


def _f(v: float) -> str:
    s = f"{v:.3f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def histogram(values: Sequence[float], lo: float, hi: float, bins: int) -> list[float]:
    """Bin heights normalized as a density over all values (out-of-range ones included)."""
    if bins < 1 or not hi > lo:
        raise ValueError("need bins >= 1 and hi > lo")
    counts = [0] * bins
    width = (hi - lo) / bins
    for v in values:
        if lo <= v < hi:
            counts[int((v - lo) / width)] += 1
        elif v == hi:
            counts[-1] += 1
    total = max(len(values), 1)
    return [c / (total * width) for c in counts]


def render(eigenvalues: Sequence[float], curve_x: Sequence[float], curve_y: Sequence[float],
           *, x_max: float, bins: int, title: str = "") -> str:
    heights = histogram(eigenvalues, 0.0, x_max, bins)
    y_max = max(max(heights, default=0.0), max(curve_y, default=0.0))
    y_max = 1.05 * y_max if y_max > 0 else 1.0
    pw = WIDTH - MARGIN_L - MARGIN_R
    ph = HEIGHT - MARGIN_T - MARGIN_B

    def sx(x):
        return MARGIN_L + pw * x / x_max

    def sy(y):
        return MARGIN_T + ph * (1 - min(y, y_max) / y_max)

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {WIDTH} {HEIGHT}" '
        f'width="{WIDTH}" height="{HEIGHT}">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
    ]
    if title:
        out.append(
            f'<text x="{WIDTH / 2:.0f}" y="20" text-anchor="middle" '
            f'font-family="sans-serif" font-size="14">{escape(title)}</text>'
        )
    bw = x_max / bins
    out.append('<g fill="#9ecae1" stroke="#3182bd" stroke-width="0.5">')
    for i, h in enumerate(heights):
        if h <= 0:
            continue
        x0, x1 = sx(i * bw), sx((i + 1) * bw)
        y = sy(h)
        out.append(
            f'<rect x="{_f(x0)}" y="{_f(y)}" width="{_f(x1 - x0)}" '
            f'height="{_f(MARGIN_T + ph - y)}"/>'
        )
    out.append("</g>")
    if len(curve_x):
        pts = " ".join(f"{_f(sx(x))},{_f(sy(y))}" for x, y in zip(curve_x, curve_y))
        out.append(f'<polyline fill="none" stroke="#d62728" stroke-width="2" points="{pts}"/>')
    # axes and ticks
    x_axis_y = MARGIN_T + ph
    out.append(
        f'<line x1="{MARGIN_L}" y1="{x_axis_y}" x2="{MARGIN_L + pw}" y2="{x_axis_y}" stroke="black"/>'
    )
    out.append(f'<line x1="{MARGIN_L}" y1="{MARGIN_T}" x2="{MARGIN_L}" y2="{x_axis_y}" stroke="black"/>')
    for i in range(6):
        xv = x_max * i / 5
        out.append(
            f'<text x="{_f(sx(xv))}" y="{x_axis_y + 18}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="11">{xv:.3g}</text>'
        )
        yv = y_max * i / 5
        out.append(
            f'<text x="{MARGIN_L - 6}" y="{_f(sy(yv) + 4)}" text-anchor="end" '
            f'font-family="sans-serif" font-size="11">{yv:.3g}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
