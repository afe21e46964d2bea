"""Minimal deterministic SVG line plots (no plotting dependency).

Output is a plain polyline chart with axes, ticks and a text legend.
Everything is formatted with fixed precision so identical inputs yield
byte-identical files.
"""

from __future__ import annotations

import math

WIDTH = 720
HEIGHT = 480
MARGIN_L = 70
MARGIN_R = 170
MARGIN_T = 40
MARGIN_B = 55

PALETTE = [
    "#1f77b4",
    "#d62728",
    "#2ca02c",
    "#9467bd",
    "#ff7f0e",
    "#8c564b",
    "#17becf",
    "#7f7f7f",
]


def _ticks(lo: float, hi: float, n: int = 5) -> list[float]:
    if hi <= lo:
        hi = lo + 1.0
    span = hi - lo
    step = 10 ** math.floor(math.log10(span / n))
    for mult in (1, 2, 2.5, 5, 10):
        if span / (step * mult) <= n:
            step *= mult
            break
    first = math.ceil(lo / step) * step
    out = []
    v = first
    while v <= hi + 1e-12 * span:
        out.append(round(v, 10))
        v += step
    return out


def line_plot(series, title: str, xlabel: str, ylabel: str) -> str:
    """Render labelled (xs, ys) series to an SVG string.

    ``series`` is a list of (label, xs, ys) triples drawn in order with a
    fixed color cycle.
    """
    xs_all = [x for _, xs, _ in series for x in xs]
    ys_all = [y for _, _, ys in series for y in ys]
    if not xs_all:
        xs_all, ys_all = [0.0, 1.0], [0.0, 1.0]
    xlo, xhi = min(xs_all), max(xs_all)
    ylo, yhi = min(ys_all), max(ys_all)
    if xhi - xlo < 1e-12:
        xhi = xlo + 1.0
    if yhi - ylo < 1e-12:
        yhi = ylo + 1.0
    ypad = 0.05 * (yhi - ylo)
    ylo -= ypad
    yhi += ypad
    pw = WIDTH - MARGIN_L - MARGIN_R
    ph = HEIGHT - MARGIN_T - MARGIN_B

    def px(x: float) -> float:
        return MARGIN_L + pw * (x - xlo) / (xhi - xlo)

    def py(y: float) -> float:
        return MARGIN_T + ph * (yhi - y) / (yhi - ylo)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<text x="{WIDTH // 2}" y="22" text-anchor="middle" font-size="16" '
        f'font-family="sans-serif">{title}</text>',
    ]
    # axes
    x0, y0 = MARGIN_L, MARGIN_T + ph
    parts.append(
        f'<path d="M {x0} {MARGIN_T} L {x0} {y0} L {x0 + pw} {y0}" '
        f'stroke="black" fill="none" stroke-width="1"/>'
    )
    for tx in _ticks(xlo, xhi):
        parts.append(
            f'<line x1="{px(tx):.2f}" y1="{y0}" x2="{px(tx):.2f}" y2="{y0 + 5}" stroke="black"/>'
        )
        parts.append(
            f'<text x="{px(tx):.2f}" y="{y0 + 20}" text-anchor="middle" font-size="11" '
            f'font-family="sans-serif">{tx:g}</text>'
        )
    for ty in _ticks(ylo, yhi):
        parts.append(
            f'<line x1="{x0 - 5}" y1="{py(ty):.2f}" x2="{x0}" y2="{py(ty):.2f}" stroke="black"/>'
        )
        parts.append(
            f'<text x="{x0 - 9}" y="{py(ty):.2f}" text-anchor="end" dominant-baseline="middle" '
            f'font-size="11" font-family="sans-serif">{ty:g}</text>'
        )
    parts.append(
        f'<text x="{x0 + pw // 2}" y="{HEIGHT - 12}" text-anchor="middle" font-size="13" '
        f'font-family="sans-serif">{xlabel}</text>'
    )
    parts.append(
        f'<text x="18" y="{MARGIN_T + ph // 2}" text-anchor="middle" font-size="13" '
        f'font-family="sans-serif" transform="rotate(-90 18 {MARGIN_T + ph // 2})">{ylabel}</text>'
    )
    # curves + legend
    for i, (label, xs, ys) in enumerate(series):
        color = PALETTE[i % len(PALETTE)]
        pts = " ".join(f"{px(x):.2f},{py(y):.2f}" for x, y in zip(xs, ys))
        parts.append(
            f'<polyline points="{pts}" fill="none" stroke="{color}" stroke-width="1.5"/>'
        )
        ly = MARGIN_T + 14 + 16 * i
        lx = WIDTH - MARGIN_R + 12
        parts.append(
            f'<line x1="{lx}" y1="{ly - 4}" x2="{lx + 20}" y2="{ly - 4}" '
            f'stroke="{color}" stroke-width="1.5"/>'
        )
        parts.append(
            f'<text x="{lx + 26}" y="{ly}" font-size="11" font-family="sans-serif">{label}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
