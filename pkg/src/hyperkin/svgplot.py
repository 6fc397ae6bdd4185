"""Plain-text SVG of centrodes and trajectories in the Lorentzian plane."""
from __future__ import annotations

import math
from typing import Iterable, Sequence

import numpy as np

Polyline = Sequence[tuple[float, float] | None]  # None breaks the line

SIZE = 640
MARGIN = 40


def _segments(line: Polyline) -> list[list[tuple[float, float]]]:
    out, cur = [], []
    for p in line:
        if p is None or not all(math.isfinite(c) for c in p):
            if len(cur) > 1:
                out.append(cur)
            cur = []
        else:
            cur.append(p)
    if len(cur) > 1:
        out.append(cur)
    return out


def _bounds(lines: Iterable[Polyline]) -> tuple[float, float, float, float]:
    xs, ys = [-1.0, 1.0], [-1.0, 1.0]
    for line in lines:
        for seg in _segments(line):
            for x, y in seg:
                xs.append(x)
                ys.append(y)
    lo_x, hi_x, lo_y, hi_y = min(xs), max(xs), min(ys), max(ys)
    half = 0.55 * max(hi_x - lo_x, hi_y - lo_y)
    cx, cy = 0.5 * (lo_x + hi_x), 0.5 * (lo_y + hi_y)
    return cx - half, cx + half, cy - half, cy + half


def render(centrodes: Sequence[tuple[str, Polyline]],
           trajectories: Sequence[tuple[str, Polyline]],
           title: str = "") -> str:
    """Return the SVG document as a string; identical inputs give identical text."""
    x0, x1, y0, y1 = _bounds([c for _, c in centrodes] + [c for _, c in trajectories])
    span = SIZE - 2 * MARGIN
    sx = span / (x1 - x0)

    def px(x, y):
        return (MARGIN + (x - x0) * sx, SIZE - MARGIN - (y - y0) * sx)

    def path(seg, **attrs):
        pts = " ".join(f"{u:.3f},{v:.3f}" for u, v in (px(x, y) for x, y in seg))
        extra = "".join(f' {k.replace("_", "-")}="{v}"' for k, v in attrs.items())
        return f'  <polyline points="{pts}" fill="none"{extra}/>'

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
        f'viewBox="0 0 {SIZE} {SIZE}">',
        f'  <rect x="0" y="0" width="{SIZE}" height="{SIZE}" fill="white"/>',
    ]
    if title:
        out.append(f'  <title>{_escape(title)}</title>')

    # unit hyperbola, four branches
    s = np.linspace(-3.0, 3.0, 121)
    for bx, by in ((np.cosh, np.sinh), (np.sinh, np.cosh)):
        for sign in (1.0, -1.0):
            seg = [(sign * float(u), sign * float(v)) for u, v in zip(bx(s), by(s))
                   if x0 <= sign * u <= x1 and y0 <= sign * v <= y1]
            if len(seg) > 1:
                out.append(path(seg, stroke="#cccccc", stroke_width="1", **{"class": "hyperbola"}))

    # isotropic lines y = +-x
    lo, hi = max(x0, y0), min(x1, y1)
    if lo < hi:
        out.append(path([(lo, lo), (hi, hi)], stroke="#999999", stroke_dasharray="6,4",
                        **{"class": "isotropic"}))
    lo, hi = max(x0, -y1), min(x1, -y0)
    if lo < hi:
        out.append(path([(lo, -lo), (hi, -hi)], stroke="#999999", stroke_dasharray="6,4",
                        **{"class": "isotropic"}))

    colours = ["#1f77b4", "#d62728"]
    for k, (label, line) in enumerate(centrodes):
        for seg in _segments(line):
            out.append(path(seg, stroke=colours[k % 2], stroke_width="2",
                            **{"class": "centrode", "data-label": _escape(label)}))
    for label, line in trajectories:
        for seg in _segments(line):
            out.append(path(seg, stroke="#2ca02c", stroke_width="1.2",
                            **{"class": "trajectory", "data-label": _escape(label)}))
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _escape(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;").replace('"', "&quot;")
