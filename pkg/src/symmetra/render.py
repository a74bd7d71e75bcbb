"""SVG pictures of implicit curves with their symmetry elements."""

from __future__ import annotations

import math
from typing import Optional, Sequence

import numpy as np

from .bipoly import BiPoly
from .errors import InvalidInputError
from .reports import SymmetryReport, unit_angle

Window = tuple[float, float, float, float]

_SIZE = 480
_STYLE = {
    "curve": 'fill="none" stroke="#1f3b73" stroke-width="1.6"',
    "curve2": 'fill="none" stroke="#b5402a" stroke-width="1.6" stroke-dasharray="5,3"',
    "axis": 'stroke="#3a8a3a" stroke-width="1" stroke-dasharray="6,4"',
    "center": 'fill="#3a8a3a"',
}


def _grid_values(f: BiPoly, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    X, Y = np.meshgrid(xs, ys)
    out = np.zeros_like(X)
    for (i, j), c in f.terms.items():
        out += float(c) * X ** i * Y ** j
    return out


def _crossing(v0: float, v1: float) -> float:
    return v0 / (v0 - v1)


def contour_polylines(f: BiPoly, window: Window, resolution: int) -> list[tuple[list[tuple[float, float]], bool]]:
    """Zero set of ``f`` on ``window`` as polylines, each flagged closed or open."""
    x0, y0, x1, y1 = window
    xs = np.linspace(x0, x1, resolution + 1)
    ys = np.linspace(y0, y1, resolution + 1)
    V = _grid_values(f, xs, ys)
    V[V == 0] = 1e-300  # break exact zeros consistently

    def point(edge):
        kind, i, j = edge
        if kind == "h":  # from (i, j) to (i + 1, j)
            t = _crossing(V[j, i], V[j, i + 1])
            return (xs[i] + t * (xs[i + 1] - xs[i]), ys[j])
        t = _crossing(V[j, i], V[j + 1, i])
        return (xs[i], ys[j] + t * (ys[j + 1] - ys[j]))

    links: dict = {}

    def connect(a, b):
        links.setdefault(a, []).append(b)
        links.setdefault(b, []).append(a)

    for j in range(resolution):
        for i in range(resolution):
            corners = [V[j, i], V[j, i + 1], V[j + 1, i + 1], V[j + 1, i]]
            edges = [("h", i, j), ("v", i + 1, j), ("h", i, j + 1), ("v", i, j)]
            cut = [edges[k] for k in range(4) if (corners[k] > 0) != (corners[(k + 1) % 4] > 0)]
            if len(cut) == 2:
                connect(cut[0], cut[1])
            elif len(cut) == 4:
                # saddle: decide the pairing by the cell-center sign
                mid = sum(corners) / 4
                if (mid > 0) == (corners[0] > 0):
                    connect(cut[0], cut[1])
                    connect(cut[2], cut[3])
                else:
                    connect(cut[0], cut[3])
                    connect(cut[1], cut[2])

    seen = set()
    lines = []
    # open chains start at degree-one edges; the rest are loops
    starts = sorted(links, key=lambda e: (len(links[e]) != 1, e))
    for start in starts:
        if start in seen:
            continue
        chain = [start]
        seen.add(start)
        prev, cur = None, start
        closed = False
        while True:
            nxt = [e for e in links[cur] if e != prev and e not in seen]
            if not nxt:
                closed = len(chain) > 2 and start in links[cur] and prev is not None
                break
            prev, cur = cur, nxt[0]
            seen.add(cur)
            chain.append(cur)
        lines.append(([point(e) for e in chain], closed))
    return lines


class _Canvas:
    def __init__(self, window: Window):
        self.x0, self.y0, self.x1, self.y1 = window
        self.sx = _SIZE / (self.x1 - self.x0)
        self.sy = _SIZE / (self.y1 - self.y0)

    def map(self, x: float, y: float) -> tuple[float, float]:
        return ((x - self.x0) * self.sx, (self.y1 - y) * self.sy)

    def path(self, pts, closed: bool, cls: str) -> str:
        coords = " L ".join(f"{u:.2f},{v:.2f}" for u, v in (self.map(x, y) for x, y in pts))
        return f'<path class="{cls}" d="M {coords}{" Z" if closed else ""}" {_STYLE[cls]}/>'


def _check_window(window: Window, resolution: int) -> None:
    x0, y0, x1, y1 = window
    if not (x1 > x0 and y1 > y0):
        raise InvalidInputError(f"empty window {window}")
    if resolution < 16:
        raise InvalidInputError("resolution must be at least 16")


def render_svg(
    f: BiPoly,
    report: Optional[SymmetryReport] = None,
    window: Window = (-3.0, -3.0, 3.0, 3.0),
    resolution: int = 200,
    others: Sequence[BiPoly] = (),
) -> str:
    """SVG text: the curve, then any further curves dashed, then center and axes."""
    _check_window(window, resolution)
    canvas = _Canvas(window)
    body = []
    for pts, closed in contour_polylines(f, window, resolution):
        body.append(canvas.path(pts, closed, "curve"))
    for g in others:
        for pts, closed in contour_polylines(g, window, resolution):
            body.append(canvas.path(pts, closed, "curve2"))
    if report is not None and report.center is not None:
        cx, cy = float(report.center.re), float(report.center.im)
        span = math.hypot(window[2] - window[0], window[3] - window[1])
        for ref in report.reflections:
            phi = float(unit_angle(ref.unit, 15))
            dx, dy = span * math.cos(phi), span * math.sin(phi)
            (u0, v0), (u1, v1) = canvas.map(cx - dx, cy - dy), canvas.map(cx + dx, cy + dy)
            body.append(f'<line class="axis" x1="{u0:.2f}" y1="{v0:.2f}" x2="{u1:.2f}" y2="{v1:.2f}" {_STYLE["axis"]}/>')
        u, v = canvas.map(cx, cy)
        body.append(f'<circle class="center" cx="{u:.2f}" cy="{v:.2f}" r="3" {_STYLE["center"]}/>')
    return "\n".join(
        [
            '<?xml version="1.0" encoding="UTF-8"?>',
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_SIZE}" height="{_SIZE}" '
            f'viewBox="0 0 {_SIZE} {_SIZE}">',
            f'<rect width="{_SIZE}" height="{_SIZE}" fill="white"/>',
            f'<clipPath id="frame"><rect width="{_SIZE}" height="{_SIZE}"/></clipPath>',
            '<g clip-path="url(#frame)">',
            *body,
            "</g>",
            "</svg>",
            "",
        ]
    )


__all__ = ["contour_polylines", "render_svg"]
