"""SVG drawing of a dissection on a regular polygon."""

from __future__ import annotations

import math
from typing import Union

from catconv.model import Dissection, KInN, as_k_in_n

SIZE = 400
RADIUS = 160
MARK_FILL = "#f6d365"


def five_in_twelve() -> KInN:
    """A 5-in-12 dissection whose pentagon has side lengths 1, 4, 2, 2, 3
    read counterclockwise from vertex 0 (drawn at the bottom).

    Only the pentagon is pinned down; the cap triangulations are one fixed
    choice among the possible ones.
    """
    diags = ((1, 5), (5, 7), (7, 9), (0, 9), (1, 4), (2, 4), (0, 10))
    return as_k_in_n(Dissection(12, diags), 5, (0, 1, 5, 7, 9))


def vertex_xy(j: int, n: int) -> tuple:
    """Vertex j sits at angle -90 + 360 j / n degrees, counterclockwise on screen."""
    theta = math.radians(-90 + 360 * j / n)
    c = SIZE / 2
    return (c + RADIUS * math.cos(theta), c - RADIUS * math.sin(theta))


def _f(x: float) -> str:
    s = f"{x:.3f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def render_svg(x: Union[Dissection, KInN], labels: bool = True) -> str:
    D = x.dissection if isinstance(x, KInN) else x
    n = D.n
    pts = [vertex_xy(j, n) for j in range(n)]
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" '
        f'viewBox="0 0 {SIZE} {SIZE}">',
        f'<rect width="{SIZE}" height="{SIZE}" fill="white"/>',
    ]
    if isinstance(x, KInN):
        poly = " ".join(f"{_f(pts[v][0])},{_f(pts[v][1])}" for v in x.marked_face)
        out.append(f'<polygon class="marked-face" points="{poly}" fill="{MARK_FILL}" stroke="none"/>')
    for j in range(n):
        (x1, y1), (x2, y2) = pts[j], pts[(j + 1) % n]
        out.append(
            f'<line class="side" x1="{_f(x1)}" y1="{_f(y1)}" x2="{_f(x2)}" y2="{_f(y2)}" '
            'stroke="black" stroke-width="2"/>'
        )
    for a, b in D.diagonals:
        (x1, y1), (x2, y2) = pts[a], pts[b]
        out.append(
            f'<line class="diagonal" x1="{_f(x1)}" y1="{_f(y1)}" x2="{_f(x2)}" y2="{_f(y2)}" '
            'stroke="black" stroke-width="1.5"/>'
        )
    for j, (px, py) in enumerate(pts):
        out.append(f'<circle class="vertex" cx="{_f(px)}" cy="{_f(py)}" r="4" fill="black"/>')
        if labels:
            lx, ly = vertex_xy(j, n)
            c = SIZE / 2
            lx, ly = c + (lx - c) * 1.12, c + (ly - c) * 1.12
            out.append(
                f'<text x="{_f(lx)}" y="{_f(ly)}" font-family="sans-serif" font-size="12" '
                f'text-anchor="middle" dominant-baseline="middle">{j}</text>'
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"
