"""SVG drawings of representations, optionally with one pair's visibility regions."""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Optional

from ..geometry import Representation, ccw_offset
from ..sightlines import SAME_SIDE, regions

STEP = 10
REGION_COLOURS = ("#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b")


def _f(x: float) -> str:
    return f"{x:.3f}"


def _polar(c: float, r: float, theta: Fraction) -> tuple[float, float]:
    t = float(theta) * math.pi
    return c + r * math.cos(t), c - r * math.sin(t)


def _mid(reg) -> Fraction:
    if reg.full:
        return Fraction(0)
    return reg.low + ccw_offset(reg.high, reg.low) / 2


def _arc_svg(rep: Representation, pair, k: int) -> list[str]:
    top = max((e.rank for e in rep.elements), default=1)
    c = STEP * (top + 1)
    size = 2 * c
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{4 * size}" height="{4 * size}" '
           f'viewBox="0 0 {size} {size}">',
           f'<circle cx="{c}" cy="{c}" r="2" fill="black"/>']
    for e in rep.elements:
        r = STEP * e.rank
        x0, y0 = _polar(c, r, e.start)
        x1, y1 = _polar(c, r, e.start + e.extent)
        large = 1 if e.extent > 1 else 0
        out.append(f'<path id="arc{e.id}" d="M {_f(x0)} {_f(y0)} A {r} {r} 0 {large} 0 '
                   f'{_f(x1)} {_f(y1)}" fill="none" stroke="black" stroke-width="1"/>')
        lx, ly = _polar(c, r + 6, e.start + e.extent / 2)
        out.append(f'<text x="{_f(lx)}" y="{_f(ly)}" font-size="5">{e.id}</text>')
    if pair is not None:
        a, b = sorted((rep.element(pair[0]), rep.element(pair[1])), key=lambda e: e.rank)
        for i, reg in enumerate(regions(rep, pair[0], pair[1], k)):
            colour = REGION_COLOURS[i % len(REGION_COLOURS)]
            lines = [_mid(reg)] if reg.full or reg.degenerate else [reg.low, _mid(reg), reg.high]
            for j, t in enumerate(lines):
                if reg.family == SAME_SIDE:
                    p, q = _polar(c, STEP * a.rank, t), _polar(c, STEP * b.rank, t)
                else:
                    p, q = _polar(c, STEP * a.rank, t), _polar(c, STEP * b.rank, t + 1)
                dash = ' stroke-dasharray="3 2"' if j != 1 and len(lines) > 1 else ""
                out.append(f'<line x1="{_f(p[0])}" y1="{_f(p[1])}" x2="{_f(q[0])}" y2="{_f(q[1])}" '
                           f'stroke="{colour}"{dash}/>')
    out.append("</svg>")
    return out


def _bar_svg(rep: Representation, pair, k: int) -> list[str]:
    lo = min((e.left for e in rep.elements), default=Fraction(0))
    hi = max((e.right for e in rep.elements), default=Fraction(1))
    width = 400
    scale = (width - 2 * STEP) / float(hi - lo or 1)
    top = max((e.rank for e in rep.elements), default=1)
    height = STEP * (top + 1)

    def x(v):
        return STEP + float(v - lo) * scale

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
           f'viewBox="0 0 {width} {height}">']
    for e in rep.elements:
        y = STEP * e.rank
        out.append(f'<line id="bar{e.id}" x1="{_f(x(e.left))}" y1="{y}" x2="{_f(x(e.right))}" '
                   f'y2="{y}" stroke="black" stroke-width="1"/>')
        out.append(f'<text x="{_f(x(e.left) - 12)}" y="{y + 3}" font-size="5">{e.id}</text>')
    if pair is not None:
        a, b = sorted((rep.element(pair[0]), rep.element(pair[1])), key=lambda e: e.rank)
        for i, reg in enumerate(regions(rep, pair[0], pair[1], k)):
            colour = REGION_COLOURS[i % len(REGION_COLOURS)]
            lines = [reg.low] if reg.degenerate else [reg.low, (reg.low + reg.high) / 2, reg.high]
            for j, t in enumerate(lines):
                dash = ' stroke-dasharray="3 2"' if j != 1 and len(lines) > 1 else ""
                out.append(f'<line x1="{_f(x(t))}" y1="{STEP * a.rank}" x2="{_f(x(t))}" '
                           f'y2="{STEP * b.rank}" stroke="{colour}"{dash}/>')
    out.append("</svg>")
    return out


def render_svg(rep: Representation, pair: Optional[tuple[int, int]] = None, k: int = 0) -> str:
    """Draw ``rep``; with ``pair`` also draw each region's two boundary lines and a middle line."""
    lines = _arc_svg(rep, pair, k) if rep.is_arc_kind else _bar_svg(rep, pair, k)
    return "\n".join(lines) + "\n"
