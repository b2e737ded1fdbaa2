"""Figure export: Graphviz DOT and hand-rolled SVG diagrams.

Cg graphs are drawn as chord diagrams (vertices on a circle, edges as
chords); ordered graphs as arc diagrams (vertices on a baseline, edges as
semicircular arcs above it). Edge colors, when present, cycle through a
small palette. These outputs are presentation-only: nothing parses them
back.
"""

from __future__ import annotations

import math

from .order import _Graph

_PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")


def _positions(g: _Graph, radius: float = 180.0):
    """Vertex -> (x, y). Circle for cg graphs, baseline for ordered ones."""
    if g.mode == "cg":
        out = {}
        for v in range(1, g.n + 1):
            # vertex 1 at the top, clockwise
            ang = -math.pi / 2 + 2 * math.pi * (v - 1) / g.n
            out[v] = (radius * math.cos(ang), radius * math.sin(ang))
        return out
    step = 2 * radius / max(g.n - 1, 1)
    return {v: (-radius + (v - 1) * step, 0.0) for v in range(1, g.n + 1)}


def _edge_color(g: _Graph, i: int) -> str:
    if g.colors is None:
        return "#333333"
    return _PALETTE[(g.colors[i] - 1) % len(_PALETTE)]


def to_dot(g: _Graph) -> str:
    """Graphviz source with pinned positions (render with neato -n)."""
    pos = _positions(g, radius=3.0)
    lines = ["graph {", "  node [shape=circle, fontsize=10, width=0.3];"]
    for v in range(1, g.n + 1):
        x, y = pos[v]
        lines.append(f'  {v} [pos="{x:.3f},{-y:.3f}!"];')
    for i, (u, v) in enumerate(g.edges):
        attr = f' [color="{_edge_color(g, i)}"]' if g.colors is not None else ""
        lines.append(f"  {u} -- {v}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_svg(g: _Graph) -> str:
    """Chord diagram (cg) or arc diagram (ordered) as a standalone SVG."""
    r = 180.0
    pos = _positions(g, radius=r)
    pad = 40.0
    if g.mode == "cg":
        width = height = 2 * (r + pad)
        cx = cy = r + pad
    else:
        width = 2 * (r + pad)
        height = r + 2 * pad
        cx, cy = r + pad, height - pad
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}" '
        f'height="{height:.0f}" viewBox="0 0 {width:.0f} {height:.0f}">',
        f'<rect width="100%" height="100%" fill="white"/>',
    ]
    if g.mode == "cg":
        parts.append(
            f'<circle cx="{cx}" cy="{cy}" r="{r}" fill="none" '
            'stroke="#cccccc" stroke-dasharray="4 4"/>'
        )
    for i, (u, v) in enumerate(g.edges):
        (x1, y1), (x2, y2) = pos[u], pos[v]
        color = _edge_color(g, i)
        if g.mode == "cg":
            parts.append(
                f'<line x1="{cx + x1:.1f}" y1="{cy + y1:.1f}" '
                f'x2="{cx + x2:.1f}" y2="{cy + y2:.1f}" '
                f'stroke="{color}" stroke-width="1.5"/>'
            )
        else:
            # semicircular arc above the baseline
            span = (x2 - x1) / 2
            parts.append(
                f'<path d="M {cx + x1:.1f} {cy:.1f} '
                f'A {abs(span):.1f} {abs(span):.1f} 0 0 1 {cx + x2:.1f} {cy:.1f}" '
                f'fill="none" stroke="{color}" stroke-width="1.5"/>'
            )
    for v in range(1, g.n + 1):
        x, y = pos[v]
        parts.append(
            f'<circle cx="{cx + x:.1f}" cy="{cy + y:.1f}" r="4" fill="#222222"/>'
        )
        lx, ly = (x * 1.12, y * 1.12) if g.mode == "cg" else (x, 16.0)
        parts.append(
            f'<text x="{cx + lx:.1f}" y="{cy + ly + 4:.1f}" font-size="12" '
            f'text-anchor="middle" font-family="sans-serif">{v}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
