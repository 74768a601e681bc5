"""SVG pictures of the partition {B_sigma} over a window of tiles.

Each tile ``Omega + k`` is filled with its residue class colour and the
tiles belonging to the section N carry a black dot at ``k``.  Only
rectangles, polygons, lines and circles are emitted, with integer pixel
coordinates, so output bytes depend on nothing but the input.
"""
from __future__ import annotations

import colorsys
import itertools
from dataclasses import dataclass
from typing import Sequence

from . import exact_linalg as el
from .subgroup import ClosedSubgroup, IntVector, partition_tiles

UNIT = 40
MARGIN = 20


@dataclass(frozen=True)
class RenderSpec:
    d: int
    window: tuple[IntVector, ...]
    colors: dict[IntVector, str]
    size: tuple[int, int]


def parse_window(text: str) -> list[IntVector]:
    """``"-7:8"`` or ``"0:3,-1:1"``: inclusive ranges per axis."""
    ranges = []
    for part in text.split(","):
        lo, sep, hi = part.strip().partition(":")
        if not sep:
            lo = hi = lo
        lo_i, hi_i = int(lo), int(hi)
        if hi_i < lo_i:
            raise ValueError(f"empty range {part!r}")
        ranges.append(range(lo_i, hi_i + 1))
    return [tuple(k) for k in itertools.product(*ranges)]


def palette(n: int) -> list[str]:
    """``n`` distinct hex colours spread around the hue circle."""
    out: list[str] = []
    for i in range(n):
        light = 0.45 if i % 2 else 0.65
        r, g, b = colorsys.hls_to_rgb(i / max(n, 1), light, 0.55)
        c = "#{:02x}{:02x}{:02x}".format(round(r * 255), round(g * 255), round(b * 255))
        while c in out:  # rounding collision on very large palettes
            c = "#{:06x}".format((int(c[1:], 16) + 1) % 0x1000000)
        out.append(c)
    return out


def render_spec(M: ClosedSubgroup, window: Sequence[Sequence[int]]) -> RenderSpec:
    if M.d > 2:
        raise ValueError(f"rendering supports d <= 2, got d = {M.d}")
    window = tuple(sorted({tuple(k) for k in window}))
    if not window or any(len(k) != M.d for k in window):
        raise ValueError("window tiles must match the subgroup dimension")
    classes = partition_tiles(M, window)
    colors = dict(zip(classes, palette(len(classes))))
    xmin, xmax, ymin, ymax = _extent(M, window)
    size = ((xmax - xmin) * UNIT + 2 * MARGIN,
            (ymax - ymin) * UNIT + 2 * MARGIN if M.d == 2 else UNIT + 2 * MARGIN)
    return RenderSpec(M.d, window, colors, size)


def _tile_corners(M: ClosedSubgroup, k: IntVector) -> list[tuple[int, int]]:
    offsets = [el.matvec(M.W, c) for c in ((0, 0), (1, 0), (1, 1), (0, 1))]
    return [(k[0] + o[0], k[1] + o[1]) for o in offsets]


def _extent(M: ClosedSubgroup, window) -> tuple[int, int, int, int]:
    if M.d == 1:
        ks = [k[0] for k in window]
        return min(ks), max(ks) + 1, 0, 0
    pts = [p for k in window for p in _tile_corners(M, k)]
    xs, ys = [p[0] for p in pts], [p[1] for p in pts]
    return min(xs), max(xs), min(ys), max(ys)


def render_svg(M: ClosedSubgroup, window: Sequence[Sequence[int]]) -> str:
    spec = render_spec(M, window)
    classes = partition_tiles(M, spec.window)
    tile_color = {k: spec.colors[s] for s, ks in classes.items() for k in ks}
    section = {s for s in classes if s in tile_color}
    if spec.d == 1:
        return _svg_line(spec, tile_color, section)
    return _svg_plane(M, spec, tile_color, section)


def _svg_line(spec: RenderSpec, tile_color, section) -> str:
    x0 = min(k[0] for k in spec.window)
    x1 = max(k[0] for k in spec.window) + 1
    width, height = spec.size
    cy = MARGIN + UNIT // 2

    def px(x):
        return MARGIN + (x - x0) * UNIT

    lines = _header(width, height)
    for k in spec.window:
        lines.append(f'  <rect x="{px(k[0])}" y="{cy - 8}" width="{UNIT}" height="16" '
                     f'fill="{tile_color[k]}" data-k="{k[0]}" />')
    lines.append(f'  <line x1="{px(x0)}" y1="{cy}" x2="{px(x1)}" y2="{cy}" stroke="#000" />')
    for x in range(x0, x1 + 1):
        lines.append(f'  <line x1="{px(x)}" y1="{cy - 4}" x2="{px(x)}" y2="{cy + 4}" stroke="#000" />')
    for s in sorted(section):
        lines.append(f'  <circle cx="{px(s[0])}" cy="{cy}" r="4" fill="#000" />')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def _svg_plane(M: ClosedSubgroup, spec: RenderSpec, tile_color, section) -> str:
    polys = {k: _tile_corners(M, k) for k in spec.window}
    xmin, xmax, ymin, ymax = _extent(M, spec.window)
    width, height = spec.size

    def px(p):
        return MARGIN + (p[0] - xmin) * UNIT, MARGIN + (ymax - p[1]) * UNIT

    lines = _header(width, height)
    for k in spec.window:
        pts = " ".join("{},{}".format(*px(p)) for p in polys[k])
        lines.append(f'  <polygon points="{pts}" fill="{tile_color[k]}" stroke="#fff" '
                     f'data-k="{k[0]},{k[1]}" />')
    ox, oy = px((0, 0))
    if xmin <= 0 <= xmax:
        lines.append(f'  <line x1="{ox}" y1="{MARGIN}" x2="{ox}" y2="{height - MARGIN}" stroke="#000" />')
    if ymin <= 0 <= ymax:
        lines.append(f'  <line x1="{MARGIN}" y1="{oy}" x2="{width - MARGIN}" y2="{oy}" stroke="#000" />')
    for s in sorted(section):
        cx, cy = px(s)
        lines.append(f'  <circle cx="{cx}" cy="{cy}" r="4" fill="#000" />')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def _header(width: int, height: int) -> list[str]:
    return [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
            f'viewBox="0 0 {width} {height}">',
            f'  <rect x="0" y="0" width="{width}" height="{height}" fill="#fff" />']
