"""SVG output.  This is the only module that turns exact coordinates into
floats for anything other than prefilters."""
from __future__ import annotations

import math
from dataclasses import dataclass
from xml.sax.saxutils import quoteattr

from .prototile import OPEN_LINK
from .tiling import TilingState

SECTOR_RAYS = 14


@dataclass(frozen=True)
class RenderOptions:
    scale: float = 40.0                  # pixels per unit length
    margin: float = 0.5                  # in units
    tile_stroke: float = 0.03
    curve_stroke: float = 0.08
    stub_stroke: float = 0.05
    palette: tuple = ("#d0d0d0", "#a8a8a8")   # unreflected, reflected
    edge_colour: str = "#404040"
    decoration_colour: str = "#ffffff"
    path_colour: str = "#000000"
    stub_colour: str = "#b03030"
    ray_colour: str = "#2060c0"
    sector_overlay: bool = False
    highlight_path: bool = False
    # (xmin, ymin, xmax, ymax) in tiling coordinates, or None for auto
    viewport: tuple | None = None


def _num(v: float) -> str:
    s = f"{round(v, 9):.9f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def _xy(z: complex) -> str:
    # svg y axis points down
    return f"{_num(z.real)},{_num(-z.imag)}"


def _path(points, closed: bool) -> str:
    d = "M" + " L".join(_xy(p) for p in points)
    return d + " Z" if closed else d


def _bbox(state: TilingState, opts: RenderOptions):
    if opts.viewport is not None:
        return tuple(float(v) for v in opts.viewport)
    xs = [p.real for t in state.tiles for p in t.fpts]
    ys = [p.imag for t in state.tiles for p in t.fpts]
    m = opts.margin
    return min(xs) - m, min(ys) - m, max(xs) + m, max(ys) + m


def render_svg(state: TilingState, opts: RenderOptions | None = None) -> str:
    """One path per tile boundary and one per decoration curve.

    With highlight_path, curves ending in a connector shared by two tiles
    are drawn as the through path and the rest as stubs.
    """
    if not state.tiles:
        raise ValueError("cannot render an empty patch")
    opts = opts or RenderOptions()
    x0, y0, x1, y1 = _bbox(state, opts)
    w, h = x1 - x0, y1 - y0
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_num(w * opts.scale)}" height="{_num(h * opts.scale)}" '
        f'viewBox="{_num(x0)} {_num(-y1)} {_num(w)} {_num(h)}">',
        f'<g id="tiles" stroke={quoteattr(opts.edge_colour)} '
        f'stroke-width="{_num(opts.tile_stroke)}" stroke-linejoin="round">',
    ]
    for t in state.tiles:
        fill = opts.palette[int(t.placement.iso.reflect) % len(opts.palette)]
        out.append(f'<path class="tile" data-index="{t.index}" fill={quoteattr(fill)} '
                   f'd="{_path([v.approx for v in t.vertices], True)}"/>')
    out.append("</g>")

    linked = set()
    if opts.highlight_path:
        seen = set()
        for t in state.tiles:
            for q, kind, _ in t.connectors:
                if kind == OPEN_LINK:
                    (linked if q in seen else seen).add(q)
    out.append('<g id="curves" fill="none" stroke-linecap="round">')
    for t in state.tiles:
        for c in t.curves:
            pts = [p.approx for p in c]
            if opts.highlight_path:
                through = c[0] in linked or c[-1] in linked
                colour = opts.path_colour if through else opts.stub_colour
                width = opts.curve_stroke if through else opts.stub_stroke
                cls = "curve path" if through else "curve stub"
            else:
                colour, width, cls = opts.decoration_colour, opts.curve_stroke, "curve"
            out.append(f'<path class="{cls}" stroke={quoteattr(colour)} '
                       f'stroke-width="{_num(width)}" d="{_path(pts, False)}"/>')
    out.append("</g>")

    if opts.sector_overlay:
        reach = math.hypot(max(abs(x0), abs(x1)), max(abs(y0), abs(y1)))
        out.append(f'<g id="sectors" stroke={quoteattr(opts.ray_colour)} '
                   f'stroke-width="{_num(opts.tile_stroke)}">')
        for k in range(SECTOR_RAYS):
            a = 2 * math.pi * k / SECTOR_RAYS
            end = complex(reach * math.cos(a), reach * math.sin(a))
            out.append(f'<line class="ray" x1="0" y1="0" x2="{_num(end.real)}" '
                       f'y2="{_num(-end.imag)}"/>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
