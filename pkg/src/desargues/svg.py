"""Deterministic SVG 1.1 drawings of construction traces.

Rational traces are drawn in the plane: the bounding box of every point in the
traces is fitted into the canvas with a 10% margin and lines are clipped to
the visible window.  Auxiliary lines are dashed; the constructed point is drawn
larger, in red.  Finite-field traces are drawn on the p x p grid of the
plane, each line shown as the set of its points.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable
from xml.sax.saxutils import escape

from .errors import NotPlottableError
from .line_algebra import ConstructionTrace
from .plane import Line, Point, Sloped, Vertical, incident, model_of

__all__ = ["SvgOptions", "render_svg"]

PALETTE = ("#1f77b4", "#2ca02c", "#9467bd", "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f")
RESULT_COLOR = "#d62728"


@dataclass(frozen=True)
class SvgOptions:
    width: int = 640
    height: int = 640
    margin: float = 0.1
    font_size: int = 12
    labels: bool = True


def _num(v: float) -> str:
    text = f"{v:.2f}".rstrip("0").rstrip(".")
    return "0" if text == "-0" else text


def pretty_label(label: str) -> str:
    """``l^B_l`` is shown as ``ℓ^B_ℓ``."""
    if label == "l":
        return "ℓ"
    if label.startswith("l^"):
        label = "ℓ" + label[1:]
        label = re.sub(r"_l$", "_ℓ", label)
    return label


def _header(opts: SvgOptions) -> list[str]:
    return [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{opts.width}" '
        f'height="{opts.height}" viewBox="0 0 {opts.width} {opts.height}">',
        f'<rect x="0" y="0" width="{opts.width}" height="{opts.height}" fill="white"/>',
    ]


def _named_points(trace: ConstructionTrace) -> list[tuple[str, Point]]:
    out = []
    if trace.frame is not None:
        out += [("O", trace.frame.O), ("I", trace.frame.I)]
    out += list(trace.inputs.items())
    if trace.auxiliary_B is not None:
        out.append(("B", trace.auxiliary_B))
    out += [(s.label, s.value) for s in trace.steps if s.kind == "point"]
    return out


def _named_lines(trace: ConstructionTrace) -> list[tuple[str, Line, bool]]:
    """(label, line, is_auxiliary)."""
    out = []
    if trace.frame is not None:
        out.append(("l", trace.frame.line, False))
    out += [(s.label, s.value, True) for s in trace.steps if s.kind == "line"]
    return out


def render_svg(traces: ConstructionTrace | Iterable[ConstructionTrace], options: SvgOptions | None = None) -> str:
    """One SVG document showing every trace; an empty input gives an empty canvas."""
    opts = options or SvgOptions()
    if isinstance(traces, ConstructionTrace):
        traces = [traces]
    traces = [t for t in traces if t.steps or t.inputs]
    if not traces:
        return "\n".join(_header(opts) + ["</svg>"]) + "\n"
    ring = model_of(_named_points(traces[0])[0][1]).ring
    if ring.kind == "quaternion":
        raise NotPlottableError("quaternion coordinates have no planar picture")
    body = _grid_body(traces, ring.p, opts) if ring.finite else _plane_body(traces, opts)
    return "\n".join(_header(opts) + body + ["</svg>"]) + "\n"


# --- rational plane ------------------------------------------------------


class _Viewport:
    def __init__(self, points: list[Point], opts: SvgOptions):
        xs = [Fraction(P.x) for P in points]
        ys = [Fraction(P.y) for P in points]
        side = max(max(xs) - min(xs), max(ys) - min(ys)) or Fraction(1)
        cx, cy = (max(xs) + min(xs)) / 2, (max(ys) + min(ys)) / 2
        # the data square fills the canvas minus the margin on every side
        half = side / 2 / (1 - 2 * Fraction(opts.margin).limit_denominator(1000))
        self.x0, self.x1 = cx - half, cx + half
        self.y0, self.y1 = cy - half, cy + half
        self.sx = Fraction(opts.width) / (self.x1 - self.x0)
        self.sy = Fraction(opts.height) / (self.y1 - self.y0)

    def map(self, x: Fraction, y: Fraction) -> tuple[str, str]:
        return _num(float((x - self.x0) * self.sx)), _num(float((self.y1 - y) * self.sy))

    def clip(self, l: Line) -> tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]] | None:
        if isinstance(l, Vertical):
            return (l.c, self.y0), (l.c, self.y1)
        m, b = Fraction(l.m), Fraction(l.b)
        if m == 0:
            return (self.x0, b), (self.x1, b)
        ends = []
        for x in (self.x0, self.x1):
            y = x * m + b
            if self.y0 <= y <= self.y1:
                ends.append((x, y))
        for y in (self.y0, self.y1):
            x = (y - b) / m
            if self.x0 < x < self.x1:
                ends.append((x, y))
        ends = sorted(set(ends))
        return (ends[0], ends[-1]) if len(ends) >= 2 else None


def _plane_body(traces: list[ConstructionTrace], opts: SvgOptions) -> list[str]:
    points = [P for t in traces for _, P in _named_points(t)]
    view = _Viewport(points, opts)
    out = ['<g id="lines" fill="none" stroke-width="1.5">']
    labels = []
    drawn: set = set()
    color = 0
    for t in traces:
        for label, l, aux in _named_lines(t):
            if (label, l) in drawn:
                continue
            drawn.add((label, l))
            seg = view.clip(l)
            if seg is None:
                continue
            (ax, ay), (bx, by) = seg
            x1, y1 = view.map(ax, ay)
            x2, y2 = view.map(bx, by)
            stroke = PALETTE[color % len(PALETTE)] if aux else "black"
            color += aux
            dash = ' stroke-dasharray="6 4"' if aux else ""
            out.append(
                f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="{stroke}"{dash}>'
                f"<title>{escape(pretty_label(label))}</title></line>"
            )
            lx, ly = view.map(ax + (bx - ax) * Fraction(9, 10), ay + (by - ay) * Fraction(9, 10))
            labels.append(
                f'<text x="{lx}" y="{ly}" fill="{stroke}" text-anchor="end" dx="-4" dy="-4">{escape(pretty_label(label))}</text>'
            )
    out.append("</g>")
    out.append('<g id="points">')
    results = {t.result for t in traces if t.result is not None}
    placed: dict[Point, list[str]] = {}
    for t in traces:
        for label, P in _named_points(t):
            names = placed.setdefault(P, [])
            if label not in names:
                names.append(label)
    for P, names in placed.items():
        cx, cy = view.map(Fraction(P.x), Fraction(P.y))
        if P in results:
            out.append(f'<circle cx="{cx}" cy="{cy}" r="6" fill="{RESULT_COLOR}" stroke="black" class="result"/>')
        else:
            out.append(f'<circle cx="{cx}" cy="{cy}" r="3.5" fill="black"/>')
        labels.append(f'<text x="{cx}" y="{cy}" dx="6" dy="14">{escape(" = ".join(names))}</text>')
    out.append("</g>")
    if opts.labels:
        out.append(f'<g id="labels" font-family="sans-serif" font-size="{opts.font_size}">')
        out += labels
        out.append("</g>")
    return out


# --- finite grid ---------------------------------------------------------


def _grid_body(traces: list[ConstructionTrace], p: int, opts: SvgOptions) -> list[str]:
    inner_w = opts.width * (1 - 2 * opts.margin)
    inner_h = opts.height * (1 - 2 * opts.margin)
    step_x, step_y = inner_w / max(p - 1, 1), inner_h / max(p - 1, 1)

    def at(P: Point) -> tuple[str, str]:
        x = opts.width * opts.margin + P.x.value * step_x
        y = opts.height * (1 - opts.margin) - P.y.value * step_y
        return _num(x), _num(y)

    out = ['<g id="grid" fill="#dddddd">']
    for x in range(p):
        for y in range(p):
            cx = _num(opts.width * opts.margin + x * step_x)
            cy = _num(opts.height * (1 - opts.margin) - y * step_y)
            out.append(f'<circle cx="{cx}" cy="{cy}" r="2"/>')
    out.append("</g>")
    model = model_of(_named_points(traces[0])[0][1])
    grid_points = list(model.enumerate_points())
    out.append('<g id="lines">')
    legend = []
    drawn: set = set()
    color = 0
    for t in traces:
        for label, l, aux in _named_lines(t):
            if (label, l) in drawn:
                continue
            drawn.add((label, l))
            stroke = PALETTE[color % len(PALETTE)] if aux else "black"
            color += aux
            dash = ' stroke-dasharray="3 2"' if aux else ""
            out.append(f'<g class="line-points" stroke="{stroke}" fill="none"{dash}>')
            out.append(f"<title>{escape(pretty_label(label))}</title>")
            for P in grid_points:
                if incident(P, l):
                    cx, cy = at(P)
                    out.append(f'<rect x="{_num(float(cx) - 6)}" y="{_num(float(cy) - 6)}" width="12" height="12"/>')
            out.append("</g>")
            legend.append((stroke, label, l))
    out.append("</g>")
    results = {t.result for t in traces if t.result is not None}
    placed: dict[Point, list[str]] = {}
    for t in traces:
        for label, P in _named_points(t):
            names = placed.setdefault(P, [])
            if label not in names:
                names.append(label)
    out.append('<g id="points">')
    texts = []
    for P, names in placed.items():
        cx, cy = at(P)
        if P in results:
            out.append(f'<circle cx="{cx}" cy="{cy}" r="6" fill="{RESULT_COLOR}" stroke="black" class="result"/>')
        else:
            out.append(f'<circle cx="{cx}" cy="{cy}" r="4" fill="black"/>')
        texts.append(f'<text x="{cx}" y="{cy}" dx="8" dy="-8">{escape(" = ".join(names))}</text>')
    out.append("</g>")
    if opts.labels:
        out.append(f'<g id="labels" font-family="sans-serif" font-size="{opts.font_size}">')
        out += texts
        for i, (stroke, label, _l) in enumerate(legend):
            y = _num(opts.font_size * (i + 1.5))
            out.append(f'<text x="4" y="{y}" fill="{stroke}">{escape(pretty_label(label))}</text>')
        out.append("</g>")
    return out
