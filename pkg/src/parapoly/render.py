"""Deterministic SVG output for evaluated scenes.

Curves are sampled polylines. Parabolas are parametrized by the angle
``phi`` with lateral coordinate ``2 f tan(phi)``, which packs samples near
the vertex where the curvature is largest. Numbers are written with nine
significant digits and elements are emitted in scene order, so the same
scene always produces the same bytes.
"""

from __future__ import annotations

import math
import os
import tempfile
from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from .conics import Conic, ConicKind, classify, frame_from_conic
from .constructions import InscribedCircleResult, NGonResult, ParabolicQuadrilateral
from .geometry import Circle, Point
from .scene import Chord, Environment

BLACK = "#000000"
GRAY = "#808080"


@dataclass(frozen=True)
class RenderSpec:
    path: str
    width: int = 1024
    height: int = 1024
    margin: float = 0.08
    density: int = 512

    def __post_init__(self):
        if self.width <= 0 or self.height <= 0:
            raise ValueError("canvas dimensions must be positive")
        if not 0.0 <= self.margin:
            raise ValueError("margin must be non-negative")
        if self.margin >= 0.5:
            raise ValueError("margin too large")
        if self.density < 64:
            raise ValueError("density must be at least 64")


def fmt(v: float) -> str:
    s = f"{v:.9g}"
    return "0" if s == "-0" else s


def _anchors(env: Environment) -> list[Point]:
    """Points the view must contain."""
    pts: list[Point] = []

    def circle(k: Circle):
        pts.extend([k.center + Point(k.r, k.r), k.center - Point(k.r, k.r)])

    for value in env.values.values():
        if isinstance(value, Point):
            pts.append(value)
        elif isinstance(value, Circle):
            circle(value)
        elif isinstance(value, Chord):
            pts.extend([value.a, value.b])
        elif isinstance(value, Conic):
            if classify(value) is ConicKind.PARABOLA:
                fr = frame_from_conic(value)
                pts.extend([fr.vertex, fr.focus])
        elif isinstance(value, ParabolicQuadrilateral):
            pts.extend(value.vertices)
        elif isinstance(value, InscribedCircleResult):
            circle(value.circle)
        elif isinstance(value, NGonResult):
            circle(value.circle)
            pts.extend(value.vertices)
    return pts


class _View:
    def __init__(self, spec: RenderSpec, anchors: list[Point]):
        if anchors:
            xs = [p.x for p in anchors]
            ys = [p.y for p in anchors]
            x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
        else:
            x0, x1, y0, y1 = -1.0, 1.0, -1.0, 1.0
        span = max(x1 - x0, y1 - y0, 1e-9)
        inner_w = spec.width * (1.0 - 2.0 * spec.margin)
        inner_h = spec.height * (1.0 - 2.0 * spec.margin)
        self.s = min(inner_w, inner_h) / span
        self.cx, self.cy = 0.5 * (x0 + x1), 0.5 * (y0 + y1)
        self.w, self.h = spec.width, spec.height
        # world-space radius that certainly covers the canvas
        self.reach = math.hypot(self.w, self.h) / self.s
        self.middle = Point(self.cx, self.cy)

    def px(self, p: Point) -> tuple[str, str]:
        return (fmt(self.w / 2 + (p.x - self.cx) * self.s),
                fmt(self.h / 2 - (p.y - self.cy) * self.s))


def _polyline(view: _View, pts: Iterable[Point], color: str, width: str = "1.5",
              closed: bool = False) -> str:
    coords = " ".join(",".join(view.px(p)) for p in pts)
    tag = "polygon" if closed else "polyline"
    return (f'<{tag} points="{coords}" fill="none" stroke="{color}" '
            f'stroke-width="{width}"/>')


def _circle_pts(k: Circle, n: int) -> list[Point]:
    return [k.point_at(2.0 * math.pi * i / n) for i in range(n)]


def _parabola_pts(view: _View, q: Conic, n: int) -> list[Point]:
    fr = frame_from_conic(q)
    extent = view.reach + (fr.vertex - view.middle).norm()
    phi_max = math.atan(extent / (2.0 * fr.focal))
    return [fr.point(2.0 * fr.focal * math.tan(phi))
            for phi in np.linspace(-phi_max, phi_max, n)]


def _segment(view: _View, a: Point, b: Point, color: str = GRAY) -> str:
    (x1, y1), (x2, y2) = view.px(a), view.px(b)
    return (f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="{color}" '
            f'stroke-width="1"/>')


def _dot(view: _View, p: Point, color: str = BLACK) -> str:
    x, y = view.px(p)
    return f'<circle cx="{x}" cy="{y}" r="2" fill="{color}"/>'


def _conic(view: _View, q: Conic, spec: RenderSpec) -> list[str]:
    if classify(q) is not ConicKind.PARABOLA:
        return []  # only parabolas appear as free conics in scenes
    return [_polyline(view, _parabola_pts(view, q, spec.density), BLACK)]


def _elements(env: Environment, view: _View, spec: RenderSpec) -> list[str]:
    out: list[str] = []
    for name, value in env.values.items():
        out.append(f"<!-- {name} -->")
        if isinstance(value, Point):
            out.append(_dot(view, value))
        elif isinstance(value, Circle):
            out.append(_polyline(view, _circle_pts(value, spec.density), BLACK, closed=True))
        elif isinstance(value, Chord):
            out.append(_segment(view, value.a, value.b))
            out.extend(_dot(view, p) for p in (value.a, value.b))
        elif isinstance(value, Conic):
            out.extend(_conic(view, value, spec))
        elif isinstance(value, ParabolicQuadrilateral):
            v = value.vertices
            out.append(_segment(view, v[0], v[2]))
            out.append(_segment(view, v[1], v[3]))
            out.extend(_dot(view, p) for p in v)
        elif isinstance(value, InscribedCircleResult):
            out.append(_polyline(view, _circle_pts(value.circle, spec.density), BLACK, closed=True))
            out.extend(_dot(view, p, GRAY) for p in value.tangency_p1 + value.tangency_p2)
        elif isinstance(value, NGonResult):
            out.append(_polyline(view, _circle_pts(value.circle, spec.density), BLACK, closed=True))
            for a, b in value.chords:
                out.append(_segment(view, a, b))
            for q in value.parabolas:
                out.extend(_conic(view, q, spec))
            out.append(_polyline(view, _circle_pts(value.fitted_circle, spec.density), GRAY,
                                 width="1", closed=True))
            out.extend(_dot(view, p) for p in value.vertices)
    return out


def svg_document(env: Environment, spec: RenderSpec) -> str:
    view = _View(spec, _anchors(env))
    w, h = spec.width, spec.height
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" '
        f'viewBox="0 0 {w} {h}">',
        '<defs><clipPath id="canvas">'
        f'<rect x="0" y="0" width="{w}" height="{h}"/></clipPath></defs>',
        f'<rect x="0" y="0" width="{w}" height="{h}" fill="#ffffff"/>',
        '<g clip-path="url(#canvas)">',
        *_elements(env, view, spec),
        "</g>",
        "</svg>",
    ]
    return "\n".join(lines) + "\n"


def write_atomic(path: str, text: str) -> None:
    """Write via a temporary file in the target directory and rename over."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=".svg")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def render_svg(env: Environment, spec: RenderSpec) -> str:
    """Write the figure to ``spec.path``; returns the SVG text."""
    text = svg_document(env, spec)
    write_atomic(spec.path, text)
    return text


def render_to(env: Environment, path: str, spec: Optional[RenderSpec] = None) -> str:
    base = spec or RenderSpec(path)
    return render_svg(env, RenderSpec(path, base.width, base.height, base.margin, base.density))
