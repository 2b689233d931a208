"""Deterministic SVG 1.1 figures.

World coordinates are y-up; they are mapped into the viewport with a 5%
margin and a uniform scale, then flipped.  Every number is printed with 9
decimals so identical inputs give byte-identical files.
"""

from __future__ import annotations

import math
import xml.etree.ElementTree as ET
from dataclasses import dataclass
from typing import Literal

from . import geometry as geo
from .construct import ConstructionTrace, construct_T2
from .exactphi import PHI
from .goldenseq import tn_entry, tn_limit

Figure = Literal["fig1_min_area", "fig2_sequence", "fig3_construction"]
FIGURES: tuple[str, ...] = ("fig1_min_area", "fig2_sequence", "fig3_construction")
MARGIN = 0.05

SVG_NS = "http://www.w3.org/2000/svg"


@dataclass(frozen=True)
class RenderSpec:
    figure: Figure
    width_px: int = 800
    height_px: int = 600
    annotate: bool = True
    n_values: tuple[int, ...] = (1, 2, 3)

    def __post_init__(self) -> None:
        if self.figure not in FIGURES:
            raise ValueError(f"unknown figure {self.figure!r}")
        if self.width_px <= 0 or self.height_px <= 0:
            raise ValueError("figure dimensions must be positive")
        if self.figure == "fig2_sequence" and (not self.n_values or min(self.n_values) < 1):
            raise ValueError("fig2_sequence needs a non-empty range of n >= 1")


def _fmt(v: float) -> str:
    s = f"{v:.9f}"
    return "0.000000000" if s == "-0.000000000" else s


class _Canvas:
    def __init__(self, spec: RenderSpec, xmin: float, xmax: float, ymin: float, ymax: float):
        self.spec = spec
        w, h = spec.width_px, spec.height_px
        mx, my = MARGIN * w, MARGIN * h
        self.scale = min((w - 2 * mx) / (xmax - xmin), (h - 2 * my) / (ymax - ymin))
        # centre the drawing in the viewport
        self.ox = mx + ((w - 2 * mx) - self.scale * (xmax - xmin)) / 2 - self.scale * xmin
        self.oy = my + ((h - 2 * my) - self.scale * (ymax - ymin)) / 2 + self.scale * ymax
        self.root = ET.Element(
            "svg",
            {
                "xmlns": SVG_NS,
                "version": "1.1",
                "width": str(w),
                "height": str(h),
                "viewBox": f"0 0 {w} {h}",
            },
        )
        ET.SubElement(self.root, "rect", {"x": "0", "y": "0", "width": str(w), "height": str(h), "fill": "white"})

    def px(self, x: float, y: float) -> tuple[str, str]:
        return _fmt(self.ox + self.scale * x), _fmt(self.oy - self.scale * y)

    def line(self, p, q, ident: str, cls: str = "edge", **style: str) -> None:
        (x1, y1), (x2, y2) = self.px(*p), self.px(*q)
        attrs = {"id": ident, "class": cls, "x1": x1, "y1": y1, "x2": x2, "y2": y2}
        attrs.update({"stroke": "black", "stroke-width": "1.5"})
        attrs.update({k.replace("_", "-"): v for k, v in style.items()})
        ET.SubElement(self.root, "line", attrs)

    def polygon(self, pts, ident: str, **style: str) -> None:
        coords = " ".join(",".join(self.px(*p)) for p in pts)
        attrs = {"id": ident, "points": coords, "fill": "none", "stroke": "black", "stroke-width": "1.5"}
        attrs.update({k.replace("_", "-"): v for k, v in style.items()})
        ET.SubElement(self.root, "polygon", attrs)

    def arc(self, center, radius: float, start, end, ident: str, close: bool = False, **style: str) -> None:
        """Counter-clockwise (world) arc from ``start`` to ``end``, shorter than pi unless equal."""
        sx, sy = self.px(*start)
        ex, ey = self.px(*end)
        r = _fmt(self.scale * radius)
        a0 = math.atan2(start[1] - center[1], start[0] - center[0])
        a1 = math.atan2(end[1] - center[1], end[0] - center[0])
        sweep_ccw = (a1 - a0) % (2 * math.pi)
        large = "1" if sweep_ccw > math.pi + 1e-12 else "0"
        # counter-clockwise in y-up is sweep-flag 0 in SVG's y-down frame
        d = f"M {sx} {sy} A {r} {r} 0 {large} 0 {ex} {ey}"
        if close:
            d += " Z"
        attrs = {"id": ident, "d": d, "fill": "none", "stroke": "black", "stroke-width": "1.5"}
        attrs.update({k.replace("_", "-"): v for k, v in style.items()})
        ET.SubElement(self.root, "path", attrs)

    def point(self, p, label: str, dx: float = 6, dy: float = -6) -> None:
        cx, cy = self.px(*p)
        ET.SubElement(
            self.root, "circle", {"id": f"pt-{label}", "class": "point", "cx": cx, "cy": cy, "r": "2.5", "fill": "black"}
        )
        t = ET.SubElement(
            self.root,
            "text",
            {
                "class": "label",
                "x": _fmt(float(cx) + dx),
                "y": _fmt(float(cy) + dy),
                "font-family": "serif",
                "font-size": "16",
            },
        )
        t.text = label

    def text(self, x_px: float, y_px: float, body: str, size: int = 14) -> None:
        t = ET.SubElement(
            self.root,
            "text",
            {"class": "note", "x": _fmt(x_px), "y": _fmt(y_px), "font-family": "serif", "font-size": str(size)},
        )
        t.text = body

    def to_string(self) -> str:
        ET.indent(self.root)
        body = ET.tostring(self.root, encoding="unicode")
        return '<?xml version="1.0" encoding="UTF-8"?>\n' + body + "\n"


def min_area_triangle() -> geo.TriangleGeom:
    """The smallest-area circumscribing triangle: right angle at A, AB = phi, AC = phi^2."""
    phi = float(PHI)
    return geo.triangle_from_base_angles(geo.BaseAngles(math.atan(phi), math.atan(1 / phi)))


def _fig1(spec: RenderSpec) -> str:
    tri = min_area_triangle()
    xs = [tri.A.x, tri.B.x, tri.C.x]
    cv = _Canvas(spec, min(xs), max(xs), 0.0, tri.A.y)
    A, B, C, O = ((p.x, p.y) for p in (tri.A, tri.B, tri.C, tri.O))
    D, _ = geo.tangency_point(tri, "AB")
    E, _ = geo.tangency_point(tri, "AC")
    cv.line(B, C, "side-BC")
    cv.line(A, B, "side-AB", cls="tangent")
    cv.line(A, C, "side-AC", cls="tangent")
    cv.arc(O, tri.R, (O[0] + tri.R, 0.0), (O[0] - tri.R, 0.0), "semicircle", close=True)
    cv.line(O, (D.x, D.y), "radius-OD", cls="radius", stroke_dasharray="5 3")
    cv.line(O, (E.x, E.y), "radius-OE", cls="radius", stroke_dasharray="5 3")
    for p, name, dx, dy in (
        (A, "A", -4, -10),
        (B, "B", -14, 18),
        (C, "C", 4, 18),
        (O, "O", -4, 18),
        ((D.x, D.y), "D", -16, -4),
        ((E.x, E.y), "E", 6, -4),
    ):
        cv.point(p, name, dx, dy)
    if spec.annotate:
        w = spec.width_px
        cv.text(0.06 * w, 0.08 * spec.height_px, "AB = φ, AC = φ², area = φ³/2")
    return cv.to_string()


def _fig2(spec: RenderSpec) -> str:
    entries = [tn_entry(n) for n in spec.n_values]
    limit = tn_limit(range(1, 2))
    mids = [float(e.side_mid) for e in entries] + [float(limit.side_mid)]
    cv = _Canvas(spec, -0.15, 1.0, 0.0, max(mids))
    names = [f"T{e.n}" for e in entries] + ["T_limit"]
    for name, mid in zip(names, mids):
        cv.polygon([(0.0, 0.0), (1.0, 0.0), (0.0, mid)], name)
        cv.point((0.0, mid), name, dx=-40, dy=4)
    ET.SubElement(cv.root, "circle", {"id": "origin", "cx": cv.px(0, 0)[0], "cy": cv.px(0, 0)[1], "r": "2"})
    if spec.annotate:
        labels = [", ".join(e.side_labels()) for e in entries] + [", ".join(limit.side_labels())]
        for i, (name, lab) in enumerate(zip(names, labels)):
            cv.text(0.62 * spec.width_px, 0.1 * spec.height_px + 18 * i, f"{name}: ({lab})")
    return cv.to_string()


def _fig3(spec: RenderSpec, trace: ConstructionTrace | None = None) -> str:
    if trace is None:
        trace, _ = construct_T2()

    def P(key: str) -> tuple[float, float]:
        x, y = trace[key].floats()
        return (x, y)

    pts = {k: P(k) for k in ("A", "B", "C", "D", "E", "O", "M", "P", "Q")}
    cv = _Canvas(spec, -0.6, 1.2, -0.1, pts["E"][1])
    cv.polygon([pts["A"], pts["B"], pts["C"], pts["D"]], "rectangle")
    cv.polygon([pts["E"], pts["B"], pts["C"]], "triangle-EBC", stroke="#b22222", stroke_width="2")
    cv.line(pts["Q"], pts["P"], "square-top", cls="helper", stroke="#999999", stroke_dasharray="4 3")
    cv.line(pts["A"], pts["E"], "extension-BA", cls="helper", stroke_dasharray="2 2")
    cv.line(pts["A"], pts["C"], "diagonal-AC", cls="helper", stroke="#999999")
    mr = math.dist(pts["M"], pts["P"])
    cv.arc(pts["M"], mr, pts["P"], pts["A"], "arc-A", stroke="#999999")
    er = math.dist(pts["O"], pts["E"])
    cv.arc(pts["O"], er, _on_circle(pts["O"], er, pts["D"]), pts["E"], "arc-E")
    for key, dx, dy in (
        ("B", -16, 16), ("O", -4, 18), ("C", 4, 16), ("A", -16, 0), ("E", -16, 0),
        ("D", 6, 0), ("M", -18, 4), ("P", 6, 4), ("Q", -18, 4),
    ):
        cv.point(pts[key], key, dx, dy)
    if spec.annotate:
        cv.text(0.06 * spec.width_px, 0.06 * spec.height_px, "EB = √(2φ), EC = φ√φ, BC = 1")
    return cv.to_string()


def _on_circle(center, radius: float, toward) -> tuple[float, float]:
    """Point of the circle in the direction of ``toward``."""
    ang = math.atan2(toward[1] - center[1], toward[0] - center[0])
    return (center[0] + radius * math.cos(ang), center[1] + radius * math.sin(ang))


def render_svg(spec: RenderSpec) -> str:
    if spec.figure == "fig1_min_area":
        return _fig1(spec)
    if spec.figure == "fig2_sequence":
        return _fig2(spec)
    return _fig3(spec)


def cmd_render(spec: RenderSpec, out_path: str) -> str:
    svg = render_svg(spec)
    with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(svg)
    return svg
