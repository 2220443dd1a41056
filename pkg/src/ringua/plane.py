"""2x2 real matrices as plane transformations of the unit square.

A matrix [[a,b],[c,d]] maps the unit square to the parallelogram with
vertices (0,0), (a,c), (b,d), (a+b,c+d). Its signed area is the determinant
ad - bc; a negative sign means the square has been flipped. The report also
matches the matrix against the template shapes: uniform scaling, rotation,
and horizontal/vertical shears.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

TOLERANCE = 1e-9

CLASSES = ("scaling", "rotation", "h-shear", "v-shear", "general")


@dataclass(frozen=True)
class PlaneTransform:
    a: float
    b: float
    c: float
    d: float

    @classmethod
    def from_entries(cls, entries) -> "PlaneTransform":
        vals = [float(v) for v in entries]
        if len(vals) != 4:
            raise ValueError(f"need exactly 4 entries a,b,c,d, got {len(vals)}")
        return cls(*vals)


@dataclass(frozen=True)
class TransformReport:
    vertices: tuple[tuple[float, float], ...]  # (0,0), (a,c), (b,d), (a+b,c+d)
    signed_area: float
    flipped: bool
    kind: str
    parameter: float | None

    def to_json(self) -> dict:
        return {
            "vertices": [list(v) for v in self.vertices],
            "signed_area": self.signed_area,
            "flipped": self.flipped,
            "class": self.kind,
            "parameter": self.parameter,
        }


def _near(x: float, y: float) -> bool:
    return abs(x - y) <= TOLERANCE


def classify_transform(t: PlaneTransform) -> tuple[str, float | None]:
    """Match against the template forms, in order:

    scaling  [[s,0],[0,s]]          parameter s
    rotation [[cos,-sin],[sin,cos]] parameter theta (radians), detected via
                                    orthogonality (A^T A = I) plus det = 1
    h-shear  [[1,m],[0,1]]          parameter m
    v-shear  [[1,0],[m,1]]          parameter m
    general  anything else
    """
    a, b, c, d = t.a, t.b, t.c, t.d
    if _near(b, 0.0) and _near(c, 0.0) and _near(a, d):
        return "scaling", a
    det = a * d - b * c
    orthogonal = (
        _near(a * a + c * c, 1.0)
        and _near(b * b + d * d, 1.0)
        and _near(a * b + c * d, 0.0)
    )
    if orthogonal and _near(det, 1.0):
        return "rotation", math.atan2(c, a)
    if _near(a, 1.0) and _near(d, 1.0) and _near(c, 0.0):
        return "h-shear", b
    if _near(a, 1.0) and _near(d, 1.0) and _near(b, 0.0):
        return "v-shear", c
    return "general", None


def transform_report(t: PlaneTransform) -> TransformReport:
    for v in (t.a, t.b, t.c, t.d):
        if not math.isfinite(v):
            raise ValueError(f"matrix entries must be finite, got {v!r}")
    vertices = (
        (0.0, 0.0),
        (t.a, t.c),
        (t.b, t.d),
        (t.a + t.b, t.c + t.d),
    )
    signed_area = t.a * t.d - t.b * t.c
    kind, parameter = classify_transform(t)
    return TransformReport(
        vertices=vertices,
        signed_area=signed_area,
        flipped=signed_area < 0,
        kind=kind,
        parameter=parameter,
    )


def _fmt(v: float) -> str:
    if v == 0:
        v = 0.0  # normalize -0.0
    return format(v, ".6g")


def emit_svg(t: PlaneTransform) -> str:
    """Unit square (dashed) and its image parallelogram, deterministic text.

    SVG's y axis points down, so y coordinates are negated when drawing.
    """
    for v in (t.a, t.b, t.c, t.d):
        if not math.isfinite(v):
            raise ValueError(f"matrix entries must be finite, got {v!r}")
    square = [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]
    image = [(0.0, 0.0), (t.a, t.c), (t.a + t.b, t.c + t.d), (t.b, t.d)]
    pts = square + image
    xs = [p[0] for p in pts]
    ys = [-p[1] for p in pts]
    margin = 0.1 * max(max(xs) - min(xs), max(ys) - min(ys), 1.0)
    min_x, min_y = min(xs) - margin, min(ys) - margin
    width = max(xs) - min(xs) + 2 * margin
    height = max(ys) - min(ys) + 2 * margin

    def points(poly) -> str:
        return " ".join(f"{_fmt(x)},{_fmt(-y)}" for x, y in poly)

    view = f"{_fmt(min_x)} {_fmt(min_y)} {_fmt(width)} {_fmt(height)}"
    return (
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{view}" width="320" height="320">\n'
        f'  <polygon points="{points(square)}" fill="none" stroke="#888888" '
        'stroke-width="0.02" stroke-dasharray="0.08 0.04"/>\n'
        f'  <polygon points="{points(image)}" fill="#7fb3d5" fill-opacity="0.35" '
        'stroke="#1f4e79" stroke-width="0.02"/>\n'
        "</svg>\n"
    )
