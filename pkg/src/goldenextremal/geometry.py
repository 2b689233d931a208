"""Triangles circumscribing a semicircle whose diameter lies on the base BC.

Coordinates are doubles: O sits on the x-axis, B and C on either side of it,
A above.  ``triangle_from_base_angles`` reaches every circumscribing
triangle of the unit semicircle and makes the slanted sides tangent by
construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

RIGHT_ANGLE_TOL = 1e-9

Side = Literal["AB", "AC"]
AngleClass = Literal["acute", "right", "obtuse"]


@dataclass(frozen=True)
class Point:
    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"non-finite point ({self.x}, {self.y})")

    def __sub__(self, other: Point) -> tuple[float, float]:
        return (self.x - other.x, self.y - other.y)

    def dist(self, other: Point) -> float:
        return math.hypot(self.x - other.x, self.y - other.y)


@dataclass(frozen=True)
class BaseAngles:
    """Interior angles at B (``beta``) and C (``gamma``), in radians."""

    beta: float
    gamma: float

    def __post_init__(self) -> None:
        if not (self.beta > 0 and self.gamma > 0 and self.beta + self.gamma < math.pi):
            raise ValueError(
                f"invalid base angles beta={self.beta}, gamma={self.gamma}: "
                "need beta, gamma > 0 and beta + gamma < pi"
            )

    @property
    def apex(self) -> float:
        return math.pi - self.beta - self.gamma


@dataclass(frozen=True)
class TriangleGeom:
    A: Point
    B: Point
    C: Point
    O: Point
    R: float = 1.0

    def __post_init__(self) -> None:
        scale = max(1.0, abs(self.B.x), abs(self.C.x))
        tol = 1e-12 * scale
        if abs(self.B.y) > tol or abs(self.C.y) > tol or abs(self.O.y) > tol:
            raise ValueError("B, C and O must lie on the line y = 0")
        if not (self.B.x < self.O.x < self.C.x):
            raise ValueError("need B.x < O.x < C.x")
        if not self.A.y > 0:
            raise ValueError("apex A must lie above the base")
        if not self.R > 0:
            raise ValueError("radius must be positive")

    @property
    def AB(self) -> float:
        return self.A.dist(self.B)

    @property
    def AC(self) -> float:
        return self.A.dist(self.C)

    @property
    def BC(self) -> float:
        return self.B.dist(self.C)

    def scaled(self, k: float) -> TriangleGeom:
        def s(p: Point) -> Point:
            return Point(p.x * k, p.y * k)

        return TriangleGeom(s(self.A), s(self.B), s(self.C), s(self.O), self.R * k)


def triangle_from_base_angles(angles: BaseAngles) -> TriangleGeom:
    """Triangle with O at the origin, tangent to the unit circle on AB and AC."""
    sb, sg = math.sin(angles.beta), math.sin(angles.gamma)
    B = Point(-1.0 / sb, 0.0)
    C = Point(1.0 / sg, 0.0)
    base = 1.0 / sb + 1.0 / sg
    ab = base * sg / math.sin(angles.beta + angles.gamma)
    A = Point(B.x + ab * math.cos(angles.beta), ab * sb)
    return TriangleGeom(A, B, C, Point(0.0, 0.0), 1.0)


def _side_points(tri: TriangleGeom, side: Side) -> tuple[Point, Point]:
    if side == "AB":
        return tri.A, tri.B
    if side == "AC":
        return tri.A, tri.C
    raise ValueError(f"side must be 'AB' or 'AC', got {side!r}")


def _cross(u: tuple[float, float], v: tuple[float, float]) -> float:
    return u[0] * v[1] - u[1] * v[0]


def tangent_distance(tri: TriangleGeom, side: Side) -> float:
    """Perpendicular distance from O to the line through the named side."""
    P, Q = _side_points(tri, side)
    return abs(_cross(Q - P, tri.O - P)) / P.dist(Q)


def tangency_point(tri: TriangleGeom, side: Side) -> tuple[Point, float]:
    """Foot of the perpendicular from O onto the side's line.

    Also returns the line parameter ``t`` (0 at A, 1 at the base vertex), so
    ``0 <= t <= 1`` means the foot is on the segment itself.
    """
    P, Q = _side_points(tri, side)
    d = Q - P
    w = tri.O - P
    t = (d[0] * w[0] + d[1] * w[1]) / (d[0] ** 2 + d[1] ** 2)
    return Point(P.x + t * d[0], P.y + t * d[1]), t


def area(tri: TriangleGeom) -> float:
    return 0.5 * abs(_cross(tri.B - tri.A, tri.C - tri.A))


def area_decomposition_residual(tri: TriangleGeom) -> float:
    """``|S_ABC - (S_AOB + S_AOC)|`` with each sub-area taken as half a side times R.

    Half-side-times-radius is the sub-area only when the side touches the
    circle, so the residual measures failure of tangency.
    """
    return abs(area(tri) - 0.5 * tri.R * (tri.AB + tri.AC))


def perimeter(tri: TriangleGeom) -> float:
    return tri.AB + tri.AC + tri.BC


def diameter_contained(tri: TriangleGeom) -> bool:
    tol = 1e-12 * max(1.0, tri.R)
    return tri.B.x <= tri.O.x - tri.R + tol and tri.O.x + tri.R <= tri.C.x + tol


def angles(tri: TriangleGeom) -> tuple[float, float, float]:
    """Interior angles at A, B, C."""

    def at(V: Point, P: Point, Q: Point) -> float:
        u, v = P - V, Q - V
        return math.atan2(abs(_cross(u, v)), u[0] * v[0] + u[1] * v[1])

    return at(tri.A, tri.B, tri.C), at(tri.B, tri.A, tri.C), at(tri.C, tri.A, tri.B)


def classify(tri: TriangleGeom) -> AngleClass:
    largest = max(angles(tri))
    if abs(largest - math.pi / 2) <= RIGHT_ANGLE_TOL:
        return "right"
    return "obtuse" if largest > math.pi / 2 else "acute"
