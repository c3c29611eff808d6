"""Points, lines, circles, affine maps and elementary metric predicates."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .numeric import DEFAULT_TOL, Tolerance


class DegenerateError(ValueError):
    """A construction hit a degenerate configuration."""


@dataclass(frozen=True)
class Point:
    x: float
    y: float

    def __post_init__(self):
        x, y = float(self.x), float(self.y)
        if not (math.isfinite(x) and math.isfinite(y)):
            raise ValueError(f"non-finite point ({x}, {y})")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    def __add__(self, other: Point) -> Point:
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: Point) -> Point:
        return Point(self.x - other.x, self.y - other.y)

    def __mul__(self, s: float) -> Point:
        return Point(self.x * s, self.y * s)

    __rmul__ = __mul__

    def __truediv__(self, s: float) -> Point:
        return Point(self.x / s, self.y / s)

    def __neg__(self) -> Point:
        return Point(-self.x, -self.y)

    def dot(self, other: Point) -> float:
        return self.x * other.x + self.y * other.y

    def cross(self, other: Point) -> float:
        return self.x * other.y - self.y * other.x

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def unit(self) -> Point:
        n = self.norm()
        if n == 0.0:
            raise DegenerateError("zero vector has no direction")
        return self / n

    def perp(self) -> Point:
        """Counterclockwise quarter turn."""
        return Point(-self.y, self.x)

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y])

    @classmethod
    def of(cls, xy: Sequence[float]) -> Point:
        return cls(float(xy[0]), float(xy[1]))


def dist(p: Point, q: Point) -> float:
    return math.hypot(p.x - q.x, p.y - q.y)


def centroid(points: Iterable[Point]) -> Point:
    pts = list(points)
    return Point(sum(p.x for p in pts) / len(pts), sum(p.y for p in pts) / len(pts))


def point_scale(points: Iterable[Point]) -> float:
    """Length scale of a point set: its largest coordinate magnitude, at least 1."""
    return max([1.0] + [max(abs(p.x), abs(p.y)) for p in points])


@dataclass(frozen=True)
class Line:
    """The line ``{P : n . P = c}`` with unit normal ``n``."""

    n: Point
    c: float

    def __post_init__(self):
        if abs(self.n.norm() - 1.0) > DEFAULT_TOL.eps_construct:
            raise ValueError("line normal must be a unit vector")

    @classmethod
    def through(cls, p: Point, q: Point, tol: Tolerance = DEFAULT_TOL) -> Line:
        d = q - p
        if d.norm() <= tol.eps_construct * point_scale((p, q)):
            raise DegenerateError("line through coincident points")
        n = d.perp().unit()
        return cls(n, n.dot(p))

    @classmethod
    def from_point_direction(cls, p: Point, d: Point) -> Line:
        n = d.perp().unit()
        return cls(n, n.dot(p))

    @classmethod
    def from_coeffs(cls, a: float, b: float, c: float) -> Line:
        """Line ``a x + b y + c = 0``."""
        s = math.hypot(a, b)
        if s == 0.0:
            raise DegenerateError("line at infinity")
        return cls(Point(a / s, b / s), -c / s)

    @property
    def direction(self) -> Point:
        return Point(self.n.y, -self.n.x)

    @property
    def origin(self) -> Point:
        """Foot of the perpendicular from the coordinate origin."""
        return self.n * self.c

    def signed_distance(self, p: Point) -> float:
        return self.n.dot(p) - self.c

    def flipped(self) -> Line:
        return Line(-self.n, -self.c)


@dataclass(frozen=True)
class Circle:
    center: Point
    r: float

    def __post_init__(self):
        if not self.r > 0.0:
            raise ValueError("circle radius must be positive")

    def point_at(self, angle: float) -> Point:
        return Point(self.center.x + self.r * math.cos(angle),
                     self.center.y + self.r * math.sin(angle))

    def power(self, p: Point) -> float:
        d = p - self.center
        return d.dot(d) - self.r * self.r


@dataclass(frozen=True)
class AffineMap:
    """``P -> M P + t``."""

    M: np.ndarray
    t: np.ndarray

    def __post_init__(self):
        M = np.asarray(self.M, dtype=float).reshape(2, 2)
        t = np.asarray(self.t, dtype=float).reshape(2)
        object.__setattr__(self, "M", M)
        object.__setattr__(self, "t", t)
        scale = float(np.sum(M * M))
        if scale == 0.0 or abs(np.linalg.det(M)) <= DEFAULT_TOL.eps_construct * scale:
            raise DegenerateError("singular affine map")

    @classmethod
    def identity(cls) -> AffineMap:
        return cls(np.eye(2), np.zeros(2))

    @classmethod
    def rotation(cls, angle: float, about: Point = Point(0.0, 0.0)) -> AffineMap:
        c, s = math.cos(angle), math.sin(angle)
        M = np.array([[c, -s], [s, c]])
        a = about.as_array()
        return cls(M, a - M @ a)

    @classmethod
    def translation(cls, v: Point) -> AffineMap:
        return cls(np.eye(2), v.as_array())

    def __call__(self, p: Point) -> Point:
        return apply_affine(self, p)

    def direction(self, d: Point) -> Point:
        """Image of a free vector (translation ignored)."""
        v = self.M @ d.as_array()
        return Point(float(v[0]), float(v[1]))

    def __eq__(self, other):
        if not isinstance(other, AffineMap):
            return NotImplemented
        return np.array_equal(self.M, other.M) and np.array_equal(self.t, other.t)

    __hash__ = None


def apply_affine(m: AffineMap, p: Point) -> Point:
    v = m.M @ p.as_array() + m.t
    return Point(float(v[0]), float(v[1]))


def compose(outer: AffineMap, inner: AffineMap) -> AffineMap:
    """The map ``P -> outer(inner(P))``."""
    return AffineMap(outer.M @ inner.M, outer.M @ inner.t + outer.t)


def invert(m: AffineMap) -> AffineMap:
    Minv = np.linalg.inv(m.M)
    return AffineMap(Minv, -Minv @ m.t)


def distance_point_line(p: Point, line: Line) -> float:
    return abs(line.signed_distance(p))


def project_point_line(p: Point, line: Line) -> Point:
    return p - line.n * line.signed_distance(p)


def intersect_lines(l1: Line, l2: Line, tol: Tolerance = DEFAULT_TOL) -> Point:
    det = l1.n.cross(l2.n)
    if abs(det) <= tol.eps_construct:
        raise DegenerateError("parallel lines")
    x = (l1.c * l2.n.y - l2.c * l1.n.y) / det
    y = (l1.n.x * l2.c - l2.n.x * l1.c) / det
    return Point(x, y)


def tangent_length(p: Point, k: Circle, tol: Tolerance = DEFAULT_TOL) -> float:
    """Length of a tangent segment from ``p`` to ``k``.

    Points within tolerance of the circle give 0 instead of failing.
    """
    d = p - k.center
    d2 = d.dot(d)
    power = d2 - k.r * k.r
    if power < 0.0:
        if -power > tol.eps_construct * max(d2, k.r * k.r):
            raise DegenerateError("point inside circle")
        return 0.0
    return math.sqrt(power)


def _collinear(p: Point, q: Point, r: Point, tol: Tolerance) -> bool:
    u, v = q - p, r - p
    s = max(u.norm(), v.norm(), (r - q).norm())
    return s == 0.0 or abs(u.cross(v)) <= tol.eps_construct * s * s


def circle_through_three(p: Point, q: Point, r: Point, tol: Tolerance = DEFAULT_TOL) -> Circle:
    if _collinear(p, q, r, tol):
        raise DegenerateError("degenerate circle")
    # circumcenter relative to p, better conditioned than absolute coordinates
    u, v = q - p, r - p
    d = 2.0 * u.cross(v)
    uu, vv = u.dot(u), v.dot(v)
    cx = (v.y * uu - u.y * vv) / d
    cy = (u.x * vv - v.x * uu) / d
    center = Point(p.x + cx, p.y + cy)
    rad = (dist(center, p) + dist(center, q) + dist(center, r)) / 3.0
    return Circle(center, rad)


def concyclicity_residual(p: Point, q: Point, r: Point, s: Point,
                          tol: Tolerance = DEFAULT_TOL) -> float:
    """Relative distance of ``s`` from the circle through ``p, q, r``."""
    k = circle_through_three(p, q, r, tol)
    return abs(dist(s, k.center) - k.r) / k.r


def fit_circle(points: Sequence[Point]) -> Circle:
    """Algebraic least-squares circle (Kasa fit), exact for concyclic input."""
    if len(points) < 3:
        raise DegenerateError("need at least three points")
    c = centroid(points)
    P = np.array([[p.x - c.x, p.y - c.y] for p in points])
    A = np.column_stack([2.0 * P, np.ones(len(points))])
    b = np.sum(P * P, axis=1)
    sol, *_ = np.linalg.lstsq(A, b, rcond=None)
    cx, cy, k = sol
    r2 = k + cx * cx + cy * cy
    if not r2 > 0.0:
        raise DegenerateError("degenerate circle")
    return Circle(Point(c.x + cx, c.y + cy), math.sqrt(r2))


def max_circle_residual(points: Iterable[Point], k: Circle) -> float:
    return max(abs(dist(p, k.center) - k.r) / k.r for p in points)


def signed_ratio(a: Point, b: Point, e: Point) -> float:
    """``AE/EB`` for ``E = A + t (B - A)``, i.e. ``t / (1 - t)``."""
    d = b - a
    t = (e - a).dot(d) / d.dot(d)
    return t / (1.0 - t)


def line_angle(l1: Line, l2: Line) -> float:
    """Unsigned angle between two lines, in ``[0, pi/2]``."""
    c = abs(l1.n.dot(l2.n))
    return math.acos(min(1.0, c))


def direction_angle(u: Point, v: Point) -> float:
    """Angle between the lines spanned by two directions, in ``[0, pi/2]``."""
    c = abs(u.dot(v)) / (u.norm() * v.norm())
    s = abs(u.cross(v)) / (u.norm() * v.norm())
    return math.atan2(s, c)


def order_ccw(points: Sequence[Point], about: Point | None = None) -> list[Point]:
    """Counterclockwise order by angle about ``about`` (default: centroid).

    Ties in angle are broken lexicographically by ``(x, y)``.
    """
    c = centroid(points) if about is None else about
    return sorted(points, key=lambda p: (math.atan2(p.y - c.y, p.x - c.x), p.x, p.y))
