"""Implicit conics, parabola frames and conic-conic intersection.

A conic is ``a x^2 + b xy + c y^2 + d x + e y + f = 0`` with coefficients
scaled so the symmetric quadratic-part matrix has unit Frobenius norm.
Intersections go through a degenerate member of the pencil spanned by the
two conics; the one-variable resultant is kept as a fallback.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .geometry import (AffineMap, Circle, DegenerateError, Line, Point, dist,
                       invert, point_scale)
from .numeric import DEFAULT_TOL, Tolerance, solve_polynomial, square_decompose_quartic


class ConicKind(enum.Enum):
    ELLIPSE = "ellipse"
    PARABOLA = "parabola"
    HYPERBOLA = "hyperbola"
    INTERSECTING_LINES = "intersecting lines"
    PARALLEL_LINES = "parallel lines"
    DOUBLE_LINE = "double line"
    SINGLE_LINE = "single line"
    POINT = "point"
    EMPTY = "empty"

    @property
    def degenerate(self) -> bool:
        return self not in (ConicKind.ELLIPSE, ConicKind.PARABOLA, ConicKind.HYPERBOLA)


@dataclass(frozen=True, eq=False)
class Conic:
    """Normalized implicit conic, optionally oriented by an inside witness.

    When ``inside_witness`` is set, the sign of the coefficients is chosen
    so that the witness evaluates negative.
    """

    coeffs: tuple[float, float, float, float, float, float]
    inside_witness: Optional[Point] = None

    def __init__(self, coeffs: Sequence[float], inside_witness: Optional[Point] = None):
        v = np.asarray(coeffs, dtype=float).reshape(6)
        if not np.all(np.isfinite(v)):
            raise ValueError("non-finite conic coefficients")
        a, b, c = v[:3]
        qnorm = math.sqrt(a * a + 0.5 * b * b + c * c)
        if qnorm <= 1e-14 * np.max(np.abs(v)):
            qnorm = float(np.linalg.norm(v))
        if qnorm == 0.0:
            raise ValueError("zero conic")
        v = v / qnorm
        if inside_witness is not None:
            w = _evaluate(v, inside_witness)
            if w == 0.0:
                raise DegenerateError("witness lies on the conic")
            if w > 0.0:
                v = -v
        object.__setattr__(self, "coeffs", tuple(float(t) for t in v))
        object.__setattr__(self, "inside_witness", inside_witness)

    @classmethod
    def from_matrix(cls, A: np.ndarray, inside_witness: Optional[Point] = None) -> Conic:
        return cls((A[0, 0], 2 * A[0, 1], A[1, 1], 2 * A[0, 2], 2 * A[1, 2], A[2, 2]),
                   inside_witness)

    @classmethod
    def from_circle(cls, k: Circle) -> Conic:
        cx, cy = k.center.x, k.center.y
        return cls((1.0, 0.0, 1.0, -2 * cx, -2 * cy, cx * cx + cy * cy - k.r * k.r),
                   inside_witness=k.center)

    @property
    def matrix(self) -> np.ndarray:
        a, b, c, d, e, f = self.coeffs
        return np.array([[a, b / 2, d / 2], [b / 2, c, e / 2], [d / 2, e / 2, f]])

    @property
    def quadratic_part(self) -> np.ndarray:
        a, b, c = self.coeffs[:3]
        return np.array([[a, b / 2], [b / 2, c]])

    def __call__(self, p: Point) -> float:
        return _evaluate(self.coeffs, p)

    def eval_scale(self, p: Point) -> float:
        """Sum of absolute monomial contributions at ``p``; the natural
        magnitude against which ``self(p)`` counts as zero."""
        a, b, c, d, e, f = self.coeffs
        x, y = p.x, p.y
        return (abs(a * x * x) + abs(b * x * y) + abs(c * y * y)
                + abs(d * x) + abs(e * y) + abs(f))

    def on_curve(self, p: Point, eps: float) -> bool:
        return abs(self(p)) <= eps * max(self.eval_scale(p), 1e-300)

    def gradient(self, p: Point) -> Point:
        a, b, c, d, e, _ = self.coeffs
        return Point(2 * a * p.x + b * p.y + d, b * p.x + 2 * c * p.y + e)

    def inside(self, p: Point, slack: float = 0.0) -> bool:
        """Witness-side membership, ``q(p) <= slack * eval_scale(p)``."""
        if self.inside_witness is None:
            raise ValueError("region membership needs an inside witness")
        return self(p) <= slack * self.eval_scale(p)

    def same_as(self, other: Conic, eps: float = DEFAULT_TOL.eps_construct) -> bool:
        """Equality up to a nonzero scale factor."""
        return _coeff_distance(self.coeffs, other.coeffs) < eps

    def __repr__(self):
        inner = ", ".join(f"{t:.6g}" for t in self.coeffs)
        return f"Conic(({inner}))"


def _evaluate(v: Sequence[float], p: Point) -> float:
    a, b, c, d, e, f = v
    x, y = p.x, p.y
    return a * x * x + b * x * y + c * y * y + d * x + e * y + f


def _coeff_distance(u: Sequence[float], v: Sequence[float]) -> float:
    u = np.asarray(u) / np.linalg.norm(u)
    v = np.asarray(v) / np.linalg.norm(v)
    return float(min(np.linalg.norm(u - v), np.linalg.norm(u + v)))


def classify(q: Conic, tol: Tolerance = DEFAULT_TOL) -> ConicKind:
    A = q.matrix
    Q = q.quadratic_part
    qn = float(np.linalg.norm(Q))
    if qn <= 1e-12 * float(np.linalg.norm(A)):
        return ConicKind.SINGLE_LINE
    d2 = float(np.linalg.det(Q)) / (qn * qn)
    sv = np.linalg.svd(A, compute_uv=False)
    degenerate = sv[-1] <= tol.eps_construct * sv[0]
    if abs(d2) <= tol.eps_construct:
        if not degenerate:
            return ConicKind.PARABOLA
        # rank-one quadratic part lam (w.x)^2; the conic reduces to a quadratic in s = w.x
        evals, evecs = np.linalg.eigh(Q)
        i = int(np.argmax(np.abs(evals)))
        lam, w = evals[i], evecs[:, i]
        beta = 2 * float(A[:2, 2] @ w)
        disc = beta * beta - 4 * lam * A[2, 2]
        if sv[1] <= tol.eps_construct * sv[0] or abs(disc) <= tol.eps_construct * (beta * beta + abs(4 * lam * A[2, 2])):
            return ConicKind.DOUBLE_LINE
        return ConicKind.PARALLEL_LINES if disc > 0 else ConicKind.EMPTY
    if degenerate:
        return ConicKind.INTERSECTING_LINES if d2 < 0 else ConicKind.POINT
    if d2 < 0:
        return ConicKind.HYPERBOLA
    # real ellipse iff the center lies on the negative side of a positive form
    if np.linalg.det(A) * np.trace(Q) < 0:
        return ConicKind.ELLIPSE
    return ConicKind.EMPTY


# ---------------------------------------------------------------------------
# parabola frames


@dataclass(frozen=True)
class ParabolaFrame:
    """Parabola ``lateral**2 = 4 * focal * axial`` in its vertex frame.

    ``axial = (P - V) . u`` runs along the axis into the opening and
    ``lateral = (P - V) . w`` across it, with ``w = (u_y, -u_x)`` so that
    ``(w, u)`` is a right-handed frame in which the curve reads
    ``y = k x^2`` with ``k = 1 / (4 focal)``.
    """

    vertex: Point
    axis: Point
    focal: float

    def __post_init__(self):
        if abs(self.axis.norm() - 1.0) > DEFAULT_TOL.eps_construct:
            raise ValueError("axis must be a unit vector")
        if not self.focal > 0.0:
            raise ValueError("focal parameter must be positive")

    @property
    def lateral_dir(self) -> Point:
        return Point(self.axis.y, -self.axis.x)

    @property
    def k(self) -> float:
        return 1.0 / (4.0 * self.focal)

    @property
    def focus(self) -> Point:
        return self.vertex + self.axis * self.focal

    @property
    def axis_line(self) -> Line:
        return Line.from_point_direction(self.vertex, self.axis)

    def coords(self, p: Point) -> tuple[float, float]:
        """``(axial, lateral)`` coordinates of ``p``."""
        d = p - self.vertex
        return d.dot(self.axis), d.dot(self.lateral_dir)

    def point(self, lateral: float) -> Point:
        axial = lateral * lateral / (4.0 * self.focal)
        return self.vertex + self.axis * axial + self.lateral_dir * lateral

    def to_world(self, axial: float, lateral: float) -> Point:
        return self.vertex + self.axis * axial + self.lateral_dir * lateral


def frame_from_conic(q: Conic, tol: Tolerance = DEFAULT_TOL) -> ParabolaFrame:
    if classify(q, tol) is not ConicKind.PARABOLA:
        raise DegenerateError("not a parabola")
    a, b, c, d, e, f = q.coeffs
    evals, evecs = np.linalg.eigh(q.quadratic_part)
    i = int(np.argmax(np.abs(evals)))
    lam = float(evals[i])
    w = Point(float(evecs[0, i]), float(evecs[1, i]))
    u = Point(w.y, -w.x)
    g = Point(d, e)
    # lam s^2 + (g.w) s + (g.u) t + f = 0 in s = w.P, t = u.P
    ps = g.dot(w) / lam
    pt = g.dot(u) / lam
    r0 = f / lam
    if abs(pt) <= tol.eps_construct * max(1.0, abs(ps), abs(r0)):
        raise DegenerateError("not a parabola")
    s0 = -ps / 2.0
    t0 = (ps * ps / 4.0 - r0) / pt
    vertex = w * s0 + u * t0
    # (s - s0)^2 = -pt (t - t0): opens toward +u when -pt > 0
    if pt > 0:
        u = -u
    return ParabolaFrame(vertex, u, abs(pt) / 4.0)


def conic_from_frame(fr: ParabolaFrame) -> Conic:
    """Implicit form ``lateral^2 - 4 f axial``, negative on the focus side."""
    ux, uy = fr.axis.x, fr.axis.y
    wx, wy = fr.lateral_dir.x, fr.lateral_dir.y
    vx, vy = fr.vertex.x, fr.vertex.y
    f4 = 4.0 * fr.focal
    # lateral = wx x + wy y - w.V ; axial = ux x + uy y - u.V
    wc = -(wx * vx + wy * vy)
    uc = -(ux * vx + uy * vy)
    coeffs = (wx * wx, 2 * wx * wy, wy * wy,
              2 * wx * wc - f4 * ux, 2 * wy * wc - f4 * uy, wc * wc - f4 * uc)
    return Conic(coeffs, inside_witness=fr.focus)


def tangent_line_at(q: Conic, p: Point, tol: Tolerance = DEFAULT_TOL) -> Line:
    if not q.on_curve(p, tol.eps_construct):
        raise DegenerateError("point is not on the conic")
    g = q.gradient(p)
    a, b, c, d, e, _ = q.coeffs
    gscale = abs(2 * a * p.x) + abs(b * p.y) + abs(d) + abs(b * p.x) + abs(2 * c * p.y) + abs(e)
    if g.norm() <= tol.eps_construct * max(gscale, 1e-300):
        raise DegenerateError("singular point of the conic")
    n = g.unit()
    return Line(n, n.dot(p))


def transform_conic(m: AffineMap, q: Conic) -> Conic:
    """Image of ``q`` under ``m``; the witness is carried along."""
    inv = invert(m)
    T = np.eye(3)
    T[:2, :2] = inv.M
    T[:2, 2] = inv.t
    A = T.T @ q.matrix @ T
    w = None if q.inside_witness is None else m(q.inside_witness)
    return Conic.from_matrix(A, w)


def slope_in_axis_frame(fr: ParabolaFrame, p: Point, q: Point,
                        tol: Tolerance = DEFAULT_TOL) -> float:
    """Slope of chord ``pq`` in the frame where the parabola is ``y = k x^2``.

    Computed as ``k (lateral_p + lateral_q)``, which avoids dividing by
    the lateral difference.
    """
    ap, lp = fr.coords(p)
    aq, lq = fr.coords(q)
    scale = max(fr.focal, abs(lp), abs(lq))
    if abs(lp - lq) <= tol.eps_construct * scale:
        raise DegenerateError("chord endpoints coincide")
    for ax, la in ((ap, lp), (aq, lq)):
        if abs(la * la - 4 * fr.focal * ax) > tol.eps_iterative * max(la * la, 4 * fr.focal * abs(ax), fr.focal ** 2):
            raise DegenerateError("point is not on the parabola")
    return fr.k * (lp + lq)


def contact_quartic(fr: ParabolaFrame, k: Circle) -> np.ndarray:
    """Power of the parabola point with lateral ``k.r * tau`` w.r.t. ``k``.

    Returned as quartic coefficients in ``tau`` (divided by ``r^2`` so they
    are dimensionless). It is a perfect square exactly when the circle
    touches the parabola at two points.
    """
    r = k.r
    D = fr.vertex - k.center
    du, dw = D.dot(fr.axis), D.dot(fr.lateral_dir)
    f = fr.focal
    return np.array([
        r * r / (16.0 * f * f),
        0.0,
        1.0 + du / (2.0 * f),
        2.0 * dw / r,
        (D.dot(D) - r * r) / (r * r),
    ])


def tangency_certificate(fr: ParabolaFrame, k: Circle,
                         tol: Tolerance = DEFAULT_TOL) -> tuple[float, list[Point]]:
    """Square-decomposition residual and the real contact points."""
    quartic = contact_quartic(fr, k)
    (alpha, beta, gamma), residual = square_decompose_quartic(quartic, tol)
    roots = solve_polynomial([alpha, beta, gamma], tol)
    pts = [fr.point(k.r * t) for t, _ in roots]
    return residual, pts


# ---------------------------------------------------------------------------
# intersection


@dataclass(frozen=True)
class IntersectionSet:
    points: tuple[tuple[Point, int], ...]

    @property
    def total_multiplicity(self) -> int:
        return sum(m for _, m in self.points)

    @property
    def simple_points(self) -> list[Point]:
        return [p for p, m in self.points if m == 1]

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)


def _adj3(A: np.ndarray) -> np.ndarray:
    return np.array([
        [A[1, 1] * A[2, 2] - A[1, 2] * A[2, 1], A[0, 2] * A[2, 1] - A[0, 1] * A[2, 2], A[0, 1] * A[1, 2] - A[0, 2] * A[1, 1]],
        [A[1, 2] * A[2, 0] - A[1, 0] * A[2, 2], A[0, 0] * A[2, 2] - A[0, 2] * A[2, 0], A[0, 2] * A[1, 0] - A[0, 0] * A[1, 2]],
        [A[1, 0] * A[2, 1] - A[1, 1] * A[2, 0], A[0, 1] * A[2, 0] - A[0, 0] * A[2, 1], A[0, 0] * A[1, 1] - A[0, 1] * A[1, 0]],
    ])


def _pencil_cubic(A1: np.ndarray, A2: np.ndarray) -> list[float]:
    """Coefficients of ``det(t A1 + A2)``, highest power first."""
    return [float(np.linalg.det(A1)), float(np.trace(_adj3(A1) @ A2)),
            float(np.trace(_adj3(A2) @ A1)), float(np.linalg.det(A2))]


def split_degenerate(A: np.ndarray, tol: Tolerance = DEFAULT_TOL):
    """Split a (near) degenerate symmetric matrix into homogeneous lines.

    Returns ``(lines, point)``: a list of ``(line, multiplicity)`` with line
    coefficients ``(a, b, c)`` of ``a x + b y + c = 0``, and for a pair of
    conjugate imaginary lines their real crossing point (homogeneous).
    """
    evals, evecs = np.linalg.eigh(A)
    order = np.argsort(-np.abs(evals))
    evals, evecs = evals[order], evecs[:, order]
    l1, l2 = evals[0], evals[1]
    if abs(l2) <= tol.cluster_eps * abs(l1):
        return [(evecs[:, 0] * math.sqrt(abs(l1)), 2)], None
    if l1 * l2 > 0:
        return [], evecs[:, 2]
    s1, s2 = math.sqrt(abs(l1)), math.sqrt(abs(l2))
    return [(s1 * evecs[:, 0] + s2 * evecs[:, 1], 1), (s1 * evecs[:, 0] - s2 * evecs[:, 1], 1)], None


class SharedComponentError(DegenerateError):
    pass


def intersect_line_conic(line_h: Sequence[float], q: Conic,
                         tol: Tolerance = DEFAULT_TOL) -> list[tuple[Point, int]]:
    a, b, c = (float(t) for t in line_h)
    s = math.hypot(a, b)
    if s <= 1e-14 * abs(c) or s == 0.0:
        return []  # line at infinity
    n = Point(a / s, b / s)
    p0 = n * (-c / s)
    d = n.perp()
    Q = q.quadratic_part
    aa, bb, cc, dd, ee, ff = q.coeffs
    dv = d.as_array()
    c2 = float(dv @ Q @ dv)
    grad0 = q.gradient(p0)
    c1 = grad0.dot(d)
    c0 = q(p0)
    scale = max(abs(c2), abs(c1), abs(c0))
    if scale == 0.0 or scale <= 1e-14 * q.eval_scale(p0):
        raise SharedComponentError("shared component")
    roots = solve_polynomial([c2, c1, c0], tol)
    return [(p0 + d * t, m) for t, m in roots]


def _cluster_points(items, radius: float):
    out: list[list] = []
    for p, m in items:
        for cl in out:
            if dist(cl[0], p) <= radius:
                w = cl[1]
                cl[0] = (cl[0] * w + p * m) / (w + m)
                cl[1] = w + m
                break
        else:
            out.append([p, m])
    return [(p, m) for p, m in out]


def _relative_residual(q: Conic, p: Point) -> float:
    # an exact zero of a conic with no constant term has scale 0 at the origin
    return abs(q(p)) / max(q.eval_scale(p), 1e-300)


def _newton_polish(q1: Conic, q2: Conic, p: Point, iters: int = 6) -> Point:
    best = p
    best_r = _relative_residual(q1, p) + _relative_residual(q2, p)
    for _ in range(iters):
        g1, g2 = q1.gradient(p), q2.gradient(p)
        J = np.array([[g1.x, g1.y], [g2.x, g2.y]])
        if abs(np.linalg.det(J)) <= 1e-12 * (g1.norm() * g2.norm() + 1e-300):
            break
        step = np.linalg.solve(J, [q1(p), q2(p)])
        p = Point(p.x - step[0], p.y - step[1])
        r = _relative_residual(q1, p) + _relative_residual(q2, p)
        if r < best_r:
            best, best_r = p, r
        if r == 0.0:
            break
    return best


def _finalize(q1: Conic, q2: Conic, raw, tol: Tolerance):
    """Cluster, polish and verify candidate points.

    Returns ``(points, rejected, worst_residual)``.
    """
    if not raw:
        return [], 0, 0.0
    scale = point_scale(p for p, _ in raw)
    pts = _cluster_points(raw, tol.cluster_eps * scale)
    good, rejected, worst = [], 0, 0.0
    for p, m in pts:
        if m == 1:
            p = _newton_polish(q1, q2, p)
        eps = tol.eps_construct if m == 1 else tol.eps_iterative
        r = max(_relative_residual(q1, p), _relative_residual(q2, p))
        if r <= eps:
            good.append((p, m))
            worst = max(worst, r)
        else:
            rejected += 1
    if sum(m for _, m in good) > 4:
        return [], rejected + len(good), math.inf
    return good, rejected, worst


def _via_pencil(q1: Conic, q2: Conic, tol: Tolerance):
    A1, A2 = q1.matrix, q2.matrix
    members = []
    # det(t A1 + A2); the member A1 itself is the root at infinity
    cubic = _pencil_cubic(A1, A2)
    if max(abs(c) for c in cubic) > 0:
        for t, _ in solve_polynomial(cubic, tol):
            members.append(t * A1 + A2)
    for q in (q1, q2):
        if classify(q, tol).degenerate:
            members.append(q.matrix)
    # line intersections with the better-conditioned (non-degenerate) conic
    target = q1 if not classify(q1, tol).degenerate else q2
    best = None
    for M in members:
        M = M / np.linalg.norm(M)
        lines, point = split_degenerate(M, tol)
        raw = []
        for lh, lm in lines:
            raw.extend((p, m * lm) for p, m in intersect_line_conic(lh, target, tol))
        if point is not None and abs(point[2]) > 1e-14 * np.linalg.norm(point):
            raw.append((Point(point[0] / point[2], point[1] / point[2]), 1))
        good, rejected, worst = _finalize(q1, q2, raw, tol)
        key = (sum(m for _, m in good), -rejected, -worst)
        if best is None or key > best[0]:
            best = (key, good, rejected)
    if best is None:
        return [], 0
    return best[1], best[2]


def _via_resultant(q1: Conic, q2: Conic, tol: Tolerance):
    """Eliminate ``y`` after a fixed generic rotation."""
    rot = AffineMap.rotation(0.6180339887498949)
    r1, r2 = transform_conic(rot, q1), transform_conic(rot, q2)
    P = np.polynomial.polynomial

    def parts(q):
        a, b, c, d, e, f = q.coeffs
        return c, np.array([e, b]), np.array([f, d, a])  # ascending powers of x

    al1, be1, ga1 = parts(r1)
    al2, be2, ga2 = parts(r2)
    u = P.polysub(al1 * ga2, al2 * ga1)
    v = P.polysub(al1 * be2, al2 * be1)
    w = P.polysub(P.polymul(be1, ga2), P.polymul(be2, ga1))
    res = P.polysub(P.polymul(u, u), P.polymul(v, w))
    res = np.trim_zeros(np.asarray(res, dtype=float), "b")
    if res.size == 0 or np.max(np.abs(res)) == 0:
        return [], 0
    raw = []
    for x, m in solve_polynomial(res[::-1], tol):
        vx = P.polyval(x, v)
        if abs(vx) > tol.cluster_eps * max(1.0, np.max(np.abs(v)) * max(1.0, abs(x))):
            ys = [-P.polyval(x, u) / vx]
        else:
            ys = [y for y, _ in solve_polynomial([al1, P.polyval(x, be1), P.polyval(x, ga1)], tol)]
        for y in ys:
            raw.append((Point(x, y), m))
    back = invert(rot)
    raw = [(back(p), m) for p, m in raw]
    good, rejected, _ = _finalize(q1, q2, raw, tol)
    return good, rejected


def _line_pairs(q1: Conic, q2: Conic, tol: Tolerance):
    raw = []
    lines1, pt1 = split_degenerate(q1.matrix / np.linalg.norm(q1.matrix), tol)
    lines2, pt2 = split_degenerate(q2.matrix / np.linalg.norm(q2.matrix), tol)
    for la, ma in lines1:
        for lb, mb in lines2:
            x = np.cross(la, lb)
            if np.linalg.norm(x) <= tol.eps_construct * np.linalg.norm(la) * np.linalg.norm(lb):
                raise SharedComponentError("shared component")
            if abs(x[2]) > 1e-14 * np.linalg.norm(x):
                raw.append((Point(x[0] / x[2], x[1] / x[2]), ma * mb))
    for pt in (pt1, pt2):
        if pt is not None and abs(pt[2]) > 1e-14 * np.linalg.norm(pt):
            raw.append((Point(pt[0] / pt[2], pt[1] / pt[2]), 1))
    good, rejected, _ = _finalize(q1, q2, raw, tol)
    return good, rejected


def intersect_conics(q1: Conic, q2: Conic, tol: Tolerance = DEFAULT_TOL) -> IntersectionSet:
    """Real intersection points of two conics with multiplicities.

    Raises:
        DegenerateError: ``"coincident"`` for conics equal up to scale;
            ``SharedComponentError`` when both share a line.
    """
    if q1.same_as(q2, tol.eps_construct):
        raise DegenerateError("coincident")
    if classify(q1, tol).degenerate and classify(q2, tol).degenerate:
        good, _ = _line_pairs(q1, q2, tol)
        good.sort(key=lambda pm: (pm[0].x, pm[0].y))
        return IntersectionSet(tuple(good))
    good, rejected = _via_pencil(q1, q2, tol)
    if rejected or not good:
        alt, alt_rejected = _via_resultant(q1, q2, tol)
        if sum(m for _, m in alt) > sum(m for _, m in good):
            good = alt
    good.sort(key=lambda pm: (pm[0].x, pm[0].y))
    return IntersectionSet(tuple(good))
