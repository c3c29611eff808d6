"""Parabolic quadrilaterals, inscribed circles, axial lines and 2N-gons.

Every parabola tangent to a circle at the ends of a chord is built as the
locus where the distance to the chord line equals the tangent length to
the circle, which makes it a conic with the circle center as inside
witness.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np
from scipy.optimize import minimize_scalar

from .conics import (Conic, ConicKind, ParabolaFrame, classify, frame_from_conic,
                     intersect_conics, tangency_certificate)
from .geometry import (AffineMap, Circle, DegenerateError, Line, Point, centroid,
                       circle_through_three, dist,
                       distance_point_line, fit_circle, intersect_lines,
                       max_circle_residual, order_ccw, point_scale,
                       project_point_line, tangent_length)
from .numeric import DEFAULT_TOL, Tolerance, solve_polynomial

log = logging.getLogger(__name__)


class ConstructionError(DegenerateError):
    """A construction's precondition or certificate failed."""


# ---------------------------------------------------------------------------
# tangent-chord parabola and friends


def chord_line(k: Circle, a: Point, b: Point, tol: Tolerance = DEFAULT_TOL) -> Line:
    for p in (a, b):
        if abs(dist(p, k.center) - k.r) > tol.eps_construct * max(k.r, point_scale((p,))):
            raise ConstructionError("chord endpoint is not on the circle")
    return Line.through(a, b, tol)


def parabola_from_tangent_chord(k: Circle, a: Point, b: Point,
                                tol: Tolerance = DEFAULT_TOL) -> Conic:
    """Parabola touching ``k`` at ``a`` and ``b``.

    Implicit form ``|P - I|^2 - r^2 - (n.P - c)^2`` for the chord line
    ``n.P = c``: power of the point minus squared distance to the chord.
    """
    line = chord_line(k, a, b, tol)
    I, r = k.center, k.r
    n, c = line.n, line.c
    if abs(line.signed_distance(I)) <= tol.eps_construct * r:
        raise ConstructionError("degenerate: parallel line pair")
    coeffs = (1 - n.x * n.x, -2 * n.x * n.y, 1 - n.y * n.y,
              -2 * I.x + 2 * c * n.x, -2 * I.y + 2 * c * n.y,
              I.dot(I) - r * r - c * c)
    return Conic(coeffs, inside_witness=I)


def lemma1_residual(k: Circle, chord: Line, p: Point, tol: Tolerance = DEFAULT_TOL) -> float:
    """``|dist(p, chord) - tangent_length(p, k)|``; zero exactly on the parabola."""
    return abs(distance_point_line(p, chord) - tangent_length(p, k, tol))


def circle_tangent_at_chord(fr: ParabolaFrame, xi0: float) -> Circle:
    """Circle touching the parabola at both ends of the chord ``axial = xi0``.

    The normal at a parabola point meets the axis ``2 f`` further along it,
    so the center sits at ``axial = xi0 + 2 f``.
    """
    if not xi0 > 0.0:
        raise ConstructionError("chord must cut the parabola (xi0 > 0)")
    f = fr.focal
    center = fr.to_world(xi0 + 2 * f, 0.0)
    return Circle(center, math.sqrt(4 * f * xi0 + 4 * f * f))


@dataclass(frozen=True)
class Lemma2Figure:
    A: Point
    B: Point
    H: Point
    K: Point
    L: Point
    C: Point
    omega: Circle

    @property
    def concyclicity(self) -> float:
        return max_circle_residual((self.A, self.B, self.K, self.L), self.omega)


def lemma2_points(fr: ParabolaFrame, xi0: float, p: Point,
                  tol: Tolerance = DEFAULT_TOL) -> Lemma2Figure:
    if not xi0 > 0.0:
        raise ConstructionError("chord must cut the parabola (xi0 > 0)")
    half = 2 * math.sqrt(fr.focal * xi0)
    a, b = fr.point(-half), fr.point(half)
    axial, lateral = fr.coords(p)
    scale = max(fr.focal, abs(lateral), half)
    if abs(lateral * lateral - 4 * fr.focal * axial) > tol.eps_iterative * scale * scale:
        raise ConstructionError("point is not on the parabola")
    if min(dist(p, a), dist(p, b)) <= tol.eps_construct * scale:
        raise ConstructionError("degenerate pencil ray")
    chord = Line.through(a, b)
    h = project_point_line(p, chord)
    lap, lbp = Line.through(a, p), Line.through(b, p)
    kk = project_point_line(h, lap)
    ll = project_point_line(h, lbp)
    perp_a = Line((p - a).unit(), (p - a).unit().dot(a))
    perp_b = Line((p - b).unit(), (p - b).unit().dot(b))
    c = intersect_lines(perp_a, perp_b)
    third = kk if dist(kk, a) >= dist(ll, b) else ll
    omega = circle_through_three(a, b, third)
    return Lemma2Figure(a, b, h, kk, ll, c, omega)


# ---------------------------------------------------------------------------
# parabolas through four points


@dataclass(frozen=True)
class PencilMember:
    lam: float
    conic: Conic
    kind: ConicKind


@dataclass(frozen=True)
class ParabolasThroughFour:
    parabolas: tuple[Conic, ...]
    members: tuple[PencilMember, ...]
    diagnostics: tuple[str, ...] = ()

    def __len__(self):
        return len(self.parabolas)

    def __iter__(self):
        return iter(self.parabolas)

    def __getitem__(self, i):
        return self.parabolas[i]


def _line_product(p: Point, q: Point, r: Point, s: Point) -> np.ndarray:
    """Symmetric matrix of the line pair ``pq`` . ``rs``."""
    l1 = np.cross([p.x, p.y, 1.0], [q.x, q.y, 1.0])
    l2 = np.cross([r.x, r.y, 1.0], [s.x, s.y, 1.0])
    l1 /= np.linalg.norm(l1[:2])
    l2 /= np.linalg.norm(l2[:2])
    return 0.5 * (np.outer(l1, l2) + np.outer(l2, l1))


def _homogeneous_quadratic_roots(c2: float, c1: float, c0: float, tol: Tolerance):
    """Real roots ``(alpha, beta)`` of ``c2 a^2 + c1 a b + c0 b^2``, unit length."""
    out = []
    if abs(c2) >= abs(c0):
        if c2 == 0.0:
            return out
        for t, m in solve_polynomial([c2, c1, c0], tol):
            out.extend([(t, 1.0)] * m)
    else:
        for t, m in solve_polynomial([c0, c1, c2], tol):
            out.extend([(1.0, t)] * m)
    return [(a / math.hypot(a, b), b / math.hypot(a, b)) for a, b in out]


def parabolas_through_four_points(a: Point, b: Point, c: Point, d: Point,
                                  tol: Tolerance = DEFAULT_TOL) -> ParabolasThroughFour:
    """The (at most two) parabolas through four points.

    Members ``lam (AB)(CD) + (1 - lam)(AC)(BD)`` of the pencil with vanishing
    quadratic-part determinant; degenerate ones are reported as diagnostics.
    Parabolas are ordered by ``lam`` and oriented so the focus is inside.
    """
    pts = (a, b, c, d)
    scale = point_scale(pts)
    for i in range(4):
        for j in range(i + 1, 4):
            if dist(pts[i], pts[j]) <= tol.eps_construct * scale:
                raise ConstructionError("points must be pairwise distinct")
            for k in range(j + 1, 4):
                u, v = pts[j] - pts[i], pts[k] - pts[i]
                if abs(u.cross(v)) <= tol.eps_construct * max(u.norm(), v.norm()) ** 2:
                    raise ConstructionError("three of the points are collinear")
    M1 = _line_product(a, b, c, d)
    M2 = _line_product(a, c, b, d)
    # det of the quadratic part of alpha M1 + beta M2, a quadratic form
    Q1, Q2 = M1[:2, :2], M2[:2, :2]
    c2 = float(np.linalg.det(Q1))
    c0 = float(np.linalg.det(Q2))
    c1 = float(Q1[0, 0] * Q2[1, 1] + Q1[1, 1] * Q2[0, 0] - 2 * Q1[0, 1] * Q2[0, 1])
    roots = _homogeneous_quadratic_roots(c2, c1, c0, tol)
    if not roots:
        return ParabolasThroughFour((), (), ("no real parabolas",))

    members = []
    for al, be in roots:
        lam = al / (al + be) if abs(al + be) > 1e-15 else math.inf
        conic = Conic.from_matrix(al * M1 + be * M2)
        members.append(PencilMember(lam, conic, classify(conic, tol)))
    members.sort(key=lambda m: m.lam)

    parabolas, diagnostics, seen = [], [], []
    for m in members:
        if any(m.conic.same_as(s, tol.cluster_eps) for s in seen):
            continue
        seen.append(m.conic)
        if m.kind is ConicKind.PARABOLA:
            fr = frame_from_conic(m.conic, tol)
            parabolas.append(Conic(m.conic.coeffs, inside_witness=fr.focus))
        else:
            diagnostics.append(f"degenerate member ({m.kind.value}) at lambda={m.lam:.12g}: {m.conic!r}")
    return ParabolasThroughFour(tuple(parabolas), tuple(members), tuple(diagnostics))


# ---------------------------------------------------------------------------
# parabolic quadrilateral


@dataclass(frozen=True)
class ParabolicQuadrilateral:
    """Two parabolas with four simple common points.

    ``vertices`` run counterclockwise about their centroid; the diagonals are
    ``v0 v2`` and ``v1 v3`` and meet at ``L``.
    """

    p1: Conic
    p2: Conic
    vertices: tuple[Point, Point, Point, Point]
    diagonals: tuple[Line, Line]
    L: Point

    @property
    def sides(self) -> tuple[Line, ...]:
        v = self.vertices
        return tuple(Line.through(v[i], v[(i + 1) % 4]) for i in range(4))

    @property
    def scale(self) -> float:
        c = centroid(self.vertices)
        return max(dist(v, c) for v in self.vertices)


def parabolic_quadrilateral(p1: Conic, p2: Conic, tol: Tolerance = DEFAULT_TOL) -> ParabolicQuadrilateral:
    for q in (p1, p2):
        if classify(q, tol) is not ConicKind.PARABOLA:
            raise ConstructionError("not a parabola")
    meet = intersect_conics(p1, p2, tol)
    pts = meet.simple_points
    if len(pts) != 4 or meet.total_multiplicity != 4:
        raise ConstructionError("not a parabolic quadrilateral")
    v = tuple(order_ccw(pts))
    d1, d2 = Line.through(v[0], v[2]), Line.through(v[1], v[3])
    return ParabolicQuadrilateral(p1, p2, v, (d1, d2), intersect_lines(d1, d2, tol))


def perpendicular_diagonals_residual(pq: ParabolicQuadrilateral) -> float:
    """``|cos|`` of the angle between the diagonals."""
    d1, d2 = pq.diagonals
    return abs(d1.n.dot(d2.n))


@dataclass(frozen=True)
class InscribedCircleResult:
    circle: Circle
    tangency_p1: tuple[Point, Point]
    tangency_p2: tuple[Point, Point]
    certificates: tuple[float, float]
    projection_residual: float
    equidistance_residual: float


def inscribed_circle(pq: ParabolicQuadrilateral, tol: Tolerance = DEFAULT_TOL) -> InscribedCircleResult:
    """Circle tangent to both sides of a quadrilateral with perpendicular diagonals.

    Built through the feet of ``L`` on the four side lines, then certified:
    each contact quartic must be a perfect square with two real contacts
    lying on the other parabola's side.
    """
    if perpendicular_diagonals_residual(pq) > tol.eps_iterative:
        raise ConstructionError("diagonals not perpendicular")
    feet = [project_point_line(pq.L, s) for s in pq.sides]
    circle = circle_through_three(feet[0], feet[1], feet[2], tol)
    proj_res = abs(dist(feet[3], circle.center) - circle.r) / circle.r
    if proj_res > tol.eps_iterative:
        raise ConstructionError("tangency not achieved")

    certs, contacts = [], []
    for own, other in ((pq.p1, pq.p2), (pq.p2, pq.p1)):
        res, pts = tangency_certificate(frame_from_conic(own, tol), circle, tol)
        if res > tol.eps_iterative or len(pts) != 2:
            raise ConstructionError("tangency not achieved")
        if other.inside_witness is not None and not all(other.inside(p, tol.eps_iterative) for p in pts):
            raise ConstructionError("tangency not achieved")
        certs.append(res)
        contacts.append(tuple(pts))

    l1 = Line.through(*contacts[0])
    l2 = Line.through(*contacts[1])
    eq = max(abs(distance_point_line(v, l1) - distance_point_line(v, l2)) for v in pq.vertices)
    eq /= pq.scale
    if eq > tol.eps_iterative:
        raise ConstructionError("tangency not achieved")
    return InscribedCircleResult(circle, contacts[0], contacts[1], (certs[0], certs[1]), proj_res, eq)


def quad_boundary(pq: ParabolicQuadrilateral, count: int) -> list[Point]:
    """``count`` points spread over the four boundary arcs of the region.

    A finite arc of one parabola between consecutive vertices belongs to
    the boundary when its midpoint lies on the inside of the other parabola.
    """
    arcs = []
    for own, other in ((pq.p1, pq.p2), (pq.p2, pq.p1)):
        fr = frame_from_conic(own)
        lats = sorted(fr.coords(v)[1] for v in pq.vertices)
        for lo, hi in zip(lats, lats[1:]):
            mid = fr.point(0.5 * (lo + hi))
            if other(mid) <= 0.0:
                arcs.append((fr, lo, hi))
    if not arcs:
        return []
    spans = np.array([hi - lo for _, lo, hi in arcs])
    alloc = np.floor(count * spans / spans.sum()).astype(int)
    alloc[: count - alloc.sum()] += 1
    out = []
    for (fr, lo, hi), n in zip(arcs, alloc):
        out.extend(fr.point(t) for t in np.linspace(lo, hi, n) if n > 0)
    return out


# ---------------------------------------------------------------------------
# axial lines


@dataclass(frozen=True)
class AxialLineSolution:
    line: Line
    E: Point
    F: Point
    t: float
    s: float

    @property
    def ratio(self) -> float:
        return self.t / (1.0 - self.t)


def axial_lines(a: Point, b: Point, c: Point, d: Point,
                tol: Tolerance = DEFAULT_TOL) -> list[AxialLineSolution]:
    """Lines through the diagonal crossing ``L`` with ``AE/EB = FD/CF``.

    With ``E = A + t (B - A)`` and ``F = D + s (C - D)`` the ratio condition
    is ``s = t``, and collinearity of ``E, L, F`` is quadratic in ``t``.
    """
    scale = point_scale((a, b, c, d))
    for p, q, r in ((a, b, c), (a, b, d), (a, c, d), (b, c, d)):
        u, v = q - p, r - p
        if abs(u.cross(v)) <= tol.eps_construct * max(u.norm(), v.norm()) ** 2:
            raise ConstructionError("three vertices are collinear")
    try:
        L = intersect_lines(Line.through(a, c), Line.through(b, d), tol)
    except DegenerateError:
        raise ConstructionError("no diagonal intersection") from None
    e0, e1 = a - L, b - a
    f0, f1 = d - L, c - d
    coeffs = [e1.cross(f1), e0.cross(f1) + e1.cross(f0), e0.cross(f0)]
    if max(abs(x) for x in coeffs) <= tol.eps_construct * scale * scale:
        log.debug("axial lines: every line through L qualifies")
        return []
    out = []
    for t, _ in solve_polynomial(coeffs, tol):
        if abs(1.0 - t) <= tol.eps_construct:
            continue  # E at B: ratio undefined
        e, f = a + e1 * t, d + f1 * t
        far = e if dist(e, L) >= dist(f, L) else f
        if dist(far, L) <= tol.eps_construct * scale:
            continue
        out.append(AxialLineSolution(Line.through(L, far), e, f, t, t))
    if not out:
        log.debug("axial lines: no finite solution")
    return out


# ---------------------------------------------------------------------------
# affine normalization


def _metric_row(p: Point, q: Point) -> list[float]:
    return [p.x * q.x, p.x * q.y + p.y * q.x, p.y * q.y]


def _sym(v) -> np.ndarray:
    return np.array([[v[0], v[1]], [v[1], v[2]]])


def _sqrt_spd(M: np.ndarray) -> np.ndarray:
    w, V = np.linalg.eigh(M)
    return V @ np.diag(np.sqrt(w)) @ V.T


def affine_normalizer(pq: ParabolicQuadrilateral, tol: Tolerance = DEFAULT_TOL) -> AffineMap:
    """Linear map making both the axes and the diagonals perpendicular.

    A metric ``M`` with ``u1.M.u2 = 0`` and ``v1.M.v2 = 0`` is found in the
    null space of the two linear conditions; the map is its symmetric
    square root scaled to unit determinant.
    """
    u1 = frame_from_conic(pq.p1, tol).axis
    u2 = frame_from_conic(pq.p2, tol).axis
    v1, v2 = pq.diagonals[0].direction, pq.diagonals[1].direction
    rows = np.array([_metric_row(u1, u2), _metric_row(v1, v2)])
    _, sv, Vt = np.linalg.svd(rows)
    if sv[1] > tol.eps_construct * sv[0]:
        M = _sym(Vt[2])
        if np.linalg.det(M) <= tol.eps_construct * np.sum(M * M):
            raise ConstructionError("directions do not interleave")
        if np.trace(M) < 0:
            M = -M
    else:
        # one condition: M = W^-T diag(p, q) W^-1 with W = [u1 u2]; pick the best-conditioned
        Winv = np.linalg.inv(np.column_stack([u1.as_array(), u2.as_array()]))

        def metric(logratio):
            return Winv.T @ np.diag([math.exp(logratio), 1.0]) @ Winv

        best = minimize_scalar(lambda s: np.linalg.cond(metric(s)), bounds=(-30, 30),
                               method="bounded", options={"xatol": 1e-10})
        M = metric(best.x)
    M = M / math.sqrt(np.linalg.det(M))
    return AffineMap(_sqrt_spd(M), np.zeros(2))


# ---------------------------------------------------------------------------
# fourth concyclic point


@dataclass(frozen=True)
class FourthIntersection:
    point: Point
    multiplicity: int = 1


def fourth_intersection(fr: ParabolaFrame, a: Point, b: Point, c: Point,
                        tol: Tolerance = DEFAULT_TOL) -> FourthIntersection:
    """Fourth common point of the parabola and the circle through ``a, b, c``.

    Chord ``cd`` has the opposite axis-frame slope of chord ``ab``, so the
    lateral coordinates add to zero.
    """
    lats = []
    for p in (a, b, c):
        ax, la = fr.coords(p)
        if abs(la * la - 4 * fr.focal * ax) > tol.eps_iterative * max(la * la, fr.focal ** 2, 4 * fr.focal * abs(ax)):
            raise ConstructionError("point is not on the parabola")
        lats.append(la)
    scale = max([fr.focal] + [abs(t) for t in lats])
    for i in range(3):
        for j in range(i + 1, 3):
            if abs(lats[i] - lats[j]) <= tol.eps_construct * scale:
                raise ConstructionError("coincident input points")
    d = -sum(lats)
    mult = 1
    for i, t in enumerate(lats):
        if abs(d - t) <= tol.eps_construct * scale:
            return FourthIntersection((a, b, c)[i], 2)
    return FourthIntersection(fr.point(d), mult)


# ---------------------------------------------------------------------------
# parabolic 2N-gon and hexagon


def chord_through(k: Circle, x: Point, angle: float) -> tuple[Point, Point]:
    """Ends of the chord of ``k`` through the interior point ``x``."""
    d = Point(math.cos(angle), math.sin(angle))
    w = x - k.center
    b = d.dot(w)
    cterm = w.dot(w) - k.r * k.r
    if cterm >= 0.0:
        raise ConstructionError("point is not inside the circle")
    root = math.sqrt(b * b - cterm)
    s1, s2 = -b - root, -b + root
    # project back onto the circle to kill rounding in the radius
    ends = [x + d * s for s in (s1, s2)]
    return tuple(k.center + (p - k.center) * (k.r / dist(p, k.center)) for p in ends)


def labeled_polygon_vertices(parabolas: Sequence[Conic], tol: Tolerance = DEFAULT_TOL):
    """Pairwise intersections lying inside every parabola region.

    Returns ``(point, (i, j))`` pairs naming the two parabolas through each
    vertex.
    """
    cands = []
    for i in range(len(parabolas)):
        for j in range(i + 1, len(parabolas)):
            for p, _ in intersect_conics(parabolas[i], parabolas[j], tol):
                if all(q.inside(p, tol.eps_iterative) for q in parabolas):
                    cands.append((p, (i, j)))
    scale = point_scale(p for p, _ in cands) if cands else 1.0
    out: list[tuple[Point, tuple[int, int]]] = []
    for p, ij in cands:
        if all(dist(p, o) > tol.cluster_eps * scale for o, _ in out):
            out.append((p, ij))
    return out


def polygon_vertices(parabolas: Sequence[Conic], tol: Tolerance = DEFAULT_TOL) -> list[Point]:
    return [p for p, _ in labeled_polygon_vertices(parabolas, tol)]


@dataclass(frozen=True)
class NGonResult:
    circle: Circle
    X: Point
    N: int
    theta0: float
    chords: tuple[tuple[Point, Point], ...]
    parabolas: tuple[Conic, ...]
    vertices: tuple[Point, ...]
    fitted_circle: Circle
    residual: float


def build_ngon(k: Circle, x: Point, n: int, theta0: float,
               tol: Tolerance = DEFAULT_TOL) -> NGonResult:
    if n < 2:
        raise ValueError("need at least two chords")
    if dist(x, k.center) <= tol.eps_construct * k.r:
        raise ConstructionError("every chord through the center is a diameter")
    chords = tuple(chord_through(k, x, theta0 + j * math.pi / n) for j in range(n))
    parabolas = tuple(parabola_from_tangent_chord(k, a, b, tol) for a, b in chords)
    verts = polygon_vertices(parabolas, tol)
    if len(verts) != 2 * n:
        raise ConstructionError("degenerate configuration")
    verts = order_ccw(verts, about=x)
    fitted = fit_circle(verts)
    return NGonResult(k, x, n, theta0, chords, parabolas, tuple(verts), fitted,
                      max_circle_residual(verts, fitted))


@dataclass(frozen=True)
class Concurrency:
    point: Point
    residual: float
    incenter_error: float
    vertices: tuple[Point, ...] = field(default=())


def _tritangent_center(lines: Sequence[Line], tol: Tolerance) -> Optional[Point]:
    """Incenter of the triangle cut out by three lines (None if degenerate)."""
    try:
        p01 = intersect_lines(lines[0], lines[1], tol)
        p12 = intersect_lines(lines[1], lines[2], tol)
        p20 = intersect_lines(lines[2], lines[0], tol)
    except DegenerateError:
        return None
    a, b, c = dist(p12, p20), dist(p20, p01), dist(p01, p12)
    per = a + b + c
    if per == 0.0 or abs((p12 - p01).cross(p20 - p01)) <= tol.eps_construct * per * per:
        return None
    return (p01 * a + p12 * b + p20 * c) / per


def hexagon_diagonal_concurrency(k: Circle, chords: Sequence[tuple[Point, Point]],
                                 tol: Tolerance = DEFAULT_TOL) -> Concurrency:
    """Common point of the main diagonals of a circumscribed parabolic hexagon."""
    if len(chords) != 3:
        raise ValueError("need exactly three chords")
    lines = [chord_line(k, a, b, tol) for a, b in chords]
    for i in range(3):
        for j in range(i + 1, 3):
            if abs(lines[i].n.cross(lines[j].n)) <= tol.eps_construct and \
                    abs(lines[i].signed_distance(lines[j].origin)) <= tol.eps_construct * k.r:
                raise ConstructionError("chords must lie on distinct lines")
    parabolas = [parabola_from_tangent_chord(k, a, b, tol) for a, b in chords]
    labeled = labeled_polygon_vertices(parabolas, tol)
    if len(labeled) != 6:
        raise ConstructionError("hexagon does not exist")
    c0 = centroid(p for p, _ in labeled)
    labeled.sort(key=lambda pl: (math.atan2(pl[0].y - c0.y, pl[0].x - c0.x), pl[0].x, pl[0].y))
    # a full circumscribed hexagon has its sides in the order 1,2,3,1,2,3
    if any(labeled[i][1] != labeled[i + 3][1] for i in range(3)):
        raise ConstructionError("hexagon does not exist")
    verts = [p for p, _ in labeled]
    diags = [Line.through(verts[i], verts[i + 3]) for i in range(3)]
    N = np.array([[d.n.x, d.n.y] for d in diags])
    cvec = np.array([d.c for d in diags])
    sol, *_ = np.linalg.lstsq(N, cvec, rcond=None)
    point = Point(sol[0], sol[1])
    residual = max(distance_point_line(point, d) for d in diags) / k.r
    center = _tritangent_center(lines, tol)
    if center is None:
        # concurrent chords: the common point of the chord lines
        M = np.array([[l.n.x, l.n.y] for l in lines])
        s, *_ = np.linalg.lstsq(M, np.array([l.c for l in lines]), rcond=None)
        center = Point(s[0], s[1])
    return Concurrency(point, residual, dist(point, center) / k.r, tuple(verts))
