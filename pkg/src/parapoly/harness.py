"""Seeded randomized checks of every theorem, with quantified residuals.

Each trial draws from its own splitmix64 substream keyed by
``(seed, trial)``, so a report does not depend on how trials are scheduled.
A trial evaluates one or more criteria; each criterion has its own bound,
and the trial residual is the worst criterion value divided by its bound
(so a trial passes exactly when its residual is at most 1). Raw per-metric
extremes are kept alongside in ``CheckReport.metrics``.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from .conics import (Conic, ParabolaFrame, conic_from_frame, frame_from_conic,
                     intersect_conics, slope_in_axis_frame, tangency_certificate,
                     transform_conic)
from .constructions import (ConstructionError, axial_lines, build_ngon, chord_through,
                            chord_line, circle_tangent_at_chord, hexagon_diagonal_concurrency,
                            inscribed_circle, lemma1_residual, lemma2_points,
                            affine_normalizer, parabola_from_tangent_chord,
                            parabolas_through_four_points, parabolic_quadrilateral,
                            perpendicular_diagonals_residual)
from .geometry import (Circle, DegenerateError, Line, Point, centroid, circle_through_three,
                       concyclicity_residual, direction_angle, dist, intersect_lines,
                       order_ccw)
from .numeric import DEFAULT_TOL, Tolerance

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15
MAX_REJECTIONS = 1000


def _mix64(z: int) -> int:
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class Rng:
    """splitmix64; identical output on every platform."""

    def __init__(self, state: int):
        self.state = state & MASK64

    @classmethod
    def substream(cls, seed: int, trial: int) -> Rng:
        return cls(_mix64((seed & MASK64) ^ _mix64((trial + 1) * GOLDEN & MASK64)))

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN) & MASK64
        return _mix64(self.state)

    def random(self) -> float:
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def uniform(self, lo: float, hi: float) -> float:
        return lo + (hi - lo) * self.random()

    def angle(self) -> float:
        return self.uniform(0.0, 2.0 * math.pi)

    def sign(self) -> float:
        return 1.0 if self.next_u64() >> 63 else -1.0


class Reject(Exception):
    """The draw landed near a degeneracy; draw again."""


class GeneratorExhausted(RuntimeError):
    pass


def resample(draw: Callable[[Rng], object], rng: Rng, cap: int = MAX_REJECTIONS):
    """Call ``draw`` until it stops rejecting; returns ``(instance, rejections)``."""
    for n in range(cap + 1):
        try:
            return draw(rng), n
        except Reject:
            continue
    raise GeneratorExhausted(f"more than {cap} rejections")


# ---------------------------------------------------------------------------
# generators

# configurations within this fraction of the length scale of a degeneracy are rejected
GUARD = 1e-3


@dataclass(frozen=True)
class CircleTwoChords:
    circle: Circle
    chord_a: tuple[Point, Point]
    chord_b: tuple[Point, Point]


def random_circle(rng: Rng) -> Circle:
    return Circle(Point(rng.uniform(-1, 1), rng.uniform(-1, 1)), rng.uniform(0.5, 2.0))


def chord_at_offset(rng: Rng, k: Circle, lo: float, hi: float) -> tuple[Point, Point]:
    """Chord whose distance from the center is a uniform fraction in [lo, hi] of r."""
    t = rng.angle()
    n = Point(math.cos(t), math.sin(t))
    h = rng.uniform(lo, hi) * k.r
    half = math.sqrt(k.r * k.r - h * h)
    foot = k.center + n * h
    return foot + n.perp() * half, foot - n.perp() * half


def _min_separation(points: Sequence[Point]) -> float:
    return min(dist(p, q) for i, p in enumerate(points) for q in points[i + 1:])


def _draw_circle_two_chords(rng: Rng):
    # both chords pass through one interior point, so they cross inside;
    # otherwise the circle is not inscribed in the quadrilateral
    k = random_circle(rng)
    rho = k.r * math.sqrt(rng.random())
    x = k.center + Point(math.cos(a := rng.angle()), math.sin(a)) * rho
    if k.power(x) > -GUARD * k.r * k.r:
        raise Reject
    t1, t2 = rng.uniform(0.0, math.pi), rng.uniform(0.0, math.pi)
    if direction_angle(Point(math.cos(t1), math.sin(t1)), Point(math.cos(t2), math.sin(t2))) < GUARD:
        raise Reject
    ca, cb = chord_through(k, x, t1), chord_through(k, x, t2)
    for c in (ca, cb):
        if abs(Line.through(*c).signed_distance(k.center)) < GUARD * k.r:
            raise Reject  # near-diameter
    try:
        pq = parabolic_quadrilateral(parabola_from_tangent_chord(k, *ca),
                                     parabola_from_tangent_chord(k, *cb))
    except DegenerateError:
        raise Reject from None
    if _min_separation(pq.vertices) < GUARD * k.r:
        raise Reject
    return CircleTwoChords(k, ca, cb), pq


def gen_circle_two_chords(rng: Rng) -> CircleTwoChords:
    """Circle with two chords crossing inside it.

    The tangent parabolas of such chords meet in four simple points and the
    circle is inscribed in the quadrilateral they bound.
    """
    (inst, _), _ = resample(_draw_circle_two_chords, rng)
    return inst


def w1_fixture() -> CircleTwoChords:
    """Unit circle with the chords y = 1/2 and x = 1/2."""
    h = math.sqrt(3.0) / 2.0
    return CircleTwoChords(Circle(Point(0.0, 0.0), 1.0),
                           (Point(-h, 0.5), Point(h, 0.5)), (Point(0.5, -h), Point(0.5, h)))


def random_frame(rng: Rng, f_range=(0.1, 1.0)) -> ParabolaFrame:
    t = rng.angle()
    return ParabolaFrame(Point(rng.uniform(-1, 1), rng.uniform(-1, 1)),
                         Point(math.cos(t), math.sin(t)), rng.uniform(*f_range))


def _axes_pair(rng: Rng, angle: float):
    """Two parabolas whose axes meet at ``angle``.

    The vertices sit at distances ``b1, b2`` behind the axes' crossing point.
    Four intersections need each vertex outside the other parabola, which
    for perpendicular axes reads ``f1 < b2^2 / (4 b1)`` (and symmetrically).
    """
    o = Point(rng.uniform(-1, 1), rng.uniform(-1, 1))
    t = rng.angle()
    us = (Point(math.cos(t), math.sin(t)), Point(math.cos(t + angle), math.sin(t + angle)))
    b = (rng.uniform(0.3, 2.0), rng.uniform(0.3, 2.0))
    focal = (b[1] ** 2 / (4.0 * b[0]), b[0] ** 2 / (4.0 * b[1]))
    frames = []
    for u, back, fmax in zip(us, b, focal):
        v = o - u * back + u.perp() * (rng.uniform(-0.2, 0.2) * back)
        frames.append(ParabolaFrame(v, u, fmax * rng.uniform(0.2, 0.75)))
    p1, p2 = (conic_from_frame(fr) for fr in frames)
    try:
        pq = parabolic_quadrilateral(p1, p2)
    except DegenerateError:
        raise Reject from None
    if _min_separation(pq.vertices) < GUARD * pq.scale * 10:
        raise Reject
    return frames, pq


def _convex_quad(rng: Rng, diag_angle: float):
    """Quadrilateral from its diagonal crossing, diagonal directions and arm lengths."""
    L = Point(rng.uniform(-1, 1), rng.uniform(-1, 1))
    t = rng.angle()
    e1 = Point(math.cos(t), math.sin(t))
    e2 = Point(math.cos(t + diag_angle), math.sin(t + diag_angle))
    a, b, c, d = (rng.uniform(0.5, 2.0) for _ in range(4))
    return L + e1 * a, L + e2 * b, L - e1 * c, L - e2 * d


def _quad_from_points(pts):
    try:
        para = parabolas_through_four_points(*pts)
    except DegenerateError:
        raise Reject from None
    if len(para) < 2:
        raise Reject
    try:
        return parabolic_quadrilateral(para[0], para[1])
    except DegenerateError:
        raise Reject from None


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class CheckConfig:
    name: str
    trials: int = 100
    seed: int = 42
    tol: Tolerance = DEFAULT_TOL

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be at least 1")


@dataclass(frozen=True)
class Failure:
    trial: int
    residual: float
    description: str


@dataclass
class CheckReport:
    name: str
    seed: int
    trials: int
    rejections: int = 0
    failures: list[Failure] = field(default_factory=list)
    max_residual: float = 0.0
    bound: float = 1.0
    metrics: dict[str, float] = field(default_factory=dict)
    notes: dict[str, int] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def trials_run(self) -> int:
        return self.trials

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (f"{status} {self.name}: trials={self.trials} rejections={self.rejections} "
                f"failures={len(self.failures)} max_residual={self.max_residual:.3g}")


@dataclass
class Trial:
    """Criteria gathered while running one trial."""

    rejections: int = 0
    criteria: list[tuple[str, float, float, bool]] = field(default_factory=list)
    notes: dict[str, int] = field(default_factory=dict)

    def at_most(self, label: str, value: float, bound: float):
        self.criteria.append((label, float(value), bound, True))

    def at_least(self, label: str, value: float, bound: float):
        self.criteria.append((label, float(value), bound, False))

    def holds(self, label: str, ok: bool):
        self.criteria.append((label, 0.0 if ok else 1.0, 0.5, True))

    def note(self, key: str):
        self.notes[key] = self.notes.get(key, 0) + 1

    def draw(self, fn, rng: Rng):
        inst, n = resample(fn, rng)
        self.rejections += n
        return inst


def _score(value: float, bound: float, upper: bool) -> float:
    if upper:
        return value / bound
    return math.inf if value <= 0.0 else bound / value


TrialFn = Callable[[Trial, Rng, int, Tolerance], None]


def _run_trial(fn: TrialFn, cfg: CheckConfig, i: int):
    t = Trial()
    try:
        fn(t, Rng.substream(cfg.seed, i), i, cfg.tol)
    except (DegenerateError, GeneratorExhausted, ValueError) as exc:
        t.criteria.append((f"error: {exc}", math.inf, 1.0, True))
    return t


def run_check(cfg: CheckConfig, workers: Optional[int] = None) -> CheckReport:
    try:
        fn = CHECKS[cfg.name]
    except KeyError:
        raise ValueError(f"unknown check {cfg.name!r}") from None
    if workers and workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            trials = list(pool.map(lambda i: _run_trial(fn, cfg, i), range(cfg.trials)))
    else:
        trials = [_run_trial(fn, cfg, i) for i in range(cfg.trials)]

    report = CheckReport(cfg.name, cfg.seed, cfg.trials)
    for i, t in enumerate(trials):
        report.rejections += t.rejections
        for k, v in t.notes.items():
            report.notes[k] = report.notes.get(k, 0) + v
        worst, bad = 0.0, []
        for label, value, bound, upper in t.criteria:
            s = _score(value, bound, upper)
            worst = max(worst, s)
            if s > 1.0:
                rel = "<=" if upper else ">="
                bad.append(f"{label}={value:.3g} (want {rel} {bound:g})")
            if not label.startswith("error"):
                prev = report.metrics.get(label)
                if prev is None:
                    report.metrics[label] = value
                else:
                    report.metrics[label] = max(prev, value) if upper else min(prev, value)
        report.max_residual = max(report.max_residual, worst)
        if bad:
            report.failures.append(Failure(i, worst, "; ".join(bad)))
    return report


# ---------------------------------------------------------------------------
# checks


def _main_forward(t: Trial, rng: Rng, i: int, tol: Tolerance):
    _, pq = t.draw(_draw_circle_two_chords, rng)
    t.at_most("perp_cos", perpendicular_diagonals_residual(pq), 1e-8)


def _main_backward(t: Trial, rng: Rng, i: int, tol: Tolerance):
    pq = t.draw(lambda r: _quad_from_points(_convex_quad(r, math.pi / 2)), rng)
    ic = inscribed_circle(pq, tol)
    t.at_most("certificate", max(ic.certificates), 1e-6)
    t.at_most("equidistance", ic.equidistance_residual, 1e-6)

    # control: diagonals 10..40 degrees off perpendicular must not admit the circle
    def skewed(r: Rng):
        off = r.sign() * math.radians(r.uniform(10.0, 40.0))
        return _quad_from_points(_convex_quad(r, math.pi / 2 + off))

    ctrl = t.draw(skewed, rng)
    t.at_least("control_perp_cos", perpendicular_diagonals_residual(ctrl), 1e-3)
    try:
        inscribed_circle(ctrl, tol)
        t.holds("control_rejected", False)
    except ConstructionError:
        t.holds("control_rejected", True)


def _lemma1(t: Trial, rng: Rng, i: int, tol: Tolerance):
    # The off-curve sensitivity at the vertex is 2h^2/(r^2-h^2) for a chord at
    # distance h from the center; it vanishes as the chord nears a diameter,
    # so near-diameter chords are kept out of this check.
    k = random_circle(rng)
    a, b = chord_at_offset(rng, k, 0.1, 0.95)
    q = parabola_from_tangent_chord(k, a, b, tol)
    fr = frame_from_conic(q, tol)
    chord = chord_line(k, a, b, tol)
    contacts = [fr.coords(a)[1], fr.coords(b)[1]]
    on, off = 0.0, math.inf
    for _ in range(200):
        lat = rng.uniform(-2.0, 2.0) * k.r
        # tangent length is a square root of the power, so it is not
        # Lipschitz at the contact points; rounding there is amplified to
        # sqrt(eps) size, and samples that close are skipped
        while min(abs(lat - c) for c in contacts) < GUARD * k.r:
            lat = rng.uniform(-2.0, 2.0) * k.r
        p = fr.point(lat)
        on = max(on, lemma1_residual(k, chord, p, tol))
        n = q.gradient(p).unit()
        for s in (1.0, -1.0):
            moved = p + n * (s * 0.01 * k.r)
            if k.power(moved) < 0.0:
                continue  # tangent length undefined inside the circle
            off = min(off, lemma1_residual(k, chord, moved, tol))
    t.at_most("on_curve", on / k.r, 1e-10)
    t.at_least("off_curve", off / k.r, 1e-4)


def _lemma2(t: Trial, rng: Rng, i: int, tol: Tolerance):
    fr = random_frame(rng)
    xi0 = rng.uniform(0.2, 2.0)
    half = 2.0 * math.sqrt(fr.focal * xi0)
    omega0 = circle_tangent_at_chord(fr, xi0)
    scale = omega0.r

    def draw_p(r: Rng):
        lat = r.uniform(-3.0, 3.0) * half
        if min(abs(lat - half), abs(lat + half)) < GUARD * 100 * scale:
            raise Reject
        return fr.point(lat)

    figs = [lemma2_points(fr, xi0, t.draw(draw_p, rng), tol) for _ in range(20)]
    c_axial = [fr.coords(f.C)[0] for f in figs]
    t.at_most("C_spread", (max(c_axial) - min(c_axial)) / scale, 1e-9)
    cx = [f.omega.center.x for f in figs]
    cy = [f.omega.center.y for f in figs]
    rr = [f.omega.r for f in figs]
    spread = max(max(v) - min(v) for v in (cx, cy, rr))
    t.at_most("omega_spread", spread / scale, 1e-9)
    t.at_most("omega_vs_tangent_circle",
              max(max(dist(f.omega.center, omega0.center), abs(f.omega.r - omega0.r)) for f in figs) / scale,
              1e-9)
    cert, pts = tangency_certificate(fr, omega0, tol)
    t.at_most("certificate", cert, 1e-10)
    t.holds("contacts_are_chord_ends", len(pts) == 2 and
            min(dist(pts[0], figs[0].A), dist(pts[0], figs[0].B)) <= 1e-9 * scale)


def _corollary1(t: Trial, rng: Rng, i: int, tol: Tolerance):
    def draw(r: Rng):
        return _quad_from_points(_convex_quad(r, math.radians(r.uniform(20.0, 160.0))))

    pq = t.draw(draw, rng)
    m = affine_normalizer(pq, tol)
    img = parabolic_quadrilateral(transform_conic(m, pq.p1), transform_conic(m, pq.p2), tol)
    u1 = frame_from_conic(img.p1, tol).axis
    u2 = frame_from_conic(img.p2, tol).axis
    t.at_most("axes_cos", abs(u1.dot(u2)), 1e-8)
    t.at_most("diagonals_cos", perpendicular_diagonals_residual(img), 1e-8)
    t.at_most("concyclicity", concyclicity_residual(*img.vertices, tol=tol), 1e-8)
    ic = inscribed_circle(img, tol)
    t.at_most("certificate", max(ic.certificates), 1e-6)


def _draw_parabola_circle(r: Rng):
    fr = random_frame(r, (0.2, 1.0))
    lats = [r.uniform(-2.0, 2.0) for _ in range(3)]
    lats.append(-sum(lats))
    if abs(lats[3]) > 3.0 or _min_separation([Point(x, 0) for x in lats]) < 0.05:
        raise Reject
    pts = [fr.point(x) for x in lats]
    try:
        k = circle_through_three(pts[0], pts[1], pts[2])
    except DegenerateError:
        raise Reject from None
    return fr, k


def _bisectors(a: Point, b: Point, c: Point, d: Point):
    L = intersect_lines(Line.through(a, c), Line.through(b, d))
    ua, uc, ud = (a - L).unit(), (c - L).unit(), (d - L).unit()
    return (uc + ud), (ua + ud)


def _corollary2(t: Trial, rng: Rng, i: int, tol: Tolerance):
    fr, k = t.draw(_draw_parabola_circle, rng)
    meet = intersect_conics(conic_from_frame(fr), Conic.from_circle(k), tol)
    pts = meet.simple_points
    t.holds("four_simple_points", len(pts) == 4)
    if len(pts) != 4:
        return
    a, b, c, d = order_ccw(pts)
    t.at_most("slope_sum", abs(slope_in_axis_frame(fr, a, b, tol) + slope_in_axis_frame(fr, c, d, tol)), 1e-9)
    cld, ald = _bisectors(a, b, c, d)
    ang_cld, ang_ald = direction_angle(cld, fr.axis), direction_angle(ald, fr.axis)
    t.at_most("bisector_angle", min(ang_cld, ang_ald), 1e-8)
    t.note("CLD_bisector_axis_parallel" if ang_cld <= ang_ald else "ALD_bisector_axis_parallel")


def _corollary3(t: Trial, rng: Rng, i: int, tol: Tolerance):
    frames, pq = t.draw(lambda r: _axes_pair(r, math.pi / 2), rng)
    x = intersect_lines(frames[0].axis_line, frames[1].axis_line)
    g = centroid(pq.vertices)
    t.at_most("axes_vs_centroid", dist(x, g) / pq.scale, 1e-8)


def _corollary4(t: Trial, rng: Rng, i: int, tol: Tolerance):
    def draw(r: Rng):
        fr = random_frame(r, (0.2, 1.0))
        lats = sorted(r.uniform(-2.0, 2.0) for _ in range(4))
        if _min_separation([Point(x, 0) for x in lats]) < 0.05:
            raise Reject
        return fr, [fr.point(x) for x in lats]

    fr, (a, b, c, d) = t.draw(draw, rng)
    sols = axial_lines(a, b, c, d, tol)
    t.holds("has_axial_line", bool(sols))
    if sols:
        t.at_most("axial_angle", min(direction_angle(s.line.direction, fr.axis) for s in sols), 1e-8)


def _axes_perp_iff_concyclic(t: Trial, rng: Rng, i: int, tol: Tolerance):
    _, pq = t.draw(lambda r: _axes_pair(r, math.pi / 2), rng)
    t.at_most("concyclicity", concyclicity_residual(*pq.vertices, tol=tol), 1e-8)

    def skewed(r: Rng):
        return _axes_pair(r, r.sign() * math.radians(r.uniform(10.0, 80.0)))

    _, ctrl = t.draw(skewed, rng)
    t.at_least("control_concyclicity", concyclicity_residual(*ctrl.vertices, tol=tol), 1e-3)


def _disk_point(rng: Rng, k: Circle, frac: float = 1.0) -> Point:
    rho = frac * k.r * math.sqrt(rng.random())
    a = rng.angle()
    return k.center + Point(math.cos(a), math.sin(a)) * rho


def _draw_crossing_chords(r: Rng):
    # chord lines through the sides of a triangle inside the disk cross
    # pairwise inside the circle
    k = random_circle(r)
    tri = [_disk_point(r, k, 0.95) for _ in range(3)]
    chords = []
    for i in range(3):
        p, q = tri[i], tri[(i + 1) % 3]
        if dist(p, q) < GUARD * 100 * k.r:
            raise Reject
        d = q - p
        chords.append(chord_through(k, p, math.atan2(d.y, d.x)))
    if abs((tri[1] - tri[0]).cross(tri[2] - tri[0])) < GUARD * k.r * k.r:
        raise Reject  # nearly concurrent chords
    for c in chords:
        if abs(Line.through(*c).signed_distance(k.center)) < GUARD * k.r:
            raise Reject
    try:
        return k, chords, hexagon_diagonal_concurrency(k, chords)
    except ConstructionError as exc:
        if "hexagon does not exist" in str(exc):
            raise Reject from None
        raise


def _statement1(t: Trial, rng: Rng, i: int, tol: Tolerance):
    k, chords, res = t.draw(_draw_crossing_chords, rng)
    t.at_most("concurrency", res.residual, 1e-8)
    t.at_most("incenter", res.incenter_error, 1e-7)


def _az(t: Trial, rng: Rng, i: int, tol: Tolerance):
    n = 2 + i % 4

    def draw(r: Rng):
        k = random_circle(r)
        x = _disk_point(r, k, 0.9)
        if dist(x, k.center) < 0.05 * k.r:
            raise Reject  # chords through X would be nearly diameters
        try:
            return build_ngon(k, x, n, r.uniform(0.0, math.pi / n), tol)
        except ConstructionError:
            raise Reject from None

    ng = t.draw(draw, rng)
    t.at_most(f"circle_fit_N{n}", ng.residual, 1e-7)
    if n == 2:
        pq = parabolic_quadrilateral(*ng.parabolas, tol=tol)
        t.at_most("perp_cos_N2", perpendicular_diagonals_residual(pq), 1e-8)
        t.at_most("certificate_N2", max(inscribed_circle(pq, tol).certificates), 1e-6)


CHECKS: dict[str, TrialFn] = {
    "main_forward": _main_forward,
    "main_backward": _main_backward,
    "lemma1": _lemma1,
    "lemma2": _lemma2,
    "corollary1": _corollary1,
    "corollary2": _corollary2,
    "corollary3": _corollary3,
    "corollary4": _corollary4,
    "axes_perp_iff_concyclic": _axes_perp_iff_concyclic,
    "statement1": _statement1,
    "az": _az,
}


def _checker(name: str):
    def check(cfg: CheckConfig, workers: Optional[int] = None) -> CheckReport:
        if cfg.name != name:
            cfg = CheckConfig(name, cfg.trials, cfg.seed, cfg.tol)
        return run_check(cfg, workers)
    check.__name__ = f"check_{name}"
    check.__doc__ = f"Run the ``{name}`` check."
    return check


check_main_forward = _checker("main_forward")
check_main_backward = _checker("main_backward")
check_lemma1 = _checker("lemma1")
check_lemma2 = _checker("lemma2")
check_corollary1 = _checker("corollary1")
check_corollary2 = _checker("corollary2")
check_corollary3 = _checker("corollary3")
check_corollary4 = _checker("corollary4")
check_axes_perp_iff_concyclic = _checker("axes_perp_iff_concyclic")
check_statement1 = _checker("statement1")
check_az = _checker("az")


def default_suite(trials: int = 100, seed: int = 42, tol: Tolerance = DEFAULT_TOL) -> list[CheckConfig]:
    return [CheckConfig(name, trials, seed, tol) for name in CHECKS]


def run_all(configs: Sequence[CheckConfig], workers: Optional[int] = None) -> list[CheckReport]:
    """Reports in input order; unknown names fail before anything runs."""
    for cfg in configs:
        if cfg.name not in CHECKS:
            raise ValueError(f"unknown check {cfg.name!r}")
    return [run_check(cfg, workers) for cfg in configs]
