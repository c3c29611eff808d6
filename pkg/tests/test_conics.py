import math

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from conftest import matches
from oracles import grid_intersections, random_conic_pairs
from parapoly.conics import (Conic, ConicKind, DegenerateError, ParabolaFrame, classify,
                             conic_from_frame, contact_quartic, frame_from_conic,
                             intersect_conics, slope_in_axis_frame, split_degenerate,
                             tangency_certificate, tangent_line_at, transform_conic)
from parapoly.geometry import AffineMap, Circle, Line, Point, direction_angle

S3 = math.sqrt(3)


def test_normalization_and_witness(pi1):
    q = Conic((2, 0, 0, 0, 2, -2.5))
    assert q.coeffs == (1, 0, 0, 0, 1, -1.25)
    flipped = Conic((2, 0, 0, 0, 2, -2.5), inside_witness=Point(0, 5))
    assert flipped(Point(0, 5)) < 0
    assert pi1(Point(0, 0)) < 0


@pytest.mark.parametrize("coeffs, kind", [
    ((1, 0, 0, 0, 1, -1.25), ConicKind.PARABOLA),
    ((1, 0, 1, 0, 0, -1), ConicKind.ELLIPSE),
    ((1, 0, -1, 0, 0, -1), ConicKind.HYPERBOLA),
    ((0, 0, 1, 0, -5, 4), ConicKind.PARALLEL_LINES),
    ((1, 0, -1, 0, 0, 0), ConicKind.INTERSECTING_LINES),
    ((1, 0, 0, 0, 0, 0), ConicKind.DOUBLE_LINE),
    ((1, 0, 1, 0, 0, 0), ConicKind.POINT),
    ((1, 0, 1, 0, 0, 1), ConicKind.EMPTY),
])
def test_classify(coeffs, kind):
    assert classify(Conic(coeffs)) is kind
    assert kind.degenerate == (kind not in (ConicKind.PARABOLA, ConicKind.ELLIPSE,
                                            ConicKind.HYPERBOLA))


def test_frames(pi1, pi2, pi3):
    fr = frame_from_conic(pi3)
    assert (fr.vertex.x, fr.vertex.y, fr.axis.x, fr.axis.y, fr.focal) == \
        pytest.approx((0, 0, 0, 1, 0.25), abs=1e-15)
    fr = frame_from_conic(pi1)
    assert (fr.vertex.x, fr.vertex.y, fr.axis.x, fr.axis.y, fr.focal) == \
        pytest.approx((0, 1.25, 0, -1, 0.25), abs=1e-15)
    assert conic_from_frame(frame_from_conic(pi2)).same_as(pi2, 1e-12)
    with pytest.raises(DegenerateError, match="not a parabola"):
        frame_from_conic(Conic((1, 0, 1, 0, 0, -1)))


def test_frame_is_right_handed_y_equals_kx2(pi3):
    fr = frame_from_conic(pi3)
    for x in (-2.0, 0.5, 3.0):
        axial, lateral = fr.coords(Point(x, x * x))
        assert axial == pytest.approx(fr.k * lateral ** 2)
    assert fr.lateral_dir.cross(fr.axis) == pytest.approx(1.0)


frames = st.builds(
    lambda x, y, t, f: ParabolaFrame(Point(x, y), Point(math.cos(t), math.sin(t)), f),
    st.floats(-5, 5), st.floats(-5, 5), st.floats(0, 2 * math.pi), st.floats(0.05, 5),
)


@given(frames)
def test_frame_round_trip(fr):
    back = frame_from_conic(conic_from_frame(fr))
    scale = 1 + fr.vertex.norm()
    assert math.dist((back.vertex.x, back.vertex.y), (fr.vertex.x, fr.vertex.y)) <= 1e-12 * scale / min(1, fr.focal)
    assert math.dist((back.axis.x, back.axis.y), (fr.axis.x, fr.axis.y)) <= 1e-12
    assert back.focal == pytest.approx(fr.focal, rel=1e-12)


def test_frame_round_trip_seeded():
    rng = np.random.default_rng(11)
    worst = 0.0
    for _ in range(1000):
        t = rng.uniform(0, 2 * math.pi)
        fr = ParabolaFrame(Point(*rng.uniform(-3, 3, 2)), Point(math.cos(t), math.sin(t)),
                           rng.uniform(0.1, 3))
        back = frame_from_conic(conic_from_frame(fr))
        rel = max(math.dist((back.vertex.x, back.vertex.y), (fr.vertex.x, fr.vertex.y)) /
                  (fr.focal + fr.vertex.norm()),
                  math.dist((back.axis.x, back.axis.y), (fr.axis.x, fr.axis.y)),
                  abs(back.focal - fr.focal) / fr.focal)
        worst = max(worst, rel)
    assert worst <= 1e-12


def test_tangent_lines(pi1, pi3):
    t = tangent_line_at(pi3, Point(1, 1))
    assert -t.n.x / t.n.y == pytest.approx(2.0)
    unit = Conic.from_circle(Circle(Point(0, 0), 1))
    t = tangent_line_at(unit, Point(1, 0))
    assert abs(t.n.x) == pytest.approx(1) and abs(t.c) == pytest.approx(1)
    p = Point(S3 / 2, 0.5)
    a, b = tangent_line_at(pi1, p), tangent_line_at(unit, p)
    assert direction_angle(a.direction, b.direction) <= 1e-12
    assert abs(a.signed_distance(p)) <= 1e-15
    with pytest.raises(DegenerateError, match="not on the conic"):
        tangent_line_at(pi3, Point(0, 1))
    with pytest.raises(DegenerateError, match="singular point"):
        tangent_line_at(Conic((1, 0, -1, 0, 0, 0)), Point(0, 0))


def test_transform_examples(pi1, pi3):
    assert transform_conic(AffineMap.identity(), pi1).same_as(pi1, 1e-15)
    big = transform_conic(AffineMap([[2, 0], [0, 2]], [0, 0]), Conic((1, 0, 1, 0, 0, -1)))
    assert big.same_as(Conic((0.25, 0, 0.25, 0, 0, -1)), 1e-15)
    shear = AffineMap([[1, 1], [0, 1]], [0, 0])
    img = frame_from_conic(transform_conic(shear, pi3))
    assert direction_angle(img.axis, shear.direction(Point(0, 1))) <= 1e-10


def test_transform_carries_witness(pi1):
    m = AffineMap([[1, 0.5], [0.2, 2]], [1, -1])
    img = transform_conic(m, pi1)
    assert img.inside_witness == m(pi1.inside_witness)
    assert img(img.inside_witness) < 0


def test_intersections_w1(pi1, pi2, w1_vertices, k0):
    got = intersect_conics(pi1, pi2)
    assert got.total_multiplicity == 4 and all(m == 1 for _, m in got)
    assert matches([p for p, _ in got], w1_vertices, 1e-12)

    touch = intersect_conics(pi1, Conic.from_circle(k0))
    assert [m for _, m in touch] == [2, 2]
    assert matches([p for p, _ in touch], [Point(-S3 / 2, 0.5), Point(S3 / 2, 0.5)], 1e-9)


def test_two_point_intersection():
    got = intersect_conics(Conic((1, 0, 0, 0, 1, -1.25)), Conic((1, 0, 0, 0, -1, -1.25)))
    r = math.sqrt(5) / 2
    assert matches([p for p, _ in got], [Point(-r, 0), Point(r, 0)], 1e-12)


def test_intersection_errors(pi1):
    with pytest.raises(DegenerateError, match="coincident"):
        intersect_conics(pi1, Conic(tuple(2 * c for c in pi1.coeffs)))
    # y(y - 1) and y(x - 1) share the line y = 0
    with pytest.raises(DegenerateError, match="shared component"):
        intersect_conics(Conic((0, 0, 1, 0, -1, 0)), Conic((0, 1, 0, 0, -1, 0)))


def test_line_pair_intersections():
    got = intersect_conics(Conic((1, 0, 0, 0, 0, -1)), Conic((0, 0, 1, 0, 0, -4)))
    assert matches([p for p, _ in got], [Point(sx, sy) for sx in (-1, 1) for sy in (-2, 2)])


def test_split_degenerate():
    lines, point = split_degenerate(Conic((1, 0, -1, 0, 0, 0)).matrix)
    assert point is None and len(lines) == 2
    lines, _ = split_degenerate(Conic((1, 0, 0, -2, 0, 1)).matrix)  # (x - 1)^2
    assert len(lines) == 1 and lines[0][1] == 2


def test_slopes(pi3, pi1, w1_vertices):
    fr = frame_from_conic(pi3)
    assert slope_in_axis_frame(fr, Point(-2, 4), Point(-1, 1)) == pytest.approx(-3, abs=1e-12)
    assert slope_in_axis_frame(fr, Point(-1.5, 2.25), Point(1.5, 2.25)) == pytest.approx(0, abs=1e-12)
    fr1 = frame_from_conic(pi1)
    va, vb, vc, vd = w1_vertices
    assert abs(slope_in_axis_frame(fr1, va, vb) + slope_in_axis_frame(fr1, vc, vd)) <= 1e-10


@given(st.lists(st.floats(-3, 3), min_size=3, max_size=3), frames)
def test_concyclic_points_have_opposite_chord_slopes(lats, fr):
    lats = lats + [-sum(lats)]
    assume(min(abs(a - b) for i, a in enumerate(lats) for b in lats[i + 1:]) > 0.05)
    a, b, c, d = (fr.point(t * fr.focal) for t in lats)
    total = slope_in_axis_frame(fr, a, b) + slope_in_axis_frame(fr, c, d)
    assert abs(total) <= 1e-9 * (1 + max(abs(t) for t in lats) * fr.k * fr.focal)


def test_contact_certificates(pi1, pi3, k0):
    res, pts = tangency_certificate(frame_from_conic(pi1), k0)
    assert res == 0.0
    assert matches(pts, [Point(-S3 / 2, 0.5), Point(S3 / 2, 0.5)], 1e-12)
    om = Circle(Point(0, 1.5), math.sqrt(5) / 2)
    res, pts = tangency_certificate(frame_from_conic(pi3), om)
    assert res <= 1e-15
    assert matches(pts, [Point(-1, 1), Point(1, 1)], 1e-12)
    q = contact_quartic(frame_from_conic(pi3), Circle(Point(0, 1.5), 1.0))
    assert len(q) == 5


def test_oracle_agreement_small():
    for q1, q2, got in random_conic_pairs(7, 8):
        inside = [p for p, _ in got if max(abs(p.x), abs(p.y)) < 3]
        ref = grid_intersections(q1.coeffs, q2.coeffs, n=512)
        assert len(ref) == len(inside)
        assert matches(inside, [Point(x, y) for x, y in ref], 1e-6)


def test_affine_covariance_seeded():
    rng = np.random.default_rng(3)
    for q1, q2, got in random_conic_pairs(5, 30):
        M = rng.uniform(-2, 2, (2, 2))
        if abs(np.linalg.det(M)) < 0.2:
            continue
        m = AffineMap(M, rng.uniform(-1, 1, 2))
        img = intersect_conics(transform_conic(m, q1), transform_conic(m, q2))
        assert [mm for _, mm in img] == [1] * len(got)
        scale = 1 + max(p.norm() for p, _ in img) if len(img) else 1
        assert matches([p for p, _ in img], [m(p) for p, _ in got], 1e-8 * scale)


@given(st.lists(st.floats(-2, 2, allow_subnormal=False), min_size=12, max_size=12))
def test_bezout_bound(v):
    try:
        got = intersect_conics(Conic(v[:6]), Conic(v[6:]))
    except (DegenerateError, ValueError):
        return
    assert got.total_multiplicity <= 4
    for p, _ in got:
        assert p == p  # finite by construction of Point


@given(frames, st.floats(0.1, 3.0))
def test_returned_points_are_on_both(fr, r):
    q1 = conic_from_frame(fr)
    q2 = Conic.from_circle(Circle(fr.focus, r))
    for p, _ in intersect_conics(q1, q2):
        assert q1.on_curve(p, 1e-9) and q2.on_curve(p, 1e-9)


def test_line_through_lines():
    assert isinstance(Line.from_coeffs(1, 0, 0), Line)


def test_line_like_conics_through_origin():
    # no quadratic part and no constant term: the monomial scale vanishes at (0, 0)
    got = intersect_conics(Conic((0, 0, 0, 1, 1, 0)), Conic((0, 1, 0, 0, 1, 0)))
    assert matches([p for p, _ in got], [Point(0, 0), Point(-1, 1)])
    got = intersect_conics(Conic((0, 0, 0, 1, 0, 0)), Conic((0, 0, 1, 0, 1, 0)))
    assert matches([p for p, _ in got], [Point(0, 0), Point(0, -1)])
