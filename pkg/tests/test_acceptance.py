"""Acceptance criteria, one test each.

Every test prints a single ``criterion N: PASS|FAIL ...`` line with the
measured values, visible in ``pytest -v`` output.
"""

import json
import math
import time
from pathlib import Path

import jsonschema
import pytest

from conftest import W1_VERTICES, matches
from oracles import grid_intersections, random_conic_pairs
from parapoly.cli import REPORT_SCHEMA, cli_main
from parapoly.conics import Conic, frame_from_conic, slope_in_axis_frame
from parapoly.constructions import (axial_lines, circle_tangent_at_chord, inscribed_circle,
                                    lemma2_points, parabolic_quadrilateral)
from parapoly.geometry import Point, centroid, dist, intersect_lines
from parapoly.harness import CheckConfig, run_check

GOLDEN = Path(__file__).parent / "golden" / "w1.svg"

PI1 = Conic((1, 0, 0, 0, 1, -1.25), inside_witness=Point(0, 0))
PI2 = Conic((0, 0, 1, 1, 0, -1.25), inside_witness=Point(0, 0))
PI3 = Conic((1, 0, 0, 0, -1, 0), inside_witness=Point(0, 1))
W2 = [Point(-2, 4), Point(-1, 1), Point(1, 1), Point(2, 4)]


@pytest.fixture
def verdict(capsys):
    def emit(n, ok, detail):
        with capsys.disabled():
            print(f"\ncriterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
        assert ok, detail
    return emit


def _check(name, trials=100, seed=42):
    return run_check(CheckConfig(name, trials=trials, seed=seed))


def _m(r, key):
    return r.metrics[key]


def test_criterion_01_main_forward(verdict):
    t0 = time.perf_counter()
    r = _check("main_forward", trials=200)
    elapsed = time.perf_counter() - t0
    worst = _m(r, "perp_cos")
    ok = r.passed and r.trials_run == 200 and worst <= 1e-8 and elapsed < 5.0
    verdict(1, ok, f"200 trials, max |cos| = {worst:.2e} (<= 1e-8), "
                   f"rejections={r.rejections}, {elapsed:.2f} s (< 5 s)")


def test_criterion_02_main_backward(verdict):
    r = _check("main_backward")
    cert = _m(r, "certificate")
    ic = inscribed_circle(parabolic_quadrilateral(PI1, PI2))
    c_err = dist(ic.circle.center, Point(0, 0))
    r_err = abs(ic.circle.r - 1.0)
    ok = r.passed and cert <= 1e-6 and c_err <= 1e-10 and r_err <= 1e-10
    verdict(2, ok, f"100 trials, max certificate = {cert:.2e} (<= 1e-6), "
                   f"controls min |cos| = {_m(r, 'control_perp_cos'):.2e}; "
                   f"W1 center err {c_err:.1e}, radius err {r_err:.1e} (<= 1e-10)")


def test_criterion_03_lemma1(verdict):
    r = _check("lemma1")
    on, off = _m(r, "on_curve"), _m(r, "off_curve")
    ok = r.passed and on <= 1e-10 and off >= 1e-4
    verdict(3, ok, f"100 x 200 points, on-curve max {on:.2e} (<= 1e-10 scale), "
                   f"off-curve min {off:.2e} (>= 1e-4 scale)")


def test_criterion_04_lemma2(verdict):
    r = _check("lemma2")
    spreads = (_m(r, "C_spread"), _m(r, "omega_spread"), _m(r, "certificate"))
    fr = frame_from_conic(PI3)
    fig = lemma2_points(fr, 1.0, Point(0, 0))
    om = circle_tangent_at_chord(fr, 1.0)
    w2_err = max(dist(fig.C, Point(0, 2)), dist(fig.omega.center, Point(0, 1.5)),
                 abs(fig.omega.r - math.sqrt(5) / 2), dist(om.center, Point(0, 1.5)),
                 abs(om.r - math.sqrt(5) / 2))
    ok = r.passed and max(spreads) <= 1e-9 and w2_err <= 1e-12
    verdict(4, ok, "100 x 20 positions, C spread {:.1e}, omega spread {:.1e}, certificate {:.1e} "
                   "(<= 1e-9 scale); W2 err {:.1e} (<= 1e-12)".format(*spreads, w2_err))


def test_criterion_05_corollary3(verdict):
    r = _check("corollary3")
    worst = _m(r, "axes_vs_centroid")
    axes = [frame_from_conic(q).axis_line for q in (PI1, PI2)]
    x = intersect_lines(*axes)
    g = centroid(W1_VERTICES.values())
    w1_err = max(x.norm(), g.norm())
    ok = r.passed and worst <= 1e-8 and w1_err <= 1e-12
    verdict(5, ok, f"100 trials, max |X - G| = {worst:.2e} (<= 1e-8 scale); "
                   f"W1 axes/centroid at origin, err {w1_err:.1e} (<= 1e-12)")


def test_criterion_06_corollary2(verdict):
    r = _check("corollary2")
    worst = _m(r, "slope_sum")
    fr = frame_from_conic(PI3)
    k1 = slope_in_axis_frame(fr, W2[0], W2[1])
    k2 = slope_in_axis_frame(fr, W2[2], W2[3])
    w2_err = max(abs(k1 + 3), abs(k2 - 3))
    ok = r.passed and worst <= 1e-9 and w2_err <= 1e-12
    verdict(6, ok, f"100 trials, max |k_AB + k_CD| = {worst:.2e} (<= 1e-9); "
                   f"W2 slopes {k1:+.12g}, {k2:+.12g}; bisector labels {dict(sorted(r.notes.items()))}")


def test_criterion_07_corollary4(verdict):
    r = _check("corollary4")
    worst = _m(r, "axial_angle")
    sols = axial_lines(*W2)
    x0 = [s for s in sols if abs(s.line.n.y) <= 1e-12 and abs(s.line.c) <= 1e-12]
    ok = r.passed and worst <= 1e-8 and len(x0) == 1
    verdict(7, ok, f"100 trials, max axial-line angle {worst:.2e} rad (<= 1e-8); "
                   f"W2 returns x = 0: {bool(x0)}")


def test_criterion_08_az(verdict):
    r = _check("az")
    fits = {n: _m(r, f"circle_fit_N{n}") for n in (2, 3, 4, 5)}
    perp, cert = _m(r, "perp_cos_N2"), _m(r, "certificate_N2")
    ok = r.passed and max(fits.values()) <= 1e-7 and perp <= 1e-8 and cert <= 1e-6
    verdict(8, ok, "25 per N, fit residual " + ", ".join(f"N={n}: {v:.1e}" for n, v in fits.items())
            + f" (<= 1e-7); N=2 |cos| {perp:.1e}, certificate {cert:.1e}")


def test_criterion_09_statement1(verdict):
    r = _check("statement1")
    conc, inc = _m(r, "concurrency"), _m(r, "incenter")
    ok = r.passed and conc <= 1e-8 and inc <= 1e-7
    verdict(9, ok, f"100 trials, concurrency {conc:.2e} (<= 1e-8), incenter {inc:.2e} (<= 1e-7)")


def test_criterion_10_intersection_oracle(verdict):
    worst, count_ok, total = 0.0, True, 0
    for q1, q2, got in random_conic_pairs(2024, 50, min_points=2):
        ours = [p for p, _ in got if max(abs(p.x), abs(p.y)) < 3.0]
        ref = [Point(x, y) for x, y in grid_intersections(q1.coeffs, q2.coeffs)]
        if len(ref) != len(ours) or not matches(ours, ref, 1e-6):
            count_ok = False
        for p in ours:
            worst = max(worst, min((dist(p, q) for q in ref), default=math.inf))
        total += len(ours)
    ok = count_ok and worst <= 1e-6
    verdict(10, ok, f"50 pairs, {total} points, counts agree: {count_ok}, "
                    f"max distance {worst:.1e} (<= 1e-6)")


def test_criterion_11_axes_iff_concyclic(verdict):
    r = _check("axes_perp_iff_concyclic")
    fwd, ctrl = _m(r, "concyclicity"), _m(r, "control_concyclicity")
    ok = r.passed and fwd <= 1e-8 and ctrl >= 1e-3
    verdict(11, ok, f"100 trials, forward max {fwd:.2e} (<= 1e-8), controls min {ctrl:.2e} (>= 1e-3)")


def test_criterion_12_cli_golden_and_json(tmp_path, verdict, capsys):
    svg = tmp_path / "w1.svg"
    rc_demo = cli_main(["demo", "w1", "--render", str(svg)])
    same = svg.read_bytes() == GOLDEN.read_bytes()
    out = tmp_path / "r.json"
    rc_check = cli_main(["check", "all", "--trials", "100", "--seed", "42", "--json", str(out)])
    capsys.readouterr()
    doc = json.loads(out.read_text())
    try:
        jsonschema.validate(doc, REPORT_SCHEMA)
        valid = True
    except jsonschema.ValidationError:
        valid = False
    ok = rc_demo == 0 and same and rc_check == 0 and valid and len(doc["suite"]) == 11
    verdict(12, ok, f"demo exit {rc_demo}, SVG byte-identical: {same}; "
                    f"check all exit {rc_check}, {len(doc['suite'])} reports, schema valid: {valid}")
