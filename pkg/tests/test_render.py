import os
import re
import xml.etree.ElementTree as ET
from pathlib import Path

import pytest

from parapoly.cli import demo_source
from parapoly.render import RenderSpec, fmt, render_svg, svg_document
from parapoly.scene import Environment, evaluate_scene, parse_scene

GOLDEN = Path(__file__).parent / "golden" / "w1.svg"
SVG = "{http://www.w3.org/2000/svg}"


def w1_env():
    return evaluate_scene(parse_scene(demo_source("w1")))


def test_golden_w1(tmp_path):
    out = tmp_path / "w1.svg"
    text = render_svg(w1_env(), RenderSpec(str(out)))
    assert out.read_bytes() == GOLDEN.read_bytes()
    assert text == GOLDEN.read_text(encoding="utf-8")


def test_rerun_identical(tmp_path):
    a = svg_document(w1_env(), RenderSpec("a.svg"))
    b = svg_document(w1_env(), RenderSpec("b.svg"))
    assert a == b


def test_well_formed_and_styled():
    root = ET.fromstring(svg_document(w1_env(), RenderSpec("x.svg")))
    assert root.tag == SVG + "svg" and root.get("width") == "1024"
    group = root.find(SVG + "g")
    strokes = {el.get("stroke") for el in group if el.get("stroke")}
    assert strokes <= {"#000000", "#808080"}
    dots = group.findall(SVG + "circle")
    assert dots and all(d.get("r") == "2" for d in dots)
    for el in group.iter():
        for key in ("points", "x1", "y1", "cx", "cy"):
            for num in re.findall(r"-?[\d.e+-]+", el.get(key, "")):
                assert len(num.lstrip("-").replace(".", "").split("e")[0].lstrip("0")) <= 9


def test_empty_environment(tmp_path):
    out = tmp_path / "empty.svg"
    text = render_svg(Environment(), RenderSpec(str(out)))
    root = ET.fromstring(text)
    assert len(root.find(SVG + "g")) == 0
    assert out.exists()


def test_spec_validation():
    with pytest.raises(ValueError, match="margin too large"):
        RenderSpec("x.svg", width=100, height=100, margin=0.5)
    with pytest.raises(ValueError):
        RenderSpec("x.svg", density=10)
    with pytest.raises(ValueError):
        RenderSpec("x.svg", width=0)


def test_unwritable_path(tmp_path):
    with pytest.raises(OSError):
        render_svg(w1_env(), RenderSpec(str(tmp_path / "missing" / "x.svg")))
    assert not any(p.name.startswith(".tmp-") for p in tmp_path.iterdir())


def test_atomic_replace(tmp_path):
    out = tmp_path / "w1.svg"
    out.write_text("old")
    render_svg(w1_env(), RenderSpec(str(out)))
    assert out.read_bytes() == GOLDEN.read_bytes()
    assert sorted(os.listdir(tmp_path)) == ["w1.svg"]


def test_fmt():
    assert fmt(-0.0) == "0"
    assert fmt(1 / 3) == "0.333333333"
    assert fmt(123456789012.0) == "1.23456789e+11"


def test_ngon_renders():
    env = evaluate_scene(parse_scene(
        "circle k = center (0, 0) radius 1\nngon g = k around (0.3, 0) n 3 phase 0.4\n"))
    root = ET.fromstring(svg_document(env, RenderSpec("x.svg")))
    g = root.find(SVG + "g")
    assert len(g.findall(SVG + "polyline")) == 3
    assert len(g.findall(SVG + "circle")) == 6
