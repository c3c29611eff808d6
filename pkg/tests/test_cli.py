import json
import math
import subprocess
import sys
from pathlib import Path

import pytest

from parapoly.cli import cli_main, report_from_dict, report_to_dict, resolve_tolerance
from parapoly.harness import CheckConfig, CheckReport, Failure, run_check
from parapoly.numeric import DEFAULT_TOL

GOLDEN = Path(__file__).parent / "golden" / "w1.svg"


def test_check_single(capsys):
    assert cli_main(["check", "corollary3", "--trials", "5", "--seed", "1"]) == 0
    assert capsys.readouterr().out.startswith("PASS corollary3")


def test_check_unknown_name(capsys):
    assert cli_main(["check", "nosuch"]) == 2
    assert "unknown check" in capsys.readouterr().err


def test_usage_errors(capsys):
    assert cli_main([]) == 2
    assert cli_main(["frobnicate"]) == 2
    assert cli_main(["check", "lemma1", "--bogus"]) == 2
    assert cli_main(["check", "lemma1", "--trials", "0"]) == 2
    assert cli_main(["demo", "w9"]) == 2
    assert "usage" in capsys.readouterr().err


def test_check_failure_exit_code(capsys):
    # an absurd construction tolerance breaks the constructions themselves
    assert cli_main(["check", "main_backward", "--trials", "3", "--tol", "0.5"]) == 1


def test_demo_render(tmp_path, capsys):
    out = tmp_path / "w1.svg"
    assert cli_main(["demo", "w1", "--render", str(out)]) == 0
    assert out.read_bytes() == GOLDEN.read_bytes()
    text = capsys.readouterr().out
    assert "incircle w = " in text and f"wrote {out}" in text


def test_demo_w2(capsys):
    assert cli_main(["demo", "w2"]) == 0


def test_construct_scene(tmp_path, capsys):
    scene = tmp_path / "s.pqs"
    scene.write_text('circle k = center (0,0) radius 1\nngon g = k around (0.3, 0) n 2 phase 0.7\n'
                     'render "pic.svg"\n')
    assert cli_main(["construct", "--scene", str(scene)]) == 0
    assert (tmp_path / "pic.svg").exists()


def test_construct_errors(tmp_path, capsys):
    bad = tmp_path / "bad.pqs"
    bad.write_text("circle k = center (0,0) radius\n")
    assert cli_main(["construct", "--scene", str(bad)]) == 2
    assert f"{bad}:2:1:" in capsys.readouterr().err
    broken = tmp_path / "broken.pqs"
    broken.write_text("circle k = center (0,0) radius 1\nchord c = k at 0 3.141592653589793\n"
                      "parabola p = tangent k at c\n")
    assert cli_main(["construct", "--scene", str(broken)]) == 1
    assert f"{broken}:3:1:" in capsys.readouterr().err
    assert cli_main(["construct", "--scene", str(tmp_path / "none.pqs")]) == 2


def test_tolerance_precedence():
    assert resolve_tolerance(None, {}) == DEFAULT_TOL
    assert resolve_tolerance(None, {"PQ_TOL": "1e-10"}).eps_construct == 1e-10
    assert resolve_tolerance(1e-11, {"PQ_TOL": "1e-10"}).eps_construct == 1e-11
    with pytest.raises(Exception, match="not a number"):
        resolve_tolerance(None, {"PQ_TOL": "abc"})
    with pytest.raises(Exception, match="positive"):
        resolve_tolerance(-1.0, {})


def test_env_tolerance_applies(monkeypatch, capsys):
    monkeypatch.setenv("PQ_TOL", "bogus")
    assert cli_main(["demo", "w1"]) == 2
    monkeypatch.setenv("PQ_TOL", "1e-11")
    assert cli_main(["demo", "w1"]) == 0


def test_json_round_trip(tmp_path):
    out = tmp_path / "r.json"
    assert cli_main(["check", "all", "--trials", "3", "--seed", "9", "--json", str(out)]) == 0
    doc = json.loads(out.read_text())
    fresh = [run_check(CheckConfig(d["name"], 3, 9)) for d in doc["suite"]]
    for d, r in zip(doc["suite"], fresh):
        assert report_from_dict(d) == r


def test_json_infinite_residual():
    r = CheckReport("x", 1, 2, failures=[Failure(1, math.inf, "error: boom")], max_residual=math.inf)
    d = report_to_dict(r)
    assert d["max_residual"] is None
    back = report_from_dict(json.loads(json.dumps(d)))
    assert back == r


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "parapoly", "check", "nosuch"],
                          capture_output=True, text=True)
    assert proc.returncode == 2
