"""Command line: ``parapoly check|construct|demo``.

Exit status is 0 on success, 1 when a check fails or a construction breaks,
and 2 for usage, parse and I/O errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import math
import os
import sys
from importlib.resources import files
from typing import Optional, Sequence

from .harness import CHECKS, CheckConfig, CheckReport, Failure, run_all
from .numeric import DEFAULT_TOL, Tolerance
from .render import RenderSpec, render_svg, write_atomic
from .scene import Environment, SceneError, evaluate_scene, parse_scene

log = logging.getLogger(__name__)

TOL_ENV = "PQ_TOL"
DEMOS = ("w1", "w2")


_NUMBER_OR_NULL = {"type": ["number", "null"]}

# JSON Schema (draft 2020-12) of the ``--json`` report document
REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["suite"],
    "properties": {
        "suite": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "seed", "trials", "rejections", "max_residual", "failures"],
                "properties": {
                    "name": {"type": "string"},
                    "seed": {"type": "integer"},
                    "trials": {"type": "integer", "minimum": 1},
                    "rejections": {"type": "integer", "minimum": 0},
                    "max_residual": _NUMBER_OR_NULL,
                    "bound": {"type": "number"},
                    "failures": {
                        "type": "array",
                        "items": {
                            "type": "object",
                            "required": ["trial", "residual", "description"],
                            "properties": {
                                "trial": {"type": "integer", "minimum": 0},
                                "residual": _NUMBER_OR_NULL,
                                "description": {"type": "string"},
                            },
                        },
                    },
                    "metrics": {"type": "object", "additionalProperties": _NUMBER_OR_NULL},
                    "notes": {"type": "object", "additionalProperties": {"type": "integer"}},
                },
            },
        },
    },
}


class UsageError(Exception):
    pass


def _num_out(v: float):
    # JSON has no infinity; an errored trial has no finite residual
    return v if math.isfinite(v) else None


def _num_in(v) -> float:
    return math.inf if v is None else float(v)


def report_to_dict(r: CheckReport) -> dict:
    return {
        "name": r.name,
        "seed": r.seed,
        "trials": r.trials,
        "rejections": r.rejections,
        "max_residual": _num_out(r.max_residual),
        "bound": r.bound,
        "failures": [{"trial": f.trial, "residual": _num_out(f.residual),
                      "description": f.description} for f in r.failures],
        "metrics": {k: _num_out(v) for k, v in r.metrics.items()},
        "notes": dict(r.notes),
    }


def report_from_dict(d: dict) -> CheckReport:
    return CheckReport(
        name=d["name"], seed=d["seed"], trials=d["trials"], rejections=d["rejections"],
        failures=[Failure(f["trial"], _num_in(f["residual"]), f["description"])
                  for f in d["failures"]],
        max_residual=_num_in(d["max_residual"]), bound=d.get("bound", 1.0),
        metrics={k: _num_in(v) for k, v in d.get("metrics", {}).items()},
        notes=dict(d.get("notes", {})),
    )


def suite_document(reports: Sequence[CheckReport]) -> dict:
    return {"suite": [report_to_dict(r) for r in reports]}


def resolve_tolerance(flag: Optional[float], environ=os.environ) -> Tolerance:
    """``--tol`` beats ``PQ_TOL`` beats the default."""
    eps = flag
    if eps is None and environ.get(TOL_ENV):
        try:
            eps = float(environ[TOL_ENV])
        except ValueError:
            raise UsageError(f"{TOL_ENV} is not a number: {environ[TOL_ENV]!r}") from None
    if eps is None:
        return DEFAULT_TOL
    if not (math.isfinite(eps) and eps > 0.0):
        raise UsageError("tolerance must be a positive number")
    try:
        return Tolerance(eps_construct=eps, eps_iterative=max(DEFAULT_TOL.eps_iterative, eps))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="parapoly", description="Parabolic quadrilateral constructions and checks.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("check", help="run randomized theorem checks")
    c.add_argument("name", help="check name or 'all' (%s)" % ", ".join(CHECKS))
    c.add_argument("--trials", type=int, default=100)
    c.add_argument("--seed", type=int, default=42)
    c.add_argument("--tol", type=float, default=None, help="construction tolerance")
    c.add_argument("--json", metavar="PATH", help="write the report document here")
    c.add_argument("--workers", type=int, default=None, help="threads per check")

    s = sub.add_parser("construct", help="evaluate a .pqs scene")
    s.add_argument("--scene", required=True, metavar="FILE")
    s.add_argument("--render", metavar="FILE.svg")
    s.add_argument("--tol", type=float, default=None)

    d = sub.add_parser("demo", help="evaluate a bundled scene")
    d.add_argument("name", choices=DEMOS)
    d.add_argument("--render", metavar="FILE.svg")
    d.add_argument("--tol", type=float, default=None)
    return p


def demo_source(name: str) -> str:
    return files("parapoly").joinpath(f"scenes/{name}.pqs").read_text(encoding="utf-8")


def _describe(env: Environment) -> list[str]:
    out = []
    for name, value in env.items():
        out.append(f"{env.kinds[name]} {name} = {value!r}")
    return out


def _cmd_check(args) -> int:
    names = list(CHECKS) if args.name == "all" else [args.name]
    if args.name != "all" and args.name not in CHECKS:
        raise UsageError(f"unknown check {args.name!r}; choose from all, {', '.join(CHECKS)}")
    if args.trials < 1:
        raise UsageError("--trials must be at least 1")
    tol = resolve_tolerance(args.tol)
    reports = run_all([CheckConfig(n, args.trials, args.seed, tol) for n in names],
                      workers=args.workers)
    for r in reports:
        print(r.summary())
        for f in r.failures[:5]:
            print(f"    trial {f.trial}: {f.description}")
    if args.json:
        try:
            write_atomic(args.json, json.dumps(suite_document(reports), indent=2) + "\n")
        except OSError as exc:
            raise UsageError(f"cannot write {args.json}: {exc}") from None
    return 0 if all(r.passed for r in reports) else 1


def _run_scene(text: str, source: str, tol: Tolerance, extra: list[str],
               base: Optional[str] = None) -> int:
    """Evaluate and render; ``render`` paths inside a scene resolve against ``base``."""
    try:
        env = evaluate_scene(parse_scene(text), tol)
    except SceneError as exc:
        print(f"{source}:{exc}", file=sys.stderr)
        # a failed construction is a result, a malformed scene is a usage error
        return 1 if exc.__cause__ is not None else 2
    for line in _describe(env):
        print(line)
    targets = list(extra)
    if base is not None:
        targets += [os.path.join(base, r) for r in env.renders]
    for path in targets:
        try:
            render_svg(env, RenderSpec(path))
        except OSError as exc:
            raise UsageError(f"cannot write {path}: {exc}") from None
        print(f"wrote {path}")
    return 0


def _cmd_construct(args) -> int:
    try:
        with open(args.scene, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {args.scene}: {exc}") from None
    return _run_scene(text, args.scene, resolve_tolerance(args.tol),
                      [args.render] if args.render else [],
                      base=os.path.dirname(os.path.abspath(args.scene)))


def _cmd_demo(args) -> int:
    tol = resolve_tolerance(args.tol)
    return _run_scene(demo_source(args.name), f"<demo {args.name}>", tol,
                      [args.render] if args.render else [])


def cli_main(argv: Optional[Sequence[str]] = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    try:
        args = build_parser().parse_args(argv)
        if args.command == "check":
            return _cmd_check(args)
        if args.command == "construct":
            return _cmd_construct(args)
        return _cmd_demo(args)
    except UsageError as exc:
        print(f"parapoly: error: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
