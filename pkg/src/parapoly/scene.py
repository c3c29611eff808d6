"""A small scripting language for parabola constructions (``.pqs`` files).

One statement per construction step::

    circle k = center (0, 0) radius 1
    chord c1 = k at 2.6179938779914944 0.5235987755982988
    parabola p1 = tangent k at c1
    quad q = p1 meet p2
    incircle w = q
    render "out.svg"

Every identifier is bound exactly once and must be defined before use.
``#`` starts a comment that runs to the end of the line.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterator, Optional, Union

from .constructions import (ParabolasThroughFour, build_ngon, inscribed_circle,
                            parabola_from_tangent_chord, parabolas_through_four_points,
                            parabolic_quadrilateral)
from .geometry import Circle, DegenerateError, Point
from .numeric import DEFAULT_TOL, Tolerance


@dataclass(frozen=True)
class Loc:
    line: int
    col: int

    def __str__(self):
        return f"{self.line}:{self.col}"


class SceneError(Exception):
    def __init__(self, message: str, loc: Optional[Loc] = None):
        self.message = message
        self.loc = loc
        super().__init__(f"{loc}: {message}" if loc else message)


# ---------------------------------------------------------------------------
# tokens

KEYWORDS = {"point", "circle", "chord", "parabola", "quad", "incircle", "ngon", "render",
            "center", "radius", "at", "tangent", "through", "pick", "meet", "around",
            "n", "phase"}

_TOKEN_RE = re.compile(r"""
    (?P<ws>[ \t\r]+)
  | (?P<nl>\n)
  | (?P<comment>\#[^\n]*)
  | (?P<string>"[^"\n]*")
  | (?P<num>[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<id>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<punct>[(),=])
""", re.VERBOSE)


@dataclass(frozen=True)
class Token:
    kind: str  # "string", "num", "id", "kw", "punct", "eof"
    text: str
    loc: Loc


def tokenize(text: str) -> list[Token]:
    out: list[Token] = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        loc = Loc(line, pos - line_start + 1)
        if m is None:
            raise SceneError(f"unexpected character {text[pos]!r}", loc)
        kind = m.lastgroup
        if kind == "nl":
            line, line_start = line + 1, m.end()
        elif kind == "id":
            out.append(Token("kw" if m.group() in KEYWORDS else "id", m.group(), loc))
        elif kind in ("string", "num", "punct"):
            out.append(Token(kind, m.group(), loc))
        pos = m.end()
    out.append(Token("eof", "", Loc(line, pos - line_start + 1)))
    return out


# ---------------------------------------------------------------------------
# AST

_NOLOC = Loc(0, 0)


@dataclass(frozen=True)
class PointStmt:
    name: str
    x: float
    y: float
    loc: Loc = field(default=_NOLOC, compare=False)
    kind = "point"


@dataclass(frozen=True)
class CircleStmt:
    name: str
    cx: float
    cy: float
    r: float
    loc: Loc = field(default=_NOLOC, compare=False)
    kind = "circle"


@dataclass(frozen=True)
class ChordStmt:
    name: str
    circle: str
    angle1: float
    angle2: float
    loc: Loc = field(default=_NOLOC, compare=False)
    kind = "chord"


@dataclass(frozen=True)
class TangentParabolaStmt:
    name: str
    circle: str
    chord: str
    loc: Loc = field(default=_NOLOC, compare=False)
    kind = "parabola"


@dataclass(frozen=True)
class ThroughParabolaStmt:
    name: str
    points: tuple[str, str, str, str]
    pick: int
    loc: Loc = field(default=_NOLOC, compare=False)
    kind = "parabola"


@dataclass(frozen=True)
class QuadStmt:
    name: str
    p1: str
    p2: str
    loc: Loc = field(default=_NOLOC, compare=False)
    kind = "quad"


@dataclass(frozen=True)
class IncircleStmt:
    name: str
    quad: str
    loc: Loc = field(default=_NOLOC, compare=False)
    kind = "incircle"


@dataclass(frozen=True)
class NgonStmt:
    name: str
    circle: str
    x: float
    y: float
    n: int
    phase: float
    loc: Loc = field(default=_NOLOC, compare=False)
    kind = "ngon"


@dataclass(frozen=True)
class RenderStmt:
    path: str
    loc: Loc = field(default=_NOLOC, compare=False)
    kind = "render"


Statement = Union[PointStmt, CircleStmt, ChordStmt, TangentParabolaStmt, ThroughParabolaStmt,
                  QuadStmt, IncircleStmt, NgonStmt, RenderStmt]


@dataclass(frozen=True)
class SceneProgram:
    statements: tuple[Statement, ...]

    def __len__(self):
        return len(self.statements)

    def __iter__(self) -> Iterator[Statement]:
        return iter(self.statements)


# ---------------------------------------------------------------------------
# parser


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.toks = tokens
        self.i = 0
        self.types: dict[str, str] = {}

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def _advance(self) -> Token:
        t = self.tok
        self.i += 1
        return t

    def _fail(self, what: str, tok: Optional[Token] = None):
        tok = tok or self.tok
        found = "end of input" if tok.kind == "eof" else repr(tok.text)
        raise SceneError(f"expected {what}, found {found}", tok.loc)

    def expect(self, text: str) -> Token:
        if self.tok.text != text or self.tok.kind not in ("kw", "punct"):
            self._fail(repr(text))
        return self._advance()

    def number(self) -> float:
        if self.tok.kind != "num":
            self._fail("a number")
        return float(self._advance().text)

    def integer(self) -> int:
        tok = self.tok
        if tok.kind != "num" or not re.fullmatch(r"[+-]?\d+", tok.text):
            self._fail("an integer")
        self._advance()
        return int(tok.text)

    def pair(self) -> tuple[float, float]:
        self.expect("(")
        x = self.number()
        self.expect(",")
        y = self.number()
        self.expect(")")
        return x, y

    def ref(self, kind: str) -> str:
        tok = self.tok
        if tok.kind != "id":
            self._fail(f"a {kind} identifier")
        have = self.types.get(tok.text)
        if have is None:
            raise SceneError(f"unknown identifier {tok.text!r}", tok.loc)
        if have != kind:
            raise SceneError(f"{tok.text!r} is a {have}, expected a {kind}", tok.loc)
        self._advance()
        return tok.text

    def statement(self) -> Statement:
        head = self.tok
        if head.kind != "kw":
            self._fail("a statement")
        self._advance()
        loc = head.loc
        kw = head.text
        if kw == "render":
            if self.tok.kind != "string":
                self._fail("a quoted path")
            return RenderStmt(self._advance().text[1:-1], loc)
        if kw not in ("point", "circle", "chord", "parabola", "quad", "incircle", "ngon"):
            self._fail("a statement", head)

        # the name is bound only after the right-hand side parses, so
        # self-references are reported as unknown
        name_tok = self.tok
        if name_tok.kind != "id":
            self._fail("an identifier")
        if name_tok.text in self.types:
            raise SceneError(f"duplicate identifier {name_tok.text!r}", name_tok.loc)
        self._advance()
        name = name_tok.text
        self.expect("=")

        if kw == "point":
            stmt = PointStmt(name, *self.pair(), loc=loc)
        elif kw == "circle":
            self.expect("center")
            cx, cy = self.pair()
            self.expect("radius")
            stmt = CircleStmt(name, cx, cy, self.number(), loc)
        elif kw == "chord":
            k = self.ref("circle")
            self.expect("at")
            a1 = self.number()
            stmt = ChordStmt(name, k, a1, self.number(), loc)
        elif kw == "parabola":
            if self.tok.text == "tangent":
                self._advance()
                k = self.ref("circle")
                self.expect("at")
                stmt = TangentParabolaStmt(name, k, self.ref("chord"), loc)
            elif self.tok.text == "through":
                self._advance()
                pts = tuple(self.ref("point") for _ in range(4))
                self.expect("pick")
                pick_tok = self.tok
                pick = self.integer()
                if pick not in (0, 1):
                    raise SceneError("pick must be 0 or 1", pick_tok.loc)
                stmt = ThroughParabolaStmt(name, pts, pick, loc)
            else:
                self._fail("'tangent' or 'through'")
        elif kw == "quad":
            p1 = self.ref("parabola")
            self.expect("meet")
            stmt = QuadStmt(name, p1, self.ref("parabola"), loc)
        elif kw == "incircle":
            stmt = IncircleStmt(name, self.ref("quad"), loc)
        else:
            k = self.ref("circle")
            self.expect("around")
            x, y = self.pair()
            self.expect("n")
            n_tok = self.tok
            n = self.integer()
            if n < 2:
                raise SceneError("n must be at least 2", n_tok.loc)
            self.expect("phase")
            stmt = NgonStmt(name, k, x, y, n, self.number(), loc)
        self.types[name] = kw
        return stmt

    def program(self) -> SceneProgram:
        stmts = []
        while self.tok.kind != "eof":
            stmts.append(self.statement())
        return SceneProgram(tuple(stmts))


def parse_scene(text: str) -> SceneProgram:
    """Parse scene source; errors carry a line/column location."""
    return _Parser(tokenize(text)).program()


def _num(v: float) -> str:
    return repr(float(v))


def format_statement(s: Statement) -> str:
    if isinstance(s, PointStmt):
        return f"point {s.name} = ({_num(s.x)}, {_num(s.y)})"
    if isinstance(s, CircleStmt):
        return f"circle {s.name} = center ({_num(s.cx)}, {_num(s.cy)}) radius {_num(s.r)}"
    if isinstance(s, ChordStmt):
        return f"chord {s.name} = {s.circle} at {_num(s.angle1)} {_num(s.angle2)}"
    if isinstance(s, TangentParabolaStmt):
        return f"parabola {s.name} = tangent {s.circle} at {s.chord}"
    if isinstance(s, ThroughParabolaStmt):
        return f"parabola {s.name} = through {' '.join(s.points)} pick {s.pick}"
    if isinstance(s, QuadStmt):
        return f"quad {s.name} = {s.p1} meet {s.p2}"
    if isinstance(s, IncircleStmt):
        return f"incircle {s.name} = {s.quad}"
    if isinstance(s, NgonStmt):
        return (f"ngon {s.name} = {s.circle} around ({_num(s.x)}, {_num(s.y)}) "
                f"n {s.n} phase {_num(s.phase)}")
    if isinstance(s, RenderStmt):
        return f'render "{s.path}"'
    raise TypeError(f"not a statement: {s!r}")


def format_scene(prog: SceneProgram) -> str:
    return "".join(format_statement(s) + "\n" for s in prog)


# ---------------------------------------------------------------------------
# evaluation


@dataclass(frozen=True)
class Chord:
    circle: Circle
    a: Point
    b: Point


@dataclass
class Environment:
    """Values bound by a scene, in definition order."""

    values: dict[str, object] = field(default_factory=dict)
    kinds: dict[str, str] = field(default_factory=dict)
    renders: list[str] = field(default_factory=list)
    pencils: dict[str, ParabolasThroughFour] = field(default_factory=dict)

    def __getitem__(self, name: str):
        return self.values[name]

    def __contains__(self, name: str) -> bool:
        return name in self.values

    def items(self):
        return self.values.items()


def _eval(s: Statement, env: Environment, tol: Tolerance):
    v = env.values
    if isinstance(s, PointStmt):
        return Point(s.x, s.y)
    if isinstance(s, CircleStmt):
        return Circle(Point(s.cx, s.cy), s.r)
    if isinstance(s, ChordStmt):
        k = v[s.circle]
        return Chord(k, k.point_at(s.angle1), k.point_at(s.angle2))
    if isinstance(s, TangentParabolaStmt):
        ch = v[s.chord]
        if ch.circle != v[s.circle]:
            raise DegenerateError(f"chord {s.chord!r} is not a chord of {s.circle!r}")
        return parabola_from_tangent_chord(v[s.circle], ch.a, ch.b, tol)
    if isinstance(s, ThroughParabolaStmt):
        found = parabolas_through_four_points(*(v[p] for p in s.points), tol=tol)
        env.pencils[s.name] = found
        if s.pick >= len(found):
            raise DegenerateError(f"only {len(found)} parabola(s) through these points")
        return found[s.pick]
    if isinstance(s, QuadStmt):
        return parabolic_quadrilateral(v[s.p1], v[s.p2], tol)
    if isinstance(s, IncircleStmt):
        return inscribed_circle(v[s.quad], tol)
    if isinstance(s, NgonStmt):
        return build_ngon(v[s.circle], Point(s.x, s.y), s.n, s.phase, tol)
    raise TypeError(f"not a statement: {s!r}")


def evaluate_scene(prog: SceneProgram, tol: Tolerance = DEFAULT_TOL) -> Environment:
    """Run every statement; a failing construction is reported at its statement."""
    env = Environment()
    for s in prog:
        if isinstance(s, RenderStmt):
            env.renders.append(s.path)
            continue
        try:
            value = _eval(s, env, tol)
        except (DegenerateError, ValueError) as exc:
            raise SceneError(f"{s.kind} {s.name!r}: {exc}", s.loc) from exc
        env.values[s.name] = value
        env.kinds[s.name] = s.kind
    return env


def load_scene(path) -> SceneProgram:
    with open(path, encoding="utf-8") as fh:
        return parse_scene(fh.read())


__all__ = ["Chord", "Environment", "Loc", "SceneError", "SceneProgram", "Statement",
           "evaluate_scene", "format_scene", "format_statement", "load_scene",
           "parse_scene", "tokenize"]
