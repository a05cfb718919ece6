"""Construction scripts: a parser with spanned diagnostics plus an evaluator.

A script is a ``model`` header followed by one statement per line::

    model rational
    point O = (0, 0)
    point I = (1, 0)
    line l = O I
    frame f = l O I
    point A = (2, 0)
    add E = A + I in f
    assert eq E A

``#`` starts a comment.  Scalars use the canonical text forms of the model's ring
(``3/4``, ``2 mod 7``, ``1+2i+0j+3k``); quaternion literals start with a digit or
a sign.  Beyond the core statements the language accepts ``using B`` after
add/mul/neg/inv to pin the auxiliary point, ``translate X = P by A B`` and
``line l : x = c`` / ``line l : y = m*x + b``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Union

from .errors import GeometryError
from .line_algebra import (
    ConstructionTrace,
    Frame,
    choose_auxiliary,
    point_add,
    point_inv_traced,
    point_mul,
    point_neg,
)
from .maps import translate_points
from .ordering import SignClass, between, sign_classify
from .plane import (
    Line,
    PlaneModel,
    Point,
    collinear,
    format_line,
    format_point,
    intersect,
    is_parallel,
    line_through,
    parallel_through,
    parse_line,
)
from .scalars import RingDescriptor, is_prime

__all__ = [
    "AssertionOutcome",
    "Diagnostic",
    "ParseError",
    "RunResult",
    "Script",
    "Span",
    "execute",
    "parse",
    "pretty",
]


# --- diagnostics ---------------------------------------------------------


@dataclass(frozen=True)
class Span:
    """1-based line and column of the first character, plus the length."""

    line: int
    col: int
    length: int = 1

    def __str__(self):
        return f"{self.line}:{self.col}"


@dataclass(frozen=True)
class Diagnostic:
    severity: str
    span: Span
    message: str
    expected: str | None = None
    found: str | None = None

    def format(self, source_name: str = "<script>") -> str:
        text = f"{source_name}:{self.span}: {self.severity}: {self.message}"
        if self.expected is not None:
            text += f" (expected {self.expected}, found {self.found})"
        return text

    def to_json(self) -> dict:
        return {
            "severity": self.severity,
            "line": self.span.line,
            "col": self.span.col,
            "message": self.message,
            "expected": self.expected,
            "found": self.found,
        }


class ParseError(Exception):
    """Raised by :func:`parse` with every diagnostic found."""

    def __init__(self, diagnostics: list[Diagnostic]):
        self.diagnostics = diagnostics
        super().__init__("\n".join(d.format() for d in diagnostics))


# --- lexer ---------------------------------------------------------------


@dataclass(frozen=True)
class Token:
    kind: str  # ID NUMBER PUNCT NEWLINE EOF
    text: str
    span: Span
    offset: int


_TOKEN_RE = re.compile(
    r"(?P<ws>[ \t\r]+)|(?P<comment>\#[^\n]*)|(?P<nl>\n)"
    r"|(?P<inv>\^-1)|(?P<number>\d+(?:/\d+)?)"
    r"|(?P<id>[A-Za-z_][A-Za-z0-9_']*)|(?P<punct>[()=,+*\-:^/])"
)


def tokenize(text: str) -> tuple[list[Token], list[Diagnostic]]:
    tokens: list[Token] = []
    diags: list[Diagnostic] = []
    line, line_start, pos = 1, 0, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        col = pos - line_start + 1
        if not m:
            diags.append(Diagnostic("error", Span(line, col), f"unexpected character {text[pos]!r}"))
            pos += 1
            continue
        kind = m.lastgroup
        lexeme = m.group()
        if kind == "nl":
            tokens.append(Token("NEWLINE", "\n", Span(line, col), pos))
            line, line_start = line + 1, m.end()
        elif kind not in ("ws", "comment"):
            tok_kind = {"inv": "PUNCT", "number": "NUMBER", "id": "ID", "punct": "PUNCT"}[kind]
            tokens.append(Token(tok_kind, lexeme, Span(line, col, len(lexeme)), pos))
        pos = m.end()
    tokens.append(Token("EOF", "", Span(line, pos - line_start + 1), pos))
    return tokens, diags


# --- AST -----------------------------------------------------------------

KEYWORDS = {
    "model", "point", "line", "frame", "add", "mul", "neg", "inv", "project", "translate",
    "assert", "in", "using", "via", "onto", "by", "left", "right",
    "between", "collinear", "parallel", "eq", "sign",
}


def _span_field():
    return field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class PointDecl:
    name: str
    x: object
    y: object
    span: Span | None = _span_field()


@dataclass(frozen=True)
class LineJoin:
    name: str
    p: str
    q: str
    span: Span | None = _span_field()


@dataclass(frozen=True)
class LineForm:
    name: str
    line: Line
    span: Span | None = _span_field()


@dataclass(frozen=True)
class FrameDecl:
    name: str
    line: str
    O: str
    I: str
    span: Span | None = _span_field()


@dataclass(frozen=True)
class BinaryOp:
    """``add`` or ``mul``."""

    op: str
    name: str
    a: str
    c: str
    frame: str
    using: str | None = None
    span: Span | None = _span_field()


@dataclass(frozen=True)
class NegOp:
    name: str
    a: str
    frame: str
    using: str | None = None
    span: Span | None = _span_field()


@dataclass(frozen=True)
class InvOp:
    name: str
    a: str
    side: str
    frame: str
    using: str | None = None
    span: Span | None = _span_field()


@dataclass(frozen=True)
class ProjectOp:
    name: str
    point: str
    direction: str
    target: str
    span: Span | None = _span_field()


@dataclass(frozen=True)
class TranslateOp:
    name: str
    point: str
    start: str
    end: str
    span: Span | None = _span_field()


@dataclass(frozen=True)
class Assertion:
    predicate: str
    args: tuple[str, ...]
    sign: str | None = None
    span: Span | None = _span_field()


Statement = Union[PointDecl, LineJoin, LineForm, FrameDecl, BinaryOp, NegOp, InvOp, ProjectOp, TranslateOp, Assertion]


@dataclass(frozen=True)
class Script:
    ring: RingDescriptor
    statements: tuple[Statement, ...]

    @property
    def model(self) -> PlaneModel:
        return PlaneModel(self.ring)


# --- parser --------------------------------------------------------------


class _Bail(Exception):
    """Abandon the current statement; the diagnostic is already recorded."""


_ARG_KINDS = {
    "between": ("point", "point", "point"),
    "collinear": ("point", "point", "point"),
    "parallel": ("line", "line"),
    "eq": ("any", "any"),
}


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens, self.diags = tokenize(text)
        self.i = 0
        self.ring: RingDescriptor | None = None
        self.kinds: dict[str, str] = {}

    # helpers
    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        t = self.tok
        if t.kind != "EOF":
            self.i += 1
        return t

    def error(self, span: Span, message: str, expected=None, found=None):
        self.diags.append(Diagnostic("error", span, message, expected, found))
        raise _Bail

    def found(self, t: Token) -> str:
        return {"NEWLINE": "end of line", "EOF": "end of input"}.get(t.kind, repr(t.text))

    def expect(self, text: str) -> Token:
        t = self.tok
        if t.text != text or t.kind in ("NEWLINE", "EOF"):
            self.error(t.span, "syntax error", repr(text), self.found(t))
        return self.advance()

    def ident(self) -> Token:
        t = self.tok
        if t.kind != "ID" or t.text in KEYWORDS:
            self.error(t.span, "syntax error", "identifier", self.found(t))
        return self.advance()

    def use(self, kind: str) -> str:
        """An identifier that must already name an object of ``kind``."""
        t = self.ident()
        declared = self.kinds.get(t.text)
        if declared is None:
            self.error(t.span, f"undeclared name {t.text!r}")
        if kind != "any" and declared != kind:
            self.error(t.span, f"{t.text!r} is a {declared}", f"a {kind}", declared)
        return t.text

    def declare(self, t: Token, kind: str) -> None:
        if t.text in self.kinds:
            self.error(t.span, f"{t.text!r} is already declared")
        self.kinds[t.text] = kind

    def end_of_statement(self) -> None:
        t = self.tok
        if t.kind not in ("NEWLINE", "EOF"):
            self.error(t.span, "syntax error", "end of line", self.found(t))

    def skip_line(self) -> None:
        while self.tok.kind not in ("NEWLINE", "EOF"):
            self.advance()

    def skip_blank(self) -> None:
        while self.tok.kind == "NEWLINE":
            self.advance()

    def raw_until(self, stops: set[str]) -> tuple[str, Span]:
        """Source text of the tokens up to (not including) a stop token."""
        first = self.tok
        last = None
        while self.tok.kind not in ("NEWLINE", "EOF") and self.tok.text not in stops:
            last = self.advance()
        if last is None:
            self.error(first.span, "syntax error", "scalar", self.found(first))
        text = self.text[first.offset:last.offset + len(last.text)]
        return text, Span(first.span.line, first.span.col, len(text))

    def scalar(self, stops: set[str]):
        first = self.tok
        text, span = self.raw_until(stops)
        if not (first.kind == "NUMBER" or first.text in "+-"):
            self.error(span, f"malformed scalar {text!r}", "a number or sign", self.found(first))
        try:
            return self.ring.parse(text)
        except (ValueError, ZeroDivisionError, GeometryError) as exc:
            self.error(span, f"malformed scalar {text!r} for {self.ring}: {exc}")

    # grammar
    def header(self) -> None:
        self.skip_blank()
        t = self.tok
        if t.text != "model":
            self.error(t.span, "script must start with a model header", "'model'", self.found(t))
        self.advance()
        kind = self.tok
        if kind.text == "rational":
            self.advance()
            self.ring = RingDescriptor.rational()
        elif kind.text == "quaternion":
            self.advance()
            self.ring = RingDescriptor.quaternion()
        elif kind.text == "gf":
            self.advance()
            self.expect("(")
            num = self.tok
            if num.kind != "NUMBER" or "/" in num.text:
                self.error(num.span, "syntax error", "integer", self.found(num))
            self.advance()
            self.expect(")")
            p = int(num.text)
            if not is_prime(p):
                self.error(num.span, f"{p} is not prime")
            self.ring = RingDescriptor.gf(p)
        else:
            self.error(kind.span, "syntax error", "'rational', 'gf' or 'quaternion'", self.found(kind))
        self.end_of_statement()

    def statement(self) -> Statement:
        t = self.tok
        handler = getattr(self, f"stmt_{t.text}", None) if t.kind == "ID" else None
        if handler is None:
            self.error(t.span, "syntax error", "a statement keyword", self.found(t))
        self.advance()
        stmt = handler(t.span)
        self.end_of_statement()
        return stmt

    def stmt_point(self, span):
        name = self.ident()
        self.expect("=")
        self.expect("(")
        x = self.scalar({",", ")"})
        self.expect(",")
        y = self.scalar({",", ")"})
        self.expect(")")
        self.declare(name, "point")
        return PointDecl(name.text, x, y, span)

    def stmt_line(self, span):
        name = self.ident()
        if self.tok.text == ":":
            self.advance()
            text, tspan = self.raw_until(set())
            try:
                line = parse_line(text, self.ring)
            except (ValueError, GeometryError) as exc:
                self.error(tspan, f"malformed line form {text!r}: {exc}", "'x = c' or 'y = m*x + b'", repr(text))
            self.declare(name, "line")
            return LineForm(name.text, line, span)
        self.expect("=")
        p, q = self.use("point"), self.use("point")
        self.declare(name, "line")
        return LineJoin(name.text, p, q, span)

    def stmt_frame(self, span):
        name = self.ident()
        self.expect("=")
        line, O, I = self.use("line"), self.use("point"), self.use("point")
        self.declare(name, "frame")
        return FrameDecl(name.text, line, O, I, span)

    def _using(self):
        if self.tok.text == "using":
            self.advance()
            return self.use("point")
        return None

    def _binary(self, op, symbol, span):
        name = self.ident()
        self.expect("=")
        a = self.use("point")
        self.expect(symbol)
        c = self.use("point")
        self.expect("in")
        frame = self.use("frame")
        using = self._using()
        self.declare(name, "point")
        return BinaryOp(op, name.text, a, c, frame, using, span)

    def stmt_add(self, span):
        return self._binary("add", "+", span)

    def stmt_mul(self, span):
        return self._binary("mul", "*", span)

    def stmt_neg(self, span):
        name = self.ident()
        self.expect("=")
        self.expect("-")
        a = self.use("point")
        self.expect("in")
        frame = self.use("frame")
        using = self._using()
        self.declare(name, "point")
        return NegOp(name.text, a, frame, using, span)

    def stmt_inv(self, span):
        name = self.ident()
        self.expect("=")
        a = self.use("point")
        self.expect("^-1")
        side = self.tok
        if side.text not in ("left", "right"):
            self.error(side.span, "syntax error", "'left' or 'right'", self.found(side))
        self.advance()
        self.expect("in")
        frame = self.use("frame")
        using = self._using()
        self.declare(name, "point")
        return InvOp(name.text, a, side.text, frame, using, span)

    def stmt_project(self, span):
        name = self.ident()
        self.expect("=")
        P = self.use("point")
        self.expect("via")
        direction = self.use("line")
        self.expect("onto")
        target = self.use("line")
        self.declare(name, "point")
        return ProjectOp(name.text, P, direction, target, span)

    def stmt_translate(self, span):
        name = self.ident()
        self.expect("=")
        P = self.use("point")
        self.expect("by")
        A, B = self.use("point"), self.use("point")
        self.declare(name, "point")
        return TranslateOp(name.text, P, A, B, span)

    def stmt_assert(self, span):
        t = self.tok
        if t.text == "sign":
            self.advance()
            X = self.use("point")
            s = self.tok
            if s.text not in ("+", "-", "0"):
                self.error(s.span, "syntax error", "'+', '-' or '0'", self.found(s))
            self.advance()
            self.expect("in")
            frame = self.use("frame")
            return Assertion("sign", (X, frame), s.text, span)
        kinds = _ARG_KINDS.get(t.text)
        if kinds is None:
            self.error(t.span, "syntax error", "a predicate", self.found(t))
        self.advance()
        args = tuple(self.use(k) for k in kinds)
        if t.text == "eq" and self.kinds[args[0]] != self.kinds[args[1]]:
            self.error(span, f"eq compares a {self.kinds[args[0]]} with a {self.kinds[args[1]]}")
        return Assertion(t.text, args, None, span)

    def run(self) -> Script:
        try:
            self.header()
        except _Bail:
            return None
        statements = []
        while True:
            self.skip_blank()
            if self.tok.kind == "EOF":
                break
            try:
                statements.append(self.statement())
            except _Bail:
                self.skip_line()
        return Script(self.ring, tuple(statements))


def parse(text: str) -> Script:
    """Parse a script; raise :class:`ParseError` carrying every diagnostic."""
    parser = _Parser(text)
    script = parser.run()
    if parser.diags:
        raise ParseError(sorted(parser.diags, key=lambda d: (d.span.line, d.span.col)))
    return script


# --- pretty-printer ------------------------------------------------------


def _pretty_stmt(s: Statement) -> str:
    using = lambda u: f" using {u}" if u else ""  # noqa: E731
    if isinstance(s, PointDecl):
        return f"point {s.name} = ({s.x}, {s.y})"
    if isinstance(s, LineJoin):
        return f"line {s.name} = {s.p} {s.q}"
    if isinstance(s, LineForm):
        return f"line {s.name} : {format_line(s.line)}"
    if isinstance(s, FrameDecl):
        return f"frame {s.name} = {s.line} {s.O} {s.I}"
    if isinstance(s, BinaryOp):
        sym = "+" if s.op == "add" else "*"
        return f"{s.op} {s.name} = {s.a} {sym} {s.c} in {s.frame}{using(s.using)}"
    if isinstance(s, NegOp):
        return f"neg {s.name} = - {s.a} in {s.frame}{using(s.using)}"
    if isinstance(s, InvOp):
        return f"inv {s.name} = {s.a} ^-1 {s.side} in {s.frame}{using(s.using)}"
    if isinstance(s, ProjectOp):
        return f"project {s.name} = {s.point} via {s.direction} onto {s.target}"
    if isinstance(s, TranslateOp):
        return f"translate {s.name} = {s.point} by {s.start} {s.end}"
    if s.predicate == "sign":
        return f"assert sign {s.args[0]} {s.sign} in {s.args[1]}"
    return f"assert {s.predicate} " + " ".join(s.args)


def pretty(script: Script) -> str:
    lines = [f"model {script.ring}"] + [_pretty_stmt(s) for s in script.statements]
    return "\n".join(lines) + "\n"


# --- evaluator -----------------------------------------------------------


@dataclass
class AssertionOutcome:
    text: str
    span: Span
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"assertion": self.text, "line": self.span.line, "passed": self.passed, "detail": self.detail}


@dataclass
class RunResult:
    script: Script
    bindings: dict[str, object] = field(default_factory=dict)
    traces: list[tuple[str, ConstructionTrace]] = field(default_factory=list)
    assertions: list[AssertionOutcome] = field(default_factory=list)
    diagnostics: list[Diagnostic] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.diagnostics and all(a.passed for a in self.assertions)

    def to_json(self) -> dict:
        def show(v):
            if isinstance(v, Point):
                return format_point(v)
            if isinstance(v, Frame):
                return v.to_json()
            return format_line(v)

        return {
            "schema_version": 1,
            "model": str(self.script.ring),
            "bindings": {k: show(v) for k, v in self.bindings.items()},
            "traces": [{"name": n, **t.to_json()} for n, t in self.traces],
            "assertions": [a.to_json() for a in self.assertions],
            "diagnostics": [d.to_json() for d in self.diagnostics],
            "passed": self.passed,
        }


class _Unavailable(Exception):
    pass


def execute(script: Script, seed: int = 0) -> RunResult:
    """Run every statement.  Runtime failures become diagnostics on their
    statement; later statements still run (those depending on a failed binding
    report that instead)."""
    result = RunResult(script)
    model = script.model
    env = result.bindings
    failed: set[str] = set()

    def get(name):
        if name in failed:
            raise _Unavailable(f"{name!r} is unavailable after an earlier error")
        return env[name]

    def aux(frame, using):
        return get(using) if using else choose_auxiliary(frame, seed)

    for s in script.statements:
        target = getattr(s, "name", None)
        try:
            if isinstance(s, PointDecl):
                env[s.name] = model.point(s.x, s.y)
            elif isinstance(s, LineJoin):
                env[s.name] = line_through(get(s.p), get(s.q))
            elif isinstance(s, LineForm):
                env[s.name] = s.line
            elif isinstance(s, FrameDecl):
                env[s.name] = Frame(get(s.line), get(s.O), get(s.I))
            elif isinstance(s, BinaryOp):
                frame = get(s.frame)
                fn = point_add if s.op == "add" else point_mul
                P, trace = fn(frame, get(s.a), get(s.c), aux(frame, s.using))
                env[s.name] = P
                result.traces.append((s.name, trace))
            elif isinstance(s, NegOp):
                frame = get(s.frame)
                P, trace = point_neg(frame, get(s.a), aux(frame, s.using))
                env[s.name] = P
                result.traces.append((s.name, trace))
            elif isinstance(s, InvOp):
                frame = get(s.frame)
                P, trace = point_inv_traced(frame, get(s.a), s.side, aux(frame, s.using))
                env[s.name] = P
                result.traces.append((s.name, trace))
            elif isinstance(s, ProjectOp):
                P, trace = _project(get(s.point), get(s.direction), get(s.target))
                env[s.name] = P
                result.traces.append((s.name, trace))
            elif isinstance(s, TranslateOp):
                P, trace = translate_points(get(s.point), get(s.start), get(s.end))
                env[s.name] = P
                result.traces.append((s.name, trace))
            else:
                result.assertions.append(_check(s, get, model))
        except (_Unavailable, GeometryError, ValueError, ZeroDivisionError) as exc:
            if target:
                failed.add(target)
            msg = str(exc) or type(exc).__name__
            result.diagnostics.append(Diagnostic("error", s.span or Span(0, 0), msg))
            if isinstance(s, Assertion):
                result.assertions.append(AssertionOutcome(_pretty_stmt(s), s.span or Span(0, 0), False, msg))
    return result


def _project(P: Point, direction: Line, target: Line) -> tuple[Point, ConstructionTrace]:
    trace = ConstructionTrace("project", None, {"P": P}, None)
    through = trace.line("l^P_d", parallel_through(P, direction))
    X = intersect(through, target)
    if not isinstance(X, Point):
        raise GeometryError(f"direction {format_line(direction)} is parallel to the target line")
    trace.result = trace.point("X", X)
    trace.extra = {"direction": format_line(direction), "target": format_line(target)}
    return X, trace


def _check(s: Assertion, get, model: PlaneModel) -> AssertionOutcome:
    text = _pretty_stmt(s)
    vals = [get(a) for a in s.args]
    if s.predicate == "eq":
        a, b = vals
        ok = a == b
        detail = "" if ok else f"{_show(a)} != {_show(b)}"
    elif s.predicate == "collinear":
        ok, detail = collinear(*vals), ""
    elif s.predicate == "parallel":
        ok, detail = is_parallel(*vals), ""
    elif s.predicate == "between":
        A, B, C = vals
        ok = A != C and collinear(A, B, C) and between(line_through(A, C), A, B, C)
        detail = ""
    else:
        X, frame = vals
        got = sign_classify(frame, X)
        ok = got == SignClass(s.sign)
        detail = f"sign is {got.value}"
    return AssertionOutcome(text, s.span or Span(0, 0), ok, detail)


def _show(v) -> str:
    if isinstance(v, Point):
        return format_point(v)
    if isinstance(v, Frame):
        return str(v.to_json())
    return format_line(v)

