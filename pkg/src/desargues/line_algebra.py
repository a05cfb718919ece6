"""Skew-field operations on the points of a line, built from parallel projections.

Every operation here is a chain of joins and parallel meets.  Coordinates enter
through :func:`to_parameter` / :func:`from_parameter`, which exist so tests can
compare the constructions with ring arithmetic; the constructions never call
them.
"""

from __future__ import annotations

import csv
import io
import random
from dataclasses import dataclass, field
from typing import Literal

from .errors import ConstructionDegenerateError, NotEnumerableError, NotOnLineError
from .plane import (
    Line,
    PlaneModel,
    Point,
    format_line,
    format_point,
    incident,
    intersect,
    line_through,
    model_of,
    parallel_through,
)
from .scalars import Scalar, scalar_inv

__all__ = [
    "CayleyTables",
    "ConstructionTrace",
    "Frame",
    "TraceStep",
    "cayley_tables",
    "choose_auxiliary",
    "from_parameter",
    "point_add",
    "point_inv",
    "point_mul",
    "point_neg",
    "point_sub",
    "replay",
    "to_parameter",
]

TRACE_SCHEMA_VERSION = 1


@dataclass(frozen=True, slots=True)
class Frame:
    """A line with a chosen zero ``O`` and one ``I``."""

    line: Line
    O: Point
    I: Point

    def __post_init__(self):
        if self.O == self.I:
            raise ValueError("frame needs O != I")
        for name in ("O", "I"):
            if not incident(getattr(self, name), self.line):
                raise NotOnLineError(f"{name} = {getattr(self, name)} is not on {format_line(self.line)}")

    @classmethod
    def through(cls, O: Point, I: Point) -> Frame:
        return cls(line_through(O, I), O, I)

    @property
    def model(self) -> PlaneModel:
        return model_of(self.O)

    def to_json(self) -> dict:
        return {"line": format_line(self.line), "O": format_point(self.O), "I": format_point(self.I)}


@dataclass(frozen=True, slots=True)
class TraceStep:
    label: str
    kind: Literal["point", "line"]
    value: Point | Line

    def to_json(self) -> dict:
        text = format_point(self.value) if self.kind == "point" else format_line(self.value)
        return {"label": self.label, "kind": self.kind, "value": text}


@dataclass
class ConstructionTrace:
    """Ordered record of every auxiliary object a construction created."""

    op: str
    frame: Frame | None
    inputs: dict[str, Point]
    auxiliary_B: Point | None
    steps: list[TraceStep] = field(default_factory=list)
    result: Point | None = None
    extra: dict = field(default_factory=dict)

    def point(self, label: str, P: Point) -> Point:
        self.steps.append(TraceStep(label, "point", P))
        return P

    def line(self, label: str, l: Line) -> Line:
        self.steps.append(TraceStep(label, "line", l))
        return l

    def to_json(self) -> dict:
        out = {
            "schema_version": TRACE_SCHEMA_VERSION,
            "op": self.op,
            "model": str(model_of(self.result if self.result is not None else next(iter(self.inputs.values())))),
            "frame": self.frame.to_json() if self.frame is not None else None,
            "inputs": {k: format_point(v) for k, v in self.inputs.items()},
            "auxiliary_B": format_point(self.auxiliary_B) if self.auxiliary_B is not None else None,
            "steps": [s.to_json() for s in self.steps],
            "result": format_point(self.result) if self.result is not None else None,
        }
        if self.extra:
            out.update(self.extra)
        return out


def _meet(l1: Line, l2: Line, step: str) -> Point:
    P = intersect(l1, l2)
    if not isinstance(P, Point):
        raise ConstructionDegenerateError(step, f"{format_line(l1)} and {format_line(l2)} are {P.value}")
    return P


def _check_operands(frame: Frame, B: Point, **points: Point) -> None:
    for name, P in points.items():
        if not incident(P, frame.line):
            raise NotOnLineError(f"{name} = {P} is not on the frame line {format_line(frame.line)}")
    if incident(B, frame.line):
        raise ConstructionDegenerateError("Step 1", f"auxiliary B = {B} lies on the frame line")


def choose_auxiliary(frame: Frame, seed: int = 0) -> Point:
    """A point off the frame line.  Seed 0 gives the canonical choice ``O + (0, 1)``
    (or ``O + (1, 0)`` when the frame line is vertical)."""
    ring = frame.model.ring
    zero, one = ring.zero(), ring.one()
    if seed == 0:
        B = Point(frame.O.x, frame.O.y + one)
        if incident(B, frame.line):
            B = Point(frame.O.x + one, frame.O.y)
        return B
    rng = random.Random(seed)
    if ring.finite:
        off = [P for P in frame.model.enumerate_points() if not incident(P, frame.line)]
        return off[rng.randrange(len(off))]
    return frame.model.random_point_off(frame.line, rng)


def _add(frame: Frame, A: Point, C: Point, B: Point, trace: ConstructionTrace) -> Point:
    ell = frame.line
    par_B = trace.line("l^B_l", parallel_through(B, ell))
    OB = trace.line("l^OB", line_through(frame.O, B))
    par_A = trace.line("l^A_OB", parallel_through(A, OB))
    D = trace.point("D", _meet(par_B, par_A, "Step 2"))
    CB = trace.line("l^CB", line_through(C, B))
    par_D = trace.line("l^D_CB", parallel_through(D, CB))
    return trace.point("E", _meet(par_D, ell, "Step 3"))


def point_add(frame: Frame, A: Point, C: Point, B: Point | None = None) -> tuple[Point, ConstructionTrace]:
    """A + C: D = (parallel to the line through B) meet (parallel to OB through A);
    then the parallel to CB through D meets the line in A + C."""
    if B is None:
        B = choose_auxiliary(frame)
    _check_operands(frame, B, A=A, C=C)
    trace = ConstructionTrace("add", frame, {"A": A, "C": C}, B)
    trace.result = _add(frame, A, C, B, trace)
    return trace.result, trace


def _sub(frame: Frame, E: Point, A: Point, B: Point, trace: ConstructionTrace) -> Point:
    ell = frame.line
    par_B = trace.line("l^B_l", parallel_through(B, ell))
    OB = trace.line("l^OB", line_through(frame.O, B))
    par_A = trace.line("l^A_OB", parallel_through(A, OB))
    D = trace.point("D", _meet(par_B, par_A, "Step 2"))
    if D == E:
        raise ConstructionDegenerateError("reverse Step 3", "D coincides with E")
    DE = trace.line("l^DE", line_through(D, E))
    par = trace.line("l^B_DE", parallel_through(B, DE))
    return trace.point("C", _meet(par, ell, "reverse Step 3"))


def point_sub(frame: Frame, E: Point, A: Point, B: Point | None = None) -> Point:
    """The C with A + C = E."""
    return point_sub_traced(frame, E, A, B)[0]


def point_sub_traced(frame: Frame, E: Point, A: Point, B: Point | None = None) -> tuple[Point, ConstructionTrace]:
    if B is None:
        B = choose_auxiliary(frame)
    _check_operands(frame, B, E=E, A=A)
    trace = ConstructionTrace("sub", frame, {"E": E, "A": A}, B)
    trace.result = _sub(frame, E, A, B, trace)
    return trace.result, trace


def point_neg(frame: Frame, A: Point, B: Point | None = None) -> tuple[Point, ConstructionTrace]:
    """-A, i.e. the C with A + C = O."""
    if B is None:
        B = choose_auxiliary(frame)
    _check_operands(frame, B, A=A)
    trace = ConstructionTrace("neg", frame, {"A": A}, B)
    trace.result = _sub(frame, frame.O, A, B, trace)
    return trace.result, trace


def _mul(frame: Frame, A: Point, C: Point, B: Point, trace: ConstructionTrace) -> Point:
    ell = frame.line
    IB = trace.line("l^IB", line_through(frame.I, B))
    par_A = trace.line("l^A_IB", parallel_through(A, IB))
    OB = trace.line("l^OB", line_through(frame.O, B))
    E = trace.point("E", _meet(par_A, OB, "Step 2"))
    BC = trace.line("l^BC", line_through(B, C))
    par_E = trace.line("l^E_BC", parallel_through(E, BC))
    return trace.point("F", _meet(par_E, ell, "Step 3"))


def point_mul(frame: Frame, A: Point, C: Point, B: Point | None = None) -> tuple[Point, ConstructionTrace]:
    """A * C: E = (parallel to IB through A) meet OB; the parallel to BC through E
    meets the line in A * C.  A enters Step 2 and C enters Step 3."""
    if B is None:
        B = choose_auxiliary(frame)
    _check_operands(frame, B, A=A, C=C)
    trace = ConstructionTrace("mul", frame, {"A": A, "C": C}, B)
    trace.result = _mul(frame, A, C, B, trace)
    return trace.result, trace


def _inv(frame: Frame, A: Point, side: str, B: Point, trace: ConstructionTrace) -> Point:
    ell = frame.line
    OB = trace.line("l^OB", line_through(frame.O, B))
    if side == "right":
        IB = trace.line("l^IB", line_through(frame.I, B))
        par_A = trace.line("l^A_IB", parallel_through(A, IB))
        E = trace.point("E", _meet(par_A, OB, "Step 2"))
        EI = trace.line("l^EI", line_through(E, frame.I))
        par = trace.line("l^B_EI", parallel_through(B, EI))
        return trace.point("X", _meet(par, ell, "reverse Step 3"))
    BA = trace.line("l^BA", line_through(B, A))
    par_I = trace.line("l^I_BA", parallel_through(frame.I, BA))
    E = trace.point("E'", _meet(par_I, OB, "reverse Step 3"))
    IB = trace.line("l^IB", line_through(frame.I, B))
    par = trace.line("l^E'_IB", parallel_through(E, IB))
    return trace.point("X", _meet(par, ell, "reverse Step 2"))


def point_inv(
    frame: Frame, A: Point, side: Literal["left", "right"] = "right", B: Point | None = None
) -> Point:
    """Right inverse (A * X = I) or left inverse (X * A = I) of A."""
    return point_inv_traced(frame, A, side, B)[0]


def point_inv_traced(
    frame: Frame, A: Point, side: Literal["left", "right"] = "right", B: Point | None = None
) -> tuple[Point, ConstructionTrace]:
    side = side.lower()
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    if B is None:
        B = choose_auxiliary(frame)
    _check_operands(frame, B, A=A)
    if A == frame.O:
        raise ZeroDivisionError("O has no multiplicative inverse")
    trace = ConstructionTrace(f"inv-{side}", frame, {"A": A}, B)
    trace.result = _inv(frame, A, side, B, trace)
    return trace.result, trace


def to_parameter(frame: Frame, P: Point) -> Scalar:
    """The t with P = O + t*(I - O)."""
    ux, uy = frame.I.x - frame.O.x, frame.I.y - frame.O.y
    if ux:
        t = (P.x - frame.O.x) * scalar_inv(ux)
    else:
        t = (P.y - frame.O.y) * scalar_inv(uy)
    if from_parameter(frame, t) != P:
        raise NotOnLineError(f"{P} is not on the frame line {format_line(frame.line)}")
    return t


def from_parameter(frame: Frame, t: Scalar) -> Point:
    ux, uy = frame.I.x - frame.O.x, frame.I.y - frame.O.y
    return Point(frame.O.x + t * ux, frame.O.y + t * uy)


_OPS = {
    "add": lambda f, ins, B, tr: _add(f, ins["A"], ins["C"], B, tr),
    "mul": lambda f, ins, B, tr: _mul(f, ins["A"], ins["C"], B, tr),
    "sub": lambda f, ins, B, tr: _sub(f, ins["E"], ins["A"], B, tr),
    "neg": lambda f, ins, B, tr: _sub(f, f.O, ins["A"], B, tr),
    "inv-left": lambda f, ins, B, tr: _inv(f, ins["A"], "left", B, tr),
    "inv-right": lambda f, ins, B, tr: _inv(f, ins["A"], "right", B, tr),
}


def replay(trace: ConstructionTrace) -> bool:
    """Re-run a recorded construction and compare every step and the result."""
    if trace.op not in _OPS:
        raise ValueError(f"cannot replay {trace.op!r} traces")
    fresh = ConstructionTrace(trace.op, trace.frame, dict(trace.inputs), trace.auxiliary_B)
    fresh.result = _OPS[trace.op](trace.frame, trace.inputs, trace.auxiliary_B, fresh)
    return fresh.steps == trace.steps and fresh.result == trace.result


@dataclass(frozen=True)
class CayleyTables:
    """Addition and multiplication tables over the points of a finite frame line,
    rows and columns ordered by parameter 0, 1, ..., p-1."""

    frame: Frame
    points: tuple[Point, ...]
    add: tuple[tuple[Point, ...], ...]
    mul: tuple[tuple[Point, ...], ...]

    def parameters(self, which: Literal["add", "mul"]) -> list[list[Scalar]]:
        table = self.add if which == "add" else self.mul
        return [[to_parameter(self.frame, P) for P in row] for row in table]

    def _int_rows(self, which):
        return [[t.value for t in row] for row in self.parameters(which)]

    def to_csv(self, which: Literal["add", "mul"]) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        n = len(self.points)
        w.writerow(["+" if which == "add" else "*", *range(n)])
        for i, row in enumerate(self._int_rows(which)):
            w.writerow([i, *row])
        return buf.getvalue()

    def to_text(self, which: Literal["add", "mul"]) -> str:
        n = len(self.points)
        width = len(str(n - 1))
        op = "+" if which == "add" else "*"
        head = f"{op:>{width}} | " + " ".join(f"{j:>{width}}" for j in range(n))
        lines = [head, "-" * len(head)]
        for i, row in enumerate(self._int_rows(which)):
            lines.append(f"{i:>{width}} | " + " ".join(f"{v:>{width}}" for v in row))
        return "\n".join(lines) + "\n"


def cayley_tables(frame: Frame, B: Point | None = None) -> CayleyTables:
    ring = frame.model.ring
    if not ring.finite:
        raise NotEnumerableError(f"the line over {ring} is infinite")
    if B is None:
        B = choose_auxiliary(frame)
    pts = tuple(from_parameter(frame, t) for t in ring.elements())
    add = tuple(tuple(point_add(frame, A, C, B)[0] for C in pts) for A in pts)
    mul = tuple(tuple(point_mul(frame, A, C, B)[0] for C in pts) for A in pts)
    return CayleyTables(frame, pts, add, mul)
