"""Betweenness on lines of the ordered (rational) plane and the positive cone of a frame."""

from __future__ import annotations

import enum
import itertools
import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import OrderUnavailableError
from .line_algebra import Frame, point_add, point_mul, point_neg
from .maps import (
    ParallelProjection,
    Translation,
    apply_translation,
    image_line,
    is_along,
    project,
    translation_as_projection,
    two_stage_projections,
)
from .plane import Line, PlaneModel, Point, incident, line_param, line_through, model_of, point_at
from .reports import ClaimResult, to_jsonable

__all__ = [
    "AxiomReport",
    "ConeReport",
    "OrderReport",
    "SignClass",
    "between",
    "check_map_order",
    "check_order_axioms",
    "check_positive_cone",
    "same_side",
    "sign_classify",
]


class SignClass(enum.Enum):
    NEGATIVE = "-"
    ZERO = "0"
    POSITIVE = "+"


def _require_order(obj) -> None:
    ring = model_of(obj).ring
    if not ring.ordered:
        raise OrderUnavailableError(f"the plane over {ring} is not ordered")


def _line_of(where) -> Line:
    return where.line if isinstance(where, Frame) else where


def between(where: Line | Frame, A: Point, B: Point, C: Point) -> bool:
    """[A, B, C]: B lies strictly between A and C on the line."""
    l = _line_of(where)
    _require_order(A)
    a, b, c = line_param(l, A), line_param(l, B), line_param(l, C)
    return a < b < c or c < b < a


def same_side(pivot: Point, B: Point, C: Point, line: Line | None = None) -> bool:
    """B and C on the same side of ``pivot``: exactly one of [pivot,B,C], [pivot,C,B]."""
    l = line if line is not None else line_through(pivot, B)
    return between(l, pivot, B, C) != between(l, pivot, C, B)


def sign_classify(frame: Frame, X: Point) -> SignClass:
    # I itself is declared positive; the strict betweenness test is vacuous at X = I
    _require_order(X)
    O, I = frame.O, frame.I
    line_param(frame.line, X)
    if X == O:
        return SignClass.ZERO
    if X == I or between(frame, O, X, I) or between(frame, O, I, X):
        return SignClass.POSITIVE
    if between(frame, X, O, I):
        return SignClass.NEGATIVE
    raise AssertionError(f"{X} escaped the sign partition")  # pragma: no cover


@dataclass
class AxiomReport:
    claims: dict[str, ClaimResult]

    @property
    def passed(self) -> bool:
        return all(c.finish().passed for c in self.claims.values())

    def to_json(self) -> dict:
        return {"claims": [c.to_json() for c in self.claims.values()]}


ORDER_CLAIMS = {
    "Lo.1": "ordered line axiom: [A,B,C] implies [C,B,A]",
    "Lo.2": "ordered line axiom: exactly one of [A,B,C], [B,C,A], [C,A,B]",
    "Lo.3": "ordered line axiom: [A,B,C] and [B,C,D] imply [A,B,D] and [A,C,D]",
    "Lo.4": "ordered line axiom: [A,B,C] and [C,B,D] imply [D,A,B] or [A,D,B]",
    "Prop-exclusion": "two of [B,A,C], [C,A,D], [D,A,B] exclude the third",
    "Prop-chaining": "[A,B,C] and [A,C,D] imply [A,B,D] and [B,C,D]",
    "same-side-transitivity": "same side of A is transitive",
}


def check_order_axioms(line: Line, quadruples: Iterable[Sequence[Point]]) -> AxiomReport:
    """Evaluate the order axioms and propositions on every permutation of each
    quadruple of mutually distinct points of ``line``."""
    claims = {k: ClaimResult(k, v) for k, v in ORDER_CLAIMS.items()}
    _require_order(line)

    def bw(a, b, c):
        # between() on precomputed line parameters
        return a < b < c or c < b < a

    def side(a, b, c):
        return bw(a, b, c) != bw(a, c, b)

    for quad in quadruples:
        if len(set(quad)) != 4:
            raise ValueError("order axioms are sampled on mutually distinct points")
        params = [line_param(line, P) for P in quad]
        for order in itertools.permutations(range(4)):
            A, B, C, D = (params[i] for i in order)
            w = [quad[i] for i in order]
            abc = bw(A, B, C)
            claims["Lo.1"].record(not abc or bw(C, B, A), w, applicable=abc)
            claims["Lo.2"].record(abc + bw(B, C, A) + bw(C, A, B) == 1, w)
            pre3 = abc and bw(B, C, D)
            claims["Lo.3"].record(not pre3 or (bw(A, B, D) and bw(A, C, D)), w, applicable=pre3)
            pre4 = abc and bw(C, B, D)
            claims["Lo.4"].record(not pre4 or bw(D, A, B) or bw(A, D, B), w, applicable=pre4)
            claims["Prop-exclusion"].record(not (bw(B, A, C) and bw(C, A, D) and bw(D, A, B)), w)
            pre_c = abc and bw(A, C, D)
            claims["Prop-chaining"].record(not pre_c or (bw(A, B, D) and bw(B, C, D)), w, applicable=pre_c)
            pre_s = side(A, B, C) and side(A, C, D)
            claims["same-side-transitivity"].record(not pre_s or side(A, B, D), w, applicable=pre_s)
    for c in claims.values():
        c.finish()
    return AxiomReport(claims)


def random_quadruples(model: PlaneModel, line: Line, n: int, rng: random.Random) -> list[tuple[Point, ...]]:
    out = []
    while len(out) < n:
        pts = {model.random_point_on(line, rng) for _ in range(4)}
        if len(pts) == 4:
            out.append(tuple(sorted(pts, key=lambda P: rng.random())))
    return out


@dataclass
class ConeReport:
    claims: dict[str, ClaimResult]

    @property
    def passed(self) -> bool:
        return all(c.finish().passed for c in self.claims.values())

    def to_json(self) -> dict:
        return {"claims": [c.to_json() for c in self.claims.values()]}


CONE_CLAIMS = {
    "trichotomy": "the line splits into negatives, zero and positives",
    "add-closure": "sum of two positive points is positive",
    "mul-closure": "product of two positive points is positive",
    "neg-to-K-": "negative of a positive point is negative",
    "neg-add-closure": "sum of two negative points is negative",
}


def check_positive_cone(
    frame: Frame, pairs: int = 1000, negations: int = 500, seed: int = 0, B: Point | None = None
) -> ConeReport:
    """Closure of the positive cone under the constructed + and * (both factor
    orders), negation into the negative cone, and closure of negatives under +."""
    _require_order(frame.O)
    model = frame.model
    rng = random.Random(seed)
    claims = {k: ClaimResult(k, v) for k, v in CONE_CLAIMS.items()}

    def draw(cls: SignClass) -> Point:
        while True:
            X = model.random_point_on(frame.line, rng)
            s = sign_classify(frame, X)
            claims["trichotomy"].record(_partition_ok(frame, X, s), [X])
            if s is cls:
                return X

    for _ in range(pairs):
        A, C = draw(SignClass.POSITIVE), draw(SignClass.POSITIVE)
        S = point_add(frame, A, C, B)[0]
        claims["add-closure"].record(sign_classify(frame, S) is SignClass.POSITIVE, [A, C, S])
        for X, Y in ((A, C), (C, A)):
            P = point_mul(frame, X, Y, B)[0]
            claims["mul-closure"].record(sign_classify(frame, P) is SignClass.POSITIVE, [X, Y, P])
        A, C = draw(SignClass.NEGATIVE), draw(SignClass.NEGATIVE)
        S = point_add(frame, A, C, B)[0]
        claims["neg-add-closure"].record(sign_classify(frame, S) is SignClass.NEGATIVE, [A, C, S])
    for _ in range(negations):
        A = draw(SignClass.POSITIVE)
        N = point_neg(frame, A, B)[0]
        claims["neg-to-K-"].record(sign_classify(frame, N) is SignClass.NEGATIVE, [A, N])
    for c in claims.values():
        c.finish()
    return ConeReport(claims)


def _partition_ok(frame: Frame, X: Point, s: SignClass) -> bool:
    """Exactly one of the three class conditions holds for X."""
    O, I = frame.O, frame.I
    zero = X == O
    pos = X != O and (X == I or between(frame, O, X, I) or between(frame, O, I, X))
    neg = X != O and X != I and between(frame, X, O, I)
    expected = {SignClass.ZERO: zero, SignClass.POSITIVE: pos, SignClass.NEGATIVE: neg}
    return zero + pos + neg == 1 and expected[s]


@dataclass
class OrderReport:
    """Whether a map preserved or reversed line order on sampled triples."""

    map_kind: str
    behavior: str  # preserves | reverses | mixed
    tested: int = 0
    failures: int = 0
    witnesses: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failures == 0 and self.behavior != "mixed"

    def to_json(self) -> dict:
        return {
            "map": self.map_kind,
            "behavior": self.behavior,
            "tested": self.tested,
            "failures": self.failures,
            "witnesses": to_jsonable(self.witnesses),
        }


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _apply(map_, P: Point, path: str, source: Line) -> Point:
    if isinstance(map_, ParallelProjection):
        return project(map_, P)
    if path == "coordinates":
        return apply_translation(map_, P)
    return translate_synthetically(map_, source, P)


def translate_synthetically(t: Translation, l: Line, P: Point, off: Point | None = None) -> Point:
    """Image of P (on l) under t computed only with parallel projections.

    A translation not along l is a single projection onto t(l); one along l
    is split into two projections through an auxiliary point off l.
    """
    if t.is_identity:
        return P
    anchor = point_at(l, model_of(P).ring.zero())
    if not is_along(t, l):
        return project(translation_as_projection(t, l, anchor), P)
    if off is None:
        one = model_of(P).ring.one()
        off = Point(anchor.x, anchor.y + one)
        if incident(off, l):
            off = Point(anchor.x + one, anchor.y)
    first, second = two_stage_projections(t, l, anchor, off)
    return project(second, project(first, P))


def check_map_order(
    map_: ParallelProjection | Translation,
    triples: Iterable[Sequence[Point]],
    source: Line | None = None,
    path: str = "coordinates",
) -> OrderReport:
    """Check that a map preserves betweenness and keeps one orientation throughout.

    ``triples`` must lie on the map's source line (for a translation, pass the
    line as ``source``).  ``path`` selects how translations are evaluated:
    ``coordinates`` (displacement) or ``synthetic`` (projections only).
    """
    if isinstance(map_, ParallelProjection):
        src, dst, kind = map_.source, map_.target, "projection"
    else:
        if source is None:
            raise ValueError("a translation needs the source line of its triples")
        src, dst, kind = source, image_line(map_, source), f"translation/{path}"
    _require_order(src)
    orient: set[int] = set()
    report = OrderReport(kind, "preserves")
    for tri in triples:
        A, B, C = tri
        if not between(src, A, B, C):
            raise ValueError("sampled triples must satisfy [A,B,C]")
        imgs = [_apply(map_, P, path, src) for P in tri]
        ok = between(dst, *imgs)
        s = _sign(line_param(dst, imgs[2]) - line_param(dst, imgs[0])) * _sign(
            line_param(src, C) - line_param(src, A)
        )
        orient.add(s)
        if isinstance(map_, Translation):
            ok = ok and s == 1
        report.tested += 1
        if not ok:
            report.failures += 1
            if len(report.witnesses) < 5:
                report.witnesses.append([A, B, C, *imgs])
    if len(orient) > 1:
        report.behavior = "mixed"
    elif orient == {-1}:
        report.behavior = "reverses"
    return report


def random_triples(model: PlaneModel, line: Line, n: int, rng: random.Random) -> list[tuple[Point, Point, Point]]:
    """n triples [A,B,C] on ``line`` with B strictly between, in random orientation."""
    out = []
    while len(out) < n:
        ts = sorted({model.ring.random(rng) for _ in range(3)})
        if len(ts) < 3:
            continue
        if rng.random() < 0.5:
            ts.reverse()
        out.append(tuple(point_at(line, t) for t in ts))
    return out
