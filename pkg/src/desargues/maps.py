"""Parallel projections between lines and translations of the plane."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import InvalidProjectionError, NotOnSourceError
from .plane import (
    Line,
    PlaneModel,
    Point,
    format_line,
    incident,
    intersect,
    is_parallel,
    line_through,
    parallel_through,
    point_at,
)
from .scalars import Scalar, ring_of
from .line_algebra import ConstructionTrace

__all__ = [
    "ParallelProjection",
    "Translation",
    "apply_translation",
    "compose_translations",
    "image_line",
    "project",
    "projection_is_bijection",
    "translation_as_projection",
    "translate_points",
    "translation_from",
    "two_stage_projections",
]


@dataclass(frozen=True, slots=True)
class ParallelProjection:
    """Carries each point of ``source`` to ``target`` along lines parallel to ``direction``.

    With ``source == target`` the map is the identity whatever the direction.
    """

    source: Line
    target: Line
    direction: Line

    def __post_init__(self):
        if self.source == self.target:
            return
        if is_parallel(self.direction, self.source):
            raise InvalidProjectionError(
                f"direction {format_line(self.direction)} is parallel to source {format_line(self.source)}"
            )
        if is_parallel(self.direction, self.target):
            raise InvalidProjectionError(
                f"direction {format_line(self.direction)} is parallel to target {format_line(self.target)}"
            )

    @property
    def is_identity(self) -> bool:
        return self.source == self.target

    def inverse(self) -> ParallelProjection:
        return ParallelProjection(self.target, self.source, self.direction)

    def __call__(self, A: Point) -> Point:
        return project(self, A)


def project(pp: ParallelProjection, A: Point) -> Point:
    if not incident(A, pp.source):
        raise NotOnSourceError(f"{A} is not on the source line {format_line(pp.source)}")
    if pp.is_identity:
        return A
    return intersect(parallel_through(A, pp.direction), pp.target)


def projection_is_bijection(
    pp: ParallelProjection, model: PlaneModel, samples: int = 100, seed: int = 0
) -> bool:
    """Exhaustive on finite planes; sampled injectivity plus round-trip on infinite ones."""
    if model.ring.finite:
        src = model.points_on(pp.source)
        images = {project(pp, A) for A in src}
        return len(images) == model.ring.size and all(incident(P, pp.target) for P in images)
    rng = random.Random(seed)
    pts: set[Point] = set()
    while len(pts) < samples:
        pts.add(model.random_point_on(pp.source, rng))
    images = {}
    back = pp.inverse()
    for A in pts:
        B = project(pp, A)
        if not incident(B, pp.target) or project(back, B) != A:
            return False
        images[B] = A
    return len(images) == len(pts)


@dataclass(frozen=True, slots=True)
class Translation:
    """P -> P + (dx, dy)."""

    dx: Scalar
    dy: Scalar

    @property
    def is_identity(self) -> bool:
        return not self.dx and not self.dy

    def __call__(self, P: Point) -> Point:
        return apply_translation(self, P)


def translation_from(A: Point, B: Point) -> Translation:
    return Translation(B.x - A.x, B.y - A.y)


def apply_translation(t: Translation, P: Point) -> Point:
    return Point(P.x + t.dx, P.y + t.dy)


def compose_translations(t1: Translation, t2: Translation) -> Translation:
    """t1 after t2.  Translations commute, so the order only matters for bookkeeping."""
    return Translation(t1.dx + t2.dx, t1.dy + t2.dy)


def identity_translation(ring) -> Translation:
    z = ring.zero()
    return Translation(z, z)


def image_line(t: Translation, l: Line) -> Line:
    # any point of l will do; take the one at parameter 0
    zero = ring_of(t.dx).zero()
    return parallel_through(apply_translation(t, point_at(l, zero)), l)


def is_along(t: Translation, l: Line) -> bool:
    """True when ``t`` maps ``l`` onto itself."""
    return image_line(t, l) == l


def translation_as_projection(t: Translation, l: Line, anchor: Point) -> ParallelProjection:
    """Restriction of a translation not along ``l`` to ``l``, as a projection onto ``t(l)``.

    The direction is the line joining ``anchor`` (a point of ``l``) to its image.
    """
    if not incident(anchor, l):
        raise NotOnSourceError(f"anchor {anchor} is not on {format_line(l)}")
    image = apply_translation(t, anchor)
    if image == anchor or incident(image, l):
        raise InvalidProjectionError("translation runs along the line; use two_stage_projections")
    return ParallelProjection(l, parallel_through(image, l), line_through(anchor, image))


def two_stage_projections(
    t: Translation, l: Line, anchor: Point, off: Point
) -> tuple[ParallelProjection, ParallelProjection]:
    """Split a translation along ``l`` into two projections through a point ``off`` not on ``l``.

    The first carries ``anchor`` to ``off`` onto the parallel of ``l`` through
    ``off``; the second carries ``off`` back to ``t(anchor)`` on ``l``.
    """
    if incident(off, l):
        raise InvalidProjectionError(f"auxiliary point {off} lies on {format_line(l)}")
    if not incident(anchor, l):
        raise NotOnSourceError(f"anchor {anchor} is not on {format_line(l)}")
    mid = parallel_through(off, l)
    first = ParallelProjection(l, mid, line_through(anchor, off))
    second = ParallelProjection(mid, l, line_through(off, apply_translation(t, anchor)))
    return first, second


def _parallelogram(P: Point, A: Point, B: Point, trace: ConstructionTrace, tag: str) -> Point:
    """Fourth vertex X of the parallelogram A B X P, for P off the line AB."""
    first = trace.line(f"l^{tag}_AB", parallel_through(P, line_through(A, B)))
    second = trace.line(f"l^B_A{tag}", parallel_through(B, line_through(A, P)))
    return intersect(first, second)


def translate_points(P: Point, A: Point, B: Point) -> tuple[Point, ConstructionTrace]:
    """Image of P under the translation carrying A to B, built from parallels.

    A point on the line AB is moved by way of an auxiliary point Q off that
    line: Q goes first, then P follows along the parallelogram Q Q' X P.
    """
    trace = ConstructionTrace("translate", None, {"P": P, "A": A, "B": B}, None)
    if A == B:
        trace.result = trace.point("X", P)
        return P, trace
    AB = line_through(A, B)
    if not incident(P, AB):
        X = _parallelogram(P, A, B, trace, "P")
    else:
        one = ring_of(A.x).one()
        Q = Point(A.x, A.y + one)
        if incident(Q, AB):
            Q = Point(A.x + one, A.y)
        trace.auxiliary_B = Q
        Qp = trace.point("Q'", _parallelogram(Q, A, B, trace, "Q"))
        first = trace.line("l^P_QQ'", parallel_through(P, line_through(Q, Qp)))
        second = trace.line("l^Q'_QP", parallel_through(Qp, line_through(Q, P)))
        X = intersect(first, second)
    trace.result = trace.point("X", X)
    return X, trace
