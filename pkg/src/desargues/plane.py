"""Affine coordinate plane over a division ring.

A point is a pair ``(x, y)``.  A non-vertical line is the point set
``{(t, t*m + b)}``; the parameter multiplies the slope from the left, which
makes the plane Desarguesian for every division ring (including the
noncommutative quaternions).  Vertical lines are ``{(c, t)}``.
"""

from __future__ import annotations

import enum
import itertools
import random
import re
from dataclasses import dataclass
from typing import Iterator, Union

from .errors import DegenerateJoinError, NotEnumerableError, NotOnLineError
from .scalars import RingDescriptor, Scalar, ring_of, scalar_inv

__all__ = [
    "Line",
    "ParallelOutcome",
    "PlaneModel",
    "Point",
    "Sloped",
    "Vertical",
    "collinear",
    "format_line",
    "format_point",
    "incident",
    "intersect",
    "is_parallel",
    "line_param",
    "line_through",
    "parallel_through",
    "parse_line",
    "parse_point",
    "point_at",
]


@dataclass(frozen=True, slots=True)
class Point:
    x: Scalar
    y: Scalar

    def __str__(self):
        return format_point(self)


@dataclass(frozen=True, slots=True)
class Vertical:
    """The line x = c."""

    c: Scalar

    def __str__(self):
        return format_line(self)


@dataclass(frozen=True, slots=True)
class Sloped:
    """The line y = x*m + b."""

    m: Scalar
    b: Scalar

    def __str__(self):
        return format_line(self)


Line = Union[Vertical, Sloped]


class ParallelOutcome(enum.Enum):
    COINCIDENT = "coincident"
    DISJOINT = "disjoint"


def line_through(P: Point, Q: Point) -> Line:
    if P == Q:
        raise DegenerateJoinError(f"no unique line through {P} and itself")
    if P.x == Q.x:
        return Vertical(P.x)
    m = scalar_inv(Q.x - P.x) * (Q.y - P.y)
    return Sloped(m, P.y - P.x * m)


def incident(P: Point, l: Line) -> bool:
    if isinstance(l, Vertical):
        return P.x == l.c
    return P.y == P.x * l.m + l.b


def is_parallel(l1: Line, l2: Line) -> bool:
    """Equal-or-disjoint: verticals with verticals, sloped lines of equal slope."""
    if isinstance(l1, Vertical) or isinstance(l2, Vertical):
        return isinstance(l1, Vertical) and isinstance(l2, Vertical)
    return l1.m == l2.m


def parallel_through(P: Point, l: Line) -> Line:
    if isinstance(l, Vertical):
        return Vertical(P.x)
    return Sloped(l.m, P.y - P.x * l.m)


def intersect(l1: Line, l2: Line) -> Point | ParallelOutcome:
    if is_parallel(l1, l2):
        return ParallelOutcome.COINCIDENT if l1 == l2 else ParallelOutcome.DISJOINT
    if isinstance(l1, Vertical):
        return Point(l1.c, l1.c * l2.m + l2.b)
    if isinstance(l2, Vertical):
        return Point(l2.c, l2.c * l1.m + l1.b)
    x = (l2.b - l1.b) * scalar_inv(l1.m - l2.m)
    return Point(x, x * l1.m + l1.b)


def collinear(P: Point, Q: Point, R: Point) -> bool:
    if P == Q or P == R or Q == R:
        return True
    return incident(R, line_through(P, Q))


def point_at(l: Line, t: Scalar) -> Point:
    """The point of ``l`` with coordinate parameter ``t`` (x for sloped, y for vertical)."""
    if isinstance(l, Vertical):
        return Point(l.c, t)
    return Point(t, t * l.m + l.b)


def line_param(l: Line, P: Point) -> Scalar:
    """Inverse of :func:`point_at`."""
    if not incident(P, l):
        raise NotOnLineError(f"{P} is not on {format_line(l)}")
    return P.y if isinstance(l, Vertical) else P.x


def format_point(P: Point) -> str:
    return f"({P.x}, {P.y})"


def format_line(l: Line) -> str:
    if isinstance(l, Vertical):
        return f"x = {l.c}"
    return f"y = {l.m}*x + {l.b}"


_POINT_RE = re.compile(r"^\s*\(\s*(.+?)\s*,\s*(.+?)\s*\)\s*$")
_VERT_RE = re.compile(r"^\s*x\s*=\s*(.+?)\s*$")
_SLOPED_RE = re.compile(r"^\s*y\s*=\s*(.+?)\s*\*\s*x\s*\+\s*(.+?)\s*$")


def parse_point(text: str, ring: RingDescriptor) -> Point:
    m = _POINT_RE.match(text)
    if not m:
        raise ValueError(f"malformed point {text!r}")
    return Point(ring.parse(m.group(1)), ring.parse(m.group(2)))


def parse_line(text: str, ring: RingDescriptor) -> Line:
    m = _VERT_RE.match(text)
    if m:
        return Vertical(ring.parse(m.group(1)))
    m = _SLOPED_RE.match(text)
    if m:
        return Sloped(ring.parse(m.group(1)), ring.parse(m.group(2)))
    raise ValueError(f"malformed line {text!r}")


@dataclass(frozen=True, slots=True)
class PlaneModel:
    """The coordinate plane K^2 over ``ring``."""

    ring: RingDescriptor

    def __str__(self):
        return str(self.ring)

    def point(self, x, y) -> Point:
        return Point(self.ring(x), self.ring(y))

    def sloped(self, m, b) -> Sloped:
        return Sloped(self.ring(m), self.ring(b))

    def vertical(self, c) -> Vertical:
        return Vertical(self.ring(c))

    def contains(self, obj) -> bool:
        if isinstance(obj, Point):
            vals = (obj.x, obj.y)
        elif isinstance(obj, Vertical):
            vals = (obj.c,)
        elif isinstance(obj, Sloped):
            vals = (obj.m, obj.b)
        else:
            return False
        return all(self.ring.contains(v) for v in vals)

    def enumerate_points(self) -> Iterator[Point]:
        if not self.ring.finite:
            raise NotEnumerableError(f"the plane over {self.ring} is infinite")
        els = list(self.ring.elements())
        return (Point(x, y) for x, y in itertools.product(els, els))

    def enumerate_lines(self) -> Iterator[Line]:
        if not self.ring.finite:
            raise NotEnumerableError(f"the plane over {self.ring} is infinite")
        els = list(self.ring.elements())
        yield from (Sloped(m, b) for m, b in itertools.product(els, els))
        yield from (Vertical(c) for c in els)

    def points_on(self, l: Line) -> list[Point]:
        if not self.ring.finite:
            raise NotEnumerableError(f"lines over {self.ring} are infinite")
        return [point_at(l, t) for t in self.ring.elements()]

    def random_point(self, rng: random.Random, bound: int = 20) -> Point:
        return Point(self.ring.random(rng, bound), self.ring.random(rng, bound))

    def random_line(self, rng: random.Random, bound: int = 20, vertical_rate: float = 0.1) -> Line:
        if rng.random() < vertical_rate:
            return Vertical(self.ring.random(rng, bound))
        return Sloped(self.ring.random(rng, bound), self.ring.random(rng, bound))

    def random_point_on(self, l: Line, rng: random.Random, bound: int = 20) -> Point:
        return point_at(l, self.ring.random(rng, bound))

    def random_point_off(self, l: Line, rng: random.Random, bound: int = 20) -> Point:
        while True:
            P = self.random_point(rng, bound)
            if not incident(P, l):
                return P

    def non_collinear_triple(self) -> tuple[Point, Point, Point]:
        zero, one = self.ring.zero(), self.ring.one()
        return Point(zero, zero), Point(one, zero), Point(zero, one)


def model_of(obj) -> PlaneModel:
    """The plane model an object's coordinates live in."""
    if isinstance(obj, Point):
        return PlaneModel(ring_of(obj.x))
    if isinstance(obj, Vertical):
        return PlaneModel(ring_of(obj.c))
    return PlaneModel(ring_of(obj.m))
