"""Desargues and Pappus configuration checks and a budgeted configuration search."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .errors import (
    DegenerateHexagonError,
    GeometryError,
    HypothesisNotMetError,
    InvalidConfigurationError,
)
from .plane import (
    Line,
    PlaneModel,
    Point,
    collinear,
    format_line,
    incident,
    intersect,
    is_parallel,
    line_through,
    parallel_through,
)
from .reports import to_jsonable

__all__ = [
    "DesarguesConfig",
    "PappusConfig",
    "SearchReport",
    "affine_pappus_check",
    "configuration_search",
    "desargues_check",
    "pappus_check",
    "pappus_points",
]

SEARCH_SCHEMA_VERSION = 1


@dataclass(frozen=True)
class DesarguesConfig:
    """Triangles ABC and A'B'C' with vertices on three parallel rails ``lk``, ``ll``, ``lm``."""

    A: Point
    B: Point
    C: Point
    Ap: Point
    Bp: Point
    Cp: Point
    lk: Line
    ll: Line
    lm: Line

    def validate(self) -> None:
        """Raise InvalidConfigurationError naming the first failed hypothesis."""
        rails = (self.lk, self.ll, self.lm)
        if not (is_parallel(self.lk, self.ll) and is_parallel(self.ll, self.lm)):
            raise InvalidConfigurationError("rails are not parallel")
        if len(set(rails)) != 3:
            raise InvalidConfigurationError("rails are not pairwise distinct")
        for name, rail, rail_name in (
            ("A", self.lk, "lk"), ("A'", self.lk, "lk"),
            ("B", self.ll, "ll"), ("B'", self.ll, "ll"),
            ("C", self.lm, "lm"), ("C'", self.lm, "lm"),
        ):
            P = getattr(self, name.replace("'", "p"))
            if not incident(P, rail):
                raise InvalidConfigurationError(f"{name} is not on {rail_name}")
        if self.A == self.C:
            raise InvalidConfigurationError("A = C")
        if self.Ap == self.Cp:
            raise InvalidConfigurationError("A' = C'")
        AB, BC = line_through(self.A, self.B), line_through(self.B, self.C)
        if AB == self.ll:
            raise InvalidConfigurationError("l^AB = ll")
        if BC == self.ll:
            raise InvalidConfigurationError("l^BC = ll")
        if not is_parallel(AB, line_through(self.Ap, self.Bp)):
            raise InvalidConfigurationError("l^AB is not parallel to l^A'B'")
        if not is_parallel(BC, line_through(self.Bp, self.Cp)):
            raise InvalidConfigurationError("l^BC is not parallel to l^B'C'")

    def witness(self) -> dict:
        return to_jsonable({
            "A": self.A, "B": self.B, "C": self.C,
            "A'": self.Ap, "B'": self.Bp, "C'": self.Cp,
            "lk": self.lk, "ll": self.ll, "lm": self.lm,
        })


def desargues_check(cfg: DesarguesConfig) -> bool:
    """Whether l^AC is parallel to l^A'C' (hypotheses are validated first)."""
    cfg.validate()
    return is_parallel(line_through(cfg.A, cfg.C), line_through(cfg.Ap, cfg.Cp))


@dataclass(frozen=True)
class PappusConfig:
    """E, C, A on one line and B, F, D on another."""

    E: Point
    C: Point
    A: Point
    B: Point
    F: Point
    D: Point

    @property
    def points(self) -> tuple[Point, ...]:
        return (self.E, self.C, self.A, self.B, self.F, self.D)

    def lines(self) -> tuple[Line, Line]:
        pts = self.points
        if len(set(pts)) != 6:
            raise InvalidConfigurationError("the six points are not mutually distinct")
        first = line_through(self.E, self.A)
        second = line_through(self.B, self.D)
        if not incident(self.C, first):
            raise InvalidConfigurationError("C is not on l^EA")
        if not incident(self.F, second):
            raise InvalidConfigurationError("F is not on l^BD")
        if first == second:
            raise InvalidConfigurationError("the two carrier lines coincide")
        for name, P in zip("ECABFD", pts):
            if incident(P, first) and incident(P, second):
                raise InvalidConfigurationError(f"{name} lies on both carrier lines")
        return first, second

    def witness(self) -> dict:
        return to_jsonable(dict(zip("ECABFD", self.points)))


def _cross(P1: Point, Q1: Point, P2: Point, Q2: Point, name: str) -> Point:
    X = intersect(line_through(P1, Q1), line_through(P2, Q2))
    if not isinstance(X, Point):
        raise DegenerateHexagonError(f"cross-join pair for {name} is parallel")
    return X


def pappus_points(cfg: PappusConfig) -> tuple[Point, Point, Point]:
    """N = CB.EF, L = AF.CD, M = AB.ED."""
    cfg.lines()
    N = _cross(cfg.C, cfg.B, cfg.E, cfg.F, "N")
    L = _cross(cfg.A, cfg.F, cfg.C, cfg.D, "L")
    M = _cross(cfg.A, cfg.B, cfg.E, cfg.D, "M")
    return N, L, M


def pappus_check(cfg: PappusConfig) -> bool:
    return collinear(*pappus_points(cfg))


def affine_pappus_check(cfg: PappusConfig, axis: Line) -> bool:
    """Given that CB.EF and AF.CD lie on ``axis``, whether AB.ED does as well."""
    try:
        first, second = cfg.lines()
    except InvalidConfigurationError as exc:
        raise HypothesisNotMetError(str(exc)) from exc
    try:
        N = _cross(cfg.C, cfg.B, cfg.E, cfg.F, "N")
        L = _cross(cfg.A, cfg.F, cfg.C, cfg.D, "L")
    except DegenerateHexagonError as exc:
        raise HypothesisNotMetError(str(exc)) from exc
    if not (incident(N, axis) and incident(L, axis)):
        raise HypothesisNotMetError(f"CB.EF and AF.CD are not both on {format_line(axis)}")
    excluded = {intersect(first, second), intersect(second, axis), intersect(axis, first)}
    for name, P in zip("ECABFD", cfg.points):
        if P in excluded:
            raise HypothesisNotMetError(f"{name} lies on a pairwise meet of the three lines")
    M = _cross(cfg.A, cfg.B, cfg.E, cfg.D, "M")
    return incident(M, axis)


@dataclass
class SearchReport:
    kind: str
    model: str
    mode: str
    seed: int
    budget: int
    tested: int = 0
    rejected: int = 0
    failure_count: int = 0
    failures: list = field(default_factory=list)
    backend: str = ""

    def to_json(self) -> dict:
        return {
            "schema_version": SEARCH_SCHEMA_VERSION,
            "kind": self.kind,
            "model": self.model,
            "mode": self.mode,
            "seed": self.seed,
            "budget": self.budget,
            "tested": self.tested,
            "rejected": self.rejected,
            "failure_count": self.failure_count,
            "failures": self.failures,
        }


def exhaustive_size(kind: str, p: int) -> int:
    """Number of candidate configurations the exhaustive scan over GF(p) visits."""
    nlines = p * p + p
    if kind == "pappus":
        inter = nlines * p * p * ((p - 1) * (p - 2) * (p - 3)) ** 2
        par = nlines * (p - 1) * (p * (p - 1) * (p - 2)) ** 2
        return inter + par
    if kind == "desargues":
        return (p + 1) * p * (p - 1) * (p - 2) * p**4
    raise ValueError(f"unknown configuration kind {kind!r}")


def random_desargues(model: PlaneModel, rng: random.Random) -> DesarguesConfig:
    """Rails, A, B, C and A' from the bounded sampler; B' and C' forced by the
    two parallelism hypotheses.  May raise when a forced meet does not exist."""
    direction = model.random_line(rng, vertical_rate=0.2)
    rails = []
    while len(rails) < 3:
        l = parallel_through(model.random_point(rng), direction)
        if l not in rails:
            rails.append(l)
    lk, ll, lm = rails
    A, B, C = (model.random_point_on(r, rng) for r in rails)
    Ap = model.random_point_on(lk, rng)
    Bp = intersect(parallel_through(Ap, line_through(A, B)), ll)
    if not isinstance(Bp, Point):
        raise InvalidConfigurationError("no B' on ll")
    Cp = intersect(parallel_through(Bp, line_through(B, C)), lm)
    if not isinstance(Cp, Point):
        raise InvalidConfigurationError("no C' on lm")
    return DesarguesConfig(A, B, C, Ap, Bp, Cp, lk, ll, lm)


def random_pappus(model: PlaneModel, rng: random.Random, parallel_rate: float = 0.2) -> PappusConfig:
    first = model.random_line(rng)
    if rng.random() < parallel_rate:
        second = parallel_through(model.random_point(rng), first)
    else:
        second = model.random_line(rng)
    pts = [model.random_point_on(first, rng) for _ in range(3)]
    pts += [model.random_point_on(second, rng) for _ in range(3)]
    return PappusConfig(*pts)


def _check_one(kind: str, cfg) -> bool:
    return desargues_check(cfg) if kind == "desargues" else pappus_check(cfg)


def configuration_search(
    model: PlaneModel, kind: str, budget: int, seed: int = 0, max_witnesses: int = 5
) -> SearchReport:
    """Test ``budget`` valid configurations drawn with ``seed``; on a finite plane
    whose exhaustive scan fits in the budget, scan every configuration instead.

    Invalid or degenerate draws are counted in ``rejected`` and do not use budget.
    """
    kind = kind.lower()
    if kind not in ("desargues", "pappus"):
        raise ValueError(f"unknown configuration kind {kind!r}")
    if budget < 1:
        raise ValueError("budget must be at least 1")
    if model.ring.finite and exhaustive_size(kind, model.ring.p) <= budget:
        return _exhaustive(model, kind, seed, budget, max_witnesses)

    rng = random.Random(seed)
    report = SearchReport(kind, str(model), "sampled", seed, budget)
    make = random_desargues if kind == "desargues" else random_pappus
    attempts = 0
    while report.tested < budget and attempts < 50 * budget:
        attempts += 1
        try:
            cfg = make(model, rng)
            ok = _check_one(kind, cfg)
        except (InvalidConfigurationError, DegenerateHexagonError):
            report.rejected += 1
            continue
        report.tested += 1
        if not ok:
            report.failure_count += 1
            if len(report.failures) < max_witnesses:
                report.failures.append(_witness(kind, cfg))
    return report


def _witness(kind: str, cfg) -> dict:
    w = cfg.witness()
    if kind == "pappus":
        w.update(to_jsonable(dict(zip("NLM", pappus_points(cfg)))))
    return w


def _exhaustive(model: PlaneModel, kind: str, seed: int, budget: int, max_witnesses: int) -> SearchReport:
    from .kernels import BACKEND, gf_tables

    t = gf_tables(model.ring.p)
    report = SearchReport(kind, str(model), "exhaustive", seed, budget, backend=BACKEND)
    if kind == "pappus":
        tested, rejected, failures, wit = t.pappus_exhaustive(max_witnesses)
        cfgs = [PappusConfig(*(t.point(i) for i in w)) for w in wit]
    else:
        tested, rejected, failures, wit = t.desargues_exhaustive(max_witnesses)
        cfgs = [
            DesarguesConfig(*(t.point(i) for i in w[:6]), *(t.line(i) for i in w[6:]))
            for w in wit
        ]
    report.tested, report.rejected, report.failure_count = tested, rejected, failures
    report.failures = [_witness(kind, c) for c in cfgs]
    return report


def check_safely(kind: str, cfg) -> bool | None:
    """Check result, or None when the configuration is invalid or degenerate."""
    try:
        return _check_one(kind, cfg)
    except GeometryError:
        return None
