"""Suite runners.  Each stated property of the constructions is an executable
claim with a uniform report."""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field

from .configurations import (
    DesarguesConfig,
    PappusConfig,
    affine_pappus_check,
    configuration_search,
    exhaustive_size,
    pappus_check,
    pappus_points,
    random_pappus,
)
from .errors import GeometryError, SuiteModelMismatchError
from .line_algebra import (
    Frame,
    choose_auxiliary,
    from_parameter,
    point_add,
    point_inv,
    point_mul,
    point_neg,
    to_parameter,
)
from .maps import ParallelProjection, Translation, apply_translation, is_along
from .ordering import (
    ORDER_CLAIMS,
    check_map_order,
    check_order_axioms,
    check_positive_cone,
    random_quadruples,
    random_triples,
    translate_synthetically,
)
from .plane import (
    ParallelOutcome,
    PlaneModel,
    Point,
    collinear,
    incident,
    intersect,
    is_parallel,
    line_through,
    parallel_through,
    point_at,
)
from .reports import ClaimResult

__all__ = [
    "CLAIMS",
    "Mode",
    "SUITES",
    "SuiteReport",
    "frame_independence_check",
    "run_suite",
]

REPORT_SCHEMA_VERSION = 1
EXHAUSTIVE_LIMIT = 10**8

# claim id -> (suite, what it states)
CLAIMS: dict[str, tuple[str, str]] = {
    "affine-1": ("affine-axioms", "exactly one line through two distinct points"),
    "affine-2": ("affine-axioms", "exactly one parallel through a point off a line"),
    "affine-3": ("affine-axioms", "three non-collinear points exist"),
    "Desargues": ("desargues", "parallel-rails Desargues axiom: l^AC parallel to l^A'C'"),
    "Pappus": ("pappus", "Pappus hexagon: N, L, M collinear"),
    "affine-Pappus": ("pappus", "affine Pappus condition: AB.ED lies on the axis through CB.EF and AF.CD"),
    "Tecklenburg-GF(p)": ("pappus", "every finite Desarguesian affine plane is Pappian"),
    "finite-ordered-plane-Pappian": ("pappus", "finite ordered Desarguesian plane in R^2 is Pappian"),
    **{k: ("order-axioms", v) for k, v in ORDER_CLAIMS.items()},
    "projection-order": ("map-order", "parallel projection preserves or reverses line order, never a mix"),
    "translation-order": ("map-order", "translations preserve order in a line"),
    "trichotomy": ("positive-cone", "the line splits into negatives, zero and positives"),
    "add-closure": ("positive-cone", "sum of two positive points is positive"),
    "mul-closure": ("positive-cone", "product of two positive points is positive"),
    "neg-add-closure": ("positive-cone", "sum of two negative points is negative"),
    "neg-to-K-": ("positive-cone", "negative of a positive point is negative"),
    "ordered-skew-field": ("positive-cone", "the skew field on an ordered line is ordered"),
    "finite-ordered-skew-field": ("positive-cone", "finite skew field on an ordered line in R^2 is ordered"),
    "add-assoc": ("skew-field", "(A+B)+C = A+(B+C)"),
    "add-comm": ("skew-field", "A+B = B+A"),
    "add-identity": ("skew-field", "O+A = A+O = A"),
    "add-inverse": ("skew-field", "A+(-A) = (-A)+A = O"),
    "mul-assoc": ("skew-field", "(A*B)*C = A*(B*C)"),
    "mul-identity": ("skew-field", "I*A = A*I = A"),
    "mul-inverse": ("skew-field", "left and right inverses agree and A*A^-1 = A^-1*A = I"),
    "distrib-left": ("skew-field", "A*(B+C) = A*B + A*C"),
    "distrib-right": ("skew-field", "(B+C)*A = B*A + C*A"),
    "mul-commutativity": ("skew-field", "constructed product commutes exactly when the ring does"),
    "oracle-agreement": ("skew-field", "parameters carry the constructed + and * to ring + and *"),
    "B-independence": ("skew-field", "A+C and A*C do not depend on the auxiliary point B"),
    "frame-independence": ("skew-field", "skew fields built on two frames are isomorphic"),
}

SUITES = ("affine-axioms", "desargues", "pappus", "order-axioms", "skew-field", "positive-cone", "map-order")
ORDERED_SUITES = {"order-axioms", "positive-cone", "map-order"}

NOT_INSTANTIABLE = {
    "finite-ordered-plane-Pappian": "a finite ordered plane would need a finite ordered field, "
    "which the cone closure rules out; see Tecklenburg-GF(p) and the positive-cone claims",
    "finite-ordered-skew-field": "no finite subfield of the reals exists beyond the trivial case; "
    "see the positive-cone claims over the rationals",
}


@dataclass(frozen=True)
class Mode:
    exhaustive: bool = False
    seed: int = 0
    samples: int = 200

    def to_json(self) -> dict:
        if self.exhaustive:
            return {"kind": "exhaustive", "seed": self.seed}
        return {"kind": "sampled", "seed": self.seed, "samples": self.samples}


@dataclass
class SuiteReport:
    suite: str
    model: str
    mode: Mode
    checks: list[ClaimResult] = field(default_factory=list)
    skipped_suites: dict[str, str] = field(default_factory=dict)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.finish().passed for c in self.checks)

    @property
    def failures(self) -> int:
        return sum(c.failures for c in self.checks)

    def check(self, claim: str) -> ClaimResult:
        for c in self.checks:
            if c.claim == claim:
                return c
        raise KeyError(claim)

    def to_json(self, timing: bool = True) -> dict:
        out = {
            "schema_version": REPORT_SCHEMA_VERSION,
            "suite": self.suite,
            "model": self.model,
            "mode": self.mode.to_json(),
            "passed": self.passed,
            "checks": [c.to_json() for c in sorted(self.checks, key=lambda c: c.claim)],
            "skipped_suites": dict(sorted(self.skipped_suites.items())),
        }
        if timing:
            out["wall_time"] = round(self.wall_time, 6)
        return out


def _claim(cid: str) -> ClaimResult:
    return ClaimResult(cid, CLAIMS[cid][1])


def standard_frame(model: PlaneModel) -> Frame:
    return Frame.through(model.point(0, 0), model.point(1, 0))


def compatibility(name: str, model: PlaneModel, mode: Mode) -> str | None:
    """Why ``name`` cannot run on (model, mode), or None when it can."""
    if name not in SUITES:
        return f"unknown suite {name!r}"
    if name in ORDERED_SUITES and not model.ring.ordered:
        return f"{name} needs an ordered model; {model} has no order"
    if mode.exhaustive and not model.ring.finite:
        return f"exhaustive mode needs a finite model; {model} is infinite"
    return None


def run_suite(name: str, model: PlaneModel, mode: Mode = Mode()) -> SuiteReport:
    """Run one suite, or every compatible suite for ``all``."""
    start = time.perf_counter()
    if name == "all":
        report = SuiteReport("all", str(model), mode)
        for suite in SUITES:
            why = compatibility(suite, model, mode)
            if why:
                report.skipped_suites[suite] = why
                continue
            report.checks.extend(_RUNNERS[suite](model, mode))
    else:
        why = compatibility(name, model, mode)
        if why:
            raise SuiteModelMismatchError(why)
        report = SuiteReport(name, str(model), mode, _RUNNERS[name](model, mode))
    for c in report.checks:
        c.finish()
    report.wall_time = time.perf_counter() - start
    return report


# --- affine axioms -------------------------------------------------------


def _affine_exhaustive(model: PlaneModel) -> list[ClaimResult]:
    a1, a2, a3 = _claim("affine-1"), _claim("affine-2"), _claim("affine-3")
    lines = list(model.enumerate_lines())
    point_sets = {l: frozenset(model.points_on(l)) for l in lines}
    cover: dict[frozenset, list] = {}
    for l, pts in point_sets.items():
        for P, Q in itertools.combinations(pts, 2):
            cover.setdefault(frozenset((P, Q)), []).append(l)
    through: dict[Point, list] = {}
    for l, pts in point_sets.items():
        for P in pts:
            through.setdefault(P, []).append(l)
    for P, Q in itertools.combinations(model.enumerate_points(), 2):
        found = cover.get(frozenset((P, Q)), [])
        ok = len(found) == 1 and found[0] == line_through(P, Q) == line_through(Q, P)
        a1.record(ok, [P, Q])
    for P in model.enumerate_points():
        for l in lines:
            if P in point_sets[l]:
                continue
            missing = [m for m in through[P] if not (point_sets[m] & point_sets[l])]
            a2.record(len(missing) == 1 and missing[0] == parallel_through(P, l), [P, l])
    _affine_three(model, a3)
    return [a1, a2, a3]


def _affine_three(model: PlaneModel, claim: ClaimResult) -> None:
    triple = model.non_collinear_triple()
    claim.record(not collinear(*triple), list(triple))


def _affine_sampled(model: PlaneModel, mode: Mode) -> list[ClaimResult]:
    rng = random.Random(mode.seed)
    a1, a2, a3 = _claim("affine-1"), _claim("affine-2"), _claim("affine-3")
    for _ in range(mode.samples):
        P, Q = model.random_point(rng), model.random_point(rng)
        if P == Q:
            continue
        l = line_through(P, Q)
        R = model.random_point_on(l, rng)
        ok = l == line_through(Q, P) and incident(P, l) and incident(Q, l)
        if R not in (P, Q):
            ok = ok and line_through(P, R) == l and line_through(R, Q) == l
        a1.record(ok, [P, Q])

        m = model.random_line(rng)
        S = model.random_point_off(m, rng)
        par = parallel_through(S, m)
        ok = incident(S, par) and is_parallel(par, m) and intersect(par, m) is ParallelOutcome.DISJOINT
        # any other line through S meets m
        T = model.random_point_off(par, rng)
        ok = ok and isinstance(intersect(line_through(S, T), m), Point)
        a2.record(ok, [S, m])
    _affine_three(model, a3)
    return [a1, a2, a3]


def _run_affine(model: PlaneModel, mode: Mode) -> list[ClaimResult]:
    return _affine_exhaustive(model) if mode.exhaustive else _affine_sampled(model, mode)


# --- configurations ------------------------------------------------------


FIG1 = ((0, -1), (2, 0), (4, -1), (0, 1), (2, 2), (4, 1))


def fig1_config(model: PlaneModel) -> DesarguesConfig:
    pts = [model.point(x, y) for x, y in FIG1]
    return DesarguesConfig(*pts, model.vertical(0), model.vertical(2), model.vertical(4))


def fig2_config(model: PlaneModel) -> PappusConfig:
    from fractions import Fraction as F

    coords = ((1, F(12, 5)), (F(5, 2), 3), (4, F(18, 5)), (1, F(-2, 5)), (F(5, 2), -1), (4, F(-8, 5)))
    return PappusConfig(*(model.point(x, y) for x, y in coords))


def _search_into(claim: ClaimResult, report) -> None:
    claim.tested += report.tested
    claim.applicable += report.tested
    claim.failures += report.failure_count
    claim.witnesses.extend(report.failures[: 5 - len(claim.witnesses)])
    claim.note = f"{report.mode}; rejected {report.rejected}"


def _budget(kind: str, model: PlaneModel, mode: Mode) -> int:
    if not mode.exhaustive:
        return mode.samples
    size = exhaustive_size(kind, model.ring.p)
    if size > EXHAUSTIVE_LIMIT:
        raise SuiteModelMismatchError(f"exhaustive {kind} scan over {model} visits {size} configurations")
    return max(size, 1)


def _run_desargues(model: PlaneModel, mode: Mode) -> list[ClaimResult]:
    claim = _claim("Desargues")
    if model.ring.ordered:
        from .configurations import desargues_check

        claim.record(desargues_check(fig1_config(model)), fig1_config(model).witness())
    report = configuration_search(model, "desargues", _budget("desargues", model, mode), mode.seed)
    _search_into(claim, report)
    return [claim]


def _run_pappus(model: PlaneModel, mode: Mode) -> list[ClaimResult]:
    pappus, affine, teck = _claim("Pappus"), _claim("affine-Pappus"), _claim("Tecklenburg-GF(p)")
    if model.ring.ordered:
        cfg = fig2_config(model)
        pappus.record(pappus_check(cfg), cfg.witness())
    report = configuration_search(model, "pappus", _budget("pappus", model, mode), mode.seed)
    _search_into(pappus, report)
    if model.ring.finite and report.mode == "exhaustive":
        _search_into(teck, report)
    elif model.ring.finite:
        _search_into(teck, report)
        teck.note += "; sampled, run with exhaustive mode for the full statement"
    else:
        teck.status = "skipped"
        teck.note = f"{model} is infinite"

    rng = random.Random(mode.seed + 1)
    attempts = 0
    while affine.tested < mode.samples and attempts < 50 * mode.samples:
        attempts += 1
        cfg = random_pappus(model, rng)
        try:
            N, L, M = pappus_points(cfg)
        except GeometryError:
            continue
        if N == L:
            continue
        axis = line_through(N, L)
        try:
            holds = affine_pappus_check(cfg, axis)
        except GeometryError:
            continue
        affine.record(holds == pappus_check(cfg) and holds, cfg.witness())

    rest = _claim("finite-ordered-plane-Pappian")
    rest.status, rest.note = "not-instantiable", NOT_INSTANTIABLE[rest.claim]
    return [pappus, affine, teck, rest]


# --- order ---------------------------------------------------------------


def _run_order(model: PlaneModel, mode: Mode) -> list[ClaimResult]:
    rng = random.Random(mode.seed)
    merged = {k: _claim(k) for k in ORDER_CLAIMS}
    for _ in range(mode.samples):
        line = model.random_line(rng)
        report = check_order_axioms(line, random_quadruples(model, line, 1, rng))
        for k, c in report.claims.items():
            m = merged[k]
            m.tested += c.tested
            m.applicable += c.applicable
            m.failures += c.failures
            m.witnesses.extend(c.witnesses[: 5 - len(m.witnesses)])
    return list(merged.values())


def _random_projection(model: PlaneModel, rng: random.Random) -> ParallelProjection:
    while True:
        src, dst, d = model.random_line(rng), model.random_line(rng), model.random_line(rng)
        if src == dst or is_parallel(d, src) or is_parallel(d, dst):
            continue
        return ParallelProjection(src, dst, d)


def _random_translation(model: PlaneModel, line, rng: random.Random) -> Translation:
    """Half of the draws run along ``line`` so the two-stage path is exercised."""
    while True:
        if rng.random() < 0.5:
            A = point_at(line, model.ring.random(rng))
            B = point_at(line, model.ring.random(rng))
        else:
            A, B = model.random_point(rng), model.random_point(rng)
        if A != B:
            return Translation(B.x - A.x, B.y - A.y)


def check_translations(model: PlaneModel, count: int, triples_each: int, seed: int) -> ClaimResult:
    """Translations keep betweenness and orientation by both evaluation paths,
    and the projection-only path lands on the same points as the displacement."""
    rng = random.Random(seed)
    claim = _claim("translation-order")
    along = 0
    for _ in range(count):
        line = model.random_line(rng)
        t = _random_translation(model, line, rng)
        along += is_along(t, line)
        tris = random_triples(model, line, triples_each, rng)
        coord = check_map_order(t, tris, source=line, path="coordinates")
        synth = check_map_order(t, tris, source=line, path="synthetic")
        agree = all(
            apply_translation(t, P) == translate_synthetically(t, line, P) for tri in tris for P in tri
        )
        claim.record(coord.passed and synth.passed and agree, [t.dx, t.dy, line])
    claim.note = f"{along} of {count} translations run along their line"
    return claim


def check_projections(model: PlaneModel, count: int, triples_each: int, seed: int) -> ClaimResult:
    rng = random.Random(seed)
    claim = _claim("projection-order")
    kinds = {"preserves": 0, "reverses": 0}
    for _ in range(count):
        pp = _random_projection(model, rng)
        rep = check_map_order(pp, random_triples(model, pp.source, triples_each, rng))
        if rep.behavior in kinds:
            kinds[rep.behavior] += 1
        claim.record(rep.passed, [pp.source, pp.target, pp.direction])
    claim.note = f"{kinds['preserves']} preserving, {kinds['reverses']} reversing"
    return claim


def _run_map_order(model: PlaneModel, mode: Mode) -> list[ClaimResult]:
    return [
        check_projections(model, mode.samples, 10, mode.seed),
        check_translations(model, mode.samples, 5, mode.seed + 1),
    ]


def _run_cone(model: PlaneModel, mode: Mode) -> list[ClaimResult]:
    frame = standard_frame(model)
    rep = check_positive_cone(frame, pairs=mode.samples, negations=max(1, mode.samples // 2), seed=mode.seed)
    out = [_claim(k) for k in ("trichotomy", "add-closure", "mul-closure", "neg-add-closure", "neg-to-K-")]
    for c in out:
        src = rep.claims[c.claim]
        c.tested, c.applicable, c.failures, c.witnesses = src.tested, src.applicable, src.failures, src.witnesses
    ordered = _claim("ordered-skew-field")
    for c in out[:3]:
        ordered.record(c.failures == 0, c.claim)
    rest = _claim("finite-ordered-skew-field")
    rest.status, rest.note = "not-instantiable", NOT_INSTANTIABLE[rest.claim]
    return out + [ordered, rest]


# --- skew field ----------------------------------------------------------


def check_skew_field(frame: Frame, triples, B: Point | None = None) -> dict[str, ClaimResult]:
    """Skew-field laws using the constructions only, plus oracle agreement."""
    if B is None:
        B = choose_auxiliary(frame)
    ids = (
        "add-assoc", "add-comm", "add-identity", "add-inverse", "mul-assoc", "mul-identity",
        "mul-inverse", "distrib-left", "distrib-right", "mul-commutativity", "oracle-agreement",
    )
    claims = {k: _claim(k) for k in ids}
    O, I = frame.O, frame.I
    add = lambda X, Y: point_add(frame, X, Y, B)[0]  # noqa: E731
    mul = lambda X, Y: point_mul(frame, X, Y, B)[0]  # noqa: E731
    seen: set[Point] = set()
    noncommuting = 0
    for A, C, D in triples:
        w = [A, C, D]
        claims["add-assoc"].record(add(add(A, C), D) == add(A, add(C, D)), w)
        claims["add-comm"].record(add(A, C) == add(C, A), w)
        claims["mul-assoc"].record(mul(mul(A, C), D) == mul(A, mul(C, D)), w)
        claims["distrib-left"].record(mul(A, add(C, D)) == add(mul(A, C), mul(A, D)), w)
        claims["distrib-right"].record(mul(add(C, D), A) == add(mul(C, A), mul(D, A)), w)
        commutes = mul(A, C) == mul(C, A)
        noncommuting += not commutes
        if frame.model.ring.commutative:
            claims["mul-commutativity"].record(commutes, w)
        ta, tc = to_parameter(frame, A), to_parameter(frame, C)
        claims["oracle-agreement"].record(
            to_parameter(frame, add(A, C)) == ta + tc and to_parameter(frame, mul(A, C)) == ta * tc, w
        )
        if A in seen:
            continue
        seen.add(A)
        claims["add-identity"].record(add(O, A) == A and add(A, O) == A, [A])
        claims["mul-identity"].record(mul(I, A) == A and mul(A, I) == A, [A])
        N = point_neg(frame, A, B)[0]
        claims["add-inverse"].record(add(A, N) == O and add(N, A) == O, [A, N])
        if A != O:
            R, L = point_inv(frame, A, "right", B), point_inv(frame, A, "left", B)
            claims["mul-inverse"].record(R == L and mul(A, R) == I and mul(L, A) == I, [A, L, R])
    if not frame.model.ring.commutative:
        c = claims["mul-commutativity"]
        c.record(noncommuting > 0, "no noncommuting pair among the samples")
        c.note = f"{noncommuting} noncommuting pairs"
    return claims


def check_b_independence(frame: Frame, cases) -> ClaimResult:
    """``cases`` yields (A, C, B1, B2)."""
    claim = _claim("B-independence")
    for A, C, B1, B2 in cases:
        ok = point_add(frame, A, C, B1)[0] == point_add(frame, A, C, B2)[0]
        ok = ok and point_mul(frame, A, C, B1)[0] == point_mul(frame, A, C, B2)[0]
        claim.record(ok, [A, C, B1, B2])
    return claim


def random_b_cases(frame: Frame, n: int, rng: random.Random):
    model = frame.model
    for _ in range(n):
        A = model.random_point_on(frame.line, rng)
        C = model.random_point_on(frame.line, rng)
        yield A, C, model.random_point_off(frame.line, rng), model.random_point_off(frame.line, rng)


def exhaustive_b_cases(frame: Frame):
    model = frame.model
    B0 = choose_auxiliary(frame)
    line_pts = model.points_on(frame.line)
    off = [P for P in model.enumerate_points() if not incident(P, frame.line)]
    for A in line_pts:
        for C in line_pts:
            for B in off:
                yield A, C, B0, B


def transport(f1: Frame, f2: Frame, P: Point) -> Point:
    """The point of f2 with the same parameter P has in f1."""
    return from_parameter(f2, to_parameter(f1, P))


def frame_isomorphism(f1: Frame, f2: Frame, pairs) -> ClaimResult:
    """Whether parameter transport f1 -> f2 carries the constructed + and * of f1
    onto those of f2 on the given point pairs of f1."""
    claim = _claim("frame-independence")
    for A, C in pairs:
        tA, tC = transport(f1, f2, A), transport(f1, f2, C)
        ok = transport(f1, f2, point_add(f1, A, C)[0]) == point_add(f2, tA, tC)[0]
        ok = ok and transport(f1, f2, point_mul(f1, A, C)[0]) == point_mul(f2, tA, tC)[0]
        claim.record(ok, [f1.to_json(), f2.to_json(), A, C])
    return claim


def frame_independence_check(model: PlaneModel, seeds=(0,), samples: int = 200, exhaustive: bool = False) -> SuiteReport:
    """Compare skew fields on two frames.  Sampled: for each seed a second frame on
    another line, ``samples`` random pairs.  Exhaustive (finite only): every pair of
    frames on y = 0 and every pair of points."""
    start = time.perf_counter()
    f1 = standard_frame(model)
    mode = Mode(exhaustive, seeds[0] if seeds else 0, samples)
    if exhaustive:
        line_pts = model.points_on(f1.line)
        frames = [Frame(f1.line, O, I) for O in line_pts for I in line_pts if O != I]
        pairs = [(A, C) for A in line_pts for C in line_pts]
        claim = _claim("frame-independence")
        for g1 in frames:
            for g2 in frames:
                sub = frame_isomorphism(g1, g2, pairs)
                _merge(claim, sub)
    else:
        claim = _claim("frame-independence")
        for seed in seeds:
            rng = random.Random(seed)
            f2 = _random_frame(model, rng)
            pairs = [
                (model.random_point_on(f1.line, rng), model.random_point_on(f1.line, rng)) for _ in range(samples)
            ]
            _merge(claim, frame_isomorphism(f1, f2, pairs))
    report = SuiteReport("frame-independence", str(model), mode, [claim.finish()])
    report.wall_time = time.perf_counter() - start
    return report


def _random_frame(model: PlaneModel, rng: random.Random) -> Frame:
    while True:
        O, I = model.random_point(rng), model.random_point(rng)
        if O != I:
            return Frame.through(O, I)


def _merge(into: ClaimResult, other: ClaimResult) -> None:
    into.tested += other.tested
    into.applicable += other.applicable
    into.failures += other.failures
    into.witnesses.extend(other.witnesses[: 5 - len(into.witnesses)])


def _run_skew(model: PlaneModel, mode: Mode) -> list[ClaimResult]:
    frame = standard_frame(model)
    if mode.exhaustive:
        pts = model.points_on(frame.line)
        claims = check_skew_field(frame, itertools.product(pts, repeat=3))
        b_claim = check_b_independence(frame, exhaustive_b_cases(frame))
        fi = frame_independence_check(model, exhaustive=True) if model.ring.p <= 5 else None
        if fi is None:
            fi_claim = _claim("frame-independence")
            g = Frame.through(model.point(1, 1), model.point(3, 2))
            _merge(fi_claim, frame_isomorphism(frame, g, [(A, C) for A in pts for C in pts]))
        else:
            fi_claim = fi.checks[0]
    else:
        rng = random.Random(mode.seed)
        triples = [tuple(model.random_point_on(frame.line, rng) for _ in range(3)) for _ in range(mode.samples)]
        claims = check_skew_field(frame, triples)
        b_claim = check_b_independence(frame, random_b_cases(frame, mode.samples, rng))
        fi_claim = frame_independence_check(model, (mode.seed,), mode.samples).checks[0]
    return [*claims.values(), b_claim, fi_claim]


_RUNNERS = {
    "affine-axioms": _run_affine,
    "desargues": _run_desargues,
    "pappus": _run_pappus,
    "order-axioms": _run_order,
    "skew-field": _run_skew,
    "positive-cone": _run_cone,
    "map-order": _run_map_order,
}
