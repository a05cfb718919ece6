"""Acceptance criteria 1-10.  Each test records one PASS/FAIL line; the lines
are printed in the terminal summary (and directly when run as a script)."""

import json
import random
import time
from fractions import Fraction
from pathlib import Path

import pytest

from desargues.cli import main as cli_main
from desargues.configurations import (
    configuration_search,
    desargues_check,
    exhaustive_size,
    pappus_check,
)
from desargues.line_algebra import Frame, cayley_tables, point_mul
from desargues.ordering import check_order_axioms, check_positive_cone, random_quadruples
from desargues.plane import PlaneModel, Point
from desargues.scalars import Quaternion, RingDescriptor
from desargues.verification import (
    check_b_independence,
    check_projections,
    check_skew_field,
    check_translations,
    exhaustive_b_cases,
    fig1_config,
    fig2_config,
    frame_independence_check,
    frame_isomorphism,
    random_b_cases,
    standard_frame,
)

from conftest import schema_validator

SCRIPTS = Path(__file__).resolve().parent.parent / "scripts"
RESULTS: dict[int, str] = {}

RAT = PlaneModel(RingDescriptor.rational())
QUAT = PlaneModel(RingDescriptor.quaternion())


def gf(p):
    return PlaneModel(RingDescriptor.gf(p))


def report(n: int, title: str, ok: bool, detail: str) -> None:
    line = f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {title}  [{detail}]"
    RESULTS[n] = line
    print(line)
    assert ok, line


def test_criterion_01_exhaustive_cayley_tables():
    start = time.perf_counter()
    mismatches = entries = 0
    for p in (2, 3, 5, 7, 11, 13):
        m = gf(p)
        tables = cayley_tables(standard_frame(m))
        add, mul = tables.parameters("add"), tables.parameters("mul")
        for a in range(p):
            for c in range(p):
                entries += 2
                mismatches += add[a][c].value != (a + c) % p
                mismatches += mul[a][c].value != (a * c) % p
    elapsed = time.perf_counter() - start
    report(1, "Cayley tables by construction match GF(p), p <= 13", mismatches == 0 and elapsed < 30,
           f"{entries} entries, {mismatches} mismatches, {elapsed:.2f}s < 30s")


def test_criterion_02_b_independence():
    start = time.perf_counter()
    counts, failures = {}, 0
    for name, model in (("rational", RAT), ("gf(5)", gf(5)), ("quaternion", QUAT)):
        frame = standard_frame(model)
        if model.ring.finite:
            claim = check_b_independence(frame, exhaustive_b_cases(frame))
        else:
            claim = check_b_independence(frame, random_b_cases(frame, 200, random.Random(2)))
        counts[name] = claim.tested
        failures += claim.failures
    elapsed = time.perf_counter() - start
    ok = failures == 0 and min(counts.values()) >= 200 and elapsed < 10
    report(2, "A+C and A*C independent of B", ok, f"cases {counts}, {failures} failures, {elapsed:.2f}s < 10s")


LAWS = ("add-assoc", "mul-assoc", "add-comm", "distrib-left", "distrib-right",
        "add-identity", "mul-identity", "add-inverse", "mul-inverse")


def test_criterion_03_skew_field_axioms():
    import itertools

    failures, tested = 0, {}
    runs = [(f"gf({p})", gf(p), None) for p in (2, 3, 5, 7)]
    runs += [("rational", RAT, 1000), ("quaternion", QUAT, 200)]
    for name, model, n in runs:
        frame = standard_frame(model)
        if n is None:
            pts = model.points_on(frame.line)
            triples = list(itertools.product(pts, repeat=3))
        else:
            rng = random.Random(3)
            triples = [tuple(model.random_point_on(frame.line, rng) for _ in range(3)) for _ in range(n)]
        claims = check_skew_field(frame, triples)
        failures += sum(claims[k].failures for k in LAWS)
        tested[name] = claims["mul-assoc"].tested
    ok = failures == 0 and tested["gf(7)"] == 343 and tested["rational"] == 1000 and tested["quaternion"] == 200
    report(3, "skew-field laws via constructions only", ok, f"triples {tested}, {failures} failures")


def test_criterion_04_noncommutativity_witness():
    z = Quaternion(0)
    i, j, k = Quaternion(0, 1), Quaternion(0, 0, 1), Quaternion(0, 0, 0, 1)
    frame = standard_frame(QUAT)
    ij = point_mul(frame, Point(i, z), Point(j, z))[0]
    ji = point_mul(frame, Point(j, z), Point(i, z))[0]
    ok = ij == Point(k, z) and ji == Point(-k, z)
    report(4, "(i,0)*(j,0) = (k,0) and (j,0)*(i,0) = (-k,0)", ok, f"got {ij} and {ji}")


def test_criterion_05_order_axioms():
    start = time.perf_counter()
    rng = random.Random(5)
    totals, failures = {}, 0
    for _ in range(1000):
        line = RAT.random_line(rng)
        rep = check_order_axioms(line, random_quadruples(RAT, line, 1, rng))
        for k, c in rep.claims.items():
            totals[k] = totals.get(k, 0) + c.applicable
            failures += c.failures
    elapsed = time.perf_counter() - start
    ok = failures == 0 and elapsed < 5 and all(v > 0 for v in totals.values())
    report(5, "Lo.1-Lo.4, exclusion, chaining, same-side on 1000 tuples", ok,
           f"{failures} failures, applicable cases {totals}, {elapsed:.2f}s < 5s")


def test_criterion_06_positive_cone():
    frame = standard_frame(RAT)
    rep = check_positive_cone(frame, pairs=1000, negations=500, seed=6)
    c = rep.claims
    ok = rep.passed and c["add-closure"].tested == 1000 and c["mul-closure"].tested == 2000 \
        and c["neg-to-K-"].tested == 500 and c["neg-add-closure"].tested == 1000
    fails = {k: v.failures for k, v in c.items()}
    report(6, "positive cone closed under + and *, negation lands in K-", ok, f"failures {fails}")


def test_criterion_07_map_order():
    trans = check_translations(RAT, 500, 5, seed=7).finish()
    proj = check_projections(RAT, 200, 10, seed=7).finish()
    along = int(trans.note.split()[0])
    ok = trans.passed and proj.passed and trans.tested == 500 and proj.tested == 200 and along > 0
    report(7, "translations preserve order (both paths), projections never mix", ok,
           f"translations {trans.tested} ({trans.note}), {trans.failures} failures; "
           f"projections {proj.tested} ({proj.note}), {proj.failures} failures")


def test_criterion_08_configurations():
    fig1 = desargues_check(fig1_config(RAT))
    des = configuration_search(RAT, "desargues", 200, seed=8)
    fig2 = pappus_check(fig2_config(RAT))
    start = time.perf_counter()
    g3 = configuration_search(gf(3), "pappus", exhaustive_size("pappus", 3))
    g3_time = time.perf_counter() - start
    quat = configuration_search(QUAT, "pappus", 500, seed=7)
    ok = (fig1 and des.tested == 200 and des.failure_count == 0 and fig2
          and g3.mode == "exhaustive" and g3.failure_count == 0 and g3_time < 60
          and quat.failure_count >= 1)
    report(8, "Desargues and Pappus checks", ok,
           f"reference rails {fig1}, {des.tested} rational Desargues / {des.failure_count} failures, reference hexagon {fig2}, "
           f"GF(3) Pappus {g3.tested} tested / {g3.failure_count} failures in {g3_time:.2f}s, "
           f"quaternion counterexamples {quat.failure_count} of {quat.tested}")


def test_criterion_09_cli(tmp_path):
    run_validator, trace_validator = schema_validator("run"), schema_validator("trace")
    codes, identical, traces = [], True, 0
    for name in ("fig4", "fig5"):
        outputs = []
        for attempt in range(2):
            svg, trace = tmp_path / f"{name}-{attempt}.svg", tmp_path / f"{name}-{attempt}.json"
            codes.append(cli_main(["run", str(SCRIPTS / f"{name}.geo"), "--svg", str(svg), "--trace", str(trace)]))
            doc = json.loads(trace.read_text())
            run_validator.validate(doc)
            for t in doc["traces"]:
                trace_validator.validate(t)
                traces += 1
            outputs.append(svg.read_bytes())
        identical &= outputs[0] == outputs[1]
    verify_code = cli_main(["verify", "all", "--model", "gf(5)"])
    ok = codes == [0, 0, 0, 0] and identical and traces > 0 and verify_code == 0
    report(9, "CLI end to end", ok,
           f"run exit codes {codes}, {traces} schema-valid traces, SVG byte-identical {identical}, "
           f"verify all gf(5) exit {verify_code}")


def test_criterion_10_frame_independence():
    y0 = standard_frame(RAT)
    y1 = Frame.through(RAT.point(0, 1), RAT.point(1, 1))
    rng = random.Random(10)
    pairs = [(RAT.random_point_on(y0.line, rng), RAT.random_point_on(y0.line, rng)) for _ in range(200)]
    lines = frame_isomorphism(y0, y1, pairs).finish()
    sampled = frame_independence_check(RAT, seeds=(10,), samples=200)
    exhaustive = frame_independence_check(gf(5), exhaustive=True)
    failures = lines.failures + sampled.failures + exhaustive.failures
    ok = failures == 0 and lines.tested == 200 and exhaustive.checks[0].tested == 10000
    report(10, "parameter transport is an isomorphism between frames", ok,
           f"y=0 to y=1: {lines.tested} pairs, random frame: {sampled.checks[0].tested} pairs, "
           f"GF(5) all frame pairs: {exhaustive.checks[0].tested} cases, {failures} failures")


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-s"]))
