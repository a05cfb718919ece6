import json

import pytest

from desargues.errors import SuiteModelMismatchError
from desargues.plane import PlaneModel
from desargues.scalars import RingDescriptor
from desargues.verification import (
    CLAIMS,
    NOT_INSTANTIABLE,
    SUITES,
    Mode,
    frame_independence_check,
    run_suite,
)

from conftest import schema_validator

SPEC_REGISTRY = {
    "affine-1", "affine-2", "affine-3", "Desargues", "Pappus", "affine-Pappus",
    "Lo.1", "Lo.2", "Lo.3", "Lo.4", "Prop-exclusion", "Prop-chaining", "same-side-transitivity",
    "projection-order", "translation-order", "add-closure", "mul-closure", "neg-to-K-",
    "add-assoc", "add-comm", "add-identity", "add-inverse", "mul-assoc", "mul-identity",
    "mul-inverse", "distrib-left", "distrib-right",
    "B-independence", "frame-independence", "Tecklenburg-GF(p)",
}


def test_registry_covers_required_claims():
    assert SPEC_REGISTRY <= set(CLAIMS)
    assert {suite for suite, _ in CLAIMS.values()} == set(SUITES)


def test_each_claim_executed_by_exactly_one_suite(Q, gf):
    seen = {}
    for suite in SUITES:
        model = Q if suite in ("order-axioms", "positive-cone", "map-order") else gf(3)
        for c in run_suite(suite, model, Mode(samples=5)).checks:
            assert c.claim not in seen, f"{c.claim} in {seen.get(c.claim)} and {suite}"
            seen[c.claim] = suite
    assert set(seen) == set(CLAIMS)
    assert all(CLAIMS[k][0] == v for k, v in seen.items())


def test_not_instantiable_claims_are_reported(Q):
    rep = run_suite("positive-cone", Q, Mode(samples=5))
    c = rep.check("finite-ordered-skew-field")
    assert c.status == "not-instantiable" and c.passed and c.note
    assert set(NOT_INSTANTIABLE) <= set(CLAIMS)


def test_skew_field_gf5_exhaustive(gf):
    rep = run_suite("skew-field", gf(5), Mode(exhaustive=True))
    assert rep.passed
    for law in ("add-assoc", "mul-assoc", "distrib-left", "distrib-right"):
        assert rep.check(law).tested == 125
    assert rep.check("mul-inverse").tested == 4


def test_positive_cone_rational(Q):
    rep = run_suite("positive-cone", Q, Mode(seed=1, samples=1000))
    assert rep.passed
    assert rep.check("add-closure").tested == 1000


@pytest.mark.parametrize("suite", ["order-axioms", "positive-cone", "map-order"])
def test_order_suites_need_ordered_model(gf, H, suite):
    with pytest.raises(SuiteModelMismatchError):
        run_suite(suite, gf(5))
    with pytest.raises(SuiteModelMismatchError):
        run_suite(suite, H)


def test_exhaustive_needs_finite_model(Q):
    with pytest.raises(SuiteModelMismatchError):
        run_suite("desargues", Q, Mode(exhaustive=True))


def test_exhaustive_scan_too_large(gf):
    with pytest.raises(SuiteModelMismatchError):
        run_suite("pappus", gf(11), Mode(exhaustive=True))


def test_all_skips_incompatible_suites(gf):
    rep = run_suite("all", gf(3), Mode(exhaustive=True))
    assert rep.passed
    assert set(rep.skipped_suites) == {"order-axioms", "positive-cone", "map-order"}


def test_quaternion_pappus_fails(H):
    rep = run_suite("pappus", H, Mode(seed=7, samples=100))
    assert not rep.passed
    assert rep.check("Pappus").failures > 0 and rep.check("Pappus").witnesses
    assert rep.check("Tecklenburg-GF(p)").status == "skipped"


def test_quaternion_skew_field_is_noncommutative(H):
    rep = run_suite("skew-field", H, Mode(samples=30))
    assert rep.passed
    assert rep.check("mul-commutativity").note != "0 noncommuting pairs"


def test_report_deterministic_and_schema_valid(Q, gf):
    validator = schema_validator("suite_report")
    for model, mode in ((Q, Mode(seed=3, samples=20)), (gf(3), Mode(exhaustive=True))):
        a = run_suite("all", model, mode).to_json(timing=False)
        b = run_suite("all", model, mode).to_json(timing=False)
        assert json.dumps(a) == json.dumps(b)
        validator.validate(run_suite("all", model, mode).to_json())


def test_failing_report_is_schema_valid(H):
    schema_validator("suite_report").validate(run_suite("pappus", H, Mode(seed=7, samples=20)).to_json())


def test_frame_independence(Q, gf):
    assert frame_independence_check(Q, seeds=(0, 1), samples=50).passed
    rep = frame_independence_check(gf(5), exhaustive=True)
    assert rep.passed and rep.checks[0].tested == 20 * 20 * 25


def test_frame_independence_explicit_frames(Q):
    from desargues.line_algebra import Frame
    from desargues.verification import frame_isomorphism, standard_frame

    f1 = standard_frame(Q)
    f2 = Frame.through(Q.point(0, 1), Q.point(1, 1))
    pairs = [(Q.point(a, 0), Q.point(c, 0)) for a in range(-3, 4) for c in range(-3, 4)]
    assert frame_isomorphism(f1, f2, pairs).finish().passed
    same = frame_isomorphism(f1, f1, pairs)
    assert same.finish().passed and same.tested == len(pairs)
