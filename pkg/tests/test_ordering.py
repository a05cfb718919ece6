import random
from fractions import Fraction

import pytest

from desargues.errors import OrderUnavailableError
from desargues.line_algebra import Frame, from_parameter
from desargues.maps import ParallelProjection, Translation
from desargues.ordering import (
    SignClass,
    between,
    check_map_order,
    check_order_axioms,
    check_positive_cone,
    random_quadruples,
    random_triples,
    same_side,
    sign_classify,
    translate_synthetically,
)


def coordinate_between(A, B, C):
    """Independent oracle: B strictly inside segment AC, by coordinates."""
    def inside(a, b, c):
        return min(a, c) <= b <= max(a, c)
    return B not in (A, C) and inside(A.x, B.x, C.x) and inside(A.y, B.y, C.y)


def test_between_matches_coordinates(Q, rng):
    for _ in range(200):
        l = Q.random_line(rng, vertical_rate=0.3)
        A, B, C = (Q.random_point_on(l, rng) for _ in range(3))
        assert between(l, A, B, C) == coordinate_between(A, B, C)


def test_between_is_strict(Q):
    l = Q.sloped(0, 0)
    A, C = Q.point(0, 0), Q.point(2, 0)
    assert between(l, A, Q.point(1, 0), C)
    assert not between(l, A, A, C)
    assert not between(l, A, Q.point(3, 0), C)


def test_same_side(Q):
    A = Q.point(0, 0)
    assert same_side(A, Q.point(1, 0), Q.point(5, 0))
    assert not same_side(A, Q.point(-1, 0), Q.point(5, 0))


def test_sign_classes(Q):
    f = Frame.through(Q.point(1, 2), Q.point(3, 3))
    assert sign_classify(f, f.O) is SignClass.ZERO
    assert sign_classify(f, f.I) is SignClass.POSITIVE
    assert sign_classify(f, from_parameter(f, Fraction(1, 2))) is SignClass.POSITIVE
    assert sign_classify(f, from_parameter(f, 5)) is SignClass.POSITIVE
    assert sign_classify(f, from_parameter(f, Fraction(-1, 7))) is SignClass.NEGATIVE


def test_order_unavailable_on_finite_and_quaternion(gf, H):
    m = gf(5)
    with pytest.raises(OrderUnavailableError):
        between(m.sloped(0, 0), m.point(0, 0), m.point(1, 0), m.point(2, 0))
    f = Frame.through(H.point(0, 0), H.point(1, 0))
    with pytest.raises(OrderUnavailableError):
        sign_classify(f, f.I)


def test_order_axioms_hold(Q):
    rng = random.Random(5)
    l = Q.random_line(rng)
    report = check_order_axioms(l, random_quadruples(Q, l, 50, rng))
    assert report.passed
    assert report.claims["Lo.2"].tested == 50 * 24
    assert report.claims["Lo.3"].applicable > 0


def test_order_axioms_need_distinct_points(Q):
    l = Q.sloped(0, 0)
    P = Q.point(0, 0)
    with pytest.raises(ValueError):
        check_order_axioms(l, [(P, P, Q.point(1, 0), Q.point(2, 0))])


def test_positive_cone(Q):
    f = Frame.through(Q.point(0, 0), Q.point(1, 1))
    report = check_positive_cone(f, pairs=100, negations=50, seed=2)
    assert report.passed
    assert report.claims["mul-closure"].tested == 200


def test_projection_order_behaviour(Q, rng):
    keep = ParallelProjection(Q.sloped(0, 0), Q.sloped(0, 3), Q.sloped(1, 0))
    flip = ParallelProjection(Q.sloped(0, 0), Q.sloped(-1, 3), Q.vertical(0))
    assert check_map_order(keep, random_triples(Q, keep.source, 20, rng)).behavior == "preserves"
    rep = check_map_order(flip, random_triples(Q, flip.source, 20, rng))
    assert rep.passed and rep.behavior in ("preserves", "reverses")


def test_translations_preserve_order_both_paths(Q, rng):
    l = Q.sloped(Fraction(1, 2), 1)
    for t in (Translation(Q.ring(2), Q.ring(1)), Translation(Q.ring(1), Q.ring(5))):
        tris = random_triples(Q, l, 10, rng)
        for path in ("coordinates", "synthetic"):
            rep = check_map_order(t, tris, source=l, path=path)
            assert rep.passed and rep.behavior == "preserves"
        for tri in tris:
            for P in tri:
                assert translate_synthetically(t, l, P) == t(P)
