import random

import pytest

from desargues.errors import InvalidProjectionError, NotOnSourceError
from desargues.maps import (
    ParallelProjection,
    Translation,
    apply_translation,
    compose_translations,
    image_line,
    is_along,
    project,
    projection_is_bijection,
    translate_points,
    translation_as_projection,
    translation_from,
    two_stage_projections,
)
from desargues.plane import incident, is_parallel, line_through


def test_projection_moves_along_direction(Q):
    pp = ParallelProjection(Q.sloped(0, 0), Q.sloped(1, 2), Q.vertical(0))
    assert project(pp, Q.point(3, 0)) == Q.point(3, 5)
    assert pp.inverse()(Q.point(3, 5)) == Q.point(3, 0)


def test_projection_rejects_direction_parallel_to_a_line(Q):
    with pytest.raises(InvalidProjectionError):
        ParallelProjection(Q.sloped(0, 0), Q.sloped(1, 2), Q.sloped(0, 7))
    with pytest.raises(InvalidProjectionError):
        ParallelProjection(Q.sloped(0, 0), Q.sloped(1, 2), Q.sloped(1, 7))


def test_projection_off_source(Q):
    pp = ParallelProjection(Q.sloped(0, 0), Q.sloped(1, 2), Q.vertical(0))
    with pytest.raises(NotOnSourceError):
        project(pp, Q.point(1, 1))


def test_identity_projection(Q):
    l = Q.sloped(2, 1)
    pp = ParallelProjection(l, l, Q.vertical(0))
    assert pp.is_identity and pp(Q.point(1, 3)) == Q.point(1, 3)


@pytest.mark.parametrize("p", [3, 5])
def test_projection_bijective_on_finite_planes(gf, p):
    m = gf(p)
    pp = ParallelProjection(m.sloped(0, 0), m.vertical(1), m.sloped(1, 0))
    assert projection_is_bijection(pp, m)
    images = {pp(P) for P in m.points_on(pp.source)}
    assert images == set(m.points_on(pp.target))


def test_translation_maps_lines_to_parallels(Q, rng):
    for _ in range(50):
        t = Translation(Q.ring.random(rng), Q.ring.random(rng))
        l = Q.random_line(rng)
        assert is_parallel(image_line(t, l), l)
        P = Q.random_point_on(l, rng)
        assert incident(apply_translation(t, P), image_line(t, l))


def test_translation_group(Q):
    a = translation_from(Q.point(0, 0), Q.point(1, 2))
    b = translation_from(Q.point(5, 5), Q.point(2, 2))
    P = Q.point(7, -1)
    assert compose_translations(a, b)(P) == a(b(P)) == b(a(P))


def test_translation_as_projection_agrees(Q, rng):
    t = Translation(Q.ring(2), Q.ring(1))
    l = Q.sloped(0, 0)
    pp = translation_as_projection(t, l, Q.point(0, 0))
    for _ in range(20):
        P = Q.random_point_on(l, rng)
        assert pp(P) == t(P)


def test_two_stage_path_agrees_for_translation_along_line(Q, rng):
    l = Q.sloped(1, 1)
    t = translation_from(Q.point(0, 1), Q.point(3, 4))
    assert is_along(t, l)
    with pytest.raises(InvalidProjectionError):
        translation_as_projection(t, l, Q.point(0, 1))
    first, second = two_stage_projections(t, l, Q.point(0, 1), Q.point(0, 5))
    for _ in range(20):
        P = Q.random_point_on(l, rng)
        assert second(first(P)) == t(P)


@pytest.mark.parametrize("model", ["Q", "H"])
def test_translate_points_matches_displacement(model, request):
    m = request.getfixturevalue(model)
    rng = random.Random(3)
    for _ in range(40):
        A, B = m.random_point(rng), m.random_point(rng)
        P = m.random_point(rng) if rng.random() < 0.5 else m.random_point_on(line_through(A, B), rng) if A != B else A
        X, trace = translate_points(P, A, B)
        assert X == translation_from(A, B)(P)
        assert trace.result == X
