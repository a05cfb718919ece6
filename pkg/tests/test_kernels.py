import os
import subprocess
import sys

import pytest

from desargues import kernels
from desargues.kernels import backends, gf_tables
from desargues.line_algebra import Frame, cayley_tables
from desargues.plane import PlaneModel, incident, intersect, line_through, parallel_through
from desargues.scalars import RingDescriptor

IMPLS = sorted(backends())


def test_compiled_backend_built():
    assert "cython" in backends(), "compiled extension missing; reinstall with pip install -e ."


@pytest.mark.parametrize("p", [2, 3, 5])
def test_tables_agree_with_plane_operations(p):
    t = gf_tables(p)
    m = PlaneModel(RingDescriptor.gf(p))
    pts = list(m.enumerate_points())
    lines = list(m.enumerate_lines())
    for P in pts:
        assert t.point(t.point_id(P)) == P
        for Q in pts:
            if P != Q:
                assert t.line(t.join[t.point_id(P) * t.npts + t.point_id(Q)]) == line_through(P, Q)
        for l in lines:
            assert t.line(t.par[t.point_id(P) * t.nlines + t.line_id(l)]) == parallel_through(P, l)
    for l1 in lines:
        on = [t.point(i) for i in t.line_points[t.line_id(l1) * p:(t.line_id(l1) + 1) * p]]
        assert all(incident(P, l1) for P in on) and len(set(on)) == p
        for l2 in lines:
            X = intersect(l1, l2)
            got = t.meet[t.line_id(l1) * t.nlines + t.line_id(l2)]
            assert (t.point(got) if got >= 0 else None) == (X if hasattr(X, "x") else None)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_backends_agree_on_pappus(p):
    t = gf_tables(p)
    results = {name: t.pappus_exhaustive(5, impl=impl) for name, impl in backends().items()}
    assert len(set(map(repr, results.values()))) == 1


@pytest.mark.parametrize("p", [2, 3, 5])
def test_backends_agree_on_desargues(p):
    t = gf_tables(p)
    results = {name: t.desargues_exhaustive(5, impl=impl) for name, impl in backends().items()}
    assert len(set(map(repr, results.values()))) == 1
    tested, rejected, failures, _ = results["python"]
    assert failures == 0 and rejected == 0


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13])
@pytest.mark.parametrize("impl", IMPLS)
def test_cayley_kernel_matches_generic_constructions(p, impl):
    m = PlaneModel(RingDescriptor.gf(p))
    f = Frame.through(m.point(0, 0), m.point(1, 0))
    generic = cayley_tables(f)
    B = m.point(0, 1)
    add, mul = gf_tables(p).cayley(list(generic.points), f.O, f.I, B, f.line, impl=backends()[impl])
    assert [list(r) for r in generic.add] == add
    assert [list(r) for r in generic.mul] == mul


def test_pure_python_switch():
    env = dict(os.environ, DESARGUES_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "from desargues import kernels; print(kernels.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"
    assert kernels.BACKEND in ("python", "cython")
