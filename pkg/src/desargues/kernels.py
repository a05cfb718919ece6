"""Incidence tables of AG(2, p) and the exhaustive kernels that scan them.

The compiled extension ``_ckernels`` is used when it was built; otherwise the
pure-Python ``_kernels_py`` runs.  Set ``DESARGUES_PURE_PYTHON=1`` to force the
fallback.  ``BACKEND`` names the active one.
"""

from __future__ import annotations

import os
from array import array
from dataclasses import dataclass
from functools import lru_cache

from . import _kernels_py
from .plane import Line, Point, Sloped, Vertical
from .scalars import Residue

if os.environ.get("DESARGUES_PURE_PYTHON"):
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl

        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

__all__ = ["BACKEND", "GFTables", "backends", "gf_tables"]


def backends() -> dict:
    """Every importable backend by name."""
    out = {"python": _kernels_py}
    try:
        from . import _ckernels

        out["cython"] = _ckernels
    except ImportError:
        pass
    return out


@dataclass(frozen=True)
class GFTables:
    """Flat join/meet/parallel tables of the coordinate plane over GF(p)."""

    p: int
    join: array
    meet: array
    par: array
    line_points: array

    @property
    def npts(self) -> int:
        return self.p * self.p

    @property
    def nlines(self) -> int:
        return self.p * self.p + self.p

    def point_id(self, P: Point) -> int:
        return P.x.value * self.p + P.y.value

    def point(self, pid: int) -> Point:
        return Point(Residue(pid // self.p, self.p), Residue(pid % self.p, self.p))

    def line_id(self, l: Line) -> int:
        if isinstance(l, Vertical):
            return self.p * self.p + l.c.value
        return l.m.value * self.p + l.b.value

    def line(self, lid: int) -> Line:
        p = self.p
        if lid >= p * p:
            return Vertical(Residue(lid - p * p, p))
        return Sloped(Residue(lid // p, p), Residue(lid % p, p))

    # --- kernels -------------------------------------------------------

    def pappus_exhaustive(self, max_witnesses: int = 5, impl=None):
        impl = impl or _impl
        return impl.pappus_exhaustive(self.p, self.join, self.meet, self.line_points, max_witnesses)

    def desargues_exhaustive(self, max_witnesses: int = 5, impl=None):
        impl = impl or _impl
        return impl.desargues_exhaustive(self.p, self.join, self.meet, self.par, self.line_points, max_witnesses)

    def cayley(self, pts: list[Point], O: Point, I: Point, B: Point, ell: Line, impl=None):
        impl = impl or _impl
        ids = array("i", [self.point_id(P) for P in pts])
        add, mul = impl.cayley(
            self.join, self.meet, self.par, self.npts, self.nlines, ids,
            self.point_id(O), self.point_id(I), self.point_id(B), self.line_id(ell),
        )
        n = len(pts)
        return (
            [[self.point(add[i * n + j]) for j in range(n)] for i in range(n)],
            [[self.point(mul[i * n + j]) for j in range(n)] for i in range(n)],
        )


@lru_cache(maxsize=None)
def gf_tables(p: int) -> GFTables:
    """Build the tables with modular arithmetic; O(p^4) time, done once per p."""
    npts, nlines = p * p, p * p + p
    inv = [0] + [pow(v, -1, p) for v in range(1, p)]

    def line_of(px, py, qx, qy):
        if px == qx:
            return p * p + px
        m = (qy - py) * inv[(qx - px) % p] % p
        return m * p + (py - px * m) % p

    join = array("i", [-1]) * (npts * npts)
    for P in range(npts):
        px, py = divmod(P, p)
        for Q in range(npts):
            if P != Q:
                qx, qy = divmod(Q, p)
                join[P * npts + Q] = line_of(px, py, qx, qy)

    line_points = array("i", [0]) * (nlines * p)
    for lid in range(nlines):
        for t in range(p):
            if lid >= p * p:
                pid = (lid - p * p) * p + t
            else:
                m, b = divmod(lid, p)
                pid = t * p + (t * m + b) % p
            line_points[lid * p + t] = pid

    meet = array("i", [-1]) * (nlines * nlines)
    for l1 in range(nlines):
        for l2 in range(nlines):
            if l1 // p == l2 // p:
                continue
            if l1 >= p * p or l2 >= p * p:
                c, (m, b) = (l1 - p * p, divmod(l2, p)) if l1 >= p * p else (l2 - p * p, divmod(l1, p))
                meet[l1 * nlines + l2] = c * p + (c * m + b) % p
            else:
                m1, b1 = divmod(l1, p)
                m2, b2 = divmod(l2, p)
                x = (b2 - b1) * inv[(m1 - m2) % p] % p
                meet[l1 * nlines + l2] = x * p + (x * m1 + b1) % p

    par = array("i", [0]) * (npts * nlines)
    for P in range(npts):
        px, py = divmod(P, p)
        for lid in range(nlines):
            if lid >= p * p:
                par[P * nlines + lid] = p * p + px
            else:
                m = lid // p
                par[P * nlines + lid] = m * p + (py - px * m) % p
    return GFTables(p, join, meet, par, line_points)
