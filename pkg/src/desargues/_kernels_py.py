"""Pure-Python exhaustive kernels over the incidence tables of AG(2, p).

Point ids are ``x*p + y``; line ids are ``m*p + b`` for y = x*m + b and
``p*p + c`` for x = c, so ``line // p`` is the parallel class.  Tables are flat
sequences:

    join[P*npts + Q]     line through P, Q (-1 when P == Q)
    meet[l1*nlines + l2] common point (-1 when parallel or equal)
    par[P*nlines + l]    line through P parallel to l
    line_points[l*p + i] i-th point of l (by coordinate parameter)

The compiled module ``_ckernels`` exposes the same functions with the same
results; this module is the fallback and the reference for it.
"""

from itertools import permutations


def pappus_exhaustive(p, join, meet, line_points, max_witnesses):
    """Every ordered hexagon (E,C,A on one line, B,F,D on another, none on both).

    Returns (tested, rejected, failures, witnesses); a hexagon is rejected when
    one of its cross-join pairs is parallel.
    """
    npts = p * p
    nlines = p * p + p
    tested = rejected = failures = 0
    witnesses = []
    for l1 in range(nlines):
        pts1_all = line_points[l1 * p:(l1 + 1) * p]
        for l2 in range(nlines):
            if l1 == l2:
                continue
            x = meet[l1 * nlines + l2]
            pts1 = [P for P in pts1_all if P != x]
            pts2 = [P for P in line_points[l2 * p:(l2 + 1) * p] if P != x]
            if len(pts1) < 3:
                continue
            tri2 = list(permutations(pts2, 3))
            for E, C, A in permutations(pts1, 3):
                for B, F, D in tri2:
                    N = meet[join[C * npts + B] * nlines + join[E * npts + F]]
                    L = meet[join[A * npts + F] * nlines + join[C * npts + D]]
                    M = meet[join[A * npts + B] * nlines + join[E * npts + D]]
                    if N < 0 or L < 0 or M < 0:
                        rejected += 1
                        continue
                    tested += 1
                    if N == L or N == M or L == M:
                        continue
                    if join[N * npts + L] != join[N * npts + M]:
                        failures += 1
                        if len(witnesses) < max_witnesses:
                            witnesses.append((E, C, A, B, F, D))
    return tested, rejected, failures, witnesses


def desargues_exhaustive(p, join, meet, par, line_points, max_witnesses):
    """Every parallel-rails configuration: three distinct rails of one class,
    A, B, C on them, A' on the first rail; B' and C' are forced by the two
    parallelism hypotheses.  Checks AC parallel to A'C'."""
    npts = p * p
    nlines = p * p + p
    tested = rejected = failures = 0
    witnesses = []
    for cls in range(p + 1):
        rails = range(cls * p, cls * p + p)
        for k, l, m in permutations(rails, 3):
            pk = line_points[k * p:(k + 1) * p]
            pl = line_points[l * p:(l + 1) * p]
            pm = line_points[m * p:(m + 1) * p]
            for A in pk:
                for B in pl:
                    AB = join[A * npts + B]
                    for C in pm:
                        BC = join[B * npts + C]
                        AC_cls = join[A * npts + C] // p
                        for Ap in pk:
                            Bp = meet[par[Ap * nlines + AB] * nlines + l]
                            if Bp < 0:
                                rejected += 1
                                continue
                            Cp = meet[par[Bp * nlines + BC] * nlines + m]
                            if Cp < 0:
                                rejected += 1
                                continue
                            tested += 1
                            if join[Ap * npts + Cp] // p != AC_cls:
                                failures += 1
                                if len(witnesses) < max_witnesses:
                                    witnesses.append((A, B, C, Ap, Bp, Cp, k, l, m))
    return tested, rejected, failures, witnesses


def cayley(join, meet, par, npts, nlines, pts, O, I, B, ell):
    """Addition and multiplication tables (flat, row-major, point ids) of the
    points ``pts`` of line ``ell`` under the two three-step constructions."""
    n = len(pts)
    add = [0] * (n * n)
    mul = [0] * (n * n)
    OB = join[O * npts + B]
    IB = join[I * npts + B]
    par_B = par[B * nlines + ell]
    for i in range(n):
        A = pts[i]
        D = meet[par_B * nlines + par[A * nlines + OB]]
        E = meet[par[A * nlines + IB] * nlines + OB]
        for j in range(n):
            C = pts[j]
            add[i * n + j] = meet[par[D * nlines + join[C * npts + B]] * nlines + ell]
            mul[i * n + j] = meet[par[E * nlines + join[B * npts + C]] * nlines + ell]
    return add, mul
