# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled exhaustive kernels; see _kernels_py for the table layout."""

from libc.stdlib cimport malloc, free


cdef int _collect(int[:] line_points, int l, int p, int skip, int* out) noexcept nogil:
    cdef int i, P, n = 0
    for i in range(p):
        P = line_points[l * p + i]
        if P != skip:
            out[n] = P
            n += 1
    return n


cdef int _perms3(int* pts, int n, int* out) noexcept nogil:
    cdef int a, b, c, k = 0
    for a in range(n):
        for b in range(n):
            if b == a:
                continue
            for c in range(n):
                if c == a or c == b:
                    continue
                out[3 * k] = pts[a]
                out[3 * k + 1] = pts[b]
                out[3 * k + 2] = pts[c]
                k += 1
    return k


def pappus_exhaustive(int p, join_, meet_, line_points_, int max_witnesses):
    cdef int[:] join = join_
    cdef int[:] meet = meet_
    cdef int[:] line_points = line_points_
    cdef int npts = p * p
    cdef int nlines = p * p + p
    cdef long tested = 0, rejected = 0, failures = 0
    cdef int l1, l2, x, n1, n2, t1, t2, i, j
    cdef int E, C, A, B, F, D, N, L, M
    cdef int* pts1 = <int*> malloc(p * sizeof(int))
    cdef int* pts2 = <int*> malloc(p * sizeof(int))
    cdef int* tri1 = <int*> malloc(3 * p * p * p * sizeof(int))
    cdef int* tri2 = <int*> malloc(3 * p * p * p * sizeof(int))
    witnesses = []
    try:
        for l1 in range(nlines):
            for l2 in range(nlines):
                if l1 == l2:
                    continue
                x = meet[l1 * nlines + l2]
                n1 = _collect(line_points, l1, p, x, pts1)
                if n1 < 3:
                    continue
                n2 = _collect(line_points, l2, p, x, pts2)
                t1 = _perms3(pts1, n1, tri1)
                t2 = _perms3(pts2, n2, tri2)
                for i in range(t1):
                    E = tri1[3 * i]
                    C = tri1[3 * i + 1]
                    A = tri1[3 * i + 2]
                    for j in range(t2):
                        B = tri2[3 * j]
                        F = tri2[3 * j + 1]
                        D = tri2[3 * j + 2]
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
    finally:
        free(pts1)
        free(pts2)
        free(tri1)
        free(tri2)
    return tested, rejected, failures, witnesses


def desargues_exhaustive(int p, join_, meet_, par_, line_points_, int max_witnesses):
    cdef int[:] join = join_
    cdef int[:] meet = meet_
    cdef int[:] par = par_
    cdef int[:] line_points = line_points_
    cdef int npts = p * p
    cdef int nlines = p * p + p
    cdef long tested = 0, rejected = 0, failures = 0
    cdef int cls, k, l, m, ia, ib, ic, iap
    cdef int A, B, C, Ap, Bp, Cp, AB, BC, AC_cls
    witnesses = []
    for cls in range(p + 1):
        for k in range(cls * p, cls * p + p):
            for l in range(cls * p, cls * p + p):
                if l == k:
                    continue
                for m in range(cls * p, cls * p + p):
                    if m == k or m == l:
                        continue
                    for ia in range(p):
                        A = line_points[k * p + ia]
                        for ib in range(p):
                            B = line_points[l * p + ib]
                            AB = join[A * npts + B]
                            for ic in range(p):
                                C = line_points[m * p + ic]
                                BC = join[B * npts + C]
                                AC_cls = join[A * npts + C] // p
                                for iap in range(p):
                                    Ap = line_points[k * p + iap]
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


def cayley(join_, meet_, par_, int npts, int nlines, pts_, int O, int I, int B, int ell):
    cdef int[:] join = join_
    cdef int[:] meet = meet_
    cdef int[:] par = par_
    cdef int[:] pts = pts_
    cdef int n = pts.shape[0]
    cdef int i, j, A, C, D, E
    cdef int OB = join[O * npts + B]
    cdef int IB = join[I * npts + B]
    cdef int par_B = par[B * nlines + ell]
    add = [0] * (n * n)
    mul = [0] * (n * n)
    for i in range(n):
        A = pts[i]
        D = meet[par_B * nlines + par[A * nlines + OB]]
        E = meet[par[A * nlines + IB] * nlines + OB]
        for j in range(n):
            C = pts[j]
            add[i * n + j] = meet[par[D * nlines + join[C * npts + B]] * nlines + ell]
            mul[i * n + j] = meet[par[E * nlines + join[B * npts + C]] * nlines + ell]
    return add, mul
