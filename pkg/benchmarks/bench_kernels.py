"""Compare the compiled and pure-Python exhaustive kernels over GF(p).

    python3 benchmarks/bench_kernels.py [--primes 3 5 7] [--repeat 3]

Every kernel runs on both backends; results must be identical and the table
reports the best wall time of each and the speedup.
"""

import argparse
import time
from array import array

from desargues.configurations import exhaustive_size
from desargues.kernels import backends, gf_tables
from desargues.plane import PlaneModel
from desargues.scalars import RingDescriptor


def best_of(fn, repeat):
    times, result = [], None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - start)
    return min(times), result


def jobs(p):
    t = gf_tables(p)
    m = PlaneModel(RingDescriptor.gf(p))
    line = m.sloped(0, 0)
    ids = array("i", [t.point_id(P) for P in m.points_on(line)])
    O, I, B = (t.point_id(m.point(*xy)) for xy in ((0, 0), (1, 0), (0, 1)))
    # larger planes are far beyond a benchmark's patience
    if exhaustive_size("pappus", p) <= 10**8:
        yield "pappus", lambda impl: t.pappus_exhaustive(5, impl=impl)
    if exhaustive_size("desargues", p) <= 10**8:
        yield "desargues", lambda impl: t.desargues_exhaustive(5, impl=impl)
    yield "cayley", lambda impl: impl.cayley(t.join, t.meet, t.par, t.npts, t.nlines, ids, O, I, B, t.line_id(line))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--primes", type=int, nargs="+", default=[3, 5, 7])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--python-limit", type=float, default=120.0,
                    help="skip the pure-Python run when the compiled one predicts more than this many seconds")
    args = ap.parse_args()
    impls = backends()
    if "cython" not in impls:
        raise SystemExit("compiled backend not built; run pip install -e . first")
    print(f"{'kernel':<10} {'p':>3} {'cython s':>10} {'python s':>10} {'speedup':>8}")
    for p in args.primes:
        for name, run in jobs(p):
            c_time, c_res = best_of(lambda: run(impls["cython"]), args.repeat)
            # the pure-Python kernel is roughly 100x slower; skip hopeless runs
            if c_time * 150 > args.python_limit:
                print(f"{name:<10} {p:>3} {c_time:>10.4f} {'skipped':>10} {'':>8}")
                continue
            py_time, py_res = best_of(lambda: run(impls["python"]), 1 if c_time > 0.05 else args.repeat)
            assert repr(c_res) == repr(py_res), f"backends disagree on {name} p={p}"
            print(f"{name:<10} {p:>3} {c_time:>10.4f} {py_time:>10.4f} {py_time / max(c_time, 1e-9):>7.0f}x")


if __name__ == "__main__":
    main()
