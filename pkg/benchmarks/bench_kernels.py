"""Time each kernel under the numba and numpy backends.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each kernel runs once untimed (numba compile / cache load), then the best
of N timed runs is reported along with the speedup.
"""
import argparse
import timeit

import numpy as np

from multilattice._kernels import numba_backend, numpy_backend
from multilattice.patterns import space


def cases():
    r5, r6 = space(5).ranks, space(6).ranks
    leq5 = numpy_backend.pattern_leq_matrix(r5)
    leq6 = numpy_backend.pattern_leq_matrix(r6)
    return [
        ("pattern_leq_matrix k=5", "pattern_leq_matrix", (r5,)),
        ("pattern_leq_matrix k=6", "pattern_leq_matrix", (r6,)),
        ("order_violations k=6", "order_violations", (leq6,)),
        ("covers_matrix k=6", "covers_matrix", (leq6,)),
        ("glb_table k=5", "glb_table", (leq5,)),
        ("enumerate_partial_orders m=4", "enumerate_partial_orders", (4,)),
        ("canonical_codes m=4", "canonical_codes", (numpy_backend.enumerate_partial_orders(4),)),
        ("monoid_tables m=4", "monoid_tables", (4,)),
    ]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if numba_backend is None:
        raise SystemExit("numba is not installed; nothing to compare")
    print(f"{'kernel':32s} {'numpy [s]':>10s} {'numba [s]':>10s} {'speedup':>8s}")
    for label, name, fargs in cases():
        times = {}
        outs = {}
        for tag, be in (("numpy", numpy_backend), ("numba", numba_backend)):
            fn = getattr(be, name)
            outs[tag] = fn(*fargs)
            times[tag] = min(timeit.repeat(lambda: fn(*fargs), number=1, repeat=args.repeat))
        a, b = outs["numpy"], outs["numba"]
        same = np.array_equal(np.asarray(a), np.asarray(b)) if not isinstance(a, tuple) else a == b
        flag = "" if same else "  MISMATCH"
        print(f"{label:32s} {times['numpy']:10.4f} {times['numba']:10.4f} "
              f"{times['numpy'] / times['numba']:7.1f}x{flag}")


if __name__ == "__main__":
    main()
