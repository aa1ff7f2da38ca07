"""Spanning-tree enumeration: numba kernel vs the same kernel interpreted.

    python3 benchmarks/bench_enumeration.py [--repeat 3]

Graphs are K_n for a few n plus the Hamming graphs G(2,2,2) and G(3,3).
Each backend's output is compared before timing is reported; the numba
timing excludes compilation.
"""
import argparse
import time

import numpy as np

from wcomplexity.graph import complete_graph
from wcomplexity.hamming import HammingSpec, build_graph
from wcomplexity.kernels import BACKENDS, tree_subsets


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    cases = [(f"K{n}", complete_graph(n)) for n in (5, 6, 7)]
    cases += [("H" + "".join(map(str, s)), build_graph(HammingSpec.unit(s))) for s in ((2, 2, 2), (3, 3))]
    names = [b for b in ("numpy", "numba") if b in BACKENDS]
    if "numba" not in names:
        print("numba unavailable; timing the numpy backend only")

    print(f"{'graph':>8} {'edges':>6} {'trees':>8}" + "".join(f" {b + ' s':>10}" for b in names) + "  speedup")
    for label, g in cases:
        eu, ev = g.graph.endpoint_arrays()
        n = g.vertex_count
        if "numba" in names:
            tree_subsets(eu, ev, n, "numba")  # compile
        times, outs = [], []
        for b in names:
            t, out = best_of(lambda: tree_subsets(eu, ev, n, b), args.repeat)
            times.append(t)
            outs.append(out)
        for out in outs[1:]:
            np.testing.assert_array_equal(out, outs[0])
        speed = f"{times[0] / times[1]:8.1f}x" if len(times) == 2 else "       -"
        print(f"{label:>8} {g.edge_count:>6} {len(outs[0]):>8}" + "".join(f" {t:>10.4f}" for t in times) + f" {speed}")


if __name__ == "__main__":
    main()
