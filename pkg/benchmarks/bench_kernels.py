"""Time the plain-Python and numba-compiled kernels on the same inputs.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each kernel is called once on both paths first: the results must agree and
the JIT call absorbs compilation.  Reported times are best-of-N wall clock.
"""

import argparse
import time

import numpy as np

from bpglab import _kernels, named
from bpglab.graph import disjoint_union
from bpglab.recognition import _candidates, _search_order
from bpglab.universal import universal_bpg, universal_chain, witness_rnt


def cases():
    h5 = universal_bpg(4)
    pat = disjoint_union([named.star(2)] * 2)
    out = np.zeros((1, pat.n), dtype=np.int64)
    yield ("embed_search count 2S_2 in H_{4,4}", "embed_search",
           (h5.matrix, pat.matrix, _search_order(pat), _candidates(h5, pat), out, 0))
    r = witness_rnt(40, 2).graph
    yield ("max_independent_set R_{40,2}", "max_independent_set",
           (r.matrix, np.int64((1 << r.n) - 1)))
    z = universal_chain(6)
    yield ("longest_path_edges Z_6", "longest_path_edges", (z.matrix,))
    yield ("distinguishing_scan H_{3,3} + P_5", "distinguishing_scan",
           (disjoint_union([universal_bpg(3), named.path(5)]).matrix,))


def best_of(fn, args, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    print(f"{'kernel':40s} {'python s':>10s} {'jit s':>10s} {'speedup':>8s}")
    for label, name, inputs in cases():
        py, jit = getattr(_kernels.PY, name), getattr(_kernels.JIT, name)
        a, b = py(*inputs), jit(*inputs)
        assert a == b, (label, a, b)
        tp = best_of(py, inputs, args.repeat)
        tj = best_of(jit, inputs, args.repeat)
        print(f"{label:40s} {tp:10.4f} {tj:10.6f} {tp / max(tj, 1e-9):8.0f}x")


if __name__ == "__main__":
    main()
