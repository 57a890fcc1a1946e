"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Both backends run the same inputs; results are compared before timing is
reported, so a mismatch aborts the run.
"""

from __future__ import annotations

import argparse
import random
import sys
import time

from loconn import _kernels_py as py
from loconn.catalog import complete, petersen, x_graph
from loconn.graph import Graph
from loconn.induced import search_order

try:
    from loconn import _kernels_c as cy
except ImportError:
    cy = None


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def workloads(rng: random.Random):
    tables = [random_graph(rng, 16, 0.4) for _ in range(3)] + [petersen()]
    canon = [complete(8)] + [random_graph(rng, 10, 0.5) for _ in range(40)]
    hosts = [random_graph(rng, 12, 0.5) for _ in range(40)]
    pat = x_graph()
    order = search_order(pat)
    return [
        ("cyclable_table n<=16", lambda k: [k.cyclable_table(g.n, g.adj) for g in tables]),
        ("canonical_code n<=10", lambda k: [k.canonical_code(g.n, g.adj) for g in canon]),
        ("embed X into n=12", lambda k: [k.embed(h.n, h.adj, pat.n, pat.adj, order,
                                                  h.all_vertices, 0) for h in hosts]),
    ]


def best_of(fn, repeat: int):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args(argv)
    if cy is None:
        print("compiled extension not built; run `pip install -e . --no-build-isolation`", file=sys.stderr)
        return 2
    print(f"{'kernel':<24} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name, run in workloads(random.Random(args.seed)):
        tp, rp = best_of(lambda: run(py), args.repeat)
        tc, rc = best_of(lambda: run(cy), args.repeat)
        if rp != rc:
            print(f"{name}: backends disagree", file=sys.stderr)
            return 1
        print(f"{name:<24} {tp:>10.4f} {tc:>10.4f} {tp / tc:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
