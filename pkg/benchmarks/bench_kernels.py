#!/usr/bin/env python3
"""Compare the compiled burn kernel against the pure-Python fallback.

Runs burn_times_csr from both implementations on identical CSR inputs and
reports wall times and the speedup.  Usage:

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import time

import numpy as np

from burnkit import _pyburn
from burnkit.model import LabeledGraph, PathForest, Spider, ceil_sqrt
from burnkit.model import path_forest_to_graph, spider_to_graph
from burnkit.spider import _path_pairs

try:
    from burnkit import _fastburn
except ImportError:
    _fastburn = None


def tiled_sources(order):
    """Center indices of the ceil-sqrt tiling, a realistic source load."""
    return np.asarray([c for c, _ in _path_pairs(order)], dtype=np.int32)


def random_graph(rng, n, m):
    vertices = list(range(n))
    edges = set()
    while len(edges) < m:
        u, v = rng.sample(vertices, 2)
        edges.add((min(u, v), max(u, v)))
    return LabeledGraph(vertices, sorted(edges))


def instances():
    rng = random.Random(1)
    path = path_forest_to_graph(PathForest((200_000,)))
    yield "path n=200k, tiled sources", path.csr(), tiled_sources(200_000)

    arms = tuple(rng.randint(50, 400) for _ in range(500))
    sp = spider_to_graph(Spider(arms))
    srcs = np.asarray(rng.sample(range(sp.order), ceil_sqrt(sp.order)), dtype=np.int32)
    yield f"spider n={sp.order}, random sources", sp.csr(), srcs

    g = random_graph(rng, 50_000, 150_000)
    srcs = np.asarray(rng.sample(range(g.order), 12), dtype=np.int32)
    yield "random n=50k m=150k", g.csr(), srcs


def best_of(repeat, fn, *args):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3, help="take the best of N runs")
    args = ap.parse_args()

    print(f"{'instance':<34} {'python':>10} {'compiled':>10} {'speedup':>8}")
    for name, (indptr, indices), sources in instances():
        t_py, out_py = best_of(args.repeat, _pyburn.burn_times_csr, indptr, indices, sources)
        if _fastburn is None:
            print(f"{name:<34} {t_py * 1e3:>8.1f}ms {'n/a':>10} {'n/a':>8}")
            continue
        t_c, out_c = best_of(args.repeat, _fastburn.burn_times_csr, indptr, indices, sources)
        if not np.array_equal(out_py, out_c):
            raise SystemExit(f"kernel mismatch on: {name}")
        print(f"{name:<34} {t_py * 1e3:>8.1f}ms {t_c * 1e3:>8.1f}ms {t_py / t_c:>7.1f}x")
    if _fastburn is None:
        print("compiled kernel not built; showing the pure-Python times only")


if __name__ == "__main__":
    main()
