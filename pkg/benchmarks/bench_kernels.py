"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--quick]

Both backends get identical inputs, and their results are compared before
any timing is reported.
"""

from __future__ import annotations

import argparse
import random
import sys
import time

from gpkit import _pycore
from gpkit.gp import _branching_order, collinear_table, distances, induced_p3_table
from gpkit.graph import _refined_colors, graph_from_edges, is_connected
from gpkit.verifier import random_connected_graph

try:
    from gpkit import _core
except ImportError:
    _core = None


def _graphs(count, lo, hi, seed):
    rng = random.Random(seed)
    return [random_connected_graph(rng.randint(lo, hi), rng) for _ in range(count)]


def workloads(quick: bool):
    scale = 1 if quick else 4
    gp_graphs = _graphs(25 * scale, 18, 28, 1)
    gp_inputs = [(g.order, collinear_table(distances(g)), _branching_order(g), 0, g.order) for g in gp_graphs]
    eta_inputs = [(g.order, induced_p3_table(g), _branching_order(g), 0, g.order) for g in gp_graphs]
    rng = random.Random(2)
    dense = []
    for _ in range(10 * scale):
        n = 60
        pairs = [(i, j) for j in range(n) for i in range(j)]
        g = graph_from_edges(n, [e for e in pairs if rng.random() < 0.7])
        dense.append((list(g.adj), _branching_order(g)))
    brute = [(g.order, distances(g).flat(), g.order) for g in _graphs(20 * scale, 10, 12, 3)]
    canon = []
    rng = random.Random(4)
    while len(canon) < 200 * scale:
        n = rng.randint(6, 10)
        pairs = [(i, j) for j in range(n) for i in range(j)]
        g = graph_from_edges(n, [e for e in pairs if rng.random() < rng.uniform(0.2, 0.8)])
        if is_connected(g):
            canon.append((list(g.adj), _refined_colors(g)))
    return {
        "gp branch and bound (n=18..28)": ("max_triple_free", gp_inputs),
        "eta branch and bound (n=18..28)": ("max_triple_free", eta_inputs),
        "max clique (n=60, p=0.7)": ("max_clique", dense),
        "gp brute force (n=10..12)": ("gp_brute", brute),
        "canonical labelling (n=6..10)": ("canonical_order", canon),
    }


def _time(fn, inputs, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t = time.perf_counter()
        out = [fn(*args) for args in inputs]
        best = min(best, time.perf_counter() - t)
    return best, out


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true")
    args = ap.parse_args(argv)
    if _core is None:
        print("compiled extension gpkit._core is not built; nothing to compare", file=sys.stderr)
        return 1
    print(f"{'kernel':34} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name, (fn_name, inputs) in workloads(args.quick).items():
        py_t, py_out = _time(getattr(_pycore, fn_name), inputs, 1 if fn_name == "gp_brute" else args.repeat)
        cy_t, cy_out = _time(getattr(_core, fn_name), inputs, args.repeat)
        if py_out != cy_out:
            print(f"{name}: backends disagree", file=sys.stderr)
            return 2
        print(f"{name:34} {py_t:10.3f} {cy_t:10.4f} {py_t / cy_t:7.0f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
