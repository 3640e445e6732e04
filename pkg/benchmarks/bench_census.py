#!/usr/bin/env python3
"""Benchmark the compiled census kernel against the pure-Python fallback.

Runs the full orientation enumeration over the underlying graphs of a few
Jaco graphs and reports wall time per kernel plus the speedup. Pass vertex
counts as arguments to override the default sizes, e.g.

    python benchmarks/bench_census.py 8 9 10
"""

from __future__ import annotations

import sys
import time
from array import array

import jacobrush._census_py as kernel_py
from jacobrush.census import KERNEL
from jacobrush.digraph import underlying_edges
from jacobrush.jaco import build_jaco

try:
    import jacobrush._census_cy as kernel_cy
except ImportError:
    kernel_cy = None


def run_once(kernel, nu, edges):
    tails = array("i", (e[0] for e in edges))
    heads = array("i", (e[1] for e in edges))
    costs = array("b", bytes(1 << len(edges)))
    start = time.perf_counter()
    best, undoable = kernel.census_costs(nu, tails, heads, costs)
    return time.perf_counter() - start, best, undoable


def best_of(kernel, nu, edges, repeats=3):
    times = []
    result = None
    for _ in range(repeats):
        t, best, undoable = run_once(kernel, nu, edges)
        times.append(t)
        result = (best, undoable)
    return min(times), result


def main(argv):
    sizes = [int(a) for a in argv[1:]] or [7, 8, 9, 10]
    print(f"selected kernel at import: {KERNEL}")
    header = f"{'n':>3} {'eps':>4} {'masks':>9} {'python':>10} {'cython':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for n in sizes:
        g = build_jaco(n).to_digraph()
        edges = underlying_edges(g)
        eps = len(edges)
        repeats = 3 if eps <= 16 else 1
        t_py, res_py = best_of(kernel_py, g.nu, edges, repeats)
        if kernel_cy is not None:
            t_cy, res_cy = best_of(kernel_cy, g.nu, edges, repeats)
            assert res_py == res_cy, "kernels disagree"
            print(
                f"{n:>3} {eps:>4} {1 << eps:>9} {t_py:>9.4f}s {t_cy:>9.4f}s "
                f"{t_py / t_cy:>7.1f}x"
            )
        else:
            print(f"{n:>3} {eps:>4} {1 << eps:>9} {t_py:>9.4f}s {'n/a':>10} {'n/a':>8}")
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
