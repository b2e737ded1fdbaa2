#!/usr/bin/env python3
"""Benchmark the compiled embedding kernel against the pure-Python one.

Runs identical bounded workloads (first-embedding and absence queries only —
never full enumeration, whose result lists can dwarf the work being measured)
through every loadable kernel and prints a table of per-kernel times with the
speedup relative to pure Python.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import time

from xtrees.constructions import f_n0, fh_q, gstar, pow2
from xtrees.kernels import available_kernels
from xtrees.order import CgGraph, OrderedGraph
from xtrees.trees import CROSSING_P3_EDGES


def _workloads():
    """(name, host, pattern, limit) — limit=1 probes presence, the absence
    cases exhaust the search space without materialising anything."""
    p = OrderedGraph(4, CROSSING_P3_EDGES)
    pair2a = OrderedGraph(5, [(1, 3), (1, 5), (2, 3), (2, 4)])
    pair1a = OrderedGraph(5, [(1, 3), (1, 4), (2, 3), (2, 5)])
    ell = CgGraph(4, [(1, 2), (2, 3), (3, 4)])
    zig = CgGraph(5, [(1, 2), (2, 5), (3, 4), (3, 5)])
    return [
        ("pow2(64) avoids P", pow2(64), p, 0),
        ("gstar(64,2,1,1) avoids P", gstar(64, 2, 1, 1), p, 0),
        ("fh_q(32) avoids pattern", fh_q(32), pair2a, 0),
        ("fh_q(32) finds pattern", fh_q(32), pair1a, 1),
        ("f_n0(64) avoids L", f_n0(64), ell, 0),
        ("f_n0(64) finds zigzag", f_n0(64), zig, 1),
    ]


def _run(kernel, host, pattern, limit) -> int:
    maps = kernel(
        host.n,
        host.adjacency_masks(),
        pattern.n,
        [(u - 1, v - 1) for u, v in pattern.edges],
        host.mode == "cg",
        limit,
    )
    return len(maps)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3, help="best-of repeats")
    args = parser.parse_args()

    kernels = available_kernels()
    print(f"kernels: {', '.join(kernels)}")
    width = max(len(name) for name, *_ in _workloads())
    header = f"{'workload':<{width}}  " + "".join(f"{k:>12}" for k in kernels)
    if "compiled" in kernels and "pure" in kernels:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))

    totals = dict.fromkeys(kernels, 0.0)
    for name, host, pattern, limit in _workloads():
        times = {}
        results = set()
        for kname, kernel in kernels.items():
            best = float("inf")
            for _ in range(args.repeat):
                t0 = time.perf_counter()
                found = _run(kernel, host, pattern, limit)
                best = min(best, time.perf_counter() - t0)
            times[kname] = best
            totals[kname] += best
            results.add(found)
        if len(results) != 1:
            raise SystemExit(f"kernels disagree on {name!r}: {results}")
        row = f"{name:<{width}}  " + "".join(f"{times[k] * 1e3:>10.2f}ms" for k in kernels)
        if "compiled" in times and "pure" in times:
            row += f"{times['pure'] / max(times['compiled'], 1e-9):>9.1f}x"
        print(row)

    row = f"{'total':<{width}}  " + "".join(f"{totals[k] * 1e3:>10.2f}ms" for k in kernels)
    if "compiled" in totals and "pure" in totals:
        row += f"{totals['pure'] / max(totals['compiled'], 1e-9):>9.1f}x"
    print(row)


if __name__ == "__main__":
    main()
