"""Time the compiled kernel against the pure-Python one.

    python3 benchmarks/bench_kernel.py [--repeat N]

Each workload enumerates the signed rotation systems of one connected graph
up to a given Euler genus, then computes canonical codes for the first few
hundred results.  Both kernels must produce identical output; the script
exits non-zero otherwise.
"""
from __future__ import annotations

import argparse
import sys
import time

from rp2embed import _pykernel
from rp2embed.catalog import builtin, cube_graph
from rp2embed.graph import complete_graph
from rp2embed.scheme import spanning_tree

try:
    from rp2embed import _ckernel
except ImportError:
    _ckernel = None

WORKLOADS = [
    ("k5", 1),
    ("k6", 1),
    ("k52", 1),
    ("k33", 2),
    ("cube", 2),
    ("k6", 2),
]


def _graph(name: str):
    if name == "cube":
        return cube_graph()
    return complete_graph(6) if name == "k6" else builtin(name).graph


def _run(kernel, g, genus: int):
    tree, extra = spanning_tree(g)
    raw = kernel.enumerate_embeddings(g.vertex_count, g.edges, tree, extra, genus, list(range(genus + 1)), 10**9)
    roots = range(4 * len(g.edges))
    codes = [kernel.canonical_code(nxt, sign, roots) for _, nxt, sign, _ in raw[:300]]
    return raw, codes


def _best_time(kernel, g, genus: int, repeat: int):
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = _run(kernel, g, genus)
        best = min(best, time.perf_counter() - start)
    return best, result


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)
    if _ckernel is None:
        print("compiled kernel is not built; reinstall with Cython and a C compiler available")
        return 1
    print(f"{'graph':<8}{'genus':>6}{'systems':>10}{'python s':>12}{'cython s':>12}{'speedup':>10}")
    ok = True
    for name, genus in WORKLOADS:
        g = _graph(name)
        tp, rp = _best_time(_pykernel, g, genus, args.repeat)
        tc, rc = _best_time(_ckernel, g, genus, args.repeat)
        same = rp == rc
        ok &= same
        speed = tp / tc if tc > 0 else float("inf")
        flag = "" if same else "  MISMATCH"
        print(f"{name:<8}{genus:>6}{len(rp[0]):>10}{tp:>12.4f}{tc:>12.4f}{speed:>9.1f}x{flag}")
    return 0 if ok else 2


if __name__ == "__main__":
    sys.exit(main())
