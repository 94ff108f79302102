#!/usr/bin/env python3
"""Compare the compiled kernel path against the pure-Python fallback.

Runs the three partitioners plus degeneracy peeling over a deterministic
generated corpus, then re-executes itself with EQUIPART_PURE=1 and prints a
side-by-side table. Usage: python3 benchmarks/bench_kernels.py [--count N]
[--max-n N].
"""

import argparse
import json
import os
import subprocess
import sys
import time


def build_corpus(count, max_n):
    from equipart import GenSpec, gen_planar
    from equipart.generators import FLIPPED, SPARSE, STACKED, TRIANGLE_FREE

    kinds = (STACKED, FLIPPED, SPARSE)
    planar, trifree = [], []
    for i in range(count):
        n = 4 + (i % (max_n - 3))
        kind = kinds[i % 3]
        planar.append(gen_planar(GenSpec(
            kind=kind, n=n, seed=100 + i,
            flips=3 * n if kind == FLIPPED else 0,
            edges=(3 * n - 6) * (i % 4) // 4 if kind == SPARSE else None)))
        trifree.append(gen_planar(GenSpec(
            kind=TRIANGLE_FREE, n=n, seed=200 + i,
            edges=max(0, (2 * n - 4) * (2 + i % 3) // 4))))
    return planar, trifree


def run_workloads(count, max_n):
    from equipart import (degeneracy, partition_2x2deg_trifree,
                          partition_2x3deg, partition_3x2deg)

    planar, trifree = build_corpus(count, max_n)

    # trigger compilation / first-call setup outside the timed region
    partition_2x3deg(planar[0])
    partition_3x2deg(planar[0])
    partition_2x2deg_trifree(trifree[0])
    degeneracy(planar[0])

    timings = {}

    def timed(name, fn, graphs):
        t0 = time.perf_counter()
        for g in graphs:
            fn(g)
        timings[name] = time.perf_counter() - t0

    timed("partition_2x3deg", partition_2x3deg, planar)
    timed("partition_3x2deg", partition_3x2deg, planar)
    timed("partition_2x2deg_trifree", partition_2x2deg_trifree, trifree)
    timed("degeneracy", degeneracy, planar)
    return timings


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=300,
                    help="graphs per corpus (default 300)")
    ap.add_argument("--max-n", type=int, default=40)
    ap.add_argument("--emit-json", action="store_true",
                    help="print raw timings as JSON and exit (used by the "
                         "subprocess re-invocation)")
    args = ap.parse_args()

    timings = run_workloads(args.count, args.max_n)
    if args.emit_json:
        print(json.dumps(timings))
        return

    mode = "pure" if os.environ.get("EQUIPART_PURE") else "numba"
    other_mode = "numba" if mode == "pure" else "pure"
    env = dict(os.environ)
    env["EQUIPART_PURE"] = "" if mode == "pure" else "1"
    out = subprocess.run(
        [sys.executable, os.path.abspath(__file__),
         "--count", str(args.count), "--max-n", str(args.max_n),
         "--emit-json"],
        env=env, capture_output=True, text=True, check=True)
    other = json.loads(out.stdout)

    total_graphs = args.count
    print(f"{total_graphs} graphs per workload, n up to {args.max_n}\n")
    print(f"{'workload':<26} {mode:>10} {other_mode:>10} {'speedup':>9}")
    for name, t in timings.items():
        t2 = other[name]
        fast, slow = (t, t2) if mode == "numba" else (t2, t)
        print(f"{name:<26} {t:>9.3f}s {t2:>9.3f}s {slow / fast:>8.1f}x")


if __name__ == "__main__":
    main()
