"""Benchmark the compiled search kernel against the pure-Python fallback.

Usage:
    python benchmarks/bench_kernels.py [--full]

The default set covers the toy searches and both J(4,2) modes; --full adds
the degree-pruned J(5,2) sweep (3^30 candidate space; the pure kernel needs
a few minutes there).
"""

import argparse
import sys
import time
from itertools import combinations

from wdrd.kernel import backends


def johnson_edges(n, e):
    verts = sorted(sum(1 << i for i in c) for c in combinations(range(n), e))
    edges = []
    for i, a in enumerate(verts):
        for j in range(i + 1, len(verts)):
            if (a & verts[j]).bit_count() == e - 1:
                edges.append((i, j))
    return len(verts), edges


def complete_edges(n):
    return n, [(u, v) for u in range(n) for v in range(u + 1, n)]


def cases(full: bool):
    out = [
        ("K3 full", *complete_edges(3), False),
        ("C4 full", 4, [(0, 1), (0, 3), (1, 2), (2, 3)], False),
        ("J(4,2) full", *johnson_edges(4, 2), False),
        ("J(4,2) degree-pruned", *johnson_edges(4, 2), True),
    ]
    if full:
        out.append(("J(5,2) degree-pruned", *johnson_edges(5, 2), True))
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--full", action="store_true",
                    help="include the J(5,2) sweep")
    args = ap.parse_args()

    impls = backends()
    if len(impls) == 1:
        print("note: compiled kernel not installed; benchmarking the pure "
              "kernel only", file=sys.stderr)

    rows = []
    baseline = {}
    for name, n, edges, prune in cases(args.full):
        results = {}
        for backend, search_run in sorted(impls.items()):
            t0 = time.perf_counter()
            r = search_run(n, edges, prune_degree=prune)
            dt = time.perf_counter() - t0
            results[backend] = (dt, r)
        first = next(iter(results.values()))[1]
        for backend, (dt, r) in results.items():
            assert {k: v for k, v in r.items() if not k.startswith("surv")} == \
                {k: v for k, v in first.items() if not k.startswith("surv")}, \
                "backend outputs differ"
        for backend, (dt, r) in sorted(results.items()):
            rate = r["examined"] / dt if dt > 0 else float("inf")
            speedup = ""
            if backend == "compiled" and "pure" in results:
                speedup = f"{results['pure'][0] / dt:7.1f}x"
            rows.append((name, backend, r["examined"], len(r["survivors"]),
                         dt, rate, speedup))

    print(f"{'case':<22} {'backend':<9} {'examined':>10} {'found':>5} "
          f"{'seconds':>9} {'leaves/s':>12} {'speedup':>8}")
    for name, backend, examined, found, dt, rate, speedup in rows:
        print(f"{name:<22} {backend:<9} {examined:>10} {found:>5} "
              f"{dt:>9.3f} {rate:>12.0f} {speedup:>8}")


if __name__ == "__main__":
    main()
