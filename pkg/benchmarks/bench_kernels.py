#!/usr/bin/env python3
"""Time the pure-Python flow kernels against the compiled extension.

Two workload families, matching how the library actually uses the kernels:

* chain-curve: the min-cost-flow sweep that computes antichain-family sizes,
  on chain posets of subset algebras of growing size;
* bipartite: the max-flow normality test on complete bipartite level pairs.

Usage: python3 benchmarks/bench_kernels.py [--repeats N]
"""

import argparse
import time

from posetlab import catalog, chains, kernels, _kernels_py
from posetlab.analysis import _chain_network

try:
    from posetlab import _kernels as _compiled
except ImportError:
    _compiled = None


def best_of(fn, repeats):
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def chain_curve_instances():
    for text, n, k in (("B(3)[2]", 3, 2), ("B(3)[3]", 3, 3), ("B(4)[2]", 4, 2), ("B(4)[3]", 4, 3)):
        p = chains.chain_poset(catalog.boolean(n), k)
        n2, us, vs, caps, costs, s, t, _ = _chain_network(p)
        yield text, len(us), lambda impl, a=(n2, us, vs, caps, costs, s, t, -1, -1, 1): impl.ssp(*a)


def bipartite_instances():
    for m in (16, 32, 64, 128):
        na = nb = m
        big = na * nb + 1
        s, t = na + nb, na + nb + 1
        us, vs, caps = [], [], []
        for a in range(na):
            us.append(s); vs.append(a); caps.append(nb)
        for b in range(nb):
            us.append(na + b); vs.append(t); caps.append(na)
        for a in range(na):
            for b in range(nb):
                us.append(a); vs.append(na + b); caps.append(big)
        yield f"K({m},{m})", len(us), lambda impl, a=(t + 1, us, vs, caps, s, t): impl.dinic(*a)


def run(title, instances, repeats):
    print(f"\n{title}")
    header = f"{'instance':<12} {'arcs':>7} {'pure (ms)':>10} {'compiled (ms)':>14} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, arcs, call in instances:
        pure = best_of(lambda: call(_kernels_py), repeats)
        if _compiled is None:
            print(f"{name:<12} {arcs:>7} {pure * 1e3:>10.2f} {'n/a':>14} {'n/a':>8}")
            continue
        fast = best_of(lambda: call(_compiled), repeats)
        ratio = pure / fast if fast > 0 else float("inf")
        print(f"{name:<12} {arcs:>7} {pure * 1e3:>10.2f} {fast * 1e3:>14.2f} {ratio:>7.1f}x")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeats", type=int, default=3, help="best-of-N timing (default 3)")
    args = ap.parse_args()
    print(f"active backend: {kernels.backend}")
    if _compiled is None:
        print("compiled extension not importable; timing the pure backend only")
    run("chain-curve min-cost flow (antichain families)", chain_curve_instances(), args.repeats)
    run("bipartite max flow (normality)", bipartite_instances(), args.repeats)


if __name__ == "__main__":
    main()
