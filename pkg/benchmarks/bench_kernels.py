"""Time the compiled kernels against their pure-Python twins.

    python benchmarks/bench_kernels.py [--repeat 3]

Each workload runs on every importable backend; results must agree.
"""
import argparse
import time

from affgrowth import _kernels
from affgrowth.hive import build_hive_n, count_hive3, lattice
from affgrowth.staircase import DiagramType, enumerate_paths
from affgrowth.weights import dominant_weights, dual


def hive3_counts(mod):
    lam, mu = (12, 9, 6, 3, 1, 0), (10, 8, 5, 3, 2, 0)
    counts = []
    for nu in dominant_weights(6, 4, 18, total=59)[:60]:
        counts.append(count_hive3(lam, mu, dual(nu), kernels=mod))
    return counts


def excavations(mod):
    t = DiagramType.parse("f1,f2,f1,d1,d2,f1,d1,d1", 4)
    out = []
    for path in enumerate_paths(t)[:40]:
        h = build_hive_n(path, t.labels, kernels=mod)
        out.append(h.values)
    return out


WORKLOADS = {"3-hive search": hive3_counts, "n-hive excavation": excavations}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = _kernels.backends()
    print(f"default backend: {_kernels.BACKEND}; available: {', '.join(backends)}")
    lattice.cache_clear()
    for name, work in WORKLOADS.items():
        timings, results = {}, {}
        for bname, mod in backends.items():
            best = float("inf")
            for _ in range(args.repeat):
                start = time.perf_counter()
                results[bname] = work(mod)
                best = min(best, time.perf_counter() - start)
            timings[bname] = best
        agree = len({repr(r) for r in results.values()}) == 1
        line = "  ".join(f"{b}={t * 1e3:8.1f} ms" for b, t in timings.items())
        if "python" in timings and "cython" in timings:
            line += f"  speedup x{timings['python'] / timings['cython']:.1f}"
        print(f"{name:20s} {line}  agree={agree}")
        if not agree:
            raise SystemExit(f"backends disagree on {name}")


if __name__ == "__main__":
    main()
