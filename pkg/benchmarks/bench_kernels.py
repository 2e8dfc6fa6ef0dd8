"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--max-n 8] [--random 200] [--repeat 3]

Each workload is run once per backend by swapping the module that
``wlpositroid.kernels`` dispatches to, so the surrounding Python code is
identical and only the kernel differs.
"""

import argparse
import time

from wlpositroid import kernels
from wlpositroid.denominator import verify_radical
from wlpositroid.diagram import all_admissible, random_corpus
from wlpositroid.matroid import bases
from wlpositroid.necklace import grassmann_necklace


def workloads(max_n, n_random):
    small = list(all_admissible(max_n))
    rand = random_corpus(n_random, seed=1) if n_random else []
    return {
        "necklace (n<=%d + random)" % max_n: lambda: [grassmann_necklace(W) for W in small + rand],
        "bases (n<=%d)" % max_n: lambda: [bases(W) for W in small],
        "bases (random n=9..12)": lambda: [bases(W) for W in rand],
        "verify_radical (random)": lambda: [verify_radical(W) for W in rand],
    }


def timed(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--random", type=int, default=200)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    backends = kernels.available_backends()
    if "cython" not in backends:
        print("compiled kernels are not built; only the Python backend is available")
    jobs = workloads(args.max_n, args.random)
    names = sorted(backends)
    print(f"{'workload':<32}" + "".join(f"{b:>12}" for b in names) + ("     speedup" if len(names) > 1 else ""))
    saved = kernels._impl
    try:
        for label, fn in jobs.items():
            row = {}
            for b in names:
                kernels._impl = backends[b]
                row[b] = timed(fn, args.repeat)
            line = f"{label:<32}" + "".join(f"{row[b]:>11.3f}s" for b in names)
            if len(names) > 1:
                line += f"{row['python'] / row['cython']:>11.1f}x"
            print(line)
    finally:
        kernels._impl = saved


if __name__ == "__main__":
    main()
