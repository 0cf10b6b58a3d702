"""Compare the numba kernels with the pure-numpy fallback.

Each path runs in its own interpreter (the flag is read at import time):

    python3 benchmarks/bench_kernels.py            # both paths, table
    python3 benchmarks/bench_kernels.py --worker   # one path, JSON on stdout
"""

import argparse
import json
import os
import subprocess
import sys
import time


def workloads():
    from borsukoid import _kernels as K
    from borsukoid.coloring import chromatic_number
    from borsukoid.families import non_pappus, uniform
    from borsukoid.graphs import classical_kneser, kneser_graph
    from borsukoid.verify import clear_cache, sweep

    big = uniform(4, 12).basis_array
    np_graph = kneser_graph(non_pappus())
    kg93 = classical_kneser(9, 3)

    def sweep5():
        clear_cache()
        sweep([(5, r) for r in range(6)])

    return {
        "kneser_adjacency U4,12": lambda: K.kneser_adjacency(big),
        "distance_adjacency U4,12": lambda: K.distance_adjacency(big, 8),
        "chi KG(non-Pappus)": lambda: chromatic_number(np_graph),
        "chi KG(9,3)": lambda: chromatic_number(kg93),
        "sweep n=5": sweep5,
    }


def worker(repeats):
    from borsukoid._jit import USE_NUMBA

    out = {"numba": USE_NUMBA, "timings": {}}
    for name, fn in workloads().items():
        fn()  # warm up (compiles under numba)
        best = float("inf")
        for _ in range(repeats):
            t = time.perf_counter()
            fn()
            best = min(best, time.perf_counter() - t)
        out["timings"][name] = best
    json.dump(out, sys.stdout)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--worker", action="store_true")
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args()
    if args.worker:
        worker(args.repeats)
        return
    results = {}
    for flag in ("1", "0"):
        env = dict(os.environ, BORSUKOID_NUMBA=flag)
        proc = subprocess.run(
            [sys.executable, __file__, "--worker", "--repeats", str(args.repeats)],
            env=env, capture_output=True, text=True, check=True,
        )
        results[flag] = json.loads(proc.stdout)["timings"]
    width = max(map(len, results["1"]))
    print(f"{'workload'.ljust(width)}  {'numba ms':>10}  {'numpy ms':>10}  {'speedup':>8}")
    for name in results["1"]:
        a, b = results["1"][name] * 1e3, results["0"][name] * 1e3
        print(f"{name.ljust(width)}  {a:10.2f}  {b:10.2f}  {b / a:8.1f}x")


if __name__ == "__main__":
    main()
