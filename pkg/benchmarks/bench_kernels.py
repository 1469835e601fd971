"""Compare the compiled and pure-Python search kernels.

    python benchmarks/bench_kernels.py [--repeat 3]

Both backends run the same workloads; their results must agree, so a
mismatch is reported as an error rather than a timing.
"""
import argparse
import itertools
import sys
import time

from starpcg.families import cycle_graph, spider
from starpcg.graph import complement_graph
from starpcg.kernels import backends


def slot_workload(g, k, orders=720):
    """Count the monotone slot matrices over the first ``orders`` vertex orders."""
    parities = []
    for perm in itertools.islice(itertools.permutations(range(g.n)), orders):
        parities.append([1 if g.has_edge(perm[i], perm[j]) else 0
                         for i in range(g.n) for j in range(i + 1, g.n)])

    def run(mod):
        total_nodes = total_matrices = 0
        for parity in parities:
            found = []
            nodes, _ = mod.enumerate_slots(parity, g.n, 2 * k, False, lambda s: found.append(1) and False, 10**9)
            total_nodes += nodes
            total_matrices += len(found)
        return total_nodes, total_matrices

    return run


def grid_workload(g, w_max):
    flags = [1 if p in g.edges else 0 for p in g.pairs()]

    def run(mod):
        return mod.grid_scan(g.n, flags, w_max, 0)

    return run


WORKLOADS = [
    ("slots  co-C7  k=3", slot_workload(complement_graph(cycle_graph(7)), 3)),
    ("slots  spider k=2", slot_workload(spider(2, 2, 2), 2)),
    ("slots  C8     k=2", slot_workload(cycle_graph(8), 2)),
    ("grid   C5  w<=12", grid_workload(cycle_graph(5), 12)),
    ("grid   C6  w<=8", grid_workload(cycle_graph(6), 8)),
]


def best_time(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    mods = backends()
    if "compiled" not in mods:
        print("compiled extension not built; only the Python backend is timed")
    names = list(mods)
    print(f"{'workload':<20}" + "".join(f"{n:>12}" for n in names) + f"{'speedup':>10}")
    status = 0
    for label, work in WORKLOADS:
        times, results = [], []
        for name in names:
            t, r = best_time(lambda: work(mods[name]), args.repeat)
            times.append(t)
            results.append(r)
        if any(r != results[0] for r in results):
            print(f"{label:<20} MISMATCH {results}")
            status = 1
            continue
        speed = f"{times[0] / times[-1]:>9.1f}x" if len(times) > 1 else ""
        print(f"{label:<20}" + "".join(f"{t:>11.4f}s" for t in times) + speed)
    return status


if __name__ == "__main__":
    sys.exit(main())
