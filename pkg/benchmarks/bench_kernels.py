"""Compare the compiled and pure-Python kernel backends.

Usage: python benchmarks/bench_kernels.py [--repeat N] [--n N] [--m M]
"""

import argparse
import random
import timeit

from wtss import kernels
from wtss.builder import build_wtss
from wtss.errors import NegativeCycleError
from wtss.flow import max_flow
from wtss.graph import Graph
from wtss.shortest_path import sssp


def random_instance(seed: int, n: int, m: int) -> Graph:
    # nonnegative weights keep the instance free of negative cycles
    rng = random.Random(seed)
    while True:
        triples = [(rng.randrange(n), rng.randrange(n), rng.randint(0, 9)) for _ in range(m)]
        triples = [tr for tr in triples if tr[0] != tr[1]]
        try:
            return Graph.from_edges(n, triples, 0)
        except NegativeCycleError:
            continue


def workloads(big: Graph, small: Graph) -> dict:
    t = big.n - 1
    return {
        "sssp": lambda: sssp(big, 0),
        "max_flow": lambda: max_flow(big, [0], t),
        "build_wtss k=2": lambda: build_wtss(small, 0, 2),
    }


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--n", type=int, default=400)
    ap.add_argument("--m", type=int, default=4000)
    args = ap.parse_args()

    big = random_instance(1, args.n, args.m)
    small = random_instance(2, 40, 160)
    backends = kernels.available_backends()
    if "cython" not in backends:
        print("compiled extension not built; timing the Python backend only")

    original = kernels.BACKEND
    rows = {}
    try:
        for name in backends:
            kernels.set_backend(name)
            for label, fn in workloads(big, small).items():
                fn()  # warm caches such as the graph topology arrays
                rows.setdefault(label, {})[name] = min(
                    timeit.repeat(fn, number=1, repeat=args.repeat))
    finally:
        kernels.set_backend(original)

    print(f"graph n={big.n} m={big.m}; builder graph n={small.n} m={small.m}")
    print(f"{'workload':<16}" + "".join(f"{b:>12}" for b in backends) + "     speedup")
    for label, times in rows.items():
        line = f"{label:<16}" + "".join(f"{times[b] * 1e3:>10.2f}ms" for b in backends)
        if len(times) == 2:
            line += f"{times['python'] / times['cython']:>11.1f}x"
        print(line)


if __name__ == "__main__":
    main()
