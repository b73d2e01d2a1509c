"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--max-n 22] [--trials 200000]

Prints steps per second for the Gray-code sweep and the falsifier on Paley
graphs, and checks both backends return identical results.
"""

import argparse
import time

from lcdeg import kernels
from lcdeg.paley import paley_graph


def timed(fn, *args, **kw):
    t0 = time.perf_counter()
    out = fn(*args, **kw)
    return out, time.perf_counter() - t0


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=22)
    ap.add_argument("--trials", type=int, default=200_000)
    args = ap.parse_args()
    if kernels.BACKEND != "compiled":
        print("compiled core unavailable; only the Python kernels will run")

    print(f"{'kernel':<10}{'graph':<10}{'work':>12}{'python s':>12}{'compiled s':>12}{'speedup':>10}")
    for p in (13, 17):
        if p > args.max_n:
            continue
        rows = paley_graph(p).graph.rows
        tags = [1 << v for v in range(p)]
        py, t_py = timed(kernels.gray_min, rows, tags, 1, 1 << p, backend="python")
        line = f"{'gray':<10}{'Pal_' + str(p):<10}{1 << p:>12}{t_py:>12.3f}"
        if kernels.BACKEND == "compiled":
            c, t_c = timed(kernels.gray_min, rows, tags, 1, 1 << p, backend="compiled")
            assert c == py, (c, py)
            line += f"{t_c:>12.4f}{t_py / max(t_c, 1e-9):>10.0f}x"
        print(line)

    rows = paley_graph(29).graph.rows
    tags = [1 << v for v in range(29)]
    # threshold 0 never succeeds, so every trial runs
    py, t_py = timed(kernels.falsify, rows, tags, 0, args.trials, 1, backend="python")
    line = f"{'falsify':<10}{'Pal_29':<10}{args.trials:>12}{t_py:>12.3f}"
    if kernels.BACKEND == "compiled":
        c, t_c = timed(kernels.falsify, rows, tags, 0, args.trials, 1, backend="compiled")
        assert c == py, (c, py)
        line += f"{t_c:>12.4f}{t_py / max(t_c, 1e-9):>10.0f}x"
    print(line)

    if kernels.BACKEND == "compiled":
        _, t = timed(kernels.gray_min, rows, tags, 1, 1 << 29)
        print(f"full Pal_29 sweep (2^29 subsets), compiled: {t:.2f} s")


if __name__ == "__main__":
    main()
