"""Time the compiled kernels against the pure-Python ones and check they agree.

    python3 benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import time

from obldel import kernels

CASES = [
    ("supersequences z=10 bits -> 14", lambda: [kernels.supersequences(z, 10, 14) for z in range(0, 1024, 8)]),
    ("subsequences 14 bits, t=2", lambda: [kernels.subsequences(x, 14, 12) for x in range(0, 1 << 14, 16)]),
    ("confusable n=12, t=2", lambda: [kernels.confusable(x, 12, 2) for x in range(0, 4096, 32)]),
    ("greedy colouring n=12, t=2", lambda: kernels.greedy_coloring(12, 2)),
    ("match counts 2000 x 2000", lambda: kernels.match_counts(list(range(10**6, 10**6 + 2000)), 10**6 + 1105,
                                                           list(range(2049, 6049, 2)))),
]


def _plain(x):
    return [_plain(y) for y in x] if isinstance(x, (list, tuple)) else x


def timed(fn, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        start = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - start)
    return best, out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    try:
        kernels.use_backend("cython")
    except RuntimeError:
        print("compiled kernels are not built; nothing to compare")
        return
    print(f"{'kernel':34s} {'python s':>10s} {'cython s':>10s} {'speedup':>8s}")
    for name, fn in CASES:
        kernels.use_backend("python")
        tp, ref = timed(fn, args.repeat)
        kernels.use_backend("cython")
        tc, out = timed(fn, args.repeat)
        assert _plain(out) == _plain(ref), f"backends disagree on {name}"
        print(f"{name:34s} {tp:10.4f} {tc:10.4f} {tp / tc:8.1f}x")


if __name__ == "__main__":
    main()
