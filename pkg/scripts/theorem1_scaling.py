"""Wall time of the two-product interval table against brute-force enumeration.

The fast path is timed for growing numbers of individuals; the brute force
only while its completion count stays under the guard.

    python scripts/theorem1_scaling.py [--seed 0]
"""

import argparse
import time

import numpy as np

from symca.errors import EnumerationTooLarge
from symca.interval_table import brute_force_interval_contingency, interval_contingency
from symca.verify import random_variable


def timed(fn, *args, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - start)
    return best, out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = np.random.default_rng(args.seed)

    print(f"{'m':>6} {'pairs':>12} {'fast (ms)':>10} {'brute (ms)':>11}")
    for m in (2, 4, 6, 8, 10, 100, 1000, 10000):
        x = random_variable(rng, m, (4, 4), (1, 2), "x")
        y = random_variable(rng, m, (4, 4), (1, 2), "y")
        t_fast, fast = timed(interval_contingency, x, y)
        pairs = x.n_completions * y.n_completions
        try:
            t_brute, slow = timed(brute_force_interval_contingency, x, y, repeat=1)
            assert slow == fast
            brute = f"{1e3 * t_brute:11.2f}"
        except EnumerationTooLarge:
            brute = f"{'skipped':>11}"
        shown = f"{pairs}" if pairs < 10**9 else f"~10^{len(str(pairs)) - 1}"
        print(f"{m:>6} {shown:>12} {1e3 * t_fast:10.3f} {brute}")


if __name__ == "__main__":
    main()
