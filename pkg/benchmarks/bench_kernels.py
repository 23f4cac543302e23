"""Time the numba kernels against their numpy fallbacks on random graphs.

    python benchmarks/bench_kernels.py [--sizes 10 12 14] [--repeat 3] [--seed 1]

Both variants must agree on every input; the script exits nonzero if they do not.
With HGK_DISABLE_NUMBA=1 the "numba" column runs uncompiled, which is a useful
sanity check that the switch works.
"""

from __future__ import annotations

import argparse
import sys
import timeit

import numpy as np

from hgk import kernels
from hgk._accel import HAS_NUMBA
from hgk.generators import make_rng


def random_adjacency(n: int, rng, density: float = 0.35) -> np.ndarray:
    adj = np.zeros(n, dtype=np.int64)
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < density:
                adj[i] |= np.int64(1) << j
                adj[j] |= np.int64(1) << i
    return adj


def cases(n: int, rng):
    adj = random_adjacency(n, rng)
    closed = adj | (np.int64(1) << np.arange(n, dtype=np.int64))
    half = n // 2
    rows = np.array([int(adj[i]) >> half for i in range(half)], dtype=np.int64)
    yield "min_dominating_set", kernels.min_dominating_set_nb, kernels.min_dominating_set_np, (closed,)
    yield "max_clique", kernels.max_clique_nb, kernels.max_clique_np, (adj,)
    yield "minimal_separators", kernels.minimal_separator_masks_nb, kernels.minimal_separator_masks_np, (adj,)
    yield "induced_matching", kernels.max_induced_matching_nb, kernels.max_induced_matching_np, (rows, n - half)
    yield "nec_d2", kernels.nec_count_nb, kernels.nec_count_np, (rows, n - half, 2)


def same(a, b) -> bool:
    if isinstance(a, np.ndarray):
        return bool(np.array_equal(a, b))
    if isinstance(a, tuple):
        return all(same(x, y) for x, y in zip(a, b))
    return int(a) == int(b)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[10, 12, 14])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=1)
    a = ap.parse_args(argv)

    print(f"numba enabled: {HAS_NUMBA}")
    print(f"{'kernel':<20}{'n':>4}{'numba ms':>12}{'numpy ms':>12}{'speedup':>10}")
    mismatches = 0
    for n in a.sizes:
        rng = make_rng(a.seed, n)
        for name, fast, slow, args in cases(n, rng):
            fast(*args)  # compile outside the timed region
            if not same(fast(*args), slow(*args)):
                mismatches += 1
                print(f"MISMATCH {name} n={n}")
            t_fast = min(timeit.repeat(lambda: fast(*args), number=1, repeat=a.repeat)) * 1000
            t_slow = min(timeit.repeat(lambda: slow(*args), number=1, repeat=a.repeat)) * 1000
            ratio = t_slow / t_fast if t_fast > 0 else float("inf")
            print(f"{name:<20}{n:>4}{t_fast:>12.3f}{t_slow:>12.3f}{ratio:>9.1f}x")
    return 1 if mismatches else 0


if __name__ == "__main__":
    sys.exit(main())
