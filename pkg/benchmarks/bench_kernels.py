"""Time the compiled kernels against the numpy fallback.

    python3 benchmarks/bench_kernels.py [--sizes 20 60 200] [--repeat 5]
"""

import argparse
import timeit

import numpy as np

from artifact import _kernels_py as pure
from artifact.quiver import initial_quiver, sigma_plus
from artifact.word import coord_inv

try:
    from artifact import _kernels as compiled
except ImportError:
    compiled = None


def random_skew(n, rng):
    a = np.triu(rng.integers(-2, 3, size=(n, n)), 1)
    return a - a.T


def sweep(backend, B, schedule_idx):
    for k in schedule_idx:
        B = backend.mutate_exchange(B, k)
    return B


def bench(label, fn, repeat, number):
    best = min(timeit.repeat(fn, repeat=repeat, number=number)) / number
    return label, best


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--sizes", type=int, nargs="+", default=[20, 60, 200])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    backends = [("python", pure)] + ([("cython", compiled)] if compiled else [])
    rng = np.random.default_rng(0)
    rows = []
    for n in args.sizes:
        B = random_skew(n, rng)
        L = random_skew(n, rng)
        idx = list(range(0, n, 3))
        li = rng.integers(-n, n, size=n)
        lc = rng.integers(-3, 4, size=n)
        for name, mod in backends:
            rows.append((n, name) + bench("mutate_exchange", lambda: mod.mutate_exchange(B, n // 2),
                                          args.repeat, 50))
            rows.append((n, name) + bench("mutate_lambda", lambda: mod.mutate_lambda(L, B, n // 2),
                                          args.repeat, 50))
            rows.append((n, name) + bench("form_doubled", lambda: mod.form_doubled(li, lc, li, lc),
                                          args.repeat, 50))
            rows.append((n, name) + bench("exchange sweep", lambda: sweep(mod, B, idx), args.repeat, 3))
    q = initial_quiver(30)
    plus = [q.index(coord_inv(*c)) for c in sigma_plus(29)]
    for name, mod in backends:
        rows.append((len(q.vertices), name) + bench("sigma+ on cap 30",
                                                    lambda: sweep(mod, np.array(q.B), plus),
                                                    args.repeat, 3))
    print(f"{'n':>5}  {'backend':8}  {'kernel':18}  {'time':>12}")
    for n, name, label, t in rows:
        print(f"{n:>5}  {name:8}  {label:18}  {t * 1e6:10.1f} us")
    if compiled:
        print()
        by = {(n, name, label): t for n, name, label, t in rows}
        for (n, name, label), t in by.items():
            if name == "cython":
                print(f"speedup {label:18} n={n:<5} {by[(n, 'python', label)] / t:6.1f}x")


if __name__ == "__main__":
    main()
