"""Compare the numba and pure-numpy subset-lattice kernels.

Run with ``python3 benchmarks/bench_kernels.py [--p 8 10 16 20] [--repeat 3]``.
Each kernel is run once on both backends before timing, so compilation is
not counted, and the two outputs are checked for agreement.
"""

import argparse
import time

import numpy as np

from hyperchoquet import kernels


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def cases(p, rng):
    values = rng.choice(np.arange(17) / 8, size=p)
    values[-1] = values.max() + 1
    tab = kernels.numpy_backend.nmu_table(values, p - 1)
    mins = kernels.numpy_backend.subset_min_table(values, 0.0)
    maxs = kernels.numpy_backend.subset_max_table(values, 0.0)
    out = {
        "nmu_table": lambda b: b.nmu_table(values, p - 1),
        "subset_min_table": lambda b: b.subset_min_table(values, 0.0),
        "moebius_inplace": lambda b: b.moebius_inplace(tab.copy(), p),
        "zeta_inplace": lambda b: b.zeta_inplace(tab.copy(), p),
        "formula_iii_sum": lambda b: b.formula_iii_sum(tab, mins, maxs),
        "moebius_sum": lambda b: b.moebius_sum(tab, mins),
    }
    if p <= 10:
        # 3^p disjoint pairs; only affordable for small families
        out["find_nonadditive_pair"] = lambda b: np.array(b.find_nonadditive_pair(tab, p, 1e-12))
    return out


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--p", type=int, nargs="+", default=[8, 10, 16, 20])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    numba = kernels.numba_backend()
    rng = np.random.default_rng(0)
    print(f"{'kernel':<22} {'p':>3} {'numpy s':>10} {'numba s':>10} {'speedup':>8}")
    for p in args.p:
        for name, run in cases(p, rng).items():
            a, b = run(kernels.numpy_backend), run(numba)
            if not np.allclose(a, b, atol=1e-9):
                raise SystemExit(f"{name} at p={p}: backends disagree")
            t_np = best_of(lambda: run(kernels.numpy_backend), args.repeat)
            t_nb = best_of(lambda: run(numba), args.repeat)
            print(f"{name:<22} {p:>3} {t_np:>10.5f} {t_nb:>10.5f} {t_np / t_nb:>8.1f}")


if __name__ == "__main__":
    main()
