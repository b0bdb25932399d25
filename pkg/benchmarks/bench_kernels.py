"""Time the numba and numpy kernels side by side.

    python benchmarks/bench_kernels.py --sizes 12 16 20 --repeat 3

The first numba call compiles (or loads the on-disk cache); it is run once
before timing so only steady-state cost is reported.
"""

import argparse
import random
import time

from posetlin import kernels
from posetlin.generate import random_poset
from posetlin.orderchrom import _kernel_inputs
from posetlin.poset import ConstraintSystem


def best_of(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def bench_signs(sizes, density, repeat, seed):
    rng = random.Random(seed)
    print(f"{'n':>4} {'numba s':>10} {'numpy s':>10} {'speedup':>8}  L+")
    kernels.ideal_sign_counts_numba([0], 1)
    for n in sizes:
        p = random_poset(n, density, rng)
        below = list(p.below_masks)
        t_nb, a = best_of(lambda: kernels.ideal_sign_counts_numba(below, n), repeat)
        t_np, b = best_of(lambda: kernels.ideal_sign_counts_numpy(below, n), repeat)
        assert a == b, (a, b)
        print(f"{n:>4} {t_nb:>10.4f} {t_np:>10.4f} {t_np / t_nb:>8.1f}  {a[0] + a[1]}")


def bench_maps(m, colours, repeat, seed):
    rng = random.Random(seed)
    p = random_poset(m, 0.3, rng)
    pairs = frozenset(frozenset((x, y)) for i, x in enumerate(p.elements)
                      for y in p.elements[i + 1:] if rng.random() < 0.3)
    pred, forb = _kernel_inputs(ConstraintSystem(p, pairs))
    kernels.count_isotone_maps_numba(1, [0], [0])
    print(f"\nisotone maps, |S|={m}")
    print(f"{'n':>4} {'numba s':>10} {'numpy s':>10} {'speedup':>8}  count")
    for n in colours:
        t_nb, a = best_of(lambda: kernels.count_isotone_maps_numba(n, pred, forb), repeat)
        t_np, b = best_of(lambda: kernels.count_isotone_maps_numpy(n, pred, forb), repeat)
        assert a == b, (a, b)
        print(f"{n:>4} {t_nb:>10.4f} {t_np:>10.4f} {t_np / t_nb:>8.1f}  {a}")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[10, 14, 18, 20])
    ap.add_argument("--density", type=float, default=0.15)
    ap.add_argument("--maps-size", type=int, default=7)
    ap.add_argument("--colours", type=int, nargs="+", default=[4, 6, 8])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    bench_signs(args.sizes, args.density, args.repeat, args.seed)
    bench_maps(args.maps_size, args.colours, args.repeat, args.seed)


if __name__ == "__main__":
    main()
