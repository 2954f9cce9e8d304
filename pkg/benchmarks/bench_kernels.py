"""Row reduction over F_p: numba kernel against the pure-numpy fallback.

    python benchmarks/bench_kernels.py [--sizes 50,100,200] [--p 3] [--repeat 5]

Also times the full profile of y^3 - y = x^100 under whichever backend
CARTIER_LAB_BACKEND selects.
"""

import argparse
import time

import numpy as np

from cartier_lab import kernels


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--sizes", default="50,100,200,400")
    ap.add_argument("--p", type=int, default=3)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    rng = np.random.default_rng(0)
    kernels.warmup()
    print(f"backend selected by environment: {kernels.BACKEND}")
    print(f"{'n':>6} {'numpy [s]':>12} {'numba [s]':>12} {'speedup':>9}")
    for n in (int(s) for s in args.sizes.split(",")):
        m = rng.integers(0, args.p, size=(n, n))
        t_np = best_of(lambda: kernels.rref_numpy(m, args.p), args.repeat)
        if kernels.HAVE_NUMBA:
            t_nb = best_of(lambda: kernels.rref_numba(m, args.p), args.repeat)
            assert np.array_equal(kernels.rref_numpy(m, args.p)[0], kernels.rref_numba(m, args.p)[0])
            print(f"{n:>6} {t_np:>12.5f} {t_nb:>12.5f} {t_np / t_nb:>8.1f}x")
        else:
            print(f"{n:>6} {t_np:>12.5f} {'n/a':>12}")

    from cartier_lab.ascurve import build_cover
    from cartier_lab.cartier import cover_profile
    from cartier_lab.cli.parse import parse_f

    cover = build_cover(3, parse_f("x^100", 3))
    t = best_of(lambda: cover_profile(cover, 10), args.repeat)
    print(f"profile of y^3 - y = x^100 (g = 99): {t:.4f} s")


if __name__ == "__main__":
    main()
