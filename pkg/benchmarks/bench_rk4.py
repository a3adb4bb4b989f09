"""Compare the numba and pure-python/numpy RK4 kernels for the Abel equation.

    python3 benchmarks/bench_rk4.py [--steps 1e-4 1e-5] [--repeat 5]

The first jit call is timed separately since it includes compilation.
"""

import argparse
import time

import numpy as np

from devlin_hopf import _kernels


def best_of(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--steps", type=float, nargs="+", default=[1e-3, 1e-4, 1e-5])
    ap.add_argument("--t-end", type=float, default=0.1)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    alpha = np.array([0.3, -0.7, 0.5])
    beta = np.array([-0.2, 0.9, 0.1])

    if not _kernels.HAVE_NUMBA:
        print("numba not importable; only the fallback kernel can run")
    else:
        t0 = time.perf_counter()
        _kernels.rk4_abel(alpha, beta, 1.0, args.t_end, 1e-2, 1e6, use_jit=True)
        print(f"jit compile + first call: {time.perf_counter() - t0:.3f} s")

    print(f"{'step':>8} {'n_steps':>9} {'numpy [s]':>11} {'numba [s]':>11} {'speedup':>8} {'|dz|':>9}")
    for h in args.steps:
        n = int(round(args.t_end / h))
        t_py, z_py = best_of(lambda: _kernels.rk4_abel(alpha, beta, 1.0, args.t_end, h, 1e6, use_jit=False), args.repeat)
        if _kernels.HAVE_NUMBA:
            t_jit, z_jit = best_of(lambda: _kernels.rk4_abel(alpha, beta, 1.0, args.t_end, h, 1e6, use_jit=True), args.repeat)
            print(f"{h:8.0e} {n:9d} {t_py:11.4f} {t_jit:11.6f} {t_py / t_jit:8.0f} {abs(z_py[0] - z_jit[0]):9.1e}")
        else:
            print(f"{h:8.0e} {n:9d} {t_py:11.4f} {'-':>11} {'-':>8} {'-':>9}")


if __name__ == "__main__":
    main()
