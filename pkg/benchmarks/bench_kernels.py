"""Compare the compiled and numpy kernel backends.

    python benchmarks/bench_kernels.py [--repeat 5]

Each kernel is timed on both backends with identical inputs; the maximum
absolute difference between the two outputs is reported alongside.
"""
import argparse
import timeit

import numpy as np

from ratline import _pykernels

try:
    from ratline import _ckernels
except ImportError:  # extension not built
    _ckernels = None


def cases(rng):
    coeffs = rng.standard_normal(257) + 1j * rng.standard_normal(257)
    theta = rng.uniform(0, 2 * np.pi, 4001)
    yield "basis_sum  (257 coeffs x 4001 pts)", "basis_sum", (coeffs, -128, theta)
    yield "trig_sum   (257 coeffs x 4001 pts)", "trig_sum", (coeffs, -128, theta)
    m = 40 * 256
    grid = 2 * np.pi * np.arange(m) / m
    yield "lebesgue   (n=256, 10240 pts)", "lebesgue_function", (256, grid)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    rng = np.random.default_rng(0)
    print(f"{'kernel':40s} {'python [ms]':>12s} {'cython [ms]':>12s} {'speedup':>8s} {'max diff':>10s}")
    for label, name, inputs in cases(rng):
        py = getattr(_pykernels, name)
        t_py = min(timeit.repeat(lambda: py(*inputs), number=1, repeat=args.repeat))
        if _ckernels is None:
            print(f"{label:40s} {1e3 * t_py:12.2f} {'n/a':>12s}")
            continue
        cy = getattr(_ckernels, name)
        t_cy = min(timeit.repeat(lambda: cy(*inputs), number=1, repeat=args.repeat))
        diff = np.max(np.abs(py(*inputs) - cy(*inputs)))
        print(f"{label:40s} {1e3 * t_py:12.2f} {1e3 * t_cy:12.2f} {t_py / t_cy:8.1f} {diff:10.2e}")


if __name__ == "__main__":
    main()
