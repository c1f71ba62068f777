"""Recompute the quadrature reference values frozen in ``tests/frozen.py``.

    python tools/freeze_oracles.py > tests/frozen.py

Only the independent oracles in ``ratline.harness.oracles`` and direct
function handles are used here, never the closed-form transforms.
"""
import numpy as np

from ratline.harness.oracles import oracle_cauchy, oracle_fourier
from ratline.mobius import MobiusMap, basis_r

EPS = 1e-6


def near_axis(f, k, x, side):
    """Boundary value from above/below: Richardson step on x +- i eps, x +- 2 i eps."""
    s = 1 if side == "plus" else -1
    a = oracle_cauchy(f, k, x + 1j * s * EPS)
    b = oracle_cauchy(f, k, x + 2j * s * EPS)
    return 2 * a - b


def main():
    out = {}
    beta1 = MobiusMap(1.0)
    out["CAUCHY_R2_K1_Z"] = oracle_cauchy(lambda x: basis_r(beta1, 2, x), 1.0, 0.5 + 0.5j)
    out["CAUCHY_GAUSS_Z2I"] = oracle_cauchy(lambda x: np.exp(-x**2), 0.0, 2j)
    out["CAUCHY_GAUSS_K2_PLUS_03"] = near_axis(lambda x: np.exp(-x**2), 2.0, 0.3, "plus")
    out["FOURIER_LORENTZ_K3"] = oracle_fourier(lambda x: 1.0 / (x**2 + 1), 3.0)

    # boundary values of R_{j,k} at x = 0.3 for the calibration suite
    table = {}
    for beta in (1.0,):
        m = MobiusMap(beta)
        for j in [1, 2, 3, 4, 5, 6, 7, 8]:
            for sgn in (1, -1):
                jj = sgn * j
                for k in (0.5, 2.0, 8.0):
                    kk = sgn * k
                    for side in ("plus", "minus"):
                        f = lambda x, jj=jj: basis_r(m, jj, x)  # noqa: E731
                        table[(jj, kk, side)] = near_axis(f, kk, 0.3, side)
    off = {}
    m = MobiusMap(1.0)
    for j in (-8, -3, 1, 2, 5, 8):
        for k in (-2.0, 0.5, 2.0):
            for y in (0.3, 1.5, -0.3, -1.5):
                z = 0.7 + 1j * y
                off[(j, k, z)] = oracle_cauchy(lambda x, j=j: basis_r(m, j, x), k, z)

    print('"""Quadrature reference values; regenerate with tools/freeze_oracles.py."""')
    print("# flake8: noqa")
    for name, v in out.items():
        print(f"{name} = {complex(v)!r}")
    print("NEAR_AXIS_X = 0.3")
    print("NEAR_AXIS = {")
    for key, v in table.items():
        print(f"    {key!r}: {complex(v)!r},")
    print("}")
    print("OFF_AXIS = {")
    for key, v in off.items():
        print(f"    {key!r}: {complex(v)!r},")
    print("}")


if __name__ == "__main__":
    main()
