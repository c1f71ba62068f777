"""Acceptance criteria, one test each.

Every test prints a single line ``[ACCEPT nn] PASS|FAIL <summary>`` that
survives pytest's output capture, so ``pytest -v tests/test_acceptance.py``
(or ``python tests/test_acceptance.py``) shows the measured values next to
their thresholds.
"""
import math
import sys

import numpy as np
import pytest

from ratline import (
    MobiusMap,
    OscillatoryFunction,
    RationalExpansion,
    basis_r,
    basis_rjk,
    cauchy_basis,
    differentiate,
    eta_coeff,
    fourier_transform,
    fourier_weight,
    interpolate,
    kernel_norm,
    lebesgue_constant,
    sample_nodes,
)
from ratline.harness.functions import get_function
from ratline.harness.oracles import oracle_cauchy, oracle_fourier
from ratline.harness.report import convergence_sweep

pytestmark = pytest.mark.acceptance

DYADIC = [8, 16, 32, 64, 128, 256, 512, 1024]


def gaussian(x):
    return np.exp(-np.asarray(x) ** 2)


def report(number, ok, summary, capsys=None):
    line = f"[ACCEPT {number:02d}] {'PASS' if ok else 'FAIL'} {summary}"
    if capsys is not None:
        with capsys.disabled():
            print("\n" + line)
    else:
        print(line)
    return ok


def criterion_01():
    m = MobiusMap(1.0)
    worst = 0.0
    for n in DYADIC[:-1]:
        e = interpolate(gaussian, 0.0, n, m)
        x = sample_nodes(n, m)
        worst = max(worst, float(np.max(np.abs(e(x) - gaussian(x)))))
    return worst <= 1e-11, f"interpolation identity: max node residual {worst:.2e} <= 1e-11 (n = 8..512)"


def criterion_02():
    tf = get_function("appendixA")
    rep = convergence_sweep(tf, [10, 50, 90, 130], 1.0, 60.0, 4001)
    sup = rep.sup
    orders = rep.fitted_orders
    far = convergence_sweep(tf, [256], 1.0, 60.0, 4001).sup[0]
    ok = bool(np.all(np.diff(sup) < 0) and np.all(np.diff(orders) > 0) and far <= 1e-8)
    return ok, (
        f"spectral convergence: sup {', '.join(f'{s:.1e}' for s in sup)} decreasing, "
        f"orders {', '.join(f'{o:.1f}' for o in orders)} steepening, n=256 sup {far:.1e} <= 1e-8"
    )


def criterion_03():
    rng = np.random.default_rng(3)
    worst = 0.0
    for beta in (0.5, 1.0, 2.0):
        m = MobiusMap(beta)
        for j in range(-15, 16):
            if j == 0:
                continue
            for k in (0.5, -0.5, 2.0, -2.0, 10.0, -10.0):
                x = rng.uniform(-20, 20, 50)
                d = cauchy_basis(j, k, "plus", m).evaluate(x) - cauchy_basis(j, k, "minus", m).evaluate(x)
                worst = max(worst, float(np.max(np.abs(d - basis_rjk(m, j, k, x)))))
    return worst <= 1e-11, f"Plemelj C+ - C- = I: max error {worst:.2e} <= 1e-11"


def near_axis_oracle(f, k, x, side, eps=1e-6):
    # one Richardson step removes the O(eps) offset of the x +- i eps values
    s = 1 if side == "plus" else -1
    return 2 * oracle_cauchy(f, k, x + 1j * s * eps) - oracle_cauchy(f, k, x + 2j * s * eps)


def criterion_04():
    m = MobiusMap(1.0)
    worst = 0.0
    for j in [s * a for a in range(1, 9) for s in (1, -1)]:
        for k in (0.5, 2.0, 8.0):
            kk = math.copysign(k, j)
            f = lambda x, j=j: basis_r(m, j, x)  # noqa: E731
            for x in (-1.3, 0.3):
                for side in ("plus", "minus"):
                    ref = near_axis_oracle(f, kk, x, side)
                    val = cauchy_basis(j, kk, side, m).evaluate(x)
                    worst = max(worst, abs(val - ref))
    anchor = 0.0
    for k, beta in [(0.5, 1.0), (2.0, 1.0), (8.0, 1.0), (1.0, 0.5), (0.7, 2.0)]:
        e = math.exp(-k * beta)
        anchor = max(
            anchor,
            abs(eta_coeff(1, 1, k, beta) + e),
            abs(eta_coeff(2, 1, k, beta) - 2 * k * beta * e),
            abs(eta_coeff(2, 2, k, beta) + e),
        )
    ok = worst <= 1e-5 and anchor <= 1e-10
    return ok, f"eta calibration: near-axis max error {worst:.2e} <= 1e-5, anchors {anchor:.1e} <= 1e-10"


def criterion_05():
    worst = 0.0
    for beta in (1.0,):
        m = MobiusMap(beta)
        for j in [s * a for a in range(1, 11) for s in (1, -1)]:
            for k in (-8.0, -2.0, -0.5, 0.0, 0.5, 2.0, 8.0):
                ref = oracle_fourier(lambda x, j=j: basis_r(m, j, x), k)
                worst = max(worst, abs(fourier_weight(j, k, beta) - ref))
    exact = all(
        fourier_weight(j, 0.0, b) == -2 * math.pi * abs(j) * b
        and fourier_weight(j, -math.copysign(1.5, j), b) == 0.0
        for j in (-7, -1, 1, 4)
        for b in (0.5, 2.0)
    )
    ok = worst <= 1e-6 and exact
    return ok, f"Fourier weights vs PV quadrature: max error {worst:.2e} <= 1e-6, printed branches exact: {exact}"


def criterion_06():
    e = interpolate(gaussian, 0.0, 64, MobiusMap(1.0))
    exact = lambda k: math.sqrt(math.pi) * math.exp(-k * k / 4)  # noqa: E731
    err = {k: abs(fourier_transform(e, k) - exact(k)) for k in (5.0, -5.0, 40.0, -40.0)}
    ok = max(err[40.0], err[-40.0]) < min(err[5.0], err[-5.0])
    return ok, f"Fourier asymptotics (n=64): error at |k|=40 {max(err[40.0], err[-40.0]):.1e} < at |k|=5 {min(err[5.0], err[-5.0]):.1e}"


def ridders(f, x, h, levels=8):
    table = [[(f(x + h) - f(x - h)) / (2 * h)]]
    for i in range(1, levels):
        h /= 2
        row = [(f(x + h) - f(x - h)) / (2 * h)]
        for q in range(1, i + 1):
            row.append(row[q - 1] + (row[q - 1] - table[i - 1][q - 1]) / (4**q - 1))
        table.append(row)
    return table[-1][-1]


def criterion_07():
    m = MobiusMap(1.0)
    d = differentiate(interpolate(gaussian, 0.0, 256, m))
    x = np.linspace(-10, 10, 4001)
    sup = float(np.max(np.abs(d(x) + 2 * x * gaussian(x))))
    rng = np.random.default_rng(7)
    worst = 0.0
    for _ in range(40):
        js = rng.choice([j for j in range(-40, 41) if j], size=6, replace=False)
        a = rng.standard_normal(6) + 1j * rng.standard_normal(6)
        a *= 10 / np.sum(np.abs(a))
        beta = rng.choice([0.5, 1.0, 2.0])
        e = RationalExpansion.from_dict(MobiusMap(beta), dict(zip(js.tolist(), a)))
        de = differentiate(e)
        for x0 in rng.uniform(-20, 20, 5):
            h = min(0.1, (x0 * x0 + beta * beta) / (beta * 40 * np.max(np.abs(js))))
            worst = max(worst, abs(de(x0) - ridders(e, x0, h)))
    ok = sup <= 1e-7 and worst <= 1e-6
    return ok, f"differentiation: Gaussian sup error {sup:.1e} <= 1e-7, random expansions vs differences {worst:.1e} <= 1e-6"


def criterion_08():
    ns = np.array(DYADIC)
    lam = np.array([lebesgue_constant(int(n)) for n in ns])
    b, a = np.polyfit(np.log(ns), lam, 1)
    resid = lam - (a + b * np.log(ns))
    r2 = 1 - np.sum(resid**2) / np.sum((lam - lam.mean()) ** 2)
    ok = r2 >= 0.99 and b > 0
    return ok, f"Lebesgue constant ~ a + b log n: R^2 = {r2:.5f} >= 0.99, b = {b:.3f} > 0"


def criterion_09():
    ns = np.array(DYADIC)
    logn = np.log(ns)
    slopes = {}
    for p, order, target in [(2, 0, 0.5), (4, 0, 0.75), (2, 1, 1.5)]:
        norms = np.array([kernel_norm(int(n), p, order) for n in ns])
        slopes[(p, order)] = (np.polyfit(logn, np.log(norms), 1)[0], target)
    ok = all(abs(s - t) <= 0.1 for s, t in slopes.values())
    text = ", ".join(f"p={p} order {o}: {s:.3f} (target {t})" for (p, o), (s, t) in slopes.items())
    return ok, f"kernel norm slopes: {text}"


def criterion_10():
    tf = get_function("appendixA")
    m = MobiusMap(1.0)
    g = OscillatoryFunction(m, tuple((k, interpolate(f, 0.0, 130, m)) for k, f in tf.parts))
    ks = np.array([3 - 1e-3, 3 + 1e-3])
    ft = fourier_transform(g, ks)
    floor = float(np.max(np.abs(ft - tf.exact_fourier(ks))))
    jump = abs(ft[1] - ft[0])
    ok = jump > 10 * floor
    return ok, f"Fourier jump at k=3: |F(3+) - F(3-)| = {jump:.3f} > 10 x error floor {floor:.1e}"


CRITERIA = [
    criterion_01,
    criterion_02,
    criterion_03,
    criterion_04,
    criterion_05,
    criterion_06,
    criterion_07,
    criterion_08,
    criterion_09,
    criterion_10,
]


@pytest.mark.parametrize("number", range(1, len(CRITERIA) + 1), ids=lambda n: f"criterion_{n:02d}")
def test_acceptance(number, capsys):
    ok, summary = CRITERIA[number - 1]()
    assert report(number, ok, summary, capsys), summary


if __name__ == "__main__":
    results = [report(i, *fn()) for i, fn in enumerate(CRITERIA, start=1)]
    sys.exit(0 if all(results) else 1)
