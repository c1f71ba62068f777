"""Quadrature oracles, independent of the closed-form transforms.

Both oracles split the line into a core interval, integrated by composite
Gauss-Legendre on panels no wider than a tenth of the oscillation period,
and two semi-infinite tails handled by QUADPACK's Fourier-weighted rule
(QAWF).  Accuracy is checked by comparing ``q`` and ``2q`` point rules.
"""
from __future__ import annotations

import warnings

import numpy as np
from scipy import integrate

from ..trig import QuadratureError

__all__ = ["oracle_fourier", "oracle_cauchy", "QuadratureError"]

TRUNCATIONS = (50.0, 100.0, 200.0, 400.0)

_GL: dict[int, tuple[np.ndarray, np.ndarray]] = {}


def _leggauss(q):
    if q not in _GL:
        _GL[q] = np.polynomial.legendre.leggauss(q)
    return _GL[q]


def _panels(fn, edges, q):
    x, w = _leggauss(q)
    a, b = edges[:-1], edges[1:]
    half = 0.5 * (b - a)
    pts = 0.5 * (a + b)[:, None] + half[:, None] * x[None, :]
    vals = fn(pts.ravel()).reshape(pts.shape)
    return complex(np.sum(vals * (half[:, None] * w[None, :])))


def _composite(fn, edges, tol, q=16, q_max=256):
    prev = _panels(fn, edges, q)
    while q < q_max:
        q *= 2
        cur = _panels(fn, edges, q)
        if abs(cur - prev) <= tol:
            return cur, abs(cur - prev)
        prev = cur
    raise QuadratureError(f"panel quadrature stalled at {abs(cur - prev):.3g} (tol {tol:.3g})")


def _uniform_edges(a, b, k):
    width = 1.0 if k == 0 else min(1.0, 2 * np.pi / (10 * abs(k)))
    m = max(1, int(np.ceil((b - a) / width)))
    return np.linspace(a, b, m + 1)


def _quad(fn, a, b, tol, **kw):
    with warnings.catch_warnings():
        warnings.simplefilter("error", integrate.IntegrationWarning)
        try:
            val, err = integrate.quad(fn, a, b, epsabs=tol, epsrel=0.0, limit=1000, **kw)
        except integrate.IntegrationWarning as exc:
            raise QuadratureError(str(exc)) from exc
    return val, err


def _real_tail(u, a, k, tol):
    """``int_a^inf e^{-ikx} u(x) dx`` for complex ``u`` decaying at infinity."""
    if k == 0:
        re, e1 = _quad(lambda x: np.real(u(x)), a, np.inf, tol)
        im, e2 = _quad(lambda x: np.imag(u(x)), a, np.inf, tol)
        return re + 1j * im, e1 + e2
    ur = lambda x: np.real(u(x))  # noqa: E731
    ui = lambda x: np.imag(u(x))  # noqa: E731
    # e^{-ikx} = cos(kx) - i sin(kx); QAWF needs a positive frequency
    s = np.sign(k)
    kk = abs(k)
    c_r, e1 = _quad(ur, a, np.inf, tol, weight="cos", wvar=kk)
    c_i, e2 = _quad(ui, a, np.inf, tol, weight="cos", wvar=kk)
    s_r, e3 = _quad(ur, a, np.inf, tol, weight="sin", wvar=kk)
    s_i, e4 = _quad(ui, a, np.inf, tol, weight="sin", wvar=kk)
    val = (c_r + 1j * c_i) - 1j * s * (s_r + 1j * s_i)
    return val, e1 + e2 + e3 + e4


def oracle_fourier(f, k: float, truncation=TRUNCATIONS, tol: float = 1e-8) -> complex:
    """``PV int e^{-ikx} f(x) dx`` as ``lim_R int_{-R}^{R}``.

    The symmetric integral is folded onto ``[0, R]``; the remainder beyond
    ``R`` is added with QAWF.  ``R`` runs through ``truncation`` (a sequence,
    or a single radius that is doubled three times) until two successive
    totals agree to ``tol``.

    Raises
    ------
    QuadratureError
        If no pair of successive truncations agrees.
    """
    k = float(k)
    if np.ndim(truncation) == 0:
        truncation = tuple(float(truncation) * 2.0**i for i in range(4))

    def folded(x):
        return np.exp(-1j * k * x) * f(x) + np.exp(1j * k * x) * f(-x)

    prev = None
    for R in truncation:
        core, _ = _composite(folded, _uniform_edges(0.0, R, k), 0.1 * tol)
        if k == 0:
            # separately the tails of a 1/x integrand diverge
            tail, _ = _real_tail(folded, R, 0.0, 0.1 * tol)
        else:
            t1, _ = _real_tail(f, R, k, 0.1 * tol)
            t2, _ = _real_tail(lambda x: f(-x), R, -k, 0.1 * tol)
            tail = t1 + t2
        total = core + tail
        if prev is not None and abs(total - prev) < tol:
            return total
        prev = total
    raise QuadratureError(f"Fourier oracle did not settle over truncations {truncation}")


def _subtraction_integral(w):
    """``int dt / ((1 + t^2)(t - w))`` over the real line, ``Im w != 0``."""
    if w.imag > 0:
        return -np.pi / (w + 1j)
    return np.pi / (1j - w)


def oracle_cauchy(f, k: float, z: complex, tol: float = 1e-10, half_width: float = 100.0) -> complex:
    """``1/(2 pi i) int e^{-ikx} f(x) / (x - z) dx`` for ``Im z != 0``.

    The value of the integrand's numerator at ``Re z`` is subtracted against
    ``1/(1 + (x - Re z)^2)``, whose Cauchy integral is known, and panels are
    graded geometrically towards ``Re z`` so points close to the axis stay
    accurate.
    """
    z = complex(z)
    if z.imag == 0:
        raise ValueError("z must lie off the real axis")
    k = float(k)
    x0, y = z.real, z.imag
    phi0 = complex(np.exp(-1j * k * x0) * f(np.array([x0]))[0])

    def bump(x):
        return 1.0 / (1.0 + (x - x0) ** 2)

    def g(x):
        return (np.exp(-1j * k * x) * f(x) - phi0 * bump(x)) / (x - z)

    A = max(half_width, abs(x0) + 20.0)
    edges = _uniform_edges(-A, A, k)
    levels = int(np.ceil(np.log2(1.0 / abs(y)))) + 3 if abs(y) < 1 else 2
    graded = x0 + np.concatenate([2.0 ** -np.arange(levels), -(2.0 ** -np.arange(levels))])
    edges = np.unique(np.concatenate([edges, graded[(graded > -A) & (graded < A)], [x0]]))
    core, _ = _composite(g, edges, 0.1 * tol)

    def osc_pos(x):
        return f(x) / (x - z)

    def osc_neg(x):
        return f(-x) / (-x - z)

    t1, _ = _real_tail(osc_pos, A, k, 0.05 * tol)
    t2, _ = _real_tail(osc_neg, A, -k, 0.05 * tol)
    b1, _ = _real_tail(lambda x: bump(x) / (x - z), A, 0.0, 0.05 * tol)
    b2, _ = _real_tail(lambda x: bump(-x) / (-x - z), A, 0.0, 0.05 * tol)
    total = core + t1 + t2 - phi0 * (b1 + b2) + phi0 * _subtraction_integral(z - x0)
    return total / (2j * np.pi)
