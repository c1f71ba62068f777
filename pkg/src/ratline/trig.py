"""Trigonometric interpolation on the periodic interval [0, 2 pi).

Index convention: for ``n`` samples the interpolant uses the modes
``k = -n_minus .. n_plus`` with ``n_plus = n // 2`` and
``n_minus = (n - 1) // 2``, so an even ``n`` carries the extra mode at
``k = +n/2``.  Coefficient vectors are always stored in that order.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np
from scipy import integrate

from . import kernels

__all__ = [
    "TrigGrid",
    "TrigCoefficients",
    "QuadratureError",
    "dft",
    "trig_eval",
    "dirichlet_kernel",
    "kernel_norm",
    "lebesgue_constant",
    "lebesgue_function",
    "fourier_coefficient_oracle",
]


class QuadratureError(RuntimeError):
    """An oracle quadrature failed to reach its requested tolerance."""


@dataclass(frozen=True)
class TrigGrid:
    """Uniform grid ``theta_l = 2 pi l / n``, ``l = 0 .. n-1``."""

    n: int

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n!r}")
        object.__setattr__(self, "n", int(self.n))

    @property
    def n_plus(self) -> int:
        return self.n // 2

    @property
    def n_minus(self) -> int:
        return (self.n - 1) // 2

    @property
    def nodes(self) -> np.ndarray:
        return 2 * np.pi * np.arange(self.n) / self.n

    @property
    def modes(self) -> np.ndarray:
        return np.arange(-self.n_minus, self.n_plus + 1)


@dataclass(frozen=True, eq=False)
class TrigCoefficients:
    """Discrete Fourier coefficients ``F~_k`` for ``k = -n_minus .. n_plus``."""

    grid: TrigGrid
    coeffs: np.ndarray = field(repr=False)

    def __post_init__(self):
        c = np.asarray(self.coeffs, dtype=complex)
        if c.shape != (self.grid.n,):
            raise ValueError(f"expected {self.grid.n} coefficients, got shape {c.shape}")
        object.__setattr__(self, "coeffs", c)

    def __getitem__(self, k: int) -> complex:
        if not -self.grid.n_minus <= k <= self.grid.n_plus:
            return 0j
        return complex(self.coeffs[k + self.grid.n_minus])

    def __call__(self, theta):
        return trig_eval(self, theta)


def dft(grid: TrigGrid, samples) -> TrigCoefficients:
    """Order-``n`` discrete Fourier transform ``F~_k = (1/n) sum_l e^{-i k theta_l} F_l``.

    Computed with the FFT and reindexed to ``k = -n_minus .. n_plus``.
    """
    samples = np.asarray(samples, dtype=complex)
    if samples.shape != (grid.n,):
        raise ValueError(f"expected {grid.n} samples, got shape {samples.shape}")
    raw = np.fft.fft(samples) / grid.n
    return TrigCoefficients(grid, raw[grid.modes % grid.n])


def trig_eval(c: TrigCoefficients, theta):
    """Evaluate the interpolant ``sum_k e^{i k theta} F~_k``."""
    out = kernels.trig_sum(c.coeffs, -c.grid.n_minus, np.asarray(theta, dtype=float))
    return complex(out) if out.ndim == 0 else out


def _literal_kernel(n, theta, order):
    ks = np.arange(-((n - 1) // 2), n // 2 + 1)
    ph = np.exp(1j * np.multiply.outer(theta, ks))
    if order == 1:
        ph = ph * (1j * ks)
    return ph.sum(axis=-1)


def dirichlet_kernel(n: int, theta, order: int = 0):
    """Dirichlet kernel ``D_n(theta) = sum_{k=-n_minus}^{n_plus} e^{i k theta}`` or its derivative.

    Uses the closed form ``sin((m + 1/2) t) / sin(t/2) + sigma e^{i n_plus t}``
    with ``m = n_minus`` and ``sigma = 1`` for even ``n``.  Points where the
    ratio loses accuracy (``t`` near a multiple of ``2 pi``) fall back to the
    finite sum.
    """
    if order not in (0, 1):
        raise ValueError(f"order must be 0 or 1, got {order!r}")
    if n < 1:
        raise ValueError("n must be >= 1")
    theta = np.asarray(theta, dtype=float)
    m = (n - 1) // 2
    n_plus = n // 2
    sigma = 1.0 if n % 2 == 0 else 0.0
    t = np.remainder(theta + np.pi, 2 * np.pi) - np.pi
    half = np.sin(0.5 * t)
    # cancellation in the derivative numerator grows like 1/t^2
    near = np.abs(half) < (1e-3 if order == 1 else 1e-8)
    safe = np.where(near, 1.0, half)
    a = (m + 0.5) * t
    with np.errstate(invalid="ignore", divide="ignore"):
        if order == 0:
            main = np.sin(a) / safe
            extra = sigma * np.exp(1j * n_plus * t)
        else:
            main = ((m + 0.5) * np.cos(a) * safe - 0.5 * np.sin(a) * np.cos(0.5 * t)) / safe**2
            extra = sigma * 1j * n_plus * np.exp(1j * n_plus * t)
    out = np.asarray(main + extra, dtype=complex)
    if np.any(near):
        out[near] = _literal_kernel(n, t[near], order)
    return complex(out) if out.ndim == 0 else out


_GL_CACHE: dict[int, tuple[np.ndarray, np.ndarray]] = {}


def _gauss_legendre(q):
    if q not in _GL_CACHE:
        _GL_CACHE[q] = np.polynomial.legendre.leggauss(q)
    return _GL_CACHE[q]


def _panel_integral(fn, n, q):
    """Composite Gauss-Legendre over the ``n`` cells between kernel zeros."""
    x, w = _gauss_legendre(q)
    h = 2 * np.pi / n
    left = h * np.arange(n)
    pts = left[:, None] + 0.5 * h * (x[None, :] + 1.0)
    return 0.5 * h * float(np.sum(fn(pts) * w[None, :]))


def kernel_norm(n: int, p: float, order: int = 0, rtol: float = 1e-6) -> float:
    """``L^p(T)`` norm of ``D_n`` (``order=0``) or ``D_n'`` (``order=1``).

    Gauss-Legendre on each of the ``n`` cells ``[2 pi l/n, 2 pi (l+1)/n]``,
    whose endpoints are the zeros of ``|D_n|``, starting at 40 points per cell
    and doubling until two successive estimates agree to ``rtol / 10``.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if p < 1:
        raise ValueError("p must be >= 1")

    def fn(t):
        return np.abs(dirichlet_kernel(n, t, order)) ** p

    q = 40
    prev = _panel_integral(fn, n, q)
    while True:
        q *= 2
        cur = _panel_integral(fn, n, q)
        if abs(cur - prev) <= 0.1 * rtol * abs(cur) or q >= 2560:
            break
        prev = cur
    if abs(cur - prev) > rtol * abs(cur):
        raise QuadratureError(f"kernel norm did not converge (n={n}, p={p}, order={order})")
    return cur ** (1.0 / p)


def lebesgue_function(n: int, theta):
    """``(1/n) sum_l |D_n(theta - theta_l)|`` evaluated with the kernel backend."""
    return kernels.lebesgue_function(n, theta)


def lebesgue_constant(n: int, points_per_cell: int = 40) -> float:
    """Max of the Lebesgue function over a uniform grid of ``points_per_cell * n`` angles."""
    if n < 1:
        raise ValueError("n must be >= 1")
    m = points_per_cell * n
    theta = 2 * np.pi * np.arange(m) / m
    return float(np.max(lebesgue_function(n, theta)))


def fourier_coefficient_oracle(F, k: int, tol: float = 1e-10) -> complex:
    """Adaptive quadrature of ``(1/2 pi) int_0^{2 pi} e^{-i k theta} F(theta) dtheta``."""
    parts = []
    opts = dict(epsabs=tol, epsrel=0.0, limit=500)
    if k == 0:
        integrands = [(lambda t: np.real(F(t)), {}), (lambda t: np.imag(F(t)), {})]
        signs = [1.0, 1j]
    else:
        re = lambda t: np.real(F(t))  # noqa: E731
        im = lambda t: np.imag(F(t))  # noqa: E731
        integrands = [
            (re, dict(weight="cos", wvar=k)),
            (im, dict(weight="sin", wvar=k)),
            (im, dict(weight="cos", wvar=k)),
            (re, dict(weight="sin", wvar=k)),
        ]
        # e^{-ik t}(u + i v) = u cos + v sin + i (v cos - u sin)
        signs = [1.0, 1.0, 1j, -1j]
    for (g, extra), s in zip(integrands, signs):
        with warnings.catch_warnings():
            warnings.simplefilter("error", integrate.IntegrationWarning)
            try:
                val, err = integrate.quad(g, 0.0, 2 * np.pi, **opts, **extra)
            except integrate.IntegrationWarning as exc:
                raise QuadratureError(str(exc)) from exc
        if err > tol * 2 * np.pi:
            raise QuadratureError(f"error estimate {err:.3g} exceeds tolerance {tol:.3g}")
        parts.append(s * val)
    return complex(sum(parts)) / (2 * np.pi)
