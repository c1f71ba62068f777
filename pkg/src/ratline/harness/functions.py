"""Reference functions with closed-form transforms and derivatives.

Each function is stored as a sum of modulated smooth parts
``e^{-i k_m x} f_m(x)`` so it can be approximated part by part.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from ..approx import interpolate
from ..cauchy import OscillatoryFunction
from ..mobius import MobiusMap

__all__ = ["TestFunction", "FUNCTIONS", "get_function", "approximate"]

SQRT_PI = np.sqrt(np.pi)


@dataclass(frozen=True)
class TestFunction:
    """A reference function ``f(x) = sum_m e^{-i k_m x} f_m(x)``.

    Attributes
    ----------
    name : str
    handle : callable
        The full function ``f`` on real arrays.
    wavenumber : float
        Modulation of the leading part (0 for unmodulated functions).
    exact_fourier, exact_derivative : callable or None
        Closed forms; when present they are authoritative.
    parts : tuple of (float, callable)
        ``(k_m, f_m)`` pairs used for part-wise approximation.
    """

    __test__ = False  # keep pytest from collecting the class

    name: str
    handle: Callable
    wavenumber: float = 0.0
    exact_fourier: Optional[Callable] = None
    exact_derivative: Optional[Callable] = None
    parts: tuple = field(default=(), repr=False)

    def __post_init__(self):
        if not self.parts:
            k = self.wavenumber
            h = self.handle
            base = h if k == 0 else (lambda x: np.exp(1j * k * np.asarray(x)) * h(x))
            object.__setattr__(self, "parts", ((k, base),))

    def __call__(self, x):
        return self.handle(x)


def _gauss(x):
    return np.exp(-np.asarray(x) ** 2)


def _gauss_ft(k):
    return SQRT_PI * np.exp(-np.asarray(k, dtype=float) ** 2 / 4)


def _rational(x):
    return 1.0 / (np.asarray(x) + 1 + 1j)


def _rational_ft(k):
    # pole at -1-i: closes below for k > 0; k = 0 is the principal value
    k = np.asarray(k, dtype=float)
    out = np.where(k > 0, -2j * np.pi * np.exp(1j * k * (1 + 1j)), 0j)
    return np.where(k == 0, -1j * np.pi, out)


def _modulated(k, g):
    return lambda x: np.exp(-1j * k * np.asarray(x)) * g(x)


def gaussian() -> TestFunction:
    return TestFunction(
        "gaussian",
        _gauss,
        0.0,
        exact_fourier=_gauss_ft,
        exact_derivative=lambda x: -2 * np.asarray(x) * _gauss(x),
    )


def rational() -> TestFunction:
    return TestFunction(
        "rational",
        _rational,
        0.0,
        exact_fourier=_rational_ft,
        exact_derivative=lambda x: -_rational(x) ** 2,
    )


def modulated_pair(k1: float = 2.0, k2: float = -3.0) -> TestFunction:
    """``e^{-i k1 x - x^2} + e^{-i k2 x} / (x + 1 + i)``, approximated as two parts."""

    def handle(x):
        return _modulated(k1, _gauss)(x) + _modulated(k2, _rational)(x)

    def deriv(x):
        x = np.asarray(x)
        d1 = np.exp(-1j * k1 * x) * (-2 * x - 1j * k1) * _gauss(x)
        d2 = np.exp(-1j * k2 * x) * (-_rational(x) ** 2 - 1j * k2 * _rational(x))
        return d1 + d2

    def ft(k):
        k = np.asarray(k, dtype=float)
        return _gauss_ft(k + k1) + _rational_ft(k + k2)

    return TestFunction(
        "appendixA",
        handle,
        k1,
        exact_fourier=ft,
        exact_derivative=deriv,
        parts=((k1, _gauss), (k2, _rational)),
    )


def r1(beta: float = 1.0) -> TestFunction:
    """The basis element ``M(x) - 1 = -2 i beta / (x + i beta)``."""

    def handle(x):
        return -2j * beta / (np.asarray(x) + 1j * beta)

    def ft(k):
        k = np.asarray(k, dtype=float)
        out = np.where(k > 0, -4 * np.pi * beta * np.exp(-np.abs(k) * beta), 0.0)
        return np.where(k == 0, -2 * np.pi * beta, out).astype(complex)

    return TestFunction(
        "r1",
        handle,
        0.0,
        exact_fourier=ft,
        exact_derivative=lambda x: 2j * beta / (np.asarray(x) + 1j * beta) ** 2,
    )


FUNCTIONS = {
    "gaussian": lambda beta: gaussian(),
    "rational": lambda beta: rational(),
    "appendixA": lambda beta: modulated_pair(),
    "r1": r1,
}


def get_function(name: str, beta: float = 1.0) -> TestFunction:
    try:
        return FUNCTIONS[name](beta)
    except KeyError:
        raise ValueError(f"unknown function {name!r}; choose from {sorted(FUNCTIONS)}") from None


def approximate(tf: TestFunction, n: int, map: MobiusMap | None = None) -> OscillatoryFunction:
    """Interpolate every part of ``tf`` with ``n`` nodes and reassemble."""
    map = map or MobiusMap()
    parts = tuple((k, interpolate(g, 0.0, n, map)) for k, g in tf.parts)
    return OscillatoryFunction(map, parts)
