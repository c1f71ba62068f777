"""Moebius maps between the real line and the unit circle.

The one-parameter family

    M(z) = (z - i*beta) / (z + i*beta),       beta > 0

sends the real axis onto the unit circle, the lower half-plane pole
``-i*beta`` to infinity and infinity to ``1``.  Composing with ``e^{i theta}``
gives the change of variables ``x = T(theta) = M^{-1}(e^{i theta})`` used to
pull trigonometric interpolants back to the line.

On the real axis ``M(x) = e^{i theta(x)}`` with ``theta(x) = 2 atan2(beta, -x)``,
so powers are formed from the angle and never by repeated multiplication.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

__all__ = [
    "INFINITY",
    "Infinity",
    "ExtendedPoint",
    "MobiusMap",
    "PoleError",
    "mobius",
    "circle_to_line",
    "line_to_circle",
    "basis_r",
    "basis_rjk",
    "product_reduce",
]


class PoleError(ZeroDivisionError):
    """Raised when a rational basis function is evaluated at its pole."""


class Infinity:
    """The point at infinity of the extended complex plane (singleton)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"

    def __reduce__(self):
        return (Infinity, ())


INFINITY = Infinity()

ExtendedPoint = Union[complex, Infinity]


def _is_inf(p) -> bool:
    return p is INFINITY


@dataclass(frozen=True)
class MobiusMap:
    """The map ``M(z) = (z - i beta)/(z + i beta)``.

    Parameters
    ----------
    beta : float
        Positive scale; the poles of the rational basis sit at ``+-i beta``.
    """

    beta: float = 1.0

    def __post_init__(self):
        b = float(self.beta)
        if not np.isfinite(b) or b <= 0.0:
            raise ValueError(f"beta must be a positive finite real, got {self.beta!r}")
        object.__setattr__(self, "beta", b)

    def forward(self, p: ExtendedPoint) -> ExtendedPoint:
        if _is_inf(p):
            return 1.0 + 0.0j
        z = complex(p)
        den = z + 1j * self.beta
        if den == 0:
            return INFINITY
        return (z - 1j * self.beta) / den

    def inverse(self, p: ExtendedPoint) -> ExtendedPoint:
        if _is_inf(p):
            return -1j * self.beta
        w = complex(p)
        if w == 1:
            return INFINITY
        return (self.beta / 1j) * (w + 1) / (w - 1)

    def angle(self, x):
        """Angle ``theta in (0, 2 pi)`` with ``M(x) = exp(i theta)`` for real ``x``."""
        return 2.0 * np.arctan2(self.beta, -np.asarray(x, dtype=float))

    def nodes(self, theta):
        """Real-line image ``-beta cot(theta/2)`` of circle angles (no infinity check)."""
        theta = np.asarray(theta, dtype=float)
        return -self.beta * np.cos(theta / 2) / np.sin(theta / 2)


def mobius(map: MobiusMap, p: ExtendedPoint, direction: str = "forward") -> ExtendedPoint:
    """Apply ``M`` (``direction="forward"``) or ``M^{-1}`` (``"inverse"``)."""
    if direction == "forward":
        return map.forward(p)
    if direction == "inverse":
        return map.inverse(p)
    raise ValueError(f"direction must be 'forward' or 'inverse', got {direction!r}")


def circle_to_line(map: MobiusMap, theta: float) -> ExtendedPoint:
    """``T(theta) = M^{-1}(e^{i theta})``; ``theta = 0`` goes to infinity."""
    t = float(np.mod(theta, 2 * np.pi))
    if t == 0.0:
        return INFINITY
    return float(map.nodes(t))


def line_to_circle(map: MobiusMap, x):
    """Inverse of :func:`circle_to_line` on the real line, values in ``(0, 2 pi)``."""
    if _is_inf(x):
        return 0.0
    out = map.angle(x)
    return float(out) if np.ndim(out) == 0 else out


def _cpow(w, j: int):
    """Binary exponentiation ``w**j`` for integer ``j >= 0``, elementwise."""
    result = np.ones_like(w)
    base = w
    while j:
        if j & 1:
            result = result * base
        j >>= 1
        if j:
            base = base * base
    return result


def _on_axis(z) -> bool:
    return np.isrealobj(z) or not np.any(np.imag(z))


def basis_r(map: MobiusMap, j: int, z):
    """Evaluate ``R_j(z) = M(z)^j - 1``.

    Real input uses the unimodular angle form
    ``R_j = -2 sin^2(j theta / 2) + i sin(j theta)`` which keeps ``|M^j| = 1``
    exactly.  Off-axis input uses binary powers of ``M`` or ``1/M``.

    Raises
    ------
    PoleError
        If ``j > 0`` and ``z = -i beta``, or ``j < 0`` and ``z = i beta``.
    """
    j = int(j)
    scalar = np.ndim(z) == 0
    if j == 0:
        out = np.zeros(np.shape(z), dtype=complex)
        return complex(out) if scalar else out
    if _on_axis(z):
        theta = map.angle(np.real(z))
        half = 0.5 * j * theta
        out = -2.0 * np.sin(half) ** 2 + 1j * np.sin(j * theta)
        return complex(out) if scalar else out

    z = np.asarray(z, dtype=complex)
    b = map.beta
    if j > 0:
        if np.any(z == -1j * b):
            raise PoleError(f"R_{j} has a pole at z = -i*{b}")
        w = (z - 1j * b) / (z + 1j * b)
    else:
        if np.any(z == 1j * b):
            raise PoleError(f"R_{j} has a pole at z = i*{b}")
        w = (z + 1j * b) / (z - 1j * b)
    out = _cpow(w, abs(j)) - 1.0
    return complex(out) if scalar else out


def basis_rjk(map: MobiusMap, j: int, k: float, x):
    """Oscillatory basis ``R_{j,k}(x) = exp(-i k x) R_j(x)`` on the real line."""
    x = np.asarray(x, dtype=float)
    out = np.exp(-1j * k * x) * basis_r(map, j, x)
    return complex(out) if out.ndim == 0 else out


def product_reduce(j: int, k1: float, l: int, k2: float):
    """Symbolic product ``R_{j,k1} R_{l,k2}`` in the oscillatory basis.

    Uses ``R_{j,k1} R_{l,k2} = R_{j+l,k} - R_{j,k} - R_{l,k}`` with
    ``k = k1 + k2``.  Index-0 terms are dropped and duplicates merged.

    Returns
    -------
    list of (index, wavenumber, coefficient)
        Sorted by index; coefficients are integers.
    """
    k = k1 + k2
    acc: dict[int, int] = {}
    for idx, c in ((j + l, 1), (j, -1), (l, -1)):
        if idx == 0:
            continue
        acc[idx] = acc.get(idx, 0) + c
    return [(idx, k, c) for idx, c in sorted(acc.items()) if c != 0]

