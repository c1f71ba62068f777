"""Fourier transforms and derivatives of rational expansions.

Transform convention: ``F f(k) = PV int e^{-ikx} f(x) dx``.  The transform
of ``R_j`` is

    omega_j(k) = 0                                     sign(j) = -sign(k)
               = -2 pi |j| beta                        k = 0
               = -4 pi beta e^{-|k| beta} L^(1)_{|j|-1}(2 |k| beta)   otherwise

from one residue at the pole of ``M^j``.  The ``k = 0`` value is the mean of
the two one-sided limits, so transforms of interpolants jump at ``k = 0``
(at ``k = -k_m`` for a modulated part) and return the principal value there.

Derivatives use ``M' = -(i / 2 beta) (1 - M)^2``, i.e. for every ``j != 0``

    R_j' = -(i j / 2 beta) (R_{j-1} - 2 R_j + R_{j+1}),

with ``R_0 = 0``.  The coefficient landing on ``R_0`` is kept in the ``j = 0``
slot so the coefficient sum of the derivative still equals its value at
infinity (zero).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .approx import RationalExpansion, sample_nodes
from .cauchy import OscillatoryFunction
from .mobius import MobiusMap
from .specfun import laguerre
from .trig import TrigGrid

__all__ = [
    "FourierWeightTable",
    "fourier_weight",
    "fourier_weights",
    "fourier_transform",
    "quadrature_weights",
    "quadrature_nodes",
    "differentiate",
    "differentiate_osc",
]


def fourier_weight(j: int, k: float, beta: float) -> float:
    """``omega_j(k)``, the principal-value transform of ``R_j`` at ``k``."""
    if j == 0:
        return 0.0
    if k == 0:
        return -2.0 * math.pi * abs(j) * beta
    if np.sign(j) == -np.sign(k):
        return 0.0
    x = 2.0 * abs(k) * beta
    return -4.0 * math.pi * beta * math.exp(-abs(k) * beta) * laguerre(abs(j) - 1, 1, x)


@dataclass(frozen=True, eq=False)
class FourierWeightTable:
    """``omega_j(k)`` for ``j = j_min .. j_min + len(weights) - 1``."""

    map: MobiusMap
    k: float
    j_min: int
    weights: np.ndarray = field(repr=False)

    def __getitem__(self, j: int) -> float:
        i = j - self.j_min
        if 0 <= i < self.weights.size:
            return float(self.weights[i])
        return fourier_weight(j, self.k, self.map.beta)


def fourier_weights(j_min: int, j_max: int, k: float, map: MobiusMap) -> FourierWeightTable:
    """Vector of weights over an index range.

    The Laguerre values come from one upward recurrence shared by all ``|j|``.
    """
    js = np.arange(j_min, j_max + 1)
    w = np.zeros(js.size)
    beta = map.beta
    if k == 0:
        w = -2.0 * math.pi * np.abs(js) * beta
    else:
        top = int(np.max(np.abs(js))) if js.size else 0
        x = 2.0 * abs(k) * beta
        lag = np.empty(max(top, 1))
        # L^(1)_0 .. L^(1)_{top-1}
        prev, cur = 0.0, 1.0
        for m in range(lag.size):
            lag[m] = cur
            prev, cur = cur, ((2 * m + 2 - x) * cur - (m + 1) * prev) / (m + 1)
        scale = -4.0 * math.pi * beta * math.exp(-abs(k) * beta)
        same = np.sign(js) == np.sign(k)
        w[same] = scale * lag[np.abs(js[same]) - 1]
    w[js == 0] = 0.0
    return FourierWeightTable(map, float(k), int(j_min), w)


def fourier_transform(g, k):
    """``PV int e^{-ikx} g(x) dx`` for an :class:`OscillatoryFunction` (or expansion).

    A part ``e^{-i k_m x} g_m`` contributes ``sum_j alpha_j omega_j(k + k_m)``.
    """
    if isinstance(g, RationalExpansion):
        g = OscillatoryFunction.single(g)
    ks = np.atleast_1d(np.asarray(k, dtype=float))
    out = np.zeros(ks.shape, dtype=complex)
    for i, kk in enumerate(ks):
        total = 0j
        for km, e in g.parts:
            tab = fourier_weights(e.j_min, e.j_max, kk + km, g.map)
            total += complex(np.dot(tab.weights, e.coeffs))
        out[i] = total
    return complex(out[0]) if np.ndim(k) == 0 else out.reshape(np.shape(k))


def quadrature_nodes(n: int, map: MobiusMap) -> np.ndarray:
    """Finite nodes ``x_l``, ``l = 1 .. n-1`` (``x_0`` is the point at infinity)."""
    return sample_nodes(n, map)


def quadrature_weights(n: int, k: float, map: MobiusMap) -> np.ndarray:
    """Weights ``w_l`` with ``sum_l w_l f(x_l) = F[R_n f](k)``.

    ``w_l = (1/n) sum_j omega_j(k) e^{-i j theta_l}``; the sign of the exponent
    matches the DFT used to build the interpolant.  ``w_0`` multiplies the
    value at infinity.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    grid = TrigGrid(n)
    tab = fourier_weights(-grid.n_minus, grid.n_plus, k, map)
    phase = np.exp(-1j * np.multiply.outer(grid.nodes, grid.modes))
    return phase @ tab.weights / n


def differentiate(e: RationalExpansion) -> RationalExpansion:
    """Derivative in coefficient space; the index range grows by one on each side."""
    j = e.indices
    a = e.coeffs
    ja = j * a
    out = np.zeros(a.size + 2, dtype=complex)
    # out index p <-> j = e.j_min - 1 + p ; term j*a_j feeds j-1, j, j+1
    out[0:-2] += ja
    out[1:-1] += -2.0 * ja
    out[2:] += ja
    out *= -1j / (2.0 * e.map.beta)
    return RationalExpansion(e.map, e.j_min - 1, out)


def differentiate_osc(g: OscillatoryFunction) -> OscillatoryFunction:
    """``d/dx [e^{-ikx} g(x)] = e^{-ikx} (g' - i k g)`` applied part by part."""
    parts = []
    for k, e in g.parts:
        d = differentiate(e)
        if k != 0:
            d = d + (-1j * k) * e
        parts.append((k, d))
    return OscillatoryFunction(g.map, tuple(parts))
