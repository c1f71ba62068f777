"""Rational interpolation of functions on the real line.

A function ``f`` is sampled at ``x_l = T(theta_l) = -beta cot(theta_l / 2)``
for ``l = 1 .. n-1`` (``theta_0 = 0`` is the point at infinity, where the
supplied limit is used), the samples are transformed with the DFT and the
coefficients ``alpha_j`` define

    R_n f(x) = sum_j alpha_j R_j(x),     R_j(x) = M(x)^j - 1.

The slot ``alpha_0`` is kept (it records the constant of the Laurent
series in ``M``) but never contributes to evaluation.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .mobius import INFINITY, MobiusMap, PoleError
from .trig import TrigGrid, dft

__all__ = ["RationalExpansion", "interpolate", "evaluate", "coefficient", "sample_nodes"]


@dataclass(frozen=True, eq=False)
class RationalExpansion:
    """Coefficients ``alpha_j``, ``j = j_min .. j_max``, in the basis ``R_j``."""

    map: MobiusMap
    j_min: int
    coeffs: np.ndarray = field(repr=False)

    def __post_init__(self):
        c = np.atleast_1d(np.asarray(self.coeffs, dtype=complex)).copy()
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)
        object.__setattr__(self, "j_min", int(self.j_min))
        if self.j_min > 0 or self.j_max < 0:
            raise ValueError("index range must contain 0")

    @classmethod
    def zero(cls, map: MobiusMap) -> "RationalExpansion":
        return cls(map, 0, np.zeros(1, dtype=complex))

    @classmethod
    def from_dict(cls, map: MobiusMap, terms: dict) -> "RationalExpansion":
        """Build from ``{j: alpha_j}``."""
        js = list(terms) + [0]
        lo, hi = min(js), max(js)
        c = np.zeros(hi - lo + 1, dtype=complex)
        for j, a in terms.items():
            c[j - lo] += a
        return cls(map, lo, c)

    @property
    def j_max(self) -> int:
        return self.j_min + self.coeffs.size - 1

    @property
    def indices(self) -> np.ndarray:
        return np.arange(self.j_min, self.j_max + 1)

    @property
    def beta(self) -> float:
        return self.map.beta

    def coefficient(self, j: int) -> complex:
        if self.j_min <= j <= self.j_max:
            return complex(self.coeffs[j - self.j_min])
        return 0j

    def terms(self):
        """Yield ``(j, alpha_j)`` for nonzero ``alpha_j``, ``j != 0``."""
        for j, a in zip(self.indices, self.coeffs):
            if j != 0 and a != 0:
                yield int(j), complex(a)

    def padded(self, j_min: int, j_max: int) -> np.ndarray:
        """Coefficients on the wider range ``j_min .. j_max`` (zeros outside)."""
        if j_min > self.j_min or j_max < self.j_max:
            raise ValueError("padding range must contain the current range")
        out = np.zeros(j_max - j_min + 1, dtype=complex)
        out[self.j_min - j_min : self.j_max - j_min + 1] = self.coeffs
        return out

    def __add__(self, other: "RationalExpansion") -> "RationalExpansion":
        if not isinstance(other, RationalExpansion):
            return NotImplemented
        if other.map != self.map:
            raise ValueError("expansions use different Moebius maps")
        lo, hi = min(self.j_min, other.j_min), max(self.j_max, other.j_max)
        return RationalExpansion(self.map, lo, self.padded(lo, hi) + other.padded(lo, hi))

    def __sub__(self, other):
        return self + (-1.0) * other

    def __rmul__(self, scalar) -> "RationalExpansion":
        return RationalExpansion(self.map, self.j_min, complex(scalar) * self.coeffs)

    def __neg__(self):
        return (-1.0) * self

    def __call__(self, x):
        return evaluate(self, x)

    def max_index(self) -> int:
        nz = [abs(j) for j, _ in self.terms()]
        return max(nz, default=0)

    def to_dict(self) -> dict:
        return {
            "beta": self.map.beta,
            "j_min": self.j_min,
            "j_max": self.j_max,
            "coeffs": [[float(a.real), float(a.imag)] for a in self.coeffs],
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "RationalExpansion":
        c = np.array([complex(re, im) for re, im in d["coeffs"]], dtype=complex)
        e = cls(MobiusMap(d["beta"]), d["j_min"], c)
        if e.j_max != d["j_max"]:
            raise ValueError("j_max inconsistent with coefficient count")
        return e

    def dumps(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def loads(cls, s: str) -> "RationalExpansion":
        return cls.from_json_dict(json.loads(s))

    def equals(self, other: "RationalExpansion") -> bool:
        """Exact coefficientwise equality (same map, same range)."""
        return (
            self.map == other.map
            and self.j_min == other.j_min
            and np.array_equal(self.coeffs, other.coeffs)
        )


def sample_nodes(n: int, map: MobiusMap) -> np.ndarray:
    """Finite interpolation nodes ``x_l = T(theta_l)``, ``l = 1 .. n-1``."""
    return map.nodes(TrigGrid(n).nodes[1:])


def interpolate(f, limit_at_infinity: complex = 0.0, n: int | None = None, map: MobiusMap | None = None):
    """Rational interpolant of ``f`` with ``n`` nodes.

    Parameters
    ----------
    f : callable
        Vectorised function of a real array.
    limit_at_infinity : complex
        Value used for the node at infinity.  The coefficients then sum to it.
        Evaluation drops the constant, so the interpolant reproduces
        ``f(x_l) - limit_at_infinity`` at the nodes.
    n : int
        Number of nodes, ``n >= 2``.  Required.
    map : MobiusMap, optional
        Defaults to ``beta = 1``.
    """
    if n is None:
        raise TypeError("interpolate() needs the node count n")
    if n < 2:
        raise ValueError("n must be >= 2")
    map = map or MobiusMap()
    grid = TrigGrid(n)
    samples = np.empty(n, dtype=complex)
    samples[0] = limit_at_infinity
    samples[1:] = f(sample_nodes(n, map))
    c = dft(grid, samples)
    return RationalExpansion(map, -grid.n_minus, c.coeffs)


def _check_poles(e: RationalExpansion, z: np.ndarray):
    b = e.map.beta
    if np.any(z == -1j * b) and any(j > 0 for j, _ in e.terms()):
        raise PoleError(f"expansion has a pole at z = -i*{b}")
    if np.any(z == 1j * b) and any(j < 0 for j, _ in e.terms()):
        raise PoleError(f"expansion has a pole at z = i*{b}")


def _horner(coeffs, w):
    """``sum_{q>=1} coeffs[q-1] w^q`` elementwise."""
    acc = np.zeros_like(w)
    for a in coeffs[::-1]:
        acc = (acc + a) * w
    return acc


def evaluate(e: RationalExpansion, p):
    """Evaluate ``sum_j alpha_j R_j`` at real, complex or infinite points.

    Real points go through the compiled angle-form kernel; off-axis points use
    Horner's rule in ``M`` (for ``j > 0``) and ``1/M`` (for ``j < 0``).
    ``INFINITY`` evaluates to 0.
    """
    if p is INFINITY:
        return 0j
    scalar = np.ndim(p) == 0
    if np.isrealobj(p):
        theta = e.map.angle(p)
        out = kernels.basis_sum(e.coeffs, e.j_min, theta)
        return complex(out) if scalar else out

    z = np.asarray(p, dtype=complex)
    _check_poles(e, z)
    b = e.map.beta
    pos = e.coeffs[-e.j_min + 1 :]
    neg = e.coeffs[: -e.j_min][::-1]
    total = pos.sum() + neg.sum()
    out = np.full(z.shape, -total, dtype=complex)
    with np.errstate(divide="ignore", invalid="ignore"):
        if pos.size:
            out = out + _horner(pos, (z - 1j * b) / (z + 1j * b))
        if neg.size:
            out = out + _horner(neg, (z + 1j * b) / (z - 1j * b))
    return complex(out) if scalar else out


def coefficient(e: RationalExpansion, j: int) -> complex:
    """Weight of ``R_j`` in ``e``: ``alpha_j``, or 0 outside the stored range.

    ``R_0`` vanishes, so its weight is 0 even though ``e.coefficient(0)``
    (the raw slot) holds the constant that makes the coefficients sum to
    the value at infinity.
    """
    if j == 0:
        return 0j
    return e.coefficient(j)

