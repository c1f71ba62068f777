"""Oscillatory Cauchy transforms in the basis ``R_{j,k}(x) = e^{-ikx} R_j(x)``.

The Cauchy integral

    C f(z) = 1/(2 pi i) int f(x) / (x - z) dx

maps ``R_{j,k}`` back into the span of ``R_{j,k}`` and ``{R_{n,0}}``.  For
``k j <= 0`` the basis element is already analytic and decaying in one
half-plane and the transform is either the element itself or zero.  For
``k j > 0`` the pole of ``M^j`` sits in the half-plane where ``e^{-ikx}``
decays, and closing the contour there gives, for ``j, k > 0``,

    C^+ R_{j,k}(z) = -Res_{x=-i beta} e^{-ikx} M(x)^j / (x - z)
                   = -sum_{n=1}^{j} eta_{j,n}(k) R_n(z),

with

    eta_{j,n}(k) = -(-1)^n e^{-k beta} sum_{q=n}^{j} C(q, n) c_q,
    c_q = sum_{m=q}^{j} (-1)^m C(j, m) (2 k beta)^{m-q} / (m-q)!.

Negative ``j`` follow from ``eta_{-j,n}(-k) = eta_{j,n}(k)``.

The literature form of ``gamma_{j,n}`` (``gamma_paper``) read with the usual
binomial convention gives ``eta_{1,1} = 0`` where the residue gives
``-e^{-k beta}``; it is kept only for comparison.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .approx import RationalExpansion
from .mobius import MobiusMap
from .specfun import binomial, kummer_terminating

__all__ = [
    "OscillatoryFunction",
    "StabilityWarning",
    "gamma_paper",
    "eta_from_gamma",
    "eta_coeff",
    "eta_table",
    "cauchy_basis",
    "cauchy_apply",
    "cauchy_offaxis",
]

STABLE_INDEX = 30


class StabilityWarning(UserWarning):
    """Off-axis evaluation relies on cancellation between large terms."""


@dataclass(frozen=True, eq=False)
class OscillatoryFunction:
    """``sum_m e^{-i k_m x} g_m(x)`` with each ``g_m`` a :class:`RationalExpansion`.

    Parts with equal wavenumbers are merged on construction.
    """

    map: MobiusMap
    parts: tuple = ()

    def __post_init__(self):
        merged: dict[float, RationalExpansion] = {}
        for k, e in self.parts:
            if e.map != self.map:
                raise ValueError("all parts must share one Moebius map")
            k = float(k) + 0.0  # folds -0.0 into 0.0
            merged[k] = merged[k] + e if k in merged else e
        object.__setattr__(self, "parts", tuple(sorted(merged.items())))

    @classmethod
    def single(cls, e: RationalExpansion, k: float = 0.0) -> "OscillatoryFunction":
        return cls(e.map, ((k, e),))

    @classmethod
    def basis(cls, map: MobiusMap, j: int, k: float, alpha: complex = 1.0) -> "OscillatoryFunction":
        """``alpha * R_{j,k}``."""
        return cls.single(RationalExpansion.from_dict(map, {j: alpha}), k)

    @classmethod
    def from_terms(cls, map: MobiusMap, terms) -> "OscillatoryFunction":
        """Build from an iterable of ``(j, k, coefficient)``."""
        by_k: dict[float, dict[int, complex]] = {}
        for j, k, c in terms:
            d = by_k.setdefault(float(k), {})
            d[int(j)] = d.get(int(j), 0) + c
        return cls(map, tuple((k, RationalExpansion.from_dict(map, d)) for k, d in by_k.items()))

    @property
    def wavenumbers(self):
        return [k for k, _ in self.parts]

    def part(self, k: float) -> RationalExpansion:
        for kk, e in self.parts:
            if kk == k:
                return e
        return RationalExpansion.zero(self.map)

    def terms(self):
        """Yield ``(j, k, alpha)`` over nonzero coefficients with ``j != 0``."""
        for k, e in self.parts:
            for j, a in e.terms():
                yield j, k, a

    def is_zero(self) -> bool:
        return not any(True for _ in self.terms())

    def max_index(self) -> int:
        return max((e.max_index() for _, e in self.parts), default=0)

    def __add__(self, other: "OscillatoryFunction") -> "OscillatoryFunction":
        if not isinstance(other, OscillatoryFunction):
            return NotImplemented
        return OscillatoryFunction(self.map, self.parts + other.parts)

    def __sub__(self, other):
        return self + (-1.0) * other

    def __rmul__(self, scalar) -> "OscillatoryFunction":
        return OscillatoryFunction(self.map, tuple((k, scalar * e) for k, e in self.parts))

    def __neg__(self):
        return (-1.0) * self

    def __call__(self, x):
        return self.evaluate(x)

    def evaluate(self, x):
        """``sum_m e^{-i k_m x} g_m(x)`` at real or complex points."""
        scalar = np.ndim(x) == 0
        out = np.zeros(np.shape(x), dtype=complex)
        for k, e in self.parts:
            val = e(x)
            out = out + (val if k == 0 else np.exp(-1j * k * np.asarray(x)) * val)
        return complex(out) if scalar else out

    def to_dict(self) -> dict:
        return {
            "beta": self.map.beta,
            "parts": [{"wavenumber": k, "expansion": e.to_dict()} for k, e in self.parts],
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "OscillatoryFunction":
        map = MobiusMap(d["beta"])
        parts = tuple(
            (p["wavenumber"], RationalExpansion.from_json_dict(p["expansion"])) for p in d["parts"]
        )
        return cls(map, parts)

    def equals(self, other: "OscillatoryFunction") -> bool:
        return (
            self.map == other.map
            and len(self.parts) == len(other.parts)
            and all(k1 == k2 and e1.equals(e2) for (k1, e1), (k2, e2) in zip(self.parts, other.parts))
        )


def gamma_paper(j: int, nn: int, k: float, beta: float) -> float:
    """Literal ``-(j/n) e^{-|k| beta} C(j-1, n) 1F1(n-j; 1+n; 2|k| beta)``.

    Diagnostic only: it does not reproduce the residue values, see
    :func:`eta_table`.
    """
    if j < 1 or not 1 <= nn <= j:
        raise ValueError("need j >= 1 and 1 <= nn <= j")
    return (
        -(j / nn)
        * math.exp(-abs(k) * beta)
        * binomial(j - 1, nn)
        * kummer_terminating(nn - j, 1 + nn, 2 * abs(k) * beta)
    )


def eta_from_gamma(j: int, nn: int, k: float, beta: float) -> float:
    """``sum_{l=n}^{j} (-1)^{n+l} C(l, n) gamma_paper(l, n)``, for comparison with :func:`eta_coeff`."""
    return math.fsum(
        (-1) ** (nn + l) * binomial(l, nn) * gamma_paper(l, nn, k, beta) for l in range(nn, j + 1)
    )


def eta_table(j: int, k: float, beta: float) -> np.ndarray:
    """``[eta_{j,1}(k), ..., eta_{j,|j|}(k)]`` from the residue at the pole of ``M^j``.

    Requires ``k * j > 0``.  The alternating sums cancel terms of size up
    to about ``4^j``, so they are carried out exactly: ``2 k beta`` is a
    binary fraction ``a / b`` and every partial sum is an integer multiple
    of ``1 / (b^j j!)``.  Only the final quotient is rounded.
    """
    if j == 0 or k * j <= 0:
        raise ValueError(f"eta is defined only for k*j > 0 (got j={j}, k={k})")
    if j < 0:
        return eta_table(-j, -k, beta)
    kappa = Fraction(2.0 * k * beta)
    a, b = kappa.numerator, kappa.denominator
    fj = math.factorial(j)
    # t[p] = kappa^p / p! scaled by b^j j!
    t = [a**p * b ** (j - p) * (fj // math.factorial(p)) for p in range(j + 1)]
    c = [0] * (j + 1)
    for q in range(1, j + 1):
        c[q] = sum((-1) ** m * math.comb(j, m) * t[m - q] for m in range(q, j + 1))
    denom = b**j * fj
    scale = math.exp(-k * beta)
    out = np.empty(j)
    for n in range(1, j + 1):
        s = sum(math.comb(q, n) * c[q] for q in range(n, j + 1))
        out[n - 1] = -((-1) ** n) * scale * float(Fraction(s, denom))
    return out


def eta_coeff(j: int, nn: int, k: float, beta: float) -> float:
    """Single coefficient ``eta_{j,nn}(k)``; ``1 <= nn <= |j|`` and ``k j > 0``."""
    if not 1 <= nn <= abs(j):
        raise ValueError("nn must lie in 1..|j|")
    return float(eta_table(j, k, beta)[nn - 1])


def _basis_terms(j, k, side, eta):
    """``(index, wavenumber, coefficient)`` triples for ``C^side R_{j,k}``."""
    if j == 0:
        return []
    plus = side == "plus"
    if k * j < 0 or k == 0:
        if j > 0:
            return [(j, k, 1.0)] if plus else []
        return [] if plus else [(j, k, -1.0)]
    table = eta(j, k)
    sgn = 1 if j > 0 else -1
    nonosc = [(sgn * n, 0.0, -sgn * float(e)) for n, e in enumerate(table, start=1)]
    # j > 0: plus = -sum eta R_n,           minus = -R_{j,k} - sum eta R_n
    # j < 0: plus = R_{j,k} + sum eta R_-n, minus = sum eta R_-n
    if j > 0:
        return nonosc if plus else [(j, k, -1.0)] + nonosc
    return [(j, k, 1.0)] + nonosc if plus else nonosc


def _check_side(side):
    if side not in ("plus", "minus"):
        raise ValueError(f"side must be 'plus' or 'minus', got {side!r}")


def cauchy_basis(j: int, k: float, side: str, map: MobiusMap) -> OscillatoryFunction:
    """Boundary value ``C^+ R_{j,k}`` (``side="plus"``) or ``C^- R_{j,k}``.

    ``k = 0`` is treated as the limit of the ``k j < 0`` branch.
    """
    _check_side(side)
    terms = _basis_terms(j, k, side, lambda jj, kk: eta_table(jj, kk, map.beta))
    return OscillatoryFunction.from_terms(map, terms)


def cauchy_apply(g: OscillatoryFunction, side: str) -> OscillatoryFunction:
    """Linear extension of :func:`cauchy_basis` over every coefficient of ``g``."""
    _check_side(side)
    beta = g.map.beta
    cache: dict[tuple[int, float], np.ndarray] = {}

    def eta(j, k):
        if (j, k) not in cache:
            cache[(j, k)] = eta_table(j, k, beta)
        return cache[(j, k)]

    out = []
    for j, k, a in g.terms():
        out.extend((jj, kk, a * c) for jj, kk, c in _basis_terms(j, k, side, eta))
    return OscillatoryFunction.from_terms(g.map, out)


def cauchy_offaxis(g: OscillatoryFunction, z):
    """``C g(z)`` for ``Im z != 0`` from the closed form of the matching side.

    Emits :class:`StabilityWarning` when ``g`` uses ``|j| > 30``; the
    closed form then relies on cancellation between terms with poles at
    ``+-i beta``.
    """
    z = np.asarray(z, dtype=complex)
    if np.any(z.imag == 0):
        raise ValueError("z must lie off the real axis")
    if g.max_index() > STABLE_INDEX:
        warnings.warn(
            f"|j| = {g.max_index()} > {STABLE_INDEX}: closed-form Cauchy values may lose accuracy",
            StabilityWarning,
            stacklevel=2,
        )
    out = np.empty(z.shape, dtype=complex)
    upper = z.imag > 0
    if np.any(upper):
        out[upper] = cauchy_apply(g, "plus").evaluate(z[upper])
    if np.any(~upper):
        out[~upper] = cauchy_apply(g, "minus").evaluate(z[~upper])
    return complex(out) if out.ndim == 0 else out
