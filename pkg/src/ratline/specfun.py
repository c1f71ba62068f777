"""Binomials, terminating Kummer series and generalised Laguerre polynomials."""
import math
from fractions import Fraction

import numpy as np

__all__ = ["binomial", "kummer_terminating", "laguerre"]

_INT64_MAX = 2**63 - 1


def binomial(m: int, r: int) -> int:
    """Binomial coefficient with ``C(m, r) = 0`` for ``r < 0`` or ``r > m``.

    Exact integer arithmetic.  Values that do not fit a signed 64-bit integer
    raise ``OverflowError``; every ``m <= 62`` fits.
    """
    if m < 0:
        raise ValueError("m must be non-negative")
    if r < 0 or r > m:
        return 0
    val = math.comb(m, r)
    if val > _INT64_MAX:
        raise OverflowError(f"C({m}, {r}) exceeds the 64-bit range")
    return val


def kummer_terminating(a: int, b: int, z):
    """``1F1(a; b; z)`` for a non-positive integer ``a`` (a polynomial of degree ``-a``).

    Terms follow ``t_{l+1} = t_l (a + l) z / ((b + l)(l + 1))``.  The series
    alternates for ``z > 0`` and can cancel badly, so it is summed in exact
    rational arithmetic (``z`` is a binary fraction) and rounded once.  Cost
    grows with ``|a|``; keep ``|a|`` below a few hundred.
    """
    if int(a) != a or a > 0:
        raise ValueError("only non-positive integer a (terminating series) is supported")
    if int(b) != b or b < 1:
        raise ValueError("b must be a positive integer")
    a, b = int(a), int(b)
    if np.ndim(z):
        return np.array([kummer_terminating(a, b, float(zz)) for zz in np.ravel(z)]).reshape(np.shape(z))
    z = Fraction(float(z))
    t = total = Fraction(1)
    for l in range(-a):
        t *= Fraction(a + l, (b + l) * (l + 1)) * z
        total += t
    return float(total)


def laguerre(nn: int, alpha: int, x):
    """Generalised Laguerre polynomial ``L_nn^(alpha)(x)`` by forward recurrence."""
    if nn < 0:
        raise ValueError("nn must be non-negative")
    x = np.asarray(x, dtype=float)
    prev = np.ones_like(x)
    if nn == 0:
        return float(prev) if prev.ndim == 0 else prev
    cur = 1.0 + alpha - x
    for k in range(1, nn):
        prev, cur = cur, ((2 * k + 1 + alpha - x) * cur - (k + alpha) * prev) / (k + 1)
    return float(cur) if np.ndim(cur) == 0 else cur
