"""Backend selection for the hot loops.

The compiled extension ``ratline._ckernels`` is used when it imports;
otherwise the numpy implementations in ``ratline._pykernels`` are used.
Set ``RATLINE_PURE_PYTHON=1`` to force the fallback.
"""
import os

import numpy as np

from . import _pykernels

BACKEND = "python"
_impl = _pykernels

if not os.environ.get("RATLINE_PURE_PYTHON"):
    try:
        from . import _ckernels as _impl  # noqa: F811
        BACKEND = "cython"
    except ImportError:  # pragma: no cover - depends on the build
        _impl = _pykernels


def _prep(coeffs, theta):
    coeffs = np.ascontiguousarray(coeffs, dtype=np.complex128)
    theta = np.ascontiguousarray(np.ravel(theta), dtype=np.float64)
    return coeffs, theta


def basis_sum(coeffs, j_min, theta):
    """``sum_j coeffs[j - j_min] * (exp(i j theta) - 1)`` over the flattened ``theta``."""
    shape = np.shape(theta)
    coeffs, theta = _prep(coeffs, theta)
    return _impl.basis_sum(coeffs, int(j_min), theta).reshape(shape)


def trig_sum(coeffs, k_min, theta):
    """``sum_k coeffs[k - k_min] * exp(i k theta)`` over the flattened ``theta``."""
    shape = np.shape(theta)
    coeffs, theta = _prep(coeffs, theta)
    return _impl.trig_sum(coeffs, int(k_min), theta).reshape(shape)


def lebesgue_function(n, theta):
    """``(1/n) sum_l |D_n(theta - 2 pi l / n)|``."""
    shape = np.shape(theta)
    theta = np.ascontiguousarray(np.ravel(theta), dtype=np.float64)
    return _impl.lebesgue_function(int(n), theta).reshape(shape)
