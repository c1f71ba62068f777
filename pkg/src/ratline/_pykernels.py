"""Pure numpy versions of the inner loops in ``_ckernels.pyx``.

Work is chunked over the evaluation points so the outer-product temporaries
stay around a few MB.
"""
import numpy as np

_CHUNK = 1 << 18


def _chunks(m, width):
    step = max(1, _CHUNK // max(width, 1))
    for start in range(0, m, step):
        yield slice(start, min(m, start + step))


def basis_sum(coeffs, j_min, theta):
    coeffs = np.asarray(coeffs, dtype=complex)
    theta = np.asarray(theta, dtype=float)
    js = j_min + np.arange(coeffs.size)
    keep = js != 0
    js, coeffs = js[keep], coeffs[keep]
    out = np.empty(theta.size, dtype=complex)
    for sl in _chunks(theta.size, js.size):
        jt = np.multiply.outer(theta[sl], js)
        basis = -2.0 * np.sin(0.5 * jt) ** 2 + 1j * np.sin(jt)
        out[sl] = basis @ coeffs
    return out


def trig_sum(coeffs, k_min, theta):
    coeffs = np.asarray(coeffs, dtype=complex)
    theta = np.asarray(theta, dtype=float)
    ks = k_min + np.arange(coeffs.size)
    out = np.empty(theta.size, dtype=complex)
    for sl in _chunks(theta.size, ks.size):
        out[sl] = np.exp(1j * np.multiply.outer(theta[sl], ks)) @ coeffs
    return out


def lebesgue_function(n, theta):
    theta = np.asarray(theta, dtype=float)
    nodes = 2 * np.pi * np.arange(n) / n
    out = np.empty(theta.size)
    for sl in _chunks(theta.size, n):
        t = np.subtract.outer(theta[sl], nodes)
        d = np.sin(0.5 * t)
        small = np.abs(d) < 1e-15
        ratio = np.abs(np.sin(0.5 * n * t) / np.where(small, 1.0, d))
        ratio[small] = n
        out[sl] = ratio.sum(axis=1) / n
    return out
