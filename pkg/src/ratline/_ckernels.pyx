# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loops; mirrors ``ratline._pykernels`` function for function.

Powers of ``e^{i theta}`` are generated by complex rotation and reseeded
from ``sin``/``cos`` every ``RESEED`` steps, which keeps the drift near
``1e-15`` per step while avoiding a transcendental call per term.
"""
import numpy as np
cimport numpy as cnp
from libc.math cimport sin, cos, fabs

cnp.import_array()

DEF RESEED = 32


def basis_sum(const double complex[::1] coeffs, long j_min, const double[::1] theta):
    """sum_j a_j (exp(i j theta) - 1), j = j_min.., skipping j = 0.

    Uses exp(i j t) - 1 = -2 h^2 + 2 i h c with h = sin(j t/2), c = cos(j t/2);
    negative j share (c, -h).
    """
    cdef Py_ssize_t m = theta.shape[0], nc = coeffs.shape[0]
    cdef long j_max = j_min + nc - 1
    cdef long top = j_max if j_max > -j_min else -j_min
    cdef Py_ssize_t p
    cdef long j
    cdef double t, c, h, c1, h1, tmp, re, im, rr, ri
    cdef double complex a
    out = np.empty(m, dtype=np.complex128)
    cdef double complex[::1] o = out
    for p in range(m):
        t = 0.5 * theta[p]
        c1 = cos(t)
        h1 = sin(t)
        c = 1.0
        h = 0.0
        re = 0.0
        im = 0.0
        for j in range(1, top + 1):
            if j % RESEED == 0:
                c = cos(j * t)
                h = sin(j * t)
            else:
                tmp = c * c1 - h * h1
                h = h * c1 + c * h1
                c = tmp
            rr = -2.0 * h * h
            ri = 2.0 * h * c
            if j <= j_max:
                a = coeffs[j - j_min]
                re += rr * a.real - ri * a.imag
                im += rr * a.imag + ri * a.real
            if -j >= j_min:
                # exp(-i j t) - 1 = rr - i ri
                a = coeffs[-j - j_min]
                re += rr * a.real + ri * a.imag
                im += rr * a.imag - ri * a.real
        o[p] = re + 1j * im
    return out


def trig_sum(const double complex[::1] coeffs, long k_min, const double[::1] theta):
    """sum_k c_k exp(i k theta), k = k_min.."""
    cdef Py_ssize_t m = theta.shape[0], nc = coeffs.shape[0]
    cdef Py_ssize_t p, q
    cdef double t, c, s, c1, s1, tmp, re, im
    cdef double complex a
    out = np.empty(m, dtype=np.complex128)
    cdef double complex[::1] o = out
    for p in range(m):
        t = theta[p]
        c1 = cos(t)
        s1 = sin(t)
        re = 0.0
        im = 0.0
        for q in range(nc):
            if q % RESEED == 0:
                c = cos((k_min + q) * t)
                s = sin((k_min + q) * t)
            else:
                tmp = c * c1 - s * s1
                s = s * c1 + c * s1
                c = tmp
            a = coeffs[q]
            re += c * a.real - s * a.imag
            im += c * a.imag + s * a.real
        o[p] = re + 1j * im
    return out


def lebesgue_function(long n, const double[::1] theta):
    """(1/n) sum_l |D_n(theta - theta_l)| using |D_n(t)| = |sin(n t/2) / sin(t/2)|.

    |sin(n (theta - theta_l) / 2)| does not depend on l, so only the
    denominators change along the sum.
    """
    cdef Py_ssize_t m = theta.shape[0]
    cdef Py_ssize_t p
    cdef long l
    cdef double pi = 3.141592653589793
    cdef double t, d, c, num, acc, tmp, cr, sr
    out = np.empty(m, dtype=np.float64)
    cdef double[::1] o = out
    # rotation by -pi/n per node
    cr = cos(pi / n)
    sr = -sin(pi / n)
    for p in range(m):
        num = fabs(sin(0.5 * n * theta[p]))
        acc = 0.0
        for l in range(n):
            t = 0.5 * theta[p] - l * pi / n
            if l % RESEED == 0:
                d = sin(t)
                c = cos(t)
            else:
                tmp = d * cr + c * sr
                c = c * cr - d * sr
                d = tmp
            if fabs(d) < 1e-6:
                # near a node: evaluate the ratio directly
                d = sin(t)
                if fabs(d) < 1e-15:
                    acc += n
                else:
                    acc += fabs(sin(n * t) / d)
            else:
                acc += num / fabs(d)
        o[p] = acc / n
    return out
