# cython: language_level=3
# cython: boundscheck=False, wraparound=False, initializedcheck=False
# cython: nonecheck=False, cdivision=True
"""Compiled rotation kernels.

Componentwise arithmetic mirrors _givens_core_py.py operation for operation,
so both backends produce matching results. Keep the two files in sync.
"""

import numpy as np

from libc.math cimport hypot, sqrt


def backend_name():
    return "compiled"


cdef inline double complex _mk(double re, double im) noexcept:
    return re + im * 1j


cdef inline void _left_amps(double complex x1, double complex x2, double zero_tol,
                            double *a_out, double complex *b_out) noexcept:
    cdef double ax1 = hypot(x1.real, x1.imag)
    cdef double ax2 = hypot(x2.real, x2.imag)
    cdef double r, denom, a
    cdef double complex num
    if ax2 <= zero_tol:
        a_out[0] = 1.0
        b_out[0] = 0
        return
    r = sqrt(ax1 * ax1 + ax2 * ax2)
    if ax1 <= zero_tol:
        # Swap-like rotation; the undefined unit phase factor is pinned to 1.
        a_out[0] = 0.0
        b_out[0] = _mk(-x2.imag / r, -x2.real / r)
        return
    num = _mk(x2.real, -x2.imag) * x1
    denom = r * ax1
    a = ax1 / r
    if a > 1.0:
        a = 1.0
    a_out[0] = a
    b_out[0] = _mk(num.imag / denom, -num.real / denom)


cdef inline void _right_amps(double complex x1, double complex x2, double zero_tol,
                             double *a_out, double complex *b_out) noexcept:
    cdef double ax1 = hypot(x1.real, x1.imag)
    cdef double ax2 = hypot(x2.real, x2.imag)
    cdef double r, denom, a
    cdef double complex num
    if ax1 <= zero_tol:
        a_out[0] = 1.0
        b_out[0] = 0
        return
    r = sqrt(ax1 * ax1 + ax2 * ax2)
    if ax2 <= zero_tol:
        a_out[0] = 0.0
        b_out[0] = _mk(-x1.imag / r, x1.real / r)
        return
    num = _mk(x2.real, -x2.imag) * x1
    denom = r * ax2
    a = ax2 / r
    if a > 1.0:
        a = 1.0
    a_out[0] = a
    b_out[0] = _mk(-num.imag / denom, num.real / denom)


cdef inline void _apply_left_pair(double complex[:, ::1] w, Py_ssize_t m,
                                  double a, double complex b) noexcept:
    cdef Py_ssize_t n = w.shape[1]
    cdef Py_ssize_t t
    cdef double complex ib = _mk(-b.imag, b.real)   # i*b
    cdef double complex ibc = _mk(b.imag, b.real)   # i*conj(b)
    cdef double complex r1, r2
    for t in range(n):
        r1 = w[m, t]
        r2 = w[m + 1, t]
        w[m, t] = a * r1 + ib * r2
        w[m + 1, t] = ibc * r1 + a * r2


cdef inline void _apply_right_pair(double complex[:, ::1] w, Py_ssize_t m,
                                   double a, double complex b) noexcept:
    cdef Py_ssize_t n = w.shape[0]
    cdef Py_ssize_t t
    cdef double complex mibc = _mk(-b.imag, -b.real)  # -i*conj(b)
    cdef double complex mib = _mk(b.imag, -b.real)    # -i*b
    cdef double complex c1, c2
    for t in range(n):
        c1 = w[t, m]
        c2 = w[t, m + 1]
        w[t, m] = a * c1 + mibc * c2
        w[t, m + 1] = mib * c1 + a * c2


def left_amps(x1, x2, double zero_tol):
    """Python-callable mirror of the inline left kernel."""
    cdef double a
    cdef double complex b
    _left_amps(x1, x2, zero_tol, &a, &b)
    return a, complex(b)


def right_amps(x1, x2, double zero_tol):
    """Python-callable mirror of the inline right kernel."""
    cdef double a
    cdef double complex b
    _right_amps(x1, x2, zero_tol, &a, &b)
    return a, complex(b)


def apply_left_pair(double complex[:, ::1] w, Py_ssize_t m, double a, double complex b):
    """Mix rows m and m+1 of w in place with the (a, b) rotation."""
    _apply_left_pair(w, m, a, b)


def apply_right_pair(double complex[:, ::1] w, Py_ssize_t m, double a, double complex b):
    """Mix columns m and m+1 of w in place with the adjoint of the rotation."""
    _apply_right_pair(w, m, a, b)


def sweep(double complex[:, ::1] w, Py_ssize_t[::1] tgt_i, Py_ssize_t[::1] tgt_j,
          unsigned char[::1] is_right, double zero_tol):
    """Run the whole elimination schedule over w in place.

    Args:
        w: Working complex128 matrix, mutated in place.
        tgt_i: intp array of target row indices, one per step.
        tgt_j: intp array of target column indices, one per step.
        is_right: uint8 array; nonzero marks a column (right) step.
        zero_tol: Threshold below which a target is treated as already zero.

    Returns:
        (a, b): float64 and complex128 arrays of per-step amplitudes in
        schedule order. Steps whose target was already below zero_tol carry
        identity amplitudes (1, 0).
    """
    cdef Py_ssize_t steps = tgt_i.shape[0]
    a_np = np.empty(steps, dtype=np.float64)
    b_np = np.empty(steps, dtype=np.complex128)
    if steps == 0:
        return a_np, b_np
    cdef double[::1] a_out = a_np
    cdef double complex[::1] b_out = b_np
    cdef Py_ssize_t k, i, j
    cdef double a
    cdef double complex t, x2, b
    for k in range(steps):
        i = tgt_i[k]
        j = tgt_j[k]
        t = w[i, j]
        if hypot(t.real, t.imag) <= zero_tol:
            a_out[k] = 1.0
            b_out[k] = 0
            continue
        if is_right[k]:
            x2 = w[i, j + 1]
            _right_amps(_mk(t.real, -t.imag), _mk(x2.real, -x2.imag), zero_tol, &a, &b)
            _apply_right_pair(w, j, a, b)
        else:
            _left_amps(w[i - 1, j], t, zero_tol, &a, &b)
            _apply_left_pair(w, i - 1, a, b)
        a_out[k] = a
        b_out[k] = b
    return a_np, b_np
