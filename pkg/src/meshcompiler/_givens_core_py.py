"""Pure-Python twin of the compiled rotation kernels.

Arithmetic here is written componentwise and mirrors _givens_core.pyx
operation for operation, so both backends produce matching results. Keep the
two files in sync.
"""

from math import hypot, sqrt

import numpy as np


def backend_name() -> str:
    return "python"


def left_amps(x1: complex, x2: complex, zero_tol: float):
    """Amplitudes (a, b) of the row rotation that nullifies x2.

    Assumes (x1, x2) != (0, 0); the caller guards the degenerate case.
    """
    ax1 = hypot(x1.real, x1.imag)
    ax2 = hypot(x2.real, x2.imag)
    if ax2 <= zero_tol:
        return 1.0, 0j
    r = sqrt(ax1 * ax1 + ax2 * ax2)
    if ax1 <= zero_tol:
        # Swap-like rotation; the undefined unit phase factor is pinned to 1.
        return 0.0, complex(-x2.imag / r, -x2.real / r)
    num = x2.conjugate() * x1
    denom = r * ax1
    a = ax1 / r
    return (a if a <= 1.0 else 1.0), complex(num.imag / denom, -num.real / denom)


def right_amps(x1: complex, x2: complex, zero_tol: float):
    """Amplitudes (a, b) of the column rotation that nullifies x1.

    Assumes (x1, x2) != (0, 0); the caller guards the degenerate case.
    """
    ax1 = hypot(x1.real, x1.imag)
    ax2 = hypot(x2.real, x2.imag)
    if ax1 <= zero_tol:
        return 1.0, 0j
    r = sqrt(ax1 * ax1 + ax2 * ax2)
    if ax2 <= zero_tol:
        return 0.0, complex(-x1.imag / r, x1.real / r)
    num = x2.conjugate() * x1
    denom = r * ax2
    a = ax2 / r
    return (a if a <= 1.0 else 1.0), complex(-num.imag / denom, num.real / denom)


def apply_left_pair(w: np.ndarray, m: int, a: float, b: complex) -> None:
    """Mix rows m and m+1 of w in place with the (a, b) rotation."""
    ib = complex(-b.imag, b.real)  # i*b
    ibc = complex(b.imag, b.real)  # i*conj(b)
    r1 = w[m, :].copy()
    r2 = w[m + 1, :].copy()
    w[m, :] = a * r1 + ib * r2
    w[m + 1, :] = ibc * r1 + a * r2


def apply_right_pair(w: np.ndarray, m: int, a: float, b: complex) -> None:
    """Mix columns m and m+1 of w in place with the adjoint of the rotation."""
    mibc = complex(-b.imag, -b.real)  # -i*conj(b)
    mib = complex(b.imag, -b.real)  # -i*b
    c1 = w[:, m].copy()
    c2 = w[:, m + 1].copy()
    w[:, m] = a * c1 + mibc * c2
    w[:, m + 1] = mib * c1 + a * c2


def sweep(w: np.ndarray, tgt_i, tgt_j, is_right, zero_tol: float):
    """Run the whole elimination schedule over w in place.

    Args:
        w: Working complex128 matrix, mutated in place.
        tgt_i: int64 array of target row indices, one per step.
        tgt_j: int64 array of target column indices, one per step.
        is_right: uint8 array; nonzero marks a column (right) step.
        zero_tol: Threshold below which a target is treated as already zero.

    Returns:
        (a, b): float64 and complex128 arrays of per-step amplitudes in
        schedule order. Steps whose target was already below zero_tol carry
        identity amplitudes (1, 0).
    """
    steps = len(tgt_i)
    a_out = np.empty(steps, dtype=np.float64)
    b_out = np.empty(steps, dtype=np.complex128)
    for k in range(steps):
        i = int(tgt_i[k])
        j = int(tgt_j[k])
        t = complex(w[i, j])
        if hypot(t.real, t.imag) <= zero_tol:
            a_out[k] = 1.0
            b_out[k] = 0j
            continue
        if is_right[k]:
            a, b = right_amps(t.conjugate(), complex(w[i, j + 1]).conjugate(), zero_tol)
            apply_right_pair(w, j, a, b)
        else:
            a, b = left_amps(complex(w[i - 1, j]), t, zero_tol)
            apply_left_pair(w, i - 1, a, b)
        a_out[k] = a
        b_out[k] = b
    return a_out, b_out
