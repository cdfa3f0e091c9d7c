"""Reconstruction and verification of decompositions.

rebuild multiplies fully embedded gate matrices (an independent code path
from the two-row updates used during triangulation), so agreement between
input and reconstruction checks the whole pipeline.
"""

import time
from dataclasses import dataclass

import numpy as np

from .errors import ShapeError
from .givens import gate_matrix
from .matrix_core import (
    DEFAULT_TOLERANCES,
    Tolerances,
    as_matrix,
    embed_gate,
    max_entry_distance,
    unitary_deviation,
)
from .refiner import Decomposition


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one round-trip verification.

    Attributes:
        max_error: Max-entry distance between input and reconstruction.
        unitary_deviation: Max entry of |R*R^dagger - I| for the rebuilt R.
        gate_count: Number of gates in the decomposition.
        layer_count: Largest layer index (0 when there are no gates).
        det_phase_error: |product(phase_factors) - det(U)|; the gates have
            determinant exactly 1, so the phases carry the whole determinant.
        passed: True iff max_error <= compare_tol and the structural checks
            hold.
    """

    max_error: float
    unitary_deviation: float
    gate_count: int
    layer_count: int
    det_phase_error: float
    passed: bool


def rebuild(dec: Decomposition) -> np.ndarray:
    """Multiply the factorization back out.

    Args:
        dec: Decomposition to reconstruct.

    Returns:
        diag(phase_factors) * product of embedded gates in product order.
    """
    m = np.diag(np.asarray(dec.phase_factors, dtype=np.complex128))
    for g in sorted(dec.gates, key=lambda g: g.order):
        m = m @ embed_gate(gate_matrix(g.angles), g.mode, dec.n)
    return m


def _structural_ok(dec: Decomposition) -> bool:
    if len(dec.gates) != dec.n * (dec.n - 1) // 2:
        return False
    last = [0] * dec.n
    max_layer = 0
    for g in sorted(dec.gates, key=lambda g: g.order):
        if g.layer <= max(last[g.mode], last[g.mode + 1]):
            return False
        last[g.mode] = last[g.mode + 1] = g.layer
        max_layer = max(max_layer, g.layer)
    return max_layer <= dec.n


def verify_roundtrip(u, dec: Decomposition, tol: Tolerances = None) -> VerificationReport:
    """Compare a unitary against the reconstruction of its decomposition.

    Args:
        u: The original matrix.
        dec: Its decomposition.
        tol: Tolerances; compare_tol gates the passed flag.

    Returns:
        VerificationReport with error metrics and structural check results.

    Raises:
        ShapeError: If the matrix dimension does not match the mesh.
    """
    if tol is None:
        tol = DEFAULT_TOLERANCES
    m = as_matrix(u)
    if m.shape[0] != dec.n:
        raise ShapeError(f"matrix is {m.shape[0]}x{m.shape[0]} but the mesh has {dec.n} modes")
    rebuilt = rebuild(dec)
    max_error = max_entry_distance(m, rebuilt)
    u_dev = unitary_deviation(rebuilt)
    det_err = float(
        abs(np.prod(np.asarray(dec.phase_factors, dtype=np.complex128)) - np.linalg.det(m))
    )
    structural = _structural_ok(dec)
    layer_count = max((g.layer for g in dec.gates), default=0)
    return VerificationReport(
        max_error=max_error,
        unitary_deviation=u_dev,
        gate_count=len(dec.gates),
        layer_count=layer_count,
        det_phase_error=det_err,
        passed=bool(max_error <= tol.compare_tol and structural),
    )


def timed_roundtrip(u, tol: Tolerances = None):
    """Decompose, verify, and time one matrix.

    Returns:
        (report, decomposition, elapsed_seconds).
    """
    from .decomposer import triangulate
    from .refiner import refine

    start = time.perf_counter()
    dec = refine(triangulate(u, tol=tol))
    report = verify_roundtrip(u, dec, tol=tol)
    elapsed = time.perf_counter() - start
    return report, dec, elapsed
