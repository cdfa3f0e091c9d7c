"""Elimination schedule and triangulation of a unitary matrix.

The schedule walks the subdiagonals d = 1..n-1 starting from the bottom-left
corner. Diagonal d holds the entries (n-d+m, m) for m = 0..d-1; odd diagonals
are cleared with right (column) rotations traversing m downward, even
diagonals with left (row) rotations traversing m upward. After the walk the
working matrix is diagonal and its entries form the residual phase screen.
"""

from dataclasses import dataclass, field

import numpy as np

from . import _givens_core_py as _pure
from ._backend import kernels
from .errors import (
    InternalConsistencyError,
    InvalidDimensionError,
    NotUnitaryError,
    NumericError,
)
from .givens import RotationParams, Side, left_nullifier, right_nullifier
from .matrix_core import DEFAULT_TOLERANCES, Tolerances, as_matrix, unitary_deviation


@dataclass(frozen=True)
class PivotStep:
    """One entry of the elimination schedule.

    Attributes:
        diagonal: Subdiagonal index d in [1, n-1].
        position: Index m of the entry within its diagonal.
        target: The matrix entry (i, j) = (n-d+m, m) to nullify.
        side: RIGHT on odd diagonals, LEFT on even ones.
    """

    diagonal: int
    position: int
    target: tuple
    side: Side

    def __post_init__(self):
        if self.diagonal < 1:
            raise ValueError(f"diagonal must be >= 1, got {self.diagonal}")
        if not 0 <= self.position < self.diagonal:
            raise ValueError(
                f"position {self.position} outside diagonal of size {self.diagonal}"
            )
        i, j = self.target
        if i <= j or j != self.position:
            raise ValueError(f"target {self.target} inconsistent with schedule")
        expected = Side.RIGHT if self.diagonal % 2 == 1 else Side.LEFT
        if self.side is not expected:
            raise ValueError(f"diagonal {self.diagonal} must use side {expected}")


@dataclass(frozen=True)
class TraceEntry:
    """Snapshot of the working matrix right after one schedule step."""

    step: int
    target: tuple
    side: Side
    matrix: np.ndarray = field(compare=False)


@dataclass(frozen=True)
class RawDecomposition:
    """Collection-order rotations plus the residual diagonal phases.

    Attributes:
        n: Dimension of the decomposed matrix.
        llist: Left rotations in collection order.
        rlist: Right rotations in collection order.
        u_phi: The n unit-modulus diagonal factors left after triangulation.
        trace: Per-step snapshots when tracing was requested, else None.
            Excluded from equality comparisons.
    """

    n: int
    llist: tuple
    rlist: tuple
    u_phi: tuple
    trace: tuple = field(default=None, compare=False)

    def __post_init__(self):
        expected = self.n * (self.n - 1) // 2
        if len(self.llist) + len(self.rlist) != expected:
            raise ValueError(
                f"expected {expected} rotations for n={self.n}, got "
                f"{len(self.llist)} left + {len(self.rlist)} right"
            )
        if len(self.u_phi) != self.n:
            raise ValueError(f"expected {self.n} phase factors, got {len(self.u_phi)}")
        for z in self.u_phi:
            if abs(abs(z) - 1.0) > 1e-12:
                raise ValueError(f"phase factor {z} is not unit-modulus")


def pivot_schedule(n: int):
    """Elimination schedule for dimension n.

    Args:
        n: Matrix dimension, at least 1.

    Returns:
        Tuple of n(n-1)/2 PivotStep covering each lower-triangle entry once,
        ordered by diagonal; empty for n = 1.

    Raises:
        InvalidDimensionError: If n < 1.
    """
    if n < 1:
        raise InvalidDimensionError(f"dimension must be >= 1, got {n}")
    steps = []
    for d in range(1, n):
        right = d % 2 == 1
        positions = range(d - 1, -1, -1) if right else range(d)
        side = Side.RIGHT if right else Side.LEFT
        for m in positions:
            steps.append(PivotStep(d, m, (n - d + m, m), side))
    return tuple(steps)


def _params_for_step(step: PivotStep, a: float, b: complex) -> RotationParams:
    i, j = step.target
    mode = j if step.side is Side.RIGHT else i - 1
    return RotationParams(a=a, b=complex(b), side=step.side, mode=mode, target=(i, j))


def _traced_walk(w: np.ndarray, steps, zero_tol: float):
    """Pure-Python schedule walk that snapshots w after every step."""
    amps = []
    trace = []
    for k, step in enumerate(steps, start=1):
        i, j = step.target
        if abs(w[i, j]) <= zero_tol:
            params = _params_for_step(step, 1.0, 0j)
        elif step.side is Side.RIGHT:
            params = right_nullifier(
                complex(w[i, j]).conjugate(),
                complex(w[i, j + 1]).conjugate(),
                target=(i, j),
                zero_tol=zero_tol,
            )
            _pure.apply_right_pair(w, j, params.a, params.b)
        else:
            params = left_nullifier(
                complex(w[i - 1, j]),
                complex(w[i, j]),
                target=(i, j),
                zero_tol=zero_tol,
            )
            _pure.apply_left_pair(w, i - 1, params.a, params.b)
        amps.append(params)
        trace.append(TraceEntry(step=k, target=step.target, side=step.side, matrix=w.copy()))
    return amps, tuple(trace)


def triangulate(u, tol: Tolerances = None, trace: bool = False) -> RawDecomposition:
    """Reduce a unitary to a diagonal phase screen, collecting rotations.

    Walks the pivot schedule; each right step nullifies its target by mixing
    two columns, each left step by mixing two rows. Steps whose target is
    already below zero_tol record identity amplitudes so the rotation count
    is always n(n-1)/2.

    Args:
        u: Unitary matrix to decompose.
        tol: Tolerances; defaults to DEFAULT_TOLERANCES.
        trace: When True, snapshot the working matrix after every step (uses
            the pure-Python kernels).

    Returns:
        RawDecomposition with collection-order llist/rlist and the final
        diagonal as u_phi.

    Raises:
        NotUnitaryError: If the input fails the unitarity check.
        NumericError: If non-finite values appear.
        InternalConsistencyError: If the final matrix is not diagonal.
    """
    if tol is None:
        tol = DEFAULT_TOLERANCES
    m = as_matrix(u)
    deviation = unitary_deviation(m)
    if deviation > tol.unitary_tol:
        raise NotUnitaryError(
            f"input deviates from unitarity by {deviation:.3e} "
            f"(allowed {tol.unitary_tol:.3e})"
        )
    n = m.shape[0]
    w = np.ascontiguousarray(m, dtype=np.complex128).copy()
    steps = pivot_schedule(n)

    if trace:
        params_list, snapshots = _traced_walk(w, steps, tol.zero_tol)
    else:
        tgt_i = np.array([s.target[0] for s in steps], dtype=np.intp)
        tgt_j = np.array([s.target[1] for s in steps], dtype=np.intp)
        right_flags = np.array(
            [1 if s.side is Side.RIGHT else 0 for s in steps], dtype=np.uint8
        )
        a_arr, b_arr = kernels.sweep(w, tgt_i, tgt_j, right_flags, tol.zero_tol)
        params_list = [
            _params_for_step(step, float(a_arr[k]), complex(b_arr[k]))
            for k, step in enumerate(steps)
        ]
        snapshots = None

    if not np.isfinite(w).all():
        raise NumericError("non-finite values appeared during triangulation")
    off = w - np.diag(np.diagonal(w))
    off_max = float(np.max(np.abs(off))) if n > 1 else 0.0
    if off_max > tol.unitary_tol:
        raise InternalConsistencyError(
            f"working matrix is not diagonal after the schedule "
            f"(off-diagonal max {off_max:.3e})"
        )
    llist = tuple(p for p in params_list if p.side is Side.LEFT)
    rlist = tuple(p for p in params_list if p.side is Side.RIGHT)
    return RawDecomposition(
        n=n,
        llist=llist,
        rlist=rlist,
        u_phi=tuple(complex(z) for z in np.diagonal(w)),
        trace=snapshots,
    )
