"""Two-mode nullifying rotations and beam-splitter angle conversion.

A rotation is stored as a real amplitude a in [0, 1] and a complex amplitude
b with a^2 + |b|^2 = 1; its 2x2 matrix is [[a, i*b], [i*conj(b), a]]. Left
rotations mix two adjacent rows to nullify the lower entry of a column pair;
right rotations (applied as the adjoint from the right) mix two adjacent
columns to nullify the left entry of a row pair.
"""

import cmath
import enum
import math
from dataclasses import dataclass

import numpy as np

from . import _givens_core_py as _kernels
from .errors import DegenerateInputError, InvalidModeError
from .matrix_core import DEFAULT_TOLERANCES, as_matrix


class Side(enum.Enum):
    """Which side of the working matrix a rotation acts on."""

    LEFT = "left"
    RIGHT = "right"


@dataclass(frozen=True)
class GateAngles:
    """Beam-splitter angles: mixing angle theta, phase phi.

    Attributes:
        theta: Mixing angle in [0, pi].
        phi: Phase in (-pi, pi].
    """

    theta: float
    phi: float

    def __post_init__(self):
        if not 0.0 <= self.theta <= math.pi:
            raise ValueError(f"theta must lie in [0, pi], got {self.theta}")
        if not -math.pi < self.phi <= math.pi:
            raise ValueError(f"phi must lie in (-pi, pi], got {self.phi}")


@dataclass(frozen=True)
class RotationParams:
    """One nullifying rotation.

    Attributes:
        a: Real amplitude in [0, 1].
        b: Complex amplitude with a^2 + |b|^2 = 1.
        side: Side.LEFT mixes rows, Side.RIGHT mixes columns.
        mode: Upper index m of the coupled pair (m, m+1).
        target: Entry (i, j) the rotation nullified, with i > j.
    """

    a: float
    b: complex
    side: Side
    mode: int
    target: tuple

    def __post_init__(self):
        if not 0.0 <= self.a <= 1.0:
            raise ValueError(f"amplitude a must lie in [0, 1], got {self.a}")
        norm = self.a * self.a + self.b.real**2 + self.b.imag**2
        if abs(norm - 1.0) > 1e-12:
            raise ValueError(f"amplitudes must satisfy a^2 + |b|^2 = 1, got {norm}")
        i, j = self.target
        if i <= j:
            raise ValueError(f"target must lie below the diagonal, got {self.target}")
        expected = i - 1 if self.side is Side.LEFT else j
        if self.mode != expected:
            raise ValueError(
                f"{self.side.value} rotation at target {self.target} must couple "
                f"modes ({expected}, {expected + 1}), got mode {self.mode}"
            )
        if self.mode < 0:
            raise ValueError(f"mode must be non-negative, got {self.mode}")


def left_nullifier(x1, x2, target=(1, 0), zero_tol=DEFAULT_TOLERANCES.zero_tol):
    """Rotation mixing rows so the second component of (x1, x2) vanishes.

    In the generic case a = |x1|/r and b = -i*(conj(x2)/r)*(x1/|x1|) with
    r = sqrt(|x1|^2 + |x2|^2), so that the rotated vector is (r*x1/|x1|, 0).
    If |x2| <= zero_tol the target already counts as nullified and identity
    amplitudes are returned; if only |x1| <= zero_tol an a = 0 swap-like
    rotation is returned with its free unit phase factor pinned to 1.

    Args:
        x1: Upper (surviving) component.
        x2: Lower (nullified) component.
        target: Matrix entry (i, j) being nullified; the rotation couples
            rows (i-1, i).
        zero_tol: Magnitude below which a component counts as zero.

    Returns:
        The rotation as RotationParams with side LEFT.

    Raises:
        DegenerateInputError: If both components are exactly zero.
    """
    x1 = complex(x1)
    x2 = complex(x2)
    if x1 == 0 and x2 == 0:
        raise DegenerateInputError("cannot nullify against a zero pair")
    a, b = _kernels.left_amps(x1, x2, zero_tol)
    i, j = target
    return RotationParams(a=a, b=b, side=Side.LEFT, mode=i - 1, target=(i, j))


def right_nullifier(x1, x2, target=(1, 0), zero_tol=DEFAULT_TOLERANCES.zero_tol):
    """Rotation mixing columns so the first component of (x1, x2) vanishes.

    Inputs are the conjugated matrix entries of the targeted row pair:
    x1 = conj(W[i, j]), x2 = conj(W[i, j+1]). In the generic case
    a = |x2|/r and b = i*(conj(x2)*x1)/(r*|x2|), so that the rotated vector
    is (0, r~) with |r~| = r. If |x1| <= zero_tol the target already counts
    as nullified and identity amplitudes are returned; if only
    |x2| <= zero_tol an a = 0 swap-like rotation is returned with its free
    unit phase factor pinned to 1.

    Args:
        x1: First (nullified) component.
        x2: Second (surviving) component.
        target: Matrix entry (i, j) being nullified; the rotation couples
            columns (j, j+1).
        zero_tol: Magnitude below which a component counts as zero.

    Returns:
        The rotation as RotationParams with side RIGHT.

    Raises:
        DegenerateInputError: If both components are exactly zero.
    """
    x1 = complex(x1)
    x2 = complex(x2)
    if x1 == 0 and x2 == 0:
        raise DegenerateInputError("cannot nullify against a zero pair")
    a, b = _kernels.right_amps(x1, x2, zero_tol)
    i, j = target
    return RotationParams(a=a, b=b, side=Side.RIGHT, mode=j, target=(i, j))


def angles_from_amplitudes(a: float, b: complex) -> GateAngles:
    """Convert amplitudes (a, b) to beam-splitter angles.

    theta = 2*arccos(a) with a clamped into [0, 1]; phi = arg(b) normalized
    to (-pi, pi], and 0 when b = 0.
    """
    theta = 2.0 * math.acos(min(max(a, 0.0), 1.0))
    b = complex(b)
    if b == 0:
        phi = 0.0
    else:
        phi = math.atan2(b.imag, b.real)
        if phi <= -math.pi:
            phi += 2.0 * math.pi
    return GateAngles(theta=theta, phi=phi)


def params_to_angles(p: RotationParams) -> GateAngles:
    """Beam-splitter angles of a rotation.

    Satisfies gate_matrix(params_to_angles(p)) == [[a, i*b], [i*conj(b), a]]
    entrywise within 1e-12.

    Args:
        p: The rotation to convert.

    Returns:
        GateAngles with theta = 2*arccos(a) and phi = arg(b).
    """
    return angles_from_amplitudes(p.a, p.b)


def gate_matrix(angles: GateAngles) -> np.ndarray:
    """2x2 beam-splitter matrix for the given angles.

    Returns [[cos(t/2), i*e^{+i*phi}*sin(t/2)], [i*e^{-i*phi}*sin(t/2),
    cos(t/2)]], which is unitary with determinant exactly
    cos^2(t/2) + sin^2(t/2) = 1.

    Args:
        angles: Beam-splitter angles.

    Returns:
        The gate as a 2x2 complex array.
    """
    c = math.cos(0.5 * angles.theta)
    s = math.sin(0.5 * angles.theta)
    e = cmath.exp(1j * angles.phi)
    return np.array(
        [[c, 1j * e * s], [1j * e.conjugate() * s, c]], dtype=np.complex128
    )


def rotation_block(p: RotationParams) -> np.ndarray:
    """The 2x2 matrix [[a, i*b], [i*conj(b), a]] of a rotation."""
    return np.array(
        [
            [p.a, complex(-p.b.imag, p.b.real)],
            [complex(p.b.imag, p.b.real), p.a],
        ],
        dtype=np.complex128,
    )


def apply_left(u, p: RotationParams) -> np.ndarray:
    """Left-multiply by the rotation embedded at rows (mode, mode+1).

    Equivalent to embed_gate(rotation_block(p), p.mode, n) @ u, computed by
    updating only the two affected rows.

    Args:
        u: Square matrix.
        p: Rotation with side LEFT.

    Returns:
        A new matrix; rows outside (mode, mode+1) are unchanged.

    Raises:
        InvalidModeError: If the mode does not fit the matrix.
    """
    if p.side is not Side.LEFT:
        raise ValueError("apply_left requires a LEFT-side rotation")
    m = as_matrix(u).copy()
    if p.mode > m.shape[0] - 2:
        raise InvalidModeError(f"mode {p.mode} out of range for dimension {m.shape[0]}")
    _kernels.apply_left_pair(m, p.mode, p.a, p.b)
    return m


def apply_right(u, p: RotationParams) -> np.ndarray:
    """Right-multiply by the adjoint of the embedded rotation.

    Equivalent to u @ embed_gate(rotation_block(p), p.mode, n).conj().T,
    computed by updating only the two affected columns.

    Args:
        u: Square matrix.
        p: Rotation with side RIGHT.

    Returns:
        A new matrix; columns outside (mode, mode+1) are unchanged.

    Raises:
        InvalidModeError: If the mode does not fit the matrix.
    """
    if p.side is not Side.RIGHT:
        raise ValueError("apply_right requires a RIGHT-side rotation")
    m = as_matrix(u).copy()
    if p.mode > m.shape[0] - 2:
        raise InvalidModeError(f"mode {p.mode} out of range for dimension {m.shape[0]}")
    _kernels.apply_right_pair(m, p.mode, p.a, p.b)
    return m


def phasor_distance(phi1: float, phi2: float) -> float:
    """Distance |e^{i*phi1} - e^{i*phi2}| between two angles.

    Zero iff the angles agree modulo 2*pi; sidesteps the +/-pi boundary in
    angle comparisons.
    """
    return abs(cmath.exp(1j * phi1) - cmath.exp(1j * phi2))
