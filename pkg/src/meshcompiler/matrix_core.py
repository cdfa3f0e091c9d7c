"""Dense complex matrices: generators, embedding, and comparison metrics.

Matrices are plain numpy complex128 arrays with row-major (row, column)
zero-based indexing. Public entry points accept anything array-like and
validate squareness and finiteness through ``as_matrix``.
"""

from dataclasses import dataclass

import numpy as np

from .errors import InvalidDimensionError, InvalidModeError, NumericError, ShapeError


@dataclass(frozen=True)
class Tolerances:
    """Numeric thresholds used throughout the pipeline.

    Attributes:
        zero_tol: Magnitude below which a matrix entry counts as nullified.
        unitary_tol: Maximum entrywise deviation allowed by unitarity checks.
        compare_tol: Entrywise threshold for matrix comparisons.
    """

    zero_tol: float = 1e-12
    unitary_tol: float = 1e-10
    compare_tol: float = 1e-8

    def __post_init__(self):
        if self.zero_tol <= 0 or self.unitary_tol <= 0 or self.compare_tol <= 0:
            raise ValueError("all tolerances must be strictly positive")
        if self.zero_tol > self.compare_tol:
            raise ValueError("zero_tol must not exceed compare_tol")


DEFAULT_TOLERANCES = Tolerances()


def as_matrix(obj) -> np.ndarray:
    """Coerce to a square, finite complex128 array.

    Args:
        obj: Array-like of shape (n, n).

    Returns:
        A complex128 numpy array (a copy only if coercion requires one).

    Raises:
        ShapeError: If the input is not a square 2-D array.
        NumericError: If any entry is NaN or infinite.
    """
    m = np.asarray(obj, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
        raise ShapeError(f"expected a square matrix, got shape {m.shape}")
    if not np.isfinite(m).all():
        raise NumericError("matrix contains non-finite entries")
    return m


def dft_matrix(n: int) -> np.ndarray:
    """Normalized discrete Fourier transform of dimension n.

    Entry (j, k) is exp(-2*pi*i*j*k/n)/sqrt(n).

    Args:
        n: Matrix dimension, at least 1.

    Returns:
        The n x n transform as a complex array.

    Raises:
        InvalidDimensionError: If n < 1.
    """
    if n < 1:
        raise InvalidDimensionError(f"dimension must be >= 1, got {n}")
    k = np.arange(n)
    return np.exp(-2j * np.pi * np.outer(k, k) / n) / np.sqrt(n)


def haar_unitary(n: int, seed: int) -> np.ndarray:
    """Draw a Haar-distributed random unitary, deterministically per seed.

    Fills an n x n matrix with independent standard complex Gaussians from a
    seeded PCG64 generator, orthonormalizes the columns by QR, then rescales
    each column by the conjugate phase of the corresponding diagonal entry of
    the triangular factor so the distribution is exactly Haar.

    Args:
        n: Matrix dimension, at least 1.
        seed: Generator seed; equal seeds give entrywise-identical results.

    Returns:
        An n x n unitary complex array.

    Raises:
        InvalidDimensionError: If n < 1.
    """
    if n < 1:
        raise InvalidDimensionError(f"dimension must be >= 1, got {n}")
    rng = np.random.default_rng(seed)
    z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    return q * (np.conj(d) / np.abs(d))


def unitary_deviation(m) -> float:
    """Max-entry distance of M*M^dagger from the identity."""
    m = as_matrix(m)
    eye = np.eye(m.shape[0])
    return float(np.max(np.abs(m @ m.conj().T - eye)))


def is_unitary(m, tol: float) -> bool:
    """Check unitarity: max entry of |M*M^dagger - I| at most tol.

    Args:
        m: Square matrix to test.
        tol: Entrywise deviation threshold.

    Returns:
        True iff the deviation is within tol.
    """
    return unitary_deviation(m) <= tol


def embed_gate(block, m: int, n: int) -> np.ndarray:
    """Embed a 2x2 block into an n x n identity at rows/columns (m, m+1).

    Args:
        block: 2x2 complex array.
        m: Upper mode index, 0 <= m <= n-2.
        n: Target dimension.

    Returns:
        The embedded n x n matrix.

    Raises:
        InvalidModeError: If m is out of range.
    """
    if not 0 <= m <= n - 2:
        raise InvalidModeError(f"mode {m} out of range for dimension {n}")
    b = np.asarray(block, dtype=np.complex128)
    if b.shape != (2, 2):
        raise ShapeError(f"expected a 2x2 block, got shape {b.shape}")
    out = np.eye(n, dtype=np.complex128)
    out[m : m + 2, m : m + 2] = b
    return out


def max_entry_distance(a, b) -> float:
    """Largest entrywise absolute difference between two matrices.

    Args:
        a: First matrix.
        b: Second matrix, same shape.

    Returns:
        max over (i, j) of |a[i,j] - b[i,j]|; zero iff the matrices are equal.

    Raises:
        ShapeError: If the shapes differ.
    """
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape != b.shape:
        raise ShapeError(f"shape mismatch: {a.shape} vs {b.shape}")
    return float(np.max(np.abs(a - b)))
