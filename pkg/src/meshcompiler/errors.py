"""Exception hierarchy for the mesh compiler.

Every error raised by this package derives from MeshCompilerError, so callers
can catch one type at the API boundary. The CLI maps subclasses to stable exit
codes (see meshcompiler.cli).
"""


class MeshCompilerError(Exception):
    """Base class for all errors raised by this package."""


class InvalidDimensionError(MeshCompilerError, ValueError):
    """A matrix or mesh dimension is out of range (e.g. n = 0)."""


class InvalidModeError(MeshCompilerError, ValueError):
    """A mode index does not address an adjacent pair inside the mesh."""


class ShapeError(MeshCompilerError, ValueError):
    """Operands are non-square or their dimensions do not match."""


class DegenerateInputError(MeshCompilerError, ValueError):
    """Both components handed to a nullifier are zero; no rotation is defined."""


class NotUnitaryError(MeshCompilerError, ValueError):
    """An input matrix fails the unitarity precondition."""


class NumericError(MeshCompilerError, ArithmeticError):
    """A non-finite value (NaN/Inf) appeared where finite data is required."""


class InternalConsistencyError(MeshCompilerError, RuntimeError):
    """An internal invariant failed; indicates a bug, not bad input."""


class FileFormatError(MeshCompilerError, ValueError):
    """A matrix or gate file does not conform to the documented format."""
