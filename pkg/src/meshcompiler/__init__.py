"""meshcompiler: unitary matrices compiled into beam-splitter meshes.

Decomposes an arbitrary N x N unitary into a rectangular mesh of two-mode
beam-splitter gates plus a residual diagonal phase screen, and verifies the
result by exact reconstruction:

    U == diag(phase_factors) @ G_1 @ G_2 @ ... @ G_{N(N-1)/2}

Typical use:

    import meshcompiler as mc

    u = mc.dft_matrix(4)
    dec = mc.refine(mc.triangulate(u))
    report = mc.verify_roundtrip(u, dec)
    assert report.passed
"""

from ._backend import backend_name
from ._version import __version__
from .decomposer import PivotStep, RawDecomposition, TraceEntry, pivot_schedule, triangulate
from .errors import (
    DegenerateInputError,
    FileFormatError,
    InternalConsistencyError,
    InvalidDimensionError,
    InvalidModeError,
    MeshCompilerError,
    NotUnitaryError,
    NumericError,
    ShapeError,
)
from .fileio import (
    GateFileContents,
    parse_gate_file,
    parse_matrix,
    serialize_decomposition,
    serialize_matrix,
)
from .givens import (
    GateAngles,
    RotationParams,
    Side,
    angles_from_amplitudes,
    apply_left,
    apply_right,
    gate_matrix,
    left_nullifier,
    params_to_angles,
    phasor_distance,
    right_nullifier,
    rotation_block,
)
from .matrix_core import (
    DEFAULT_TOLERANCES,
    Tolerances,
    as_matrix,
    dft_matrix,
    embed_gate,
    haar_unitary,
    is_unitary,
    max_entry_distance,
    unitary_deviation,
)
from .refiner import Decomposition, Gate, Metadata, assign_layers, commute_left_gate, refine
from .render import render_ascii, render_svg
from .verifier import VerificationReport, rebuild, timed_roundtrip, verify_roundtrip

__all__ = [
    "__version__",
    "backend_name",
    "MeshCompilerError",
    "InvalidDimensionError",
    "InvalidModeError",
    "ShapeError",
    "DegenerateInputError",
    "NotUnitaryError",
    "NumericError",
    "InternalConsistencyError",
    "FileFormatError",
    "Tolerances",
    "DEFAULT_TOLERANCES",
    "as_matrix",
    "dft_matrix",
    "haar_unitary",
    "is_unitary",
    "unitary_deviation",
    "embed_gate",
    "max_entry_distance",
    "Side",
    "GateAngles",
    "RotationParams",
    "left_nullifier",
    "right_nullifier",
    "angles_from_amplitudes",
    "params_to_angles",
    "gate_matrix",
    "rotation_block",
    "apply_left",
    "apply_right",
    "phasor_distance",
    "PivotStep",
    "TraceEntry",
    "RawDecomposition",
    "pivot_schedule",
    "triangulate",
    "Gate",
    "Metadata",
    "Decomposition",
    "commute_left_gate",
    "refine",
    "assign_layers",
    "VerificationReport",
    "rebuild",
    "verify_roundtrip",
    "timed_roundtrip",
    "serialize_matrix",
    "parse_matrix",
    "serialize_decomposition",
    "parse_gate_file",
    "GateFileContents",
    "render_ascii",
    "render_svg",
]
