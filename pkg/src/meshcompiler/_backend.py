"""Kernel backend selection.

The elimination sweep has two interchangeable implementations: a compiled
extension (meshcompiler._givens_core) and a pure-Python twin
(meshcompiler._givens_core_py). By default the compiled one is used when the
extension imported successfully. Set MESH_COMPILER_BACKEND=python or
=compiled to force a choice; "compiled" fails loudly if the extension is
unavailable.
"""

import os

from . import _givens_core_py

_choice = os.environ.get("MESH_COMPILER_BACKEND", "auto").strip().lower() or "auto"
if _choice not in ("auto", "python", "compiled"):
    raise ValueError(
        f"MESH_COMPILER_BACKEND must be auto, python, or compiled, got {_choice!r}"
    )

if _choice == "python":
    kernels = _givens_core_py
elif _choice == "compiled":
    from . import _givens_core as kernels
else:
    try:
        from . import _givens_core as kernels
    except ImportError:
        kernels = _givens_core_py

BACKEND = kernels.backend_name()


def backend_name() -> str:
    """Name of the active kernel backend: "compiled" or "python"."""
    return BACKEND
