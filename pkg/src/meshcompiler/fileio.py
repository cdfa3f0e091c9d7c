"""Reading and writing matrix files and gate files.

Both formats are JSON documents. Numbers are serialized with 17 significant
digits, which round-trips doubles losslessly, and emission is fully
deterministic: the same object always produces the same bytes. Complex
values appear as [re, im] pairs.

Matrix file: {"size": n, "rows": [[[re, im], ...], ...]}.

Gate file: {"size", "gates", "phases", "phase_factors", "meta"} plus
optional "raw" (collection-order rotations and diagonal phases) and "trace"
(per-step working matrices). Each gate record is {"order", "layer",
"modes": [m, m+1], "theta", "phi"}.
"""

import json
import math
from dataclasses import dataclass

import numpy as np

from .decomposer import RawDecomposition, TraceEntry
from .errors import FileFormatError
from .givens import GateAngles, RotationParams, Side
from .refiner import Decomposition, Gate, Metadata


def _fmt(x) -> str:
    x = float(x)
    if not math.isfinite(x):
        raise ValueError("cannot serialize a non-finite number")
    return "%.17g" % x


def _pair(z) -> str:
    z = complex(z)
    return f"[{_fmt(z.real)}, {_fmt(z.imag)}]"


def serialize_matrix(m) -> str:
    """Render a matrix to its file format.

    Args:
        m: Square complex matrix.

    Returns:
        The JSON document as a string ending in a newline.
    """
    arr = np.asarray(m, dtype=np.complex128)
    lines = ["{", f'  "size": {arr.shape[0]},', '  "rows": [']
    row_texts = ["    [" + ", ".join(_pair(z) for z in row) + "]" for row in arr]
    lines.append(",\n".join(row_texts))
    lines.append("  ]")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _require(cond: bool, message: str):
    if not cond:
        raise FileFormatError(message)


def _load_json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"not valid JSON: {exc}") from exc


def _number(value, where: str) -> float:
    _require(
        isinstance(value, (int, float)) and not isinstance(value, bool),
        f"{where} must be a number",
    )
    value = float(value)
    _require(math.isfinite(value), f"{where} must be finite")
    return value


def _int(value, where: str) -> int:
    _require(isinstance(value, int) and not isinstance(value, bool), f"{where} must be an integer")
    return value


def _complex(value, where: str) -> complex:
    _require(
        isinstance(value, list) and len(value) == 2,
        f"{where} must be a [re, im] pair",
    )
    return complex(_number(value[0], where), _number(value[1], where))


def parse_matrix(text: str) -> np.ndarray:
    """Parse a matrix file.

    Args:
        text: Document contents.

    Returns:
        The matrix as a complex array.

    Raises:
        FileFormatError: If the document does not follow the format.
    """
    doc = _load_json(text)
    _require(isinstance(doc, dict), "matrix file must be a JSON object")
    _require("size" in doc and "rows" in doc, 'matrix file needs "size" and "rows"')
    n = _int(doc["size"], '"size"')
    _require(n >= 1, '"size" must be at least 1')
    rows = doc["rows"]
    _require(isinstance(rows, list) and len(rows) == n, f'"rows" must hold {n} rows')
    out = np.empty((n, n), dtype=np.complex128)
    for i, row in enumerate(rows):
        _require(isinstance(row, list) and len(row) == n, f"row {i} must hold {n} entries")
        for j, cell in enumerate(row):
            out[i, j] = _complex(cell, f"entry ({i},{j})")
    return out


def _gate_record(g: Gate) -> str:
    return (
        f'    {{"order": {g.order}, "layer": {g.layer}, '
        f'"modes": [{g.mode}, {g.mode + 1}], '
        f'"theta": {_fmt(g.angles.theta)}, "phi": {_fmt(g.angles.phi)}}}'
    )


def _params_record(p: RotationParams) -> str:
    i, j = p.target
    return (
        f'      {{"a": {_fmt(p.a)}, "b": {_pair(p.b)}, "side": "{p.side.value}", '
        f'"mode": {p.mode}, "target": [{i}, {j}]}}'
    )


def _matrix_rows(m: np.ndarray, indent: str) -> str:
    rows = [indent + "[" + ", ".join(_pair(z) for z in row) + "]" for row in m]
    return ",\n".join(rows)


def serialize_decomposition(dec: Decomposition, raw: RawDecomposition = None,
                            trace=None) -> str:
    """Render a decomposition to the gate file format.

    Args:
        dec: The decomposition to write.
        raw: When given, adds a "raw" section with collection-order
            rotations and the diagonal phases.
        trace: When given (tuple of per-step snapshots), adds a "trace"
            section with every intermediate working matrix.

    Returns:
        The JSON document as a string ending in a newline.
    """
    meta = dec.metadata
    seed_text = "null" if meta.seed is None else str(int(meta.seed))
    parts = ["{", f'  "size": {dec.n},', '  "gates": [']
    gate_lines = [_gate_record(g) for g in sorted(dec.gates, key=lambda g: g.order)]
    parts.append(",\n".join(gate_lines))
    parts.append("  ],")
    parts.append('  "phases": [' + ", ".join(_fmt(a) for a in dec.phase_angles) + "],")
    parts.append('  "phase_factors": [' + ", ".join(_pair(z) for z in dec.phase_factors) + "],")
    parts.append(
        '  "meta": {'
        + f'"source": {json.dumps(meta.source)}, "seed": {seed_text}, '
        + f'"tool_version": {json.dumps(meta.tool_version)}, "rng": {json.dumps(meta.rng)}'
        + "}"
        + ("," if raw is not None or trace is not None else "")
    )
    if raw is not None:
        parts.append('  "raw": {')
        parts.append('    "llist": [')
        parts.append(",\n".join(_params_record(p) for p in raw.llist))
        parts.append("    ],")
        parts.append('    "rlist": [')
        parts.append(",\n".join(_params_record(p) for p in raw.rlist))
        parts.append("    ],")
        parts.append('    "u_phi": [' + ", ".join(_pair(z) for z in raw.u_phi) + "]")
        parts.append("  }" + ("," if trace is not None else ""))
    if trace is not None:
        entry_texts = []
        for entry in trace:
            i, j = entry.target
            entry_texts.append(
                f'    {{"step": {entry.step}, "side": "{entry.side.value}", '
                f'"target": [{i}, {j}], "matrix": [\n'
                + _matrix_rows(np.asarray(entry.matrix), "      ")
                + "\n    ]}"
            )
        parts.append('  "trace": [')
        parts.append(",\n".join(entry_texts))
        parts.append("  ]")
    parts.append("}")
    return "\n".join(parts) + "\n"


@dataclass(frozen=True)
class GateFileContents:
    """Everything a gate file can carry."""

    decomposition: Decomposition
    raw: RawDecomposition = None
    trace: tuple = None


def _parse_params(rec, where: str) -> RotationParams:
    _require(isinstance(rec, dict), f"{where} must be an object")
    for key in ("a", "b", "side", "mode", "target"):
        _require(key in rec, f'{where} needs "{key}"')
    _require(rec["side"] in ("left", "right"), f"{where} side must be left or right")
    target = rec["target"]
    _require(isinstance(target, list) and len(target) == 2, f"{where} target must be [i, j]")
    try:
        return RotationParams(
            a=_number(rec["a"], f"{where} a"),
            b=_complex(rec["b"], f"{where} b"),
            side=Side(rec["side"]),
            mode=_int(rec["mode"], f"{where} mode"),
            target=(_int(target[0], f"{where} target"), _int(target[1], f"{where} target")),
        )
    except ValueError as exc:
        raise FileFormatError(f"{where}: {exc}") from exc


def parse_gate_file(text: str) -> GateFileContents:
    """Parse and validate a gate file.

    Args:
        text: Document contents.

    Returns:
        GateFileContents with the decomposition and any raw/trace sections.

    Raises:
        FileFormatError: If the document does not follow the format or its
            contents violate the mesh invariants.
    """
    doc = _load_json(text)
    _require(isinstance(doc, dict), "gate file must be a JSON object")
    for key in ("size", "gates", "phases", "phase_factors", "meta"):
        _require(key in doc, f'gate file needs "{key}"')
    n = _int(doc["size"], '"size"')
    _require(n >= 1, '"size" must be at least 1')

    raw_gates = doc["gates"]
    _require(isinstance(raw_gates, list), '"gates" must be an array')
    gates = []
    for k, rec in enumerate(raw_gates):
        where = f"gate {k}"
        _require(isinstance(rec, dict), f"{where} must be an object")
        for key in ("order", "layer", "modes", "theta", "phi"):
            _require(key in rec, f'{where} needs "{key}"')
        modes = rec["modes"]
        _require(
            isinstance(modes, list) and len(modes) == 2,
            f"{where} modes must be [m, m+1]",
        )
        m0 = _int(modes[0], f"{where} modes")
        m1 = _int(modes[1], f"{where} modes")
        _require(m1 == m0 + 1, f"{where} modes must be adjacent")
        try:
            angles = GateAngles(
                theta=_number(rec["theta"], f"{where} theta"),
                phi=_number(rec["phi"], f"{where} phi"),
            )
            gates.append(
                Gate(
                    mode=m0,
                    angles=angles,
                    layer=_int(rec["layer"], f"{where} layer"),
                    order=_int(rec["order"], f"{where} order"),
                )
            )
        except ValueError as exc:
            raise FileFormatError(f"{where}: {exc}") from exc

    phases = doc["phases"]
    factors = doc["phase_factors"]
    _require(isinstance(phases, list) and len(phases) == n, f'"phases" must hold {n} numbers')
    _require(
        isinstance(factors, list) and len(factors) == n,
        f'"phase_factors" must hold {n} pairs',
    )
    phase_angles = tuple(_number(x, "phase angle") for x in phases)
    phase_factors = tuple(_complex(x, "phase factor") for x in factors)

    meta = doc["meta"]
    _require(isinstance(meta, dict), '"meta" must be an object')
    for key in ("source", "tool_version"):
        _require(key in meta and isinstance(meta[key], str), f'meta needs string "{key}"')
    seed = meta.get("seed")
    if seed is not None:
        seed = _int(seed, "meta seed")
    rng = meta.get("rng", "pcg64")
    _require(isinstance(rng, str), "meta rng must be a string")
    metadata = Metadata(
        source=meta["source"], seed=seed, tool_version=meta["tool_version"], rng=rng
    )

    try:
        dec = Decomposition(
            n=n,
            gates=tuple(gates),
            phase_angles=phase_angles,
            phase_factors=phase_factors,
            metadata=metadata,
        )
    except ValueError as exc:
        raise FileFormatError(f"inconsistent gate file: {exc}") from exc

    raw = None
    if "raw" in doc:
        sec = doc["raw"]
        _require(isinstance(sec, dict), '"raw" must be an object')
        for key in ("llist", "rlist", "u_phi"):
            _require(key in sec and isinstance(sec[key], list), f'raw needs array "{key}"')
        llist = tuple(_parse_params(r, f"raw llist[{k}]") for k, r in enumerate(sec["llist"]))
        rlist = tuple(_parse_params(r, f"raw rlist[{k}]") for k, r in enumerate(sec["rlist"]))
        u_phi = tuple(_complex(z, "raw u_phi") for z in sec["u_phi"])
        try:
            raw = RawDecomposition(n=n, llist=llist, rlist=rlist, u_phi=u_phi)
        except ValueError as exc:
            raise FileFormatError(f"inconsistent raw section: {exc}") from exc

    trace = None
    if "trace" in doc:
        sec = doc["trace"]
        _require(isinstance(sec, list), '"trace" must be an array')
        entries = []
        for k, rec in enumerate(sec):
            where = f"trace[{k}]"
            _require(isinstance(rec, dict), f"{where} must be an object")
            for key in ("step", "side", "target", "matrix"):
                _require(key in rec, f'{where} needs "{key}"')
            _require(rec["side"] in ("left", "right"), f"{where} side must be left or right")
            target = rec["target"]
            _require(
                isinstance(target, list) and len(target) == 2,
                f"{where} target must be [i, j]",
            )
            rows = rec["matrix"]
            _require(
                isinstance(rows, list) and len(rows) == n,
                f"{where} matrix must hold {n} rows",
            )
            snap = np.empty((n, n), dtype=np.complex128)
            for i, row in enumerate(rows):
                _require(
                    isinstance(row, list) and len(row) == n,
                    f"{where} row {i} must hold {n} entries",
                )
                for j, cell in enumerate(row):
                    snap[i, j] = _complex(cell, f"{where} entry ({i},{j})")
            entries.append(
                TraceEntry(
                    step=_int(rec["step"], f"{where} step"),
                    target=(_int(target[0], f"{where} target"), _int(target[1], f"{where} target")),
                    side=Side(rec["side"]),
                    matrix=snap,
                )
            )
        trace = tuple(entries)

    return GateFileContents(decomposition=dec, raw=raw, trace=trace)
