"""Command-line interface.

Verbs: gen, decompose, verify, render, roundtrip. Payloads go to --out or
standard output; all diagnostics go to standard error.

Exit codes (stable contract):
    0  success
    1  verification failure
    2  input or parse error
    3  precondition (non-unitary input) error
    4  internal error

The MESH_COMPILER_TOL environment variable overrides the default comparison
tolerance; an explicit --tol beats the environment.
"""

import argparse
import math
import os
import sys
import time

from ._backend import backend_name
from ._version import __version__
from .decomposer import triangulate
from .errors import (
    DegenerateInputError,
    FileFormatError,
    InternalConsistencyError,
    InvalidDimensionError,
    InvalidModeError,
    NotUnitaryError,
    NumericError,
    ShapeError,
)
from .fileio import parse_gate_file, parse_matrix, serialize_decomposition, serialize_matrix
from .matrix_core import DEFAULT_TOLERANCES, Tolerances, dft_matrix, haar_unitary
from .refiner import Metadata, refine
from .render import render_ascii, render_svg
from .verifier import verify_roundtrip


class _InputError(Exception):
    """Bad command usage or unusable option values (exit code 2)."""


def _err(message: str) -> None:
    print(f"meshcompiler: {message}", file=sys.stderr)


def _fmt17(x: float) -> str:
    return "%.17g" % x


def _write_output(text: str, out) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)


def _read_file(path: str) -> str:
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _resolve_tolerances(tol_arg) -> Tolerances:
    compare = DEFAULT_TOLERANCES.compare_tol
    env = os.environ.get("MESH_COMPILER_TOL")
    if env is not None and env.strip():
        try:
            compare = float(env)
        except ValueError:
            raise _InputError(f"MESH_COMPILER_TOL is not a number: {env!r}") from None
    if tol_arg is not None:
        compare = tol_arg
    if not math.isfinite(compare) or compare <= 0:
        raise _InputError(f"tolerance must be a positive number, got {compare}")
    return Tolerances(
        zero_tol=min(DEFAULT_TOLERANCES.zero_tol, compare),
        unitary_tol=DEFAULT_TOLERANCES.unitary_tol,
        compare_tol=compare,
    )


def cmd_gen(args) -> int:
    if args.size < 1:
        raise _InputError(f"--size must be at least 1, got {args.size}")
    if args.kind == "haar":
        if args.seed is None:
            raise _InputError("--kind haar requires --seed")
        matrix = haar_unitary(args.size, args.seed)
    else:
        matrix = dft_matrix(args.size)
    _write_output(serialize_matrix(matrix), args.out)
    return 0


def cmd_decompose(args) -> int:
    tol = _resolve_tolerances(args.tol)
    matrix = parse_matrix(_read_file(args.input))
    raw = triangulate(matrix, tol=tol, trace=args.trace)
    dec = refine(raw, metadata=Metadata(source=os.path.basename(args.input), seed=None))
    text = serialize_decomposition(
        dec,
        raw=raw if args.emit_raw else None,
        trace=raw.trace if args.trace else None,
    )
    _write_output(text, args.out)
    return 0


def cmd_verify(args) -> int:
    tol = _resolve_tolerances(args.tol)
    matrix = parse_matrix(_read_file(args.input))
    contents = parse_gate_file(_read_file(args.gates))
    report = verify_roundtrip(matrix, contents.decomposition, tol=tol)
    lines = [
        f"max entry error   : {report.max_error:.3e}",
        f"unitary deviation : {report.unitary_deviation:.3e}",
        f"gate count        : {report.gate_count}",
        f"layer count       : {report.layer_count}",
        f"det phase error   : {report.det_phase_error:.3e}",
        f"status            : {'PASS' if report.passed else 'FAIL'}",
        "RESULT "
        + " ".join(
            [
                f"passed={'true' if report.passed else 'false'}",
                f"max_error={_fmt17(report.max_error)}",
                f"unitary_deviation={_fmt17(report.unitary_deviation)}",
                f"gate_count={report.gate_count}",
                f"layer_count={report.layer_count}",
                f"det_phase_error={_fmt17(report.det_phase_error)}",
            ]
        ),
    ]
    _write_output("\n".join(lines) + "\n", args.out)
    return 0 if report.passed else 1


def cmd_render(args) -> int:
    contents = parse_gate_file(_read_file(args.gates))
    renderer = render_svg if args.format == "svg" else render_ascii
    _write_output(renderer(contents.decomposition), args.out)
    return 0


def cmd_roundtrip(args) -> int:
    if args.size < 2:
        raise _InputError(f"--size must be at least 2, got {args.size}")
    if args.seeds < 1:
        raise _InputError(f"--seeds must be at least 1, got {args.seeds}")
    tol = _resolve_tolerances(args.tol)
    start = time.perf_counter()
    worst = (-1.0, None, None)
    failures = []
    for n in range(2, args.size + 1):
        for seed in range(args.seeds):
            matrix = haar_unitary(n, seed)
            dec = refine(
                triangulate(matrix, tol=tol),
                metadata=Metadata(source=f"haar({n})", seed=seed),
            )
            report = verify_roundtrip(matrix, dec, tol=tol)
            if report.max_error > worst[0]:
                worst = (report.max_error, n, seed)
            if not report.passed:
                failures.append((n, seed, report.max_error))
    elapsed = time.perf_counter() - start
    cases = (args.size - 1) * args.seeds
    summary = [
        f"sizes 2..{args.size}, {args.seeds} seeds per size, {cases} cases",
        f"worst max_error {worst[0]:.3e} at n={worst[1]} seed={worst[2]}",
        f"elapsed {elapsed:.3f} s (backend: {backend_name()})",
    ]
    _write_output("\n".join(summary) + "\n", None)
    if failures:
        for n, seed, error in failures:
            _err(f"round-trip failed at n={n} seed={seed}: max_error {error:.3e}")
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="meshcompiler",
        description="Decompose unitary matrices into rectangular beam-splitter meshes.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="generate a test unitary matrix file")
    p_gen.add_argument("--kind", choices=("dft", "haar"), required=True)
    p_gen.add_argument("--size", type=int, required=True)
    p_gen.add_argument("--seed", type=int, help="required for --kind haar; ignored for dft")
    p_gen.add_argument("--out", help="output path (default: stdout)")
    p_gen.set_defaults(func=cmd_gen)

    p_dec = sub.add_parser("decompose", help="decompose a matrix file into a gate file")
    p_dec.add_argument("--in", dest="input", required=True, help="matrix file to decompose")
    p_dec.add_argument("--out", help="output path (default: stdout)")
    p_dec.add_argument("--tol", type=float, help="comparison tolerance override")
    p_dec.add_argument(
        "--emit-raw",
        action="store_true",
        help="include collection-order rotations and diagonal phases",
    )
    p_dec.add_argument(
        "--trace",
        action="store_true",
        help="include every intermediate working matrix",
    )
    p_dec.set_defaults(func=cmd_decompose)

    p_ver = sub.add_parser("verify", help="check a gate file against a matrix file")
    p_ver.add_argument("--in", dest="input", required=True, help="matrix file")
    p_ver.add_argument("--gates", required=True, help="gate file")
    p_ver.add_argument("--tol", type=float, help="comparison tolerance override")
    p_ver.add_argument("--out", help="report path (default: stdout)")
    p_ver.set_defaults(func=cmd_verify)

    p_ren = sub.add_parser("render", help="draw the mesh of a gate file")
    p_ren.add_argument("--gates", required=True, help="gate file")
    p_ren.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    p_ren.add_argument("--out", help="output path (default: stdout)")
    p_ren.set_defaults(func=cmd_render)

    p_rt = sub.add_parser("roundtrip", help="run the random round-trip harness")
    p_rt.add_argument("--size", type=int, default=12, help="largest dimension (default 12)")
    p_rt.add_argument("--seeds", type=int, default=20, help="seeds per dimension (default 20)")
    p_rt.add_argument("--tol", type=float, help="comparison tolerance override")
    p_rt.set_defaults(func=cmd_roundtrip)

    return parser


def main(argv=None) -> int:
    """Run the CLI; returns the exit code instead of raising SystemExit."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.func(args)
    except _InputError as exc:
        _err(str(exc))
        return 2
    except FileFormatError as exc:
        _err(str(exc))
        return 2
    except (ShapeError, InvalidDimensionError, InvalidModeError, DegenerateInputError) as exc:
        _err(str(exc))
        return 2
    except OSError as exc:
        _err(str(exc))
        return 2
    except NotUnitaryError as exc:
        _err(str(exc))
        return 3
    except (InternalConsistencyError, NumericError) as exc:
        _err(str(exc))
        return 4


def run() -> None:
    """Console-script entry point."""
    raise SystemExit(main())


if __name__ == "__main__":
    run()
