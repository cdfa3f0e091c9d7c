import subprocess
import sys

import numpy as np
import pytest

from meshcompiler import _givens_core_py as pure
from meshcompiler import backend_name, dft_matrix, haar_unitary, pivot_schedule
from meshcompiler.givens import Side


def _sweep_args(n):
    steps = pivot_schedule(n)
    tgt_i = np.array([s.target[0] for s in steps], dtype=np.intp)
    tgt_j = np.array([s.target[1] for s in steps], dtype=np.intp)
    right = np.array([1 if s.side is Side.RIGHT else 0 for s in steps], dtype=np.uint8)
    return tgt_i, tgt_j, right


def _random_pairs(count, seed):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        z = rng.standard_normal(4)
        yield complex(z[0], z[1]), complex(z[2], z[3])


def test_pure_backend_reports_its_name():
    assert pure.backend_name() == "python"


def test_active_backend_is_known():
    assert backend_name() in ("python", "compiled")


@pytest.mark.parametrize("n,seed", [(2, 0), (5, 1), (9, 2), (14, 3)])
def test_backends_agree_on_full_sweep(n, seed):
    compiled = pytest.importorskip("meshcompiler._givens_core")
    u = haar_unitary(n, seed)
    tgt_i, tgt_j, right = _sweep_args(n)
    w_py = u.copy()
    a_py, b_py = pure.sweep(w_py, tgt_i, tgt_j, right, 1e-12)
    w_cy = u.copy()
    a_cy, b_cy = compiled.sweep(w_cy, tgt_i, tgt_j, right, 1e-12)
    assert np.max(np.abs(a_py - a_cy)) <= 1e-13
    assert np.max(np.abs(b_py - b_cy)) <= 1e-13
    assert np.max(np.abs(w_py - w_cy)) <= 1e-13


def test_backends_agree_on_pair_kernels():
    compiled = pytest.importorskip("meshcompiler._givens_core")
    for x1, x2 in _random_pairs(25, 4):
        got = compiled.left_amps(x1, x2, 1e-12)
        want = pure.left_amps(x1, x2, 1e-12)
        assert abs(got[0] - want[0]) <= 1e-15
        assert abs(got[1] - want[1]) <= 1e-15
        got = compiled.right_amps(x1, x2, 1e-12)
        want = pure.right_amps(x1, x2, 1e-12)
        assert abs(got[0] - want[0]) <= 1e-15
        assert abs(got[1] - want[1]) <= 1e-15


def test_backends_agree_on_row_and_column_updates():
    compiled = pytest.importorskip("meshcompiler._givens_core")
    u = dft_matrix(5)
    w_py = u.copy()
    w_cy = u.copy()
    pure.apply_left_pair(w_py, 2, 0.6, 0.8j)
    compiled.apply_left_pair(w_cy, 2, 0.6, 0.8j)
    assert np.max(np.abs(w_py - w_cy)) <= 1e-15
    pure.apply_right_pair(w_py, 3, 0.6, complex(-0.8))
    compiled.apply_right_pair(w_cy, 3, 0.6, complex(-0.8))
    assert np.max(np.abs(w_py - w_cy)) <= 1e-15


def _probe(env_value):
    import os

    env = dict(os.environ)
    env["MESH_COMPILER_BACKEND"] = env_value
    return subprocess.run(
        [sys.executable, "-c", "import meshcompiler; print(meshcompiler.backend_name())"],
        capture_output=True,
        text=True,
        env=env,
    )


def test_env_forces_python_backend():
    proc = _probe("python")
    assert proc.returncode == 0
    assert proc.stdout.strip() == "python"


def test_env_forces_compiled_backend():
    pytest.importorskip("meshcompiler._givens_core")
    proc = _probe("compiled")
    assert proc.returncode == 0
    assert proc.stdout.strip() == "compiled"


def test_env_rejects_unknown_backend():
    proc = _probe("turbo")
    assert proc.returncode != 0
    assert "MESH_COMPILER_BACKEND" in proc.stderr


def test_pure_backend_full_round_trip():
    import os

    env = dict(os.environ)
    env["MESH_COMPILER_BACKEND"] = "python"
    code = (
        "import numpy as np\n"
        "import meshcompiler as mc\n"
        "u = mc.haar_unitary(8, 5)\n"
        "report = mc.verify_roundtrip(u, mc.refine(mc.triangulate(u)))\n"
        "print(mc.backend_name(), report.passed, report.max_error <= 1e-10)\n"
    )
    proc = subprocess.run(
        [sys.executable, "-c", code], capture_output=True, text=True, env=env
    )
    assert proc.returncode == 0
    assert proc.stdout.split() == ["python", "True", "True"]
