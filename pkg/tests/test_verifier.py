import dataclasses

import numpy as np
import pytest

from meshcompiler import (
    ShapeError,
    Tolerances,
    dft_matrix,
    haar_unitary,
    max_entry_distance,
    rebuild,
    refine,
    timed_roundtrip,
    triangulate,
    verify_roundtrip,
)


def _decompose(u):
    return refine(triangulate(u))


def test_rebuild_identity():
    u = np.eye(5, dtype=complex)
    assert max_entry_distance(u, rebuild(_decompose(u))) <= 1e-12


def test_rebuild_quatter():
    u = dft_matrix(4)
    assert max_entry_distance(u, rebuild(_decompose(u))) <= 1e-10


@pytest.mark.parametrize("seed", range(10))
def test_rebuild_haar(seed):
    u = haar_unitary(9, seed)
    assert max_entry_distance(u, rebuild(_decompose(u))) <= 1e-10


def test_quatter_report():
    u = dft_matrix(4)
    report = verify_roundtrip(u, _decompose(u))
    assert report.passed
    assert report.gate_count == 6
    assert report.layer_count == 4
    assert report.max_error <= 1e-10
    assert report.unitary_deviation <= 1e-10
    assert report.det_phase_error <= 1e-10


def test_seven_mode_report_shape():
    u = dft_matrix(7)
    report = verify_roundtrip(u, _decompose(u))
    assert report.passed
    assert report.gate_count == 21
    assert report.layer_count == 7


def test_perturbed_gate_fails_verification():
    u = dft_matrix(4)
    dec = _decompose(u)
    g = dec.gates[2]
    bent = dataclasses.replace(
        g, angles=dataclasses.replace(g.angles, phi=g.angles.phi + 1e-3)
    )
    bad = dataclasses.replace(dec, gates=dec.gates[:2] + (bent,) + dec.gates[3:])
    report = verify_roundtrip(u, bad)
    assert not report.passed
    assert 1e-5 < report.max_error < 1e-2


def test_size_mismatch_raises():
    dec = _decompose(dft_matrix(4))
    with pytest.raises(ShapeError):
        verify_roundtrip(dft_matrix(3), dec)


def test_inflated_layer_fails_structural_check():
    u = dft_matrix(2)
    dec = _decompose(u)
    tall = dataclasses.replace(dec, gates=(dataclasses.replace(dec.gates[0], layer=5),))
    report = verify_roundtrip(u, tall)
    assert not report.passed
    assert report.max_error <= 1e-10  # reconstruction itself is still fine


def test_report_is_deterministic():
    u = haar_unitary(6, 2)
    dec = _decompose(u)
    assert verify_roundtrip(u, dec) == verify_roundtrip(u, dec)


def test_tight_compare_tol_flips_verdict():
    u = haar_unitary(5, 8)
    dec = _decompose(u)
    tol = Tolerances(zero_tol=1e-18, unitary_tol=1e-10, compare_tol=1e-17)
    assert not verify_roundtrip(u, dec, tol=tol).passed
    assert verify_roundtrip(u, dec).passed


def test_timed_roundtrip_returns_triple():
    report, dec, elapsed = timed_roundtrip(dft_matrix(5))
    assert report.passed
    assert dec.n == 5
    assert elapsed >= 0.0


@pytest.mark.parametrize("n", [1, 2, 5, 11, 16])
@pytest.mark.parametrize("seed", [0, 1, 2])
def test_roundtrip_passes_across_sizes(n, seed):
    u = haar_unitary(n, seed)
    report = verify_roundtrip(u, _decompose(u))
    assert report.passed
    assert report.det_phase_error <= 1e-10
