import cmath
import dataclasses
import math

import numpy as np
import pytest

from meshcompiler import (
    Decomposition,
    Gate,
    GateAngles,
    Metadata,
    RotationParams,
    Side,
    assign_layers,
    commute_left_gate,
    dft_matrix,
    gate_matrix,
    haar_unitary,
    left_nullifier,
    params_to_angles,
    phasor_distance,
    refine,
    right_nullifier,
    rotation_block,
    triangulate,
)

DFT4_MODES = [1, 2, 0, 1, 2, 0]
DFT4_THETA = [1.23095942, 2.0943951, 2.0943951, 1.91063324, 1.57079633, 1.57079633]
DFT4_PHI = [-2.35619449, 3.14159265, -1.57079633, -2.35619449, -1.57079633, 3.14159265]
DFT4_LAYERS = [1, 2, 2, 3, 4, 4]
DFT4_PHASES = [math.pi / 4, math.pi, -math.pi / 2, -math.pi / 4]


def _left_params(a, b, target=(2, 1)):
    return RotationParams(a=a, b=b, side=Side.LEFT, mode=target[0] - 1, target=target)


def _random_left_params(count, seed):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        z = rng.standard_normal(4)
        x1, x2 = complex(z[0], z[1]), complex(z[2], z[3])
        phases = rng.uniform(-math.pi, math.pi, 2)
        yield left_nullifier(x1, x2, target=(2, 1)), (phases[0], phases[1])


def test_commute_mixed_phases():
    p = _left_params(0.5, math.sqrt(6) / 4 * (1 - 1j))
    angles = commute_left_gate(p, (-math.pi / 2, -math.pi / 4))
    assert abs(angles.theta - 2.0943951) < 1e-8
    assert phasor_distance(angles.phi, math.pi) < 1e-8


def test_commute_trivial_phases():
    p = _left_params(math.sqrt(0.5), complex(math.sqrt(0.5)))
    angles = commute_left_gate(p, (0.0, 0.0))
    assert abs(angles.theta - 1.57079633) < 1e-8
    assert phasor_distance(angles.phi, math.pi) < 1e-8


def test_commute_quatter_gate():
    p = _left_params(math.sqrt(2 / 3), math.sqrt(1 / 3) * cmath.exp(-1j * math.pi / 4))
    angles = commute_left_gate(p, (math.pi, -math.pi / 2))
    assert abs(angles.theta - 1.23095942) < 1e-8
    assert phasor_distance(angles.phi, -2.35619449) < 1e-8


def test_commute_rejects_right_rotation():
    p = right_nullifier(0.5, 0.5, target=(1, 0))
    with pytest.raises(ValueError):
        commute_left_gate(p, (0.0, 0.0))


def test_commute_keeps_theta_and_scales_b():
    for p, (phi1, phi2) in _random_left_params(40, 5):
        before = params_to_angles(p)
        after = commute_left_gate(p, (phi1, phi2))
        assert abs(after.theta - before.theta) <= 1e-12
        emitted = cmath.exp(1j * after.phi) * math.sin(after.theta / 2)
        expected = -p.b * cmath.exp(-1j * (phi1 - phi2))
        assert abs(emitted - expected) <= 1e-12


def test_commute_matches_block_conjugation():
    for p, (phi1, phi2) in _random_left_params(40, 6):
        d = np.diag([cmath.exp(1j * phi1), cmath.exp(1j * phi2)])
        target = d.conj().T @ rotation_block(p).conj().T @ d
        rebuilt = gate_matrix(commute_left_gate(p, (phi1, phi2)))
        assert np.max(np.abs(rebuilt - target)) <= 1e-12


def test_refine_quatter_gate_table():
    dec = refine(triangulate(dft_matrix(4)))
    assert [g.mode for g in dec.gates] == DFT4_MODES
    assert [g.layer for g in dec.gates] == DFT4_LAYERS
    assert [g.order for g in dec.gates] == [1, 2, 3, 4, 5, 6]
    for g, theta, phi in zip(dec.gates, DFT4_THETA, DFT4_PHI):
        assert abs(g.angles.theta - theta) < 1e-7
        assert phasor_distance(g.angles.phi, phi) < 1e-7
    for angle, expected in zip(dec.phase_angles, DFT4_PHASES):
        assert phasor_distance(angle, expected) < 1e-7
    for factor, angle in zip(dec.phase_factors, dec.phase_angles):
        assert abs(factor - cmath.exp(1j * angle)) <= 1e-12


def test_refine_identity_gives_zero_angles():
    dec = refine(triangulate(np.eye(5)))
    assert len(dec.gates) == 10
    for g in dec.gates:
        assert g.angles.theta == 0.0 and g.angles.phi == 0.0
    assert all(abs(z - 1.0) <= 1e-15 for z in dec.phase_factors)
    ref = refine(triangulate(dft_matrix(5)))
    assert [g.layer for g in dec.gates] == [g.layer for g in ref.gates]


@pytest.mark.parametrize("n", [2, 3, 4, 7, 9])
def test_mode_stream_ignores_matrix_values(n):
    ref = [g.mode for g in refine(triangulate(dft_matrix(n))).gates]
    got = [g.mode for g in refine(triangulate(haar_unitary(n, n + 40))).gates]
    assert got == ref


def test_seven_mode_layer_parity():
    dec = refine(triangulate(dft_matrix(7)))
    assert len(dec.gates) == 21
    assert max(g.layer for g in dec.gates) == 7
    counts = {}
    for g in dec.gates:
        assert (g.layer % 2 == 1) == (g.mode % 2 == 0)
        counts[g.mode] = counts.get(g.mode, 0) + 1
    assert counts == {0: 4, 2: 4, 4: 4, 1: 3, 3: 3, 5: 3}


@pytest.mark.parametrize("n,seed", [(4, 0), (7, 1), (12, 2)])
def test_layers_increase_along_each_wire(n, seed):
    dec = refine(triangulate(haar_unitary(n, seed)))
    last = [0] * n
    for g in dec.gates:
        assert g.layer > max(last[g.mode], last[g.mode + 1])
        last[g.mode] = last[g.mode + 1] = g.layer
    assert max(last) <= n


def test_assign_layers_is_idempotent():
    dec = refine(triangulate(haar_unitary(6, 33)))
    assert assign_layers(dec) == dec


def test_two_mode_mesh():
    dec = refine(triangulate(dft_matrix(2)))
    assert len(dec.gates) == 1
    g = dec.gates[0]
    assert g.mode == 0 and g.layer == 1 and g.order == 1


def test_gate_validation():
    angles = GateAngles(0.5, 0.5)
    with pytest.raises(ValueError):
        Gate(mode=-1, angles=angles, layer=1, order=1)
    with pytest.raises(ValueError):
        Gate(mode=0, angles=angles, layer=0, order=1)
    with pytest.raises(ValueError):
        Gate(mode=0, angles=angles, layer=1, order=0)


def test_decomposition_validation():
    dec = refine(triangulate(dft_matrix(4)))
    with pytest.raises(ValueError):
        dataclasses.replace(dec, gates=dec.gates[:-1])
    with pytest.raises(ValueError):
        dataclasses.replace(dec, phase_factors=(0.5,) + dec.phase_factors[1:])
    with pytest.raises(ValueError):
        bad = dec.gates[:2] + (dataclasses.replace(dec.gates[2], mode=3),) + dec.gates[3:]
        dataclasses.replace(dec, gates=bad)
    with pytest.raises(ValueError):
        flat = tuple(dataclasses.replace(g, layer=1) for g in dec.gates)
        dataclasses.replace(dec, gates=flat)


def test_metadata_defaults():
    meta = Metadata()
    assert meta.source == ""
    assert meta.seed is None
    assert meta.rng == "pcg64"
    assert isinstance(meta.tool_version, str) and meta.tool_version


def test_refine_carries_metadata():
    meta = Metadata(source="fixture.json", seed=11)
    dec = refine(triangulate(haar_unitary(3, 11)), metadata=meta)
    assert dec.metadata == meta
