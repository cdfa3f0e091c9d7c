"""Turn collection-order rotations into the final gate train.

The factorization produced here is U = diag(phase_factors) * product(gates),
with gates listed leftmost factor first. Left rotations are commuted through
the residual phase screen by explicit 2x2 conjugation; right rotations enter
the product in reversed collection order. Layers are assigned greedily in
product order.
"""

import cmath
import math
from dataclasses import dataclass, field, replace

from ._version import __version__
from .errors import InternalConsistencyError
from .decomposer import RawDecomposition
from .givens import GateAngles, RotationParams, Side, angles_from_amplitudes

_FORM_TOL = 1e-12


@dataclass(frozen=True)
class Gate:
    """One beam splitter of the mesh.

    Attributes:
        mode: Upper index m of the coupled mode pair (m, m+1).
        angles: Beam-splitter angles.
        layer: Mesh column, 1-based, counted from the first product factor.
        order: Position in the product, 1-based, leftmost factor first.
    """

    mode: int
    angles: GateAngles
    layer: int
    order: int

    def __post_init__(self):
        if self.mode < 0:
            raise ValueError(f"mode must be non-negative, got {self.mode}")
        if self.layer < 1:
            raise ValueError(f"layer must be >= 1, got {self.layer}")
        if self.order < 1:
            raise ValueError(f"order must be >= 1, got {self.order}")


@dataclass(frozen=True)
class Metadata:
    """Provenance recorded alongside a decomposition."""

    source: str = ""
    seed: int = None
    tool_version: str = __version__
    rng: str = "pcg64"


@dataclass(frozen=True)
class Decomposition:
    """Final gate train plus the residual phase screen.

    Attributes:
        n: Mesh dimension (number of modes).
        gates: Gates in product order (leftmost factor first).
        phase_angles: Arguments of the residual phases, each in (-pi, pi].
        phase_factors: The residual unit-modulus factors themselves.
        metadata: Provenance description.
    """

    n: int
    gates: tuple
    phase_angles: tuple
    phase_factors: tuple
    metadata: Metadata = field(default_factory=Metadata)

    def __post_init__(self):
        expected = self.n * (self.n - 1) // 2
        if len(self.gates) != expected:
            raise ValueError(f"expected {expected} gates for n={self.n}, got {len(self.gates)}")
        if len(self.phase_angles) != self.n or len(self.phase_factors) != self.n:
            raise ValueError("phase arrays must have length n")
        if sorted(g.order for g in self.gates) != list(range(1, expected + 1)):
            raise ValueError("gate orders must form a permutation of 1..n(n-1)/2")
        for g in self.gates:
            if g.mode > self.n - 2:
                raise ValueError(f"gate mode {g.mode} out of range for n={self.n}")
        for angle, factor in zip(self.phase_angles, self.phase_factors):
            if abs(cmath.exp(1j * angle) - factor) > 1e-12:
                raise ValueError(f"phase factor {factor} does not match angle {angle}")
        last = [0] * self.n
        for g in sorted(self.gates, key=lambda g: g.order):
            if g.layer <= max(last[g.mode], last[g.mode + 1]):
                raise ValueError(
                    f"gate {g.order} layer {g.layer} does not increase on its modes"
                )
            last[g.mode] = last[g.mode + 1] = g.layer


def commute_left_gate(p: RotationParams, phases) -> GateAngles:
    """Commute a left rotation through the diagonal phase screen.

    Computes the 2x2 block D^dagger * G^dagger * D with D =
    diag(e^{i*phi1}, e^{i*phi2}) explicitly, verifies it has the rotation
    form [[a', i*b'], [i*conj(b'), a']], and converts (a', b') to angles.
    theta is unchanged by the commutation.

    Args:
        p: Rotation with side LEFT.
        phases: Pair (phi1, phi2) of residual phase angles on modes
            (mode, mode+1).

    Returns:
        Beam-splitter angles of the commuted gate.

    Raises:
        InternalConsistencyError: If the conjugated block does not have the
            rotation form within 1e-12.
    """
    if p.side is not Side.LEFT:
        raise ValueError("commute_left_gate requires a LEFT-side rotation")
    phi1, phi2 = phases
    d1 = cmath.exp(1j * phi1)
    d2 = cmath.exp(1j * phi2)
    # G^dagger = [[a, -i*b], [-i*conj(b), a]]
    g00 = d1.conjugate() * p.a * d1
    g01 = d1.conjugate() * (-1j * p.b) * d2
    g10 = d2.conjugate() * (-1j * p.b.conjugate()) * d1
    g11 = d2.conjugate() * p.a * d2
    a_new = g00.real
    b_new = -1j * g01
    form_error = max(
        abs(g00.imag),
        abs(g11.imag),
        abs(g00.real - g11.real),
        abs(g10 - 1j * b_new.conjugate()),
        abs(a_new * a_new + abs(b_new) ** 2 - 1.0),
    )
    if form_error > _FORM_TOL:
        raise InternalConsistencyError(
            f"conjugated block lost the rotation form (error {form_error:.3e})"
        )
    return angles_from_amplitudes(min(max(a_new, 0.0), 1.0), b_new)


def _normalized_angle(z: complex) -> float:
    phi = cmath.phase(z)
    if phi <= -math.pi:
        phi += 2.0 * math.pi
    return phi


def _greedy_layers(modes, n):
    last = [0] * n
    layers = []
    for m in modes:
        layer = max(last[m], last[m + 1]) + 1
        last[m] = last[m + 1] = layer
        layers.append(layer)
    return layers


def refine(raw: RawDecomposition, metadata: Metadata = None) -> Decomposition:
    """Build the final gate train from a triangulation.

    The product order is: commuted left rotations in collection order,
    followed by right rotations in reversed collection order. Residual
    phases come straight from u_phi. Layers are assigned greedily.

    Args:
        raw: Output of triangulate.
        metadata: Optional provenance; defaults to empty Metadata.

    Returns:
        The layered Decomposition. Rebuilding it reproduces the original
        unitary within 1e-10 (see meshcompiler.verifier).
    """
    phase_angles = tuple(_normalized_angle(z) for z in raw.u_phi)
    entries = []
    for p in raw.llist:
        pair = (phase_angles[p.mode], phase_angles[p.mode + 1])
        entries.append((p.mode, commute_left_gate(p, pair)))
    for p in reversed(raw.rlist):
        entries.append((p.mode, angles_from_amplitudes(p.a, p.b)))
    layers = _greedy_layers([m for m, _ in entries], raw.n)
    gates = tuple(
        Gate(mode=m, angles=angles, layer=layer, order=k + 1)
        for k, ((m, angles), layer) in enumerate(zip(entries, layers))
    )
    return Decomposition(
        n=raw.n,
        gates=gates,
        phase_angles=phase_angles,
        phase_factors=tuple(raw.u_phi),
        metadata=metadata if metadata is not None else Metadata(),
    )


def assign_layers(dec: Decomposition) -> Decomposition:
    """Recompute greedy layers in product order.

    Each gate receives 1 + max(previous layer on its two modes), with 0 for
    untouched modes. Idempotent: refine output already carries these layers.

    Args:
        dec: Decomposition whose gates are in product order.

    Returns:
        A Decomposition with recomputed layer indices.
    """
    ordered = sorted(dec.gates, key=lambda g: g.order)
    layers = _greedy_layers([g.mode for g in ordered], dec.n)
    gates = tuple(replace(g, layer=layer) for g, layer in zip(ordered, layers))
    return replace(dec, gates=gates)
