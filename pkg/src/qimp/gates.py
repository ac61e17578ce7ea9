"""Named unitary gate constructors: H, X, Ry, phase shifts, CNOT, Toffoli, SWAP.

Every matrix is validated against U†U = I (tolerance 1e-12) once, at
construction, and frozen; gate application trusts it afterwards.
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np

UNITARITY_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class Gate:
    """A named unitary with optional angle (radians) and rotation order.

    ``matrix`` is 2^k x 2^k for a k-qubit gate; its row/column index packs
    the target qubits' bits with the first target as the most significant
    bit. Instances are immutable and freely shareable between threads.
    """

    name: str
    matrix: np.ndarray
    angle: float | None = None
    order: int | None = None

    def __post_init__(self):
        if self.angle is not None and not math.isfinite(self.angle):
            raise ValueError("gate angle must be finite")
        if self.order is not None and self.order < 1:
            raise ValueError(f"gate order must be >= 1, got {self.order}")
        m = np.array(self.matrix, dtype=np.complex128)
        dim = m.shape[0] if m.ndim == 2 else 0
        if m.ndim != 2 or m.shape != (dim, dim) or dim < 2 or dim & (dim - 1):
            raise ValueError(f"gate matrix must be square with power-of-two size, got shape {m.shape}")
        if not np.isfinite(m).all():
            raise ValueError("gate matrix contains non-finite entries")
        err = np.abs(m.conj().T @ m - np.eye(dim)).max()
        if err > UNITARITY_TOL:
            raise ValueError(f"gate matrix is not unitary (max deviation {err:.3e})")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @property
    def num_targets(self) -> int:
        return int(self.matrix.shape[0]).bit_length() - 1

    def dagger(self) -> "Gate":
        """Conjugate-transpose gate; parametrized gates negate their angle."""
        angle = -self.angle if self.angle is not None else None
        return Gate(self.name, self.matrix.conj().T, angle=angle, order=self.order)

    def __repr__(self):
        extra = f", angle={self.angle!r}" if self.angle is not None else ""
        return f"Gate({self.name!r}, dim={self.matrix.shape[0]}{extra})"


def hadamard() -> Gate:
    """(1/sqrt(2)) [[1, 1], [1, -1]]."""
    s = 1.0 / math.sqrt(2.0)
    return Gate("H", [[s, s], [s, -s]])


def pauli_x() -> Gate:
    """Bit flip [[0, 1], [1, 0]]."""
    return Gate("X", [[0, 1], [1, 0]])


def phase_shift(phi: float) -> Gate:
    """diag(1, e^{i*phi}); make it conditional by applying with controls."""
    phi = float(phi)
    return Gate("P", [[1, 0], [0, cmath.exp(1j * phi)]], angle=phi)


def rotation_y(theta: float) -> Gate:
    """Real rotation [[cos t, -sin t], [sin t, cos t]].

    Maps |0> to cos(theta)|0> + sin(theta)|1>; angles add under
    composition, so rotation_y(a) @ rotation_y(b) == rotation_y(a + b).
    """
    theta = float(theta)
    c, s = math.cos(theta), math.sin(theta)
    return Gate("RY", [[c, -s], [s, c]], angle=theta)


def qft_rotation(n: int) -> Gate:
    """Fourier rotation diag(1, exp(-2*pi*i / 2^n)) of order n.

    Same matrix as phase_shift(-2*pi / 2**n); kept as a distinct named
    constructor because the Fourier circuit counts these separately.
    """
    if n < 1:
        raise ValueError(f"rotation order must be >= 1, got {n}")
    phi = -2.0 * math.pi / 2**n
    return Gate("RN", [[1, 0], [0, cmath.exp(1j * phi)]], angle=phi, order=n)


def fourier_rotation_from_angle(phi: float) -> Gate:
    """An "RN"-named phase gate rebuilt from a raw angle (deserialization)."""
    phi = float(phi)
    return Gate("RN", [[1, 0], [0, cmath.exp(1j * phi)]], angle=phi)


def cnot() -> Gate:
    """Controlled NOT as an explicit 4x4 matrix; first target is the control."""
    return Gate("CNOT", [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]])


def toffoli() -> Gate:
    """Doubly-controlled NOT (8x8); the first two targets are the controls."""
    m = np.eye(8)
    m[[6, 7]] = m[[7, 6]]
    return Gate("TOFFOLI", m)


def swap() -> Gate:
    """Exchange two qubits: |01> <-> |10>."""
    return Gate("SWAP", [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]])
