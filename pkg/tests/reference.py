"""Independent oracles the implementation is checked against.

Everything here recomputes expected results from first principles
(explicit dense matrices, direct amplitude construction) and deliberately
shares no code with the kernels under test.
"""

import numpy as np


def dense_controlled_unitary(num_qubits, matrix, targets, controls=()):
    """Explicit 2^n x 2^n matrix of a controlled k-qubit gate.

    Built column by column over the computational basis: columns whose
    control bits are not all 1 stay identity; the rest scatter the gate's
    entries across the target-bit subspace.
    """
    matrix = np.asarray(matrix, dtype=complex)
    dim = 1 << num_qubits
    k = len(targets)
    full = np.zeros((dim, dim), dtype=complex)
    for col in range(dim):
        if not all((col >> (num_qubits - 1 - c)) & 1 for c in controls):
            full[col, col] = 1.0
            continue
        gate_col = 0
        for t in targets:
            gate_col = (gate_col << 1) | ((col >> (num_qubits - 1 - t)) & 1)
        for gate_row in range(1 << k):
            row = col
            for b, t in enumerate(targets):
                mask = 1 << (num_qubits - 1 - t)
                if (gate_row >> (k - 1 - b)) & 1:
                    row |= mask
                else:
                    row &= ~mask
            full[row, col] += matrix[gate_row, gate_col]
    return full


def random_state(rng, num_qubits):
    v = rng.normal(size=1 << num_qubits) + 1j * rng.normal(size=1 << num_qubits)
    return v / np.linalg.norm(v)


def random_unitary(rng, dim):
    """Haar-ish unitary via QR of a complex Gaussian matrix."""
    z = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def frqi_reference_amplitudes(angles):
    """Amplitudes of the angle-encoded image state, built arithmetically:
    (1/2^n) * (sin theta_i at color=0, cos theta_i at color=1) x |i>."""
    angles = np.asarray(angles, dtype=float)
    num_positions = angles.size
    scale = 1.0 / np.sqrt(num_positions)
    amps = np.zeros(2 * num_positions, dtype=complex)
    for i, theta in enumerate(angles):
        amps[i] = scale * np.sin(theta)
        amps[num_positions + i] = scale * np.cos(theta)
    return amps


def neqr_reference_amplitudes(flat_pixels, n, q):
    """Amplitudes of the basis-encoded image state: 1/2^n at index
    value * 4^n + position, zero elsewhere."""
    num_positions = 1 << (2 * n)
    amps = np.zeros((1 << q) * num_positions, dtype=complex)
    for i, value in enumerate(flat_pixels):
        amps[int(value) * num_positions + i] = 1.0 / (1 << n)
    return amps


def random_angle_image(rng, n):
    return rng.uniform(0.0, np.pi / 2.0, size=1 << (2 * n))
