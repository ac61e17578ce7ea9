import math

import numpy as np
import pytest

from qimp import gates
from qimp.state import StateVector

from reference import dense_controlled_unitary

ALL_CONSTRUCTORS = [
    gates.hadamard,
    gates.pauli_x,
    lambda: gates.phase_shift(0.731),
    lambda: gates.rotation_y(-2.25),
    lambda: gates.qft_rotation(3),
    gates.cnot,
    gates.toffoli,
    gates.swap,
]


@pytest.mark.parametrize("make", ALL_CONSTRUCTORS)
def test_every_gate_is_unitary(make):
    g = make()
    dim = g.matrix.shape[0]
    assert np.abs(g.matrix.conj().T @ g.matrix - np.eye(dim)).max() <= 1e-12


def test_non_unitary_matrix_rejected():
    with pytest.raises(ValueError, match="unitary"):
        gates.Gate("BAD", [[1, 0], [1, 1]])


def test_matrices_are_frozen():
    g = gates.hadamard()
    with pytest.raises(ValueError):
        g.matrix[0, 0] = 2.0


def test_hadamard_on_zero():
    st = StateVector(1).apply_gate(gates.hadamard(), 0)
    s = 1 / math.sqrt(2)
    assert np.allclose(st.amplitudes, [s, s], atol=1e-15)


def test_hadamard_self_inverse():
    h = gates.hadamard().matrix
    assert np.abs(h @ h - np.eye(2)).max() < 1e-12


def test_phase_shift_zero_is_identity():
    assert np.abs(gates.phase_shift(0.0).matrix - np.eye(2)).max() < 1e-15


def test_phase_shift_pi_negates_one():
    st = StateVector(1)
    st.apply_gate(gates.pauli_x(), 0)
    st.apply_gate(gates.phase_shift(math.pi), 0)
    assert np.allclose(st.amplitudes, [0, -1], atol=1e-15)


def test_controlled_phase_shift_dense_form():
    # Controlled diag(1, e^{i phi}) must be diag(1, 1, 1, e^{i phi}).
    phi = 1.234
    dense = dense_controlled_unitary(2, gates.phase_shift(phi).matrix, targets=(1,), controls=(0,))
    want = np.diag([1, 1, 1, np.exp(1j * phi)])
    assert np.abs(dense - want).max() < 1e-15


def test_rotation_y_zero_is_identity():
    assert np.abs(gates.rotation_y(0.0).matrix - np.eye(2)).max() < 1e-15


def test_rotation_y_on_zero_state():
    theta = 0.62
    st = StateVector(1).apply_gate(gates.rotation_y(theta), 0)
    assert np.allclose(st.amplitudes, [math.cos(theta), math.sin(theta)], atol=1e-15)


def test_rotation_y_angles_add():
    rng = np.random.default_rng(11)
    for _ in range(20):
        a, b = rng.uniform(-math.pi, math.pi, size=2)
        prod = gates.rotation_y(a).matrix @ gates.rotation_y(b).matrix
        assert np.abs(prod - gates.rotation_y(a + b).matrix).max() < 1e-12


def test_rotation_y_determinant_one():
    rng = np.random.default_rng(12)
    for theta in rng.uniform(-10, 10, size=10):
        assert abs(np.linalg.det(gates.rotation_y(theta).matrix) - 1.0) < 1e-12


def test_qft_rotation_order_one_is_z():
    assert np.abs(gates.qft_rotation(1).matrix - np.diag([1, -1])).max() < 1e-12


def test_qft_rotation_order_two():
    assert np.abs(gates.qft_rotation(2).matrix - np.diag([1, -1j])).max() < 1e-12


def test_qft_rotation_matches_phase_shift():
    for n in range(1, 9):
        want = gates.phase_shift(-2 * math.pi / 2**n).matrix
        assert np.abs(gates.qft_rotation(n).matrix - want).max() < 1e-15


def test_qft_rotation_rejects_bad_order():
    with pytest.raises(ValueError):
        gates.qft_rotation(0)


def test_cnot_matrix_exact():
    want = np.array(
        [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex
    )
    assert (gates.cnot().matrix == want).all()


def test_cnot_equals_controlled_x_action():
    rng = np.random.default_rng(5)
    v = rng.normal(size=8) + 1j * rng.normal(size=8)
    v /= np.linalg.norm(v)
    a = StateVector.from_amplitudes(v.copy()).apply_gate(gates.cnot(), (2, 0))
    b = StateVector.from_amplitudes(v.copy()).apply_gate(gates.pauli_x(), 0, (2,))
    assert np.abs(a.amplitudes - b.amplitudes).max() < 1e-15


def test_toffoli_equals_doubly_controlled_x_action():
    rng = np.random.default_rng(6)
    v = rng.normal(size=8) + 1j * rng.normal(size=8)
    v /= np.linalg.norm(v)
    a = StateVector.from_amplitudes(v.copy()).apply_gate(gates.toffoli(), (0, 1, 2))
    b = StateVector.from_amplitudes(v.copy()).apply_gate(gates.pauli_x(), 2, (0, 1))
    assert np.abs(a.amplitudes - b.amplitudes).max() < 1e-15


def test_toffoli_flips_on_both_controls():
    st = StateVector(3)
    st.apply_gate(gates.pauli_x(), 0)
    st.apply_gate(gates.pauli_x(), 1)  # |110>
    st.apply_gate(gates.toffoli(), (0, 1, 2))
    assert np.argmax(np.abs(st.amplitudes)) == 0b111


def test_swap_exchanges_bits():
    st = StateVector(2)
    st.apply_gate(gates.pauli_x(), 1)  # |01>
    st.apply_gate(gates.swap(), (0, 1))
    assert np.argmax(np.abs(st.amplitudes)) == 0b10


def test_dagger_negates_angle():
    g = gates.rotation_y(0.4).dagger()
    assert g.angle == -0.4
    assert np.abs(g.matrix - gates.rotation_y(-0.4).matrix).max() < 1e-15


def test_hadamard_layer_matches_uniform_position_superposition():
    # H on the two position qubits of a 3-qubit register, color untouched:
    # 1/2 on each |0>|i> component and nothing on the |1> block.
    st = StateVector(3)
    st.apply_gate(gates.hadamard(), 1)
    st.apply_gate(gates.hadamard(), 2)
    want = np.zeros(8, dtype=complex)
    want[:4] = 0.5
    assert np.abs(st.amplitudes - want).max() < 1e-12
