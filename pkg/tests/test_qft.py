import math

import numpy as np
import pytest

from qimp.qft import dft_oracle, qft_circuit
from qimp.state import StateVector

from reference import random_state


def test_single_qubit_transform_is_hadamard():
    circ = qft_circuit(1)
    assert len(circ.ops) == 1 and circ.ops[0].gate.name == "H"
    st = circ.run(StateVector(1))
    s = 1 / math.sqrt(2)
    assert np.abs(st.amplitudes - [s, s]).max() < 1e-12


def test_two_qubits_on_zero_gives_uniform():
    st = qft_circuit(2).run(StateVector(2))
    assert np.abs(st.amplitudes - 0.25**0.5).max() < 1e-12


def test_three_qubits_match_oracle_on_random_states():
    rng = np.random.default_rng(8)
    for _ in range(10):
        v = random_state(rng, 3)
        st = qft_circuit(3).run(StateVector.from_amplitudes(v.copy()))
        assert np.abs(st.amplitudes - dft_oracle(v, 1)).max() < 1e-10


def test_oracle_delta_to_uniform_and_back():
    delta = np.zeros(4, dtype=complex)
    delta[0] = 1.0
    out = dft_oracle(delta, 1)
    assert np.abs(out - 0.5).max() < 1e-15
    back = dft_oracle(np.full(4, 0.5), 1)
    assert np.abs(back - delta).max() < 1e-12


def test_oracle_parseval():
    rng = np.random.default_rng(9)
    for _ in range(10):
        v = rng.normal(size=16) + 1j * rng.normal(size=16)
        for sign in (1, -1):
            assert abs(np.linalg.norm(dft_oracle(v, sign)) - np.linalg.norm(v)) < 1e-12


def test_oracle_rejects_bad_input():
    with pytest.raises(ValueError):
        dft_oracle([], 1)
    with pytest.raises(ValueError):
        dft_oracle([1.0], 2)
    with pytest.raises(ValueError):
        qft_circuit(0)
    with pytest.raises(ValueError):
        qft_circuit(3, sign=0)


@pytest.mark.parametrize("sign", [1, -1])
def test_circuit_matches_oracle_with_matching_sign(sign):
    rng = np.random.default_rng(10)
    for m in range(1, 7):
        v = random_state(rng, m)
        st = qft_circuit(m, sign).run(StateVector.from_amplitudes(v.copy()))
        assert np.abs(st.amplitudes - dft_oracle(v, sign)).max() < 1e-10


def test_mismatched_sign_is_the_conjugate_transform():
    rng = np.random.default_rng(11)
    for m in (2, 3, 4):
        v = random_state(rng, m)
        st = qft_circuit(m, 1).run(StateVector.from_amplitudes(v.copy()))
        conj = np.conj(dft_oracle(np.conj(v), -1))
        assert np.abs(st.amplitudes - conj).max() < 1e-10


def test_forward_then_backward_is_identity():
    rng = np.random.default_rng(12)
    for m in (1, 3, 5):
        v = random_state(rng, m)
        st = StateVector.from_amplitudes(v.copy())
        qft_circuit(m, 1).run(st)
        qft_circuit(m, -1).run(st)
        assert np.abs(st.amplitudes - v).max() < 1e-9


def test_circuit_inverse_equals_opposite_sign():
    rng = np.random.default_rng(13)
    m = 4
    v = random_state(rng, m)
    a = qft_circuit(m, 1).inverse().run(StateVector.from_amplitudes(v.copy()))
    b = qft_circuit(m, -1).run(StateVector.from_amplitudes(v.copy()))
    assert np.abs(a.amplitudes - b.amplitudes).max() < 1e-10


def test_skipping_swaps_bit_reverses_output():
    rng = np.random.default_rng(14)
    m = 3
    v = random_state(rng, m)
    swapped = qft_circuit(m).run(StateVector.from_amplitudes(v.copy())).amplitudes
    raw = qft_circuit(m, include_swaps=False).run(StateVector.from_amplitudes(v.copy())).amplitudes
    reversal = [int(format(i, f"0{m}b")[::-1], 2) for i in range(1 << m)]
    assert np.abs(raw[reversal] - swapped).max() < 1e-12


def test_rotation_gates_follow_sign_choice():
    minus = qft_circuit(3, -1)
    plus = qft_circuit(3, 1)
    assert {op.gate.name for op in minus.ops if op.controls} == {"RN"}
    assert {op.gate.name for op in plus.ops if op.controls} == {"P"}
