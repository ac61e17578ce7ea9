"""qimp: quantum image processing on a dense state-vector simulator.

Registers use qubit 0 as the most significant bit of the basis index;
see the README for the full set of layout and angle conventions.
"""

from .circuit import Circuit, GateOp, ResourceReport, decompose_multicontrolled_ry
from .gates import (
    Gate,
    cnot,
    hadamard,
    pauli_x,
    phase_shift,
    qft_rotation,
    rotation_y,
    swap,
    toffoli,
)
from .imaging import (
    AngleImage,
    ClassicalImage,
    FrqiState,
    NeqrState,
    angles_to_image,
    default_bit_depth,
    frqi_decode_exact,
    frqi_decode_sampled,
    frqi_invert,
    frqi_prepare,
    invert_circuit,
    neqr_decode,
    neqr_prepare,
    to_angles,
)
from .io import (
    ImageFormatError,
    read_distribution,
    read_image,
    read_state,
    render_histogram,
    write_distribution,
    write_image,
    write_state,
)
from .qft import dft_oracle, qft_circuit
from .state import MAX_QUBITS, MeasurementRecord, StateVector, basis_labels, zero_state

__version__ = "0.1.0"

__all__ = [
    "AngleImage",
    "Circuit",
    "ClassicalImage",
    "FrqiState",
    "Gate",
    "GateOp",
    "ImageFormatError",
    "MAX_QUBITS",
    "MeasurementRecord",
    "NeqrState",
    "ResourceReport",
    "StateVector",
    "angles_to_image",
    "basis_labels",
    "cnot",
    "decompose_multicontrolled_ry",
    "default_bit_depth",
    "dft_oracle",
    "frqi_decode_exact",
    "frqi_decode_sampled",
    "frqi_invert",
    "frqi_prepare",
    "hadamard",
    "invert_circuit",
    "neqr_decode",
    "neqr_prepare",
    "pauli_x",
    "phase_shift",
    "qft_circuit",
    "qft_rotation",
    "read_distribution",
    "read_image",
    "read_state",
    "render_histogram",
    "rotation_y",
    "swap",
    "to_angles",
    "toffoli",
    "write_distribution",
    "write_image",
    "write_state",
    "zero_state",
]
