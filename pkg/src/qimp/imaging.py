"""Classical-image quantum codecs.

Angle-amplitude encoding: a 2^n x 2^n grayscale image becomes a 2n+1 qubit
state whose color qubit (qubit 0, the most significant) carries pixel
intensity as a rotation angle, entangled with a uniform position register.
Basis-state encoding: intensities become a q-bit integer register (qubits
0..q-1) entangled with the 2n position qubits that follow.

Fixed conventions (tests pin all of them):
  * intensity-to-angle map: theta = (pi/2) * value / max_value
  * position index: row-major, row bits before column bits
  * color amplitude pair: SIN_AT_ZERO - sin(theta) at color=0 and
    cos(theta) at color=1
"""

import math
from dataclasses import dataclass

import numpy as np

from . import gates as gatelib
from .circuit import Circuit
from .state import MeasurementRecord, StateVector

COLOR_QUBIT = 0
ANGLE_SPAN = math.pi / 2.0

# Color-qubit amplitude ordering; flipping this transposes every prepared
# state's sin/cos pair and the decoder follows along.
SIN_AT_ZERO = True


@dataclass(eq=False)
class ClassicalImage:
    """Integer-intensity grid, row-major, values in [0, max_value]."""

    pixels: np.ndarray
    max_value: int = 255

    def __post_init__(self):
        p = np.asarray(self.pixels)
        if p.ndim != 2 or p.size == 0:
            raise ValueError("pixels must form a non-empty 2-D grid")
        if not np.issubdtype(p.dtype, np.integer):
            if not np.all(p == np.rint(p)):
                raise ValueError("pixel values must be integers")
        p = p.astype(np.int64)
        if self.max_value < 1:
            raise ValueError(f"max_value must be >= 1, got {self.max_value}")
        if (p < 0).any() or (p > self.max_value).any():
            raise ValueError(f"pixel values must lie in [0, {self.max_value}]")
        self.pixels = p
        self.max_value = int(self.max_value)

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    @property
    def width(self) -> int:
        return self.pixels.shape[1]


@dataclass(eq=False)
class AngleImage:
    """Flat row-major angles theta_i in [0, pi/2] for a 2^n x 2^n image.

    ``estimated`` marks positions whose angle was actually measured; a
    shot-based decode leaves never-sampled positions NaN and unestimated
    rather than guessing.
    """

    n: int
    angles: np.ndarray
    estimated: np.ndarray | None = None

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"image exponent n must be >= 1, got {self.n}")
        a = np.asarray(self.angles, dtype=np.float64)
        if a.shape != (1 << (2 * self.n),):
            raise ValueError(f"expected {1 << (2 * self.n)} angles for n={self.n}, got {a.shape}")
        if self.estimated is None:
            known = np.ones(a.size, dtype=bool)
        else:
            known = np.asarray(self.estimated, dtype=bool)
            if known.shape != a.shape:
                raise ValueError("estimated mask must match the angle array")
            self.estimated = known
        if not np.isfinite(a[known]).all():
            raise ValueError("estimated angles must be finite")
        if (a[known] < -1e-12).any() or (a[known] > ANGLE_SPAN + 1e-12).any():
            raise ValueError("angles must lie in [0, pi/2]")
        self.angles = a

    @property
    def side(self) -> int:
        return 1 << self.n

    def grid(self) -> np.ndarray:
        return self.angles.reshape(self.side, self.side)


@dataclass(eq=False)
class FrqiState:
    """Angle-encoded image state over 2n+1 qubits; color qubit first."""

    state: StateVector
    n: int
    color_qubit: int = COLOR_QUBIT

    def __post_init__(self):
        if self.state.num_qubits != 2 * self.n + 1:
            raise ValueError(f"angle-encoded image of size 2^{self.n} needs {2 * self.n + 1} qubits")

    @property
    def position_qubits(self) -> tuple[int, ...]:
        return tuple(range(1, 2 * self.n + 1))


@dataclass(eq=False)
class NeqrState:
    """Basis-encoded image state over 2n+q qubits; intensity register first."""

    state: StateVector
    n: int
    q: int

    def __post_init__(self):
        if self.q < 1:
            raise ValueError(f"intensity bit-width must be >= 1, got {self.q}")
        if self.state.num_qubits != 2 * self.n + self.q:
            raise ValueError(f"basis-encoded image needs {2 * self.n + self.q} qubits")

    @property
    def position_qubits(self) -> tuple[int, ...]:
        return tuple(range(self.q, self.q + 2 * self.n))


def _image_exponent(image: ClassicalImage) -> int:
    side = image.height
    if image.width != side or side < 2 or side & (side - 1):
        raise ValueError(
            f"image must be square with power-of-two side >= 2, got {image.height}x{image.width}"
        )
    return side.bit_length() - 1


def to_angles(image: ClassicalImage) -> AngleImage:
    """Map intensities linearly onto [0, pi/2]: theta = (pi/2) * v / max_value."""
    n = _image_exponent(image)
    angles = ANGLE_SPAN * image.pixels.reshape(-1).astype(np.float64) / image.max_value
    return AngleImage(n, angles)


def angles_to_image(angle_image: AngleImage, max_value: int) -> ClassicalImage:
    """Invert to_angles up to quantization: v = round(theta / (pi/2) * max_value)."""
    if angle_image.estimated is not None and not angle_image.estimated.all():
        missing = int((~angle_image.estimated).sum())
        raise ValueError(f"{missing} position(s) were never estimated; cannot form an image")
    values = np.rint(angle_image.angles / ANGLE_SPAN * max_value).astype(np.int64)
    values = np.clip(values, 0, max_value)
    side = angle_image.side
    return ClassicalImage(values.reshape(side, side), max_value)


def _position_bit_conjugation(circ: Circuit, position_qubits, index: int):
    """X every position qubit whose bit of ``index`` is 0 (self-inverse)."""
    width = len(position_qubits)
    for j, qubit in enumerate(position_qubits):
        if not (index >> (width - 1 - j)) & 1:
            circ.append(gatelib.pauli_x(), qubit)


def frqi_prepare(angle_image: AngleImage) -> tuple[FrqiState, Circuit]:
    """Build the preparation circuit and the prepared state.

    Hadamards put the position register into a uniform superposition; for
    each position a multi-controlled Ry on the color qubit (controls
    X-conjugated onto the position's bit pattern) sets the amplitude pair
    (sin theta_i, cos theta_i). With the real-rotation convention
    rotation_y(t)|0> = cos t|0> + sin t|1>, the angle realizing that pair
    is pi/2 - theta_i (or theta_i when SIN_AT_ZERO is off).
    """
    if angle_image.estimated is not None and not angle_image.estimated.all():
        raise ValueError("cannot prepare a state from an angle image with unestimated positions")
    n = angle_image.n
    num_qubits = 2 * n + 1
    position = tuple(range(1, num_qubits))
    circ = Circuit(num_qubits)
    for qubit in position:
        circ.append(gatelib.hadamard(), qubit)
    for i, theta in enumerate(angle_image.angles):
        rotation = (ANGLE_SPAN - theta) if SIN_AT_ZERO else theta
        _position_bit_conjugation(circ, position, i)
        circ.append(gatelib.rotation_y(rotation), COLOR_QUBIT, position)
        _position_bit_conjugation(circ, position, i)
    state = circ.run(StateVector(num_qubits))
    return FrqiState(state, n), circ


def _frqi_component_blocks(frqi: FrqiState) -> tuple[np.ndarray, np.ndarray]:
    """(sin-component, cos-component) amplitude blocks, indexed by position."""
    half = 1 << (2 * frqi.n)
    a = frqi.state.amplitudes
    if SIN_AT_ZERO:
        return a[:half], a[half:]
    return a[half:], a[:half]


def frqi_decode_exact(frqi: FrqiState) -> AngleImage:
    """Recover every theta_i from the amplitude pair at position i.

    theta_i = atan2(|sin component|, |cos component|); magnitudes make the
    decode insensitive to a global phase. A position with (near) zero
    weight signals a non-image-shaped state and raises.
    """
    sin_part, cos_part = _frqi_component_blocks(frqi)
    weight = np.hypot(np.abs(sin_part), np.abs(cos_part))
    dead = np.flatnonzero(weight < 1e-12)
    if dead.size:
        raise ValueError(f"no amplitude weight at position {int(dead[0])}; not an angle-encoded image state")
    angles = np.arctan2(np.abs(sin_part), np.abs(cos_part))
    return AngleImage(frqi.n, angles)


def frqi_decode_sampled(frqi: FrqiState, shots: int, seed: int) -> tuple[AngleImage, MeasurementRecord]:
    """Estimate angles from a shot histogram.

    theta_i is taken from the conditional color distribution at position i:
    atan2(sqrt(sin-side counts), sqrt(cos-side counts)). Positions that
    never appear in the sample are flagged unestimated (NaN + mask), not
    guessed. The full histogram record is returned alongside.
    """
    record = frqi.state.sample(shots, seed)
    half = 1 << (2 * frqi.n)
    counts = record.counts
    zero_block, one_block = counts[:half], counts[half:]
    sin_counts, cos_counts = (zero_block, one_block) if SIN_AT_ZERO else (one_block, zero_block)
    total = sin_counts + cos_counts
    estimated = total > 0
    angles = np.full(half, np.nan)
    angles[estimated] = np.arctan2(
        np.sqrt(sin_counts[estimated]), np.sqrt(cos_counts[estimated])
    )
    return AngleImage(frqi.n, angles, estimated=estimated), record


def invert_circuit(n: int) -> Circuit:
    """Two-gate intensity negation: Ry(pi) then X on the color qubit.

    Ry(pi) is -I in the real-rotation convention, so the pair acts as -X:
    it swaps each position's sin/cos amplitudes (theta -> pi/2 - theta,
    i.e. v -> max_value - v) up to a global phase, and is an involution.
    """
    circ = Circuit(2 * n + 1)
    circ.append(gatelib.rotation_y(math.pi), COLOR_QUBIT)
    circ.append(gatelib.pauli_x(), COLOR_QUBIT)
    return circ


def frqi_invert(frqi: FrqiState) -> FrqiState:
    """Negate the encoded image: decoded intensities become max_value - v."""
    state = frqi.state.copy()
    invert_circuit(frqi.n).run(state)
    return FrqiState(state, frqi.n)


def default_bit_depth(max_value: int) -> int:
    """Smallest q with max_value < 2^q."""
    return max(1, int(max_value).bit_length())


def neqr_prepare(image: ClassicalImage, bit_depth: int | None = None) -> tuple[NeqrState, Circuit]:
    """Basis-encode an image: uniform position register, intensity bits set
    by multi-controlled X gates selected per position.
    """
    n = _image_exponent(image)
    q = default_bit_depth(image.max_value) if bit_depth is None else int(bit_depth)
    if q < 1:
        raise ValueError(f"bit depth must be >= 1, got {q}")
    flat = image.pixels.reshape(-1)
    if (flat >= 1 << q).any():
        raise ValueError(f"pixel value {int(flat.max())} does not fit in {q} bits")
    num_qubits = 2 * n + q
    position = tuple(range(q, num_qubits))
    circ = Circuit(num_qubits)
    for qubit in position:
        circ.append(gatelib.hadamard(), qubit)
    for i, value in enumerate(flat):
        set_bits = [b for b in range(q) if (int(value) >> (q - 1 - b)) & 1]
        if not set_bits:
            continue
        _position_bit_conjugation(circ, position, i)
        for b in set_bits:
            circ.append(gatelib.pauli_x(), b, position)
        _position_bit_conjugation(circ, position, i)
    state = circ.run(StateVector(num_qubits))
    return NeqrState(state, n, q), circ


def neqr_decode(neqr: NeqrState) -> ClassicalImage:
    """Read back the unique intensity label per position; exact integers.

    Raises if a position holds no weight or superposed intensities (a
    corrupted basis encoding). The returned image uses max_value = 2^q - 1.
    """
    half = 1 << (2 * neqr.n)
    magnitudes = np.abs(neqr.state.amplitudes.reshape(1 << neqr.q, half))
    threshold = 0.5 / (1 << neqr.n)
    values = np.empty(half, dtype=np.int64)
    for i in range(half):
        hits = np.flatnonzero(magnitudes[:, i] > threshold)
        if hits.size == 0:
            raise ValueError(f"no intensity recorded at position {i}")
        if hits.size > 1:
            raise ValueError(f"superposed intensities at position {i}: {hits.tolist()}")
        values[i] = hits[0]
    side = 1 << neqr.n
    return ClassicalImage(values.reshape(side, side), (1 << neqr.q) - 1)
