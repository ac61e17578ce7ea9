"""Dense state-vector register: gate application, probabilities, sampling.

Bit convention used everywhere in this package: qubit 0 is the MOST
significant bit of the basis index, so the basis label for index i is the
plain binary string of i and reads |q0 q1 ... q_{n-1}> left to right.
"""

import math
from dataclasses import dataclass

import numpy as np

from .gates import Gate

MAX_QUBITS = 26

# Sampling PRNG, fixed for cross-platform reproducibility of fixtures:
# numpy's PCG64 bit generator driving inverse-CDF draws over the
# cumulative probability table.
PRNG_NAME = "PCG64"


def basis_labels(num_qubits: int) -> list[str]:
    """All basis labels of an n-qubit register, ascending by index."""
    return [format(i, f"0{num_qubits}b") for i in range(1 << num_qubits)]


@dataclass(eq=False)
class MeasurementRecord:
    """Probability table over basis labels, optionally with shot counts.

    ``probabilities`` always sums to 1: exact Born probabilities for an
    analytic record, empirical frequencies (counts/shots) for a sampled
    one.
    """

    basis_labels: list[str]
    probabilities: np.ndarray
    counts: np.ndarray | None = None
    shots: int | None = None
    seed: int | None = None

    def __post_init__(self):
        p = np.asarray(self.probabilities, dtype=np.float64)
        if p.ndim != 1 or p.size != len(self.basis_labels):
            raise ValueError("one probability per basis label required")
        if (p < -1e-12).any() or (p > 1.0 + 1e-12).any():
            raise ValueError("probabilities must lie in [0, 1]")
        if abs(p.sum() - 1.0) > 1e-10:
            raise ValueError(f"probabilities sum to {p.sum()!r}, expected 1")
        self.probabilities = p
        if self.counts is not None:
            c = np.asarray(self.counts, dtype=np.int64)
            if c.shape != p.shape or (c < 0).any():
                raise ValueError("counts must be nonnegative, one per label")
            if self.shots is None or int(c.sum()) != int(self.shots):
                raise ValueError("counts must sum to shots")
            self.counts = c

    def as_mapping(self) -> dict[str, float]:
        return dict(zip(self.basis_labels, self.probabilities.tolist()))


class StateVector:
    """2^n complex amplitudes of an n-qubit register, unit L2 norm.

    Construction yields |0...0>. All amplitude arithmetic is complex128.
    A StateVector is owned by one logical thread of control while being
    mutated; nothing in this module touches global mutable state.
    """

    __slots__ = ("num_qubits", "amplitudes")

    def __init__(self, num_qubits: int):
        if not 1 <= num_qubits <= MAX_QUBITS:
            raise ValueError(f"num_qubits must be in [1, {MAX_QUBITS}], got {num_qubits}")
        self.num_qubits = int(num_qubits)
        self.amplitudes = np.zeros(1 << self.num_qubits, dtype=np.complex128)
        self.amplitudes[0] = 1.0

    @classmethod
    def from_amplitudes(cls, amplitudes) -> "StateVector":
        """Wrap an explicit amplitude vector (length 2^n).

        The norm is the caller's responsibility; gate application preserves
        whatever norm comes in, which keeps linearity testable.
        """
        a = np.array(amplitudes, dtype=np.complex128)
        n = int(a.size).bit_length() - 1
        if a.ndim != 1 or a.size != 1 << n or not 1 <= n <= MAX_QUBITS:
            raise ValueError(f"amplitude vector length must be 2^n with 1 <= n <= {MAX_QUBITS}")
        if not np.isfinite(a).all():
            raise ValueError("amplitudes must be finite")
        sv = cls.__new__(cls)
        sv.num_qubits = n
        sv.amplitudes = a
        return sv

    def copy(self) -> "StateVector":
        return StateVector.from_amplitudes(self.amplitudes)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def apply_gate(self, gate, targets, controls=()) -> "StateVector":
        """Apply a k-qubit unitary to ``targets``, conditioned on ``controls``.

        Amplitudes whose control bits are all 1 get the unitary on the
        target-bit subspace; every other amplitude is left untouched.
        ``gate`` may be a Gate or a raw 2^k x 2^k matrix (trusted, not
        re-validated). targets[0] is the most significant bit of the gate's
        row/column index. Updates in place and returns self.
        """
        matrix = gate.matrix if isinstance(gate, Gate) else np.asarray(gate, dtype=np.complex128)
        targets = (int(targets),) if isinstance(targets, (int, np.integer)) else tuple(int(t) for t in targets)
        controls = (int(controls),) if isinstance(controls, (int, np.integer)) else tuple(int(c) for c in controls)
        n = self.num_qubits
        k = len(targets)
        if k == 0:
            raise ValueError("at least one target qubit required")
        if len(set(targets)) != k or len(set(controls)) != len(controls):
            raise ValueError("duplicate qubit indices")
        if set(targets) & set(controls):
            raise ValueError(f"targets {targets} and controls {controls} collide")
        for q in targets + controls:
            if not 0 <= q < n:
                raise ValueError(f"qubit index {q} out of range for {n} qubits")
        if matrix.shape != (1 << k, 1 << k):
            raise ValueError(f"gate of shape {matrix.shape} does not fit {k} target qubit(s)")

        # Stride view: axis q of the (2,)*n tensor is qubit q. Fixing the
        # control axes at 1 selects exactly the amplitudes the gate acts on;
        # writing through the views updates self.amplitudes in place.
        psi = self.amplitudes.reshape((2,) * n)
        ctrl = frozenset(controls)
        sub = psi[tuple(1 if q in ctrl else slice(None) for q in range(n))]
        remaining = [q for q in range(n) if q not in ctrl]
        positions = [remaining.index(t) for t in targets]
        moved = np.moveaxis(sub, positions, range(sub.ndim - k, sub.ndim))
        updated = moved.reshape(-1, 1 << k) @ matrix.T
        moved[...] = updated.reshape(moved.shape)
        return self

    def probabilities(self) -> MeasurementRecord:
        """Exact Born probabilities |amplitude|^2 over all basis labels."""
        p = np.abs(self.amplitudes) ** 2
        return MeasurementRecord(basis_labels(self.num_qubits), p)

    def sample(self, shots: int, seed: int) -> MeasurementRecord:
        """Draw ``shots`` i.i.d. basis outcomes; deterministic per seed.

        Inverse-CDF sampling over the cumulative probability table with a
        PCG64 generator, so a (state, shots, seed) triple always yields the
        same histogram.
        """
        if shots < 1:
            raise ValueError(f"shots must be >= 1, got {shots}")
        p = np.abs(self.amplitudes) ** 2
        if abs(p.sum() - 1.0) > 1e-8:
            raise ValueError("cannot sample an unnormalized state")
        cum = np.cumsum(p)
        rng = np.random.Generator(np.random.PCG64(seed))
        draws = rng.random(shots)
        idx = np.searchsorted(cum, draws, side="right")
        # Guard the u >= cum[-1] float tail: never land on a zero-probability state.
        idx = np.minimum(idx, int(np.flatnonzero(p > 0)[-1]))
        counts = np.bincount(idx, minlength=p.size)
        return MeasurementRecord(
            basis_labels(self.num_qubits),
            counts / shots,
            counts=counts,
            shots=int(shots),
            seed=int(seed),
        )

    def measure_subset(self, qubits) -> MeasurementRecord:
        """Marginal distribution of a qubit subset (unmeasured qubits summed out).

        Labels carry the chosen qubits' bits in the order given.
        """
        qubits = (int(qubits),) if isinstance(qubits, (int, np.integer)) else tuple(int(q) for q in qubits)
        if not qubits:
            raise ValueError("qubit subset must not be empty")
        if len(set(qubits)) != len(qubits):
            raise ValueError("duplicate qubit indices")
        n = self.num_qubits
        for q in qubits:
            if not 0 <= q < n:
                raise ValueError(f"qubit index {q} out of range for {n} qubits")
        p = (np.abs(self.amplitudes) ** 2).reshape((2,) * n)
        order = list(qubits) + [q for q in range(n) if q not in qubits]
        marginal = p.transpose(order).reshape(1 << len(qubits), -1).sum(axis=1)
        labels = [format(i, f"0{len(qubits)}b") for i in range(1 << len(qubits))]
        return MeasurementRecord(labels, marginal)

    def __repr__(self):
        return f"StateVector(num_qubits={self.num_qubits})"


def zero_state(num_qubits: int) -> StateVector:
    """Fresh |0...0> register."""
    return StateVector(num_qubits)
