"""Ordered gate programs: execution, inversion, resource counts, text form."""

from collections import Counter
from dataclasses import dataclass

from . import gates as gatelib
from .gates import Gate
from .state import StateVector


@dataclass(frozen=True)
class GateOp:
    """One gate application: a unitary plus target/control qubit indices."""

    gate: Gate
    targets: tuple[int, ...]
    controls: tuple[int, ...] = ()

    def __post_init__(self):
        targets = (self.targets,) if isinstance(self.targets, int) else tuple(int(t) for t in self.targets)
        controls = (self.controls,) if isinstance(self.controls, int) else tuple(int(c) for c in self.controls)
        object.__setattr__(self, "targets", targets)
        object.__setattr__(self, "controls", controls)
        if len(set(targets)) != len(targets) or len(set(controls)) != len(controls):
            raise ValueError("duplicate qubit indices")
        if set(targets) & set(controls):
            raise ValueError(f"targets {targets} and controls {controls} collide")
        if 1 << len(targets) != self.gate.matrix.shape[0]:
            raise ValueError(
                f"gate {self.gate.name} needs {self.gate.num_targets} target(s), got {len(targets)}"
            )

    @property
    def qubits(self) -> tuple[int, ...]:
        return self.targets + self.controls

    @property
    def kind(self) -> str:
        """Gate name prefixed with one C per control, e.g. CCRY."""
        return "C" * len(self.controls) + self.gate.name


@dataclass(frozen=True)
class ResourceReport:
    num_qubits: int
    gate_count_by_kind: dict[str, int]
    total_elementary_gates: int
    circuit_depth: int

    def __post_init__(self):
        if any(v < 0 for v in self.gate_count_by_kind.values()):
            raise ValueError("gate counts must be nonnegative")
        if self.total_elementary_gates != sum(self.gate_count_by_kind.values()):
            raise ValueError("total gate count inconsistent with per-kind counts")

    def controlled_count(self, *names: str) -> int:
        """Number of ops with at least one control whose base gate is in names."""
        total = 0
        for kind, cnt in self.gate_count_by_kind.items():
            for name in names:
                prefix = kind[: len(kind) - len(name)]
                if kind.endswith(name) and prefix and set(prefix) == {"C"}:
                    total += cnt
                    break
        return total


class Circuit:
    """An ordered list of GateOps over a fixed-width register.

    Circuits are treated as immutable once built; ``run`` mutates only the
    StateVector it is given.
    """

    def __init__(self, num_qubits: int, ops=()):
        if num_qubits < 1:
            raise ValueError(f"num_qubits must be >= 1, got {num_qubits}")
        self.num_qubits = int(num_qubits)
        self.ops: list[GateOp] = []
        for op in ops:
            self._push(op)

    def _push(self, op: GateOp):
        for q in op.qubits:
            if not 0 <= q < self.num_qubits:
                raise ValueError(f"qubit index {q} out of range for {self.num_qubits} qubits")
        self.ops.append(op)

    def append(self, gate: Gate, targets, controls=()) -> "Circuit":
        self._push(GateOp(gate, targets, controls))
        return self

    # Small builder sugar, matching how circuits read in the demos.
    def h(self, qubit: int) -> "Circuit":
        return self.append(gatelib.hadamard(), qubit)

    def x(self, qubit: int) -> "Circuit":
        return self.append(gatelib.pauli_x(), qubit)

    def ry(self, theta: float, qubit: int, controls=()) -> "Circuit":
        return self.append(gatelib.rotation_y(theta), qubit, controls)

    def phase(self, phi: float, qubit: int, controls=()) -> "Circuit":
        return self.append(gatelib.phase_shift(phi), qubit, controls)

    def cnot(self, control: int, target: int) -> "Circuit":
        return self.append(gatelib.pauli_x(), target, (control,))

    def swap(self, a: int, b: int) -> "Circuit":
        return self.append(gatelib.swap(), (a, b))

    def run(self, state: StateVector | None = None) -> StateVector:
        """Apply every op left to right; returns the (mutated) state."""
        if state is None:
            state = StateVector(self.num_qubits)
        if state.num_qubits != self.num_qubits:
            raise ValueError(
                f"state has {state.num_qubits} qubits, circuit needs {self.num_qubits}"
            )
        for op in self.ops:
            state.apply_gate(op.gate, op.targets, op.controls)
        return state

    def inverse(self) -> "Circuit":
        """Reversed op order with every gate conjugate-transposed."""
        return Circuit(
            self.num_qubits,
            (GateOp(op.gate.dagger(), op.targets, op.controls) for op in reversed(self.ops)),
        )

    def resources(self) -> ResourceReport:
        """Exact per-kind gate counts and greedy-layered depth.

        An op starts a new layer iff it shares a qubit with the current
        layer, else it joins the layer.
        """
        counts = Counter(op.kind for op in self.ops)
        depth = 0
        layer: set[int] = set()
        for op in self.ops:
            qubits = set(op.qubits)
            if depth == 0 or layer & qubits:
                depth += 1
                layer = qubits
            else:
                layer |= qubits
        return ResourceReport(self.num_qubits, dict(counts), len(self.ops), depth)

    def decomposed(self) -> "Circuit":
        """Expand every controlled Ry into CNOTs + single-qubit Ry rotations."""
        out = Circuit(self.num_qubits)
        for op in self.ops:
            if op.gate.name == "RY" and op.controls:
                sub = decompose_multicontrolled_ry(
                    op.gate.angle, op.controls, op.targets[0], self.num_qubits
                )
                out.ops.extend(sub.ops)
            else:
                out.ops.append(op)
        return out

    def __add__(self, other: "Circuit") -> "Circuit":
        if not isinstance(other, Circuit):
            return NotImplemented
        if other.num_qubits != self.num_qubits:
            raise ValueError("cannot concatenate circuits of different widths")
        return Circuit(self.num_qubits, self.ops + other.ops)

    def __len__(self):
        return len(self.ops)

    def __iter__(self):
        return iter(self.ops)

    def __repr__(self):
        return f"Circuit(num_qubits={self.num_qubits}, ops={len(self.ops)})"

    def to_text(self) -> str:
        """Line format: header ``qubits=N`` then ``GATE [angle] targets=.. controls=..``."""
        lines = [f"qubits={self.num_qubits}"]
        for op in self.ops:
            parts = [op.gate.name]
            if op.gate.angle is not None:
                parts.append(repr(op.gate.angle))
            parts.append("targets=" + ",".join(map(str, op.targets)))
            if op.controls:
                parts.append("controls=" + ",".join(map(str, op.controls)))
            lines.append(" ".join(parts))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Circuit":
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if not lines or not lines[0].startswith("qubits="):
            raise ValueError("circuit text must start with a 'qubits=N' header")
        circ = cls(int(lines[0].split("=", 1)[1]))
        for ln in lines[1:]:
            tokens = ln.split()
            name, rest = tokens[0], tokens[1:]
            angle = None
            if rest and "=" not in rest[0]:
                angle = float(rest[0])
                rest = rest[1:]
            fields = dict(tok.split("=", 1) for tok in rest)
            targets = tuple(int(t) for t in fields["targets"].split(","))
            controls = tuple(int(c) for c in fields["controls"].split(",")) if "controls" in fields else ()
            circ.append(_gate_from_name(name, angle), targets, controls)
        return circ


_PLAIN_GATES = {
    "H": gatelib.hadamard,
    "X": gatelib.pauli_x,
    "CNOT": gatelib.cnot,
    "TOFFOLI": gatelib.toffoli,
    "SWAP": gatelib.swap,
}

_ANGLE_GATES = {
    "RY": gatelib.rotation_y,
    "P": gatelib.phase_shift,
    "RN": gatelib.fourier_rotation_from_angle,
}


def _gate_from_name(name: str, angle: float | None) -> Gate:
    if name in _PLAIN_GATES:
        if angle is not None:
            raise ValueError(f"gate {name} takes no angle")
        return _PLAIN_GATES[name]()
    if name in _ANGLE_GATES:
        if angle is None:
            raise ValueError(f"gate {name} requires an angle")
        return _ANGLE_GATES[name](angle)
    raise ValueError(f"unknown gate name {name!r}")


def decompose_multicontrolled_ry(theta: float, controls, target: int, num_qubits: int | None = None) -> Circuit:
    """k-controlled Ry(theta) as 2^k CNOTs and 2^k single-qubit rotations.

    Gray-code construction: step s applies Ry(theta/2^k * (-1)^popcount(gray(s)))
    to the target, then a CNOT from the control whose bit flips between
    gray(s) and gray(s+1). CNOT conjugation negates Ry angles, so for a
    control pattern x the rotations sum to theta exactly when x is all ones
    and cancel otherwise.
    """
    controls = (controls,) if isinstance(controls, int) else tuple(int(c) for c in controls)
    target = int(target)
    k = len(controls)
    if k < 1:
        raise ValueError("at least one control qubit required")
    if len(set(controls)) != k or target in controls:
        raise ValueError("duplicate qubit indices")
    if num_qubits is None:
        num_qubits = max((target,) + controls) + 1
    circ = Circuit(num_qubits)
    step = float(theta) / (1 << k)
    for s in range(1 << k):
        gray = s ^ (s >> 1)
        sign = -1.0 if gray.bit_count() & 1 else 1.0
        circ.append(gatelib.rotation_y(sign * step), target)
        flip_bit = min(((s + 1) & -(s + 1)).bit_length() - 1, k - 1)
        circ.append(gatelib.pauli_x(), target, (controls[flip_bit],))
    return circ
