"""Fourier transform over amplitude vectors: gate circuit and slow oracle.

Two exponent conventions are in circulation, so ``sign`` is explicit
everywhere: sign=+1 means the transform alpha_k = (1/sqrt(N)) * sum_j
exp(+2*pi*i*j*k/N) * alpha_j (the default), sign=-1 its inverse. The
paper-style Fourier rotation gate diag(1, exp(-2*pi*i/2^n)) realizes the
-1 convention; the +1 circuit uses the conjugate phase shifts.
"""

import cmath
import math

import numpy as np

from . import gates as gatelib
from .circuit import Circuit


def qft_circuit(m: int, sign: int = 1, include_swaps: bool = True) -> Circuit:
    """Fourier circuit on m qubits: per wire one Hadamard then controlled
    rotations of order 2..(m - wire) from the lower wires, and a terminal
    layer of floor(m/2) swaps reversing qubit order.

    ``include_swaps=False`` leaves the output bit-reversed.
    """
    if m < 1:
        raise ValueError(f"need at least one qubit, got {m}")
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    circ = Circuit(m)
    for wire in range(m):
        circ.append(gatelib.hadamard(), wire)
        for lower in range(wire + 1, m):
            order = lower - wire + 1
            if sign < 0:
                gate = gatelib.qft_rotation(order)
            else:
                gate = gatelib.phase_shift(2.0 * math.pi / 2**order)
            circ.append(gate, wire, (lower,))
    if include_swaps:
        for i in range(m // 2):
            circ.append(gatelib.swap(), (i, m - 1 - i))
    return circ


def dft_oracle(amplitudes, sign: int = 1) -> np.ndarray:
    """Direct O(N^2) discrete Fourier sum with unitary 1/sqrt(N) scaling.

    Deliberately naive (explicit double loop, no FFT): this is the
    independent oracle the circuit is checked against.
    """
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    a = [complex(x) for x in amplitudes]
    n = len(a)
    if n == 0:
        raise ValueError("amplitude vector must not be empty")
    scale = 1.0 / math.sqrt(n)
    out = np.empty(n, dtype=np.complex128)
    for k in range(n):
        acc = 0j
        for j in range(n):
            acc += cmath.exp(sign * 2j * math.pi * j * k / n) * a[j]
        out[k] = scale * acc
    return out
