"""File formats: plain-ASCII PGM (P2) and CSV images, JSON/CSV distribution
records, JSON amplitude dumps, and ASCII histogram rendering.

Everything written here is deterministic for a given input: fixed key
order, fixed float formatting (probabilities at 12 significant digits,
amplitudes at full shortest-round-trip precision), lines sorted by basis
label.
"""

import json
import math
from pathlib import Path

import numpy as np

from .imaging import ClassicalImage
from .state import MeasurementRecord, StateVector

HISTOGRAM_WIDTH = 50

LAYOUT_NOTE = "qubit 0 is the most significant bit of the basis index"


class ImageFormatError(ValueError):
    """Image parse failure carrying 1-based line/column of the offending token."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def _pgm_tokens(text: str):
    """Whitespace-separated tokens with positions; '#' comments run to EOL."""
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0]
        col = 0
        for token in body.split():
            col = body.index(token, col)
            yield token, lineno, col + 1
            col += len(token)


def _require_square_power_of_two(height: int, width: int, line: int = 1, column: int = 1):
    if height != width or height < 2 or height & (height - 1):
        raise ImageFormatError(
            f"image must be square with power-of-two side >= 2, got {height}x{width}", line, column
        )


def read_pgm(path) -> ClassicalImage:
    """Plain-ASCII PGM ("P2") reader; binary P5 is intentionally unsupported."""
    tokens = _pgm_tokens(Path(path).read_text())

    def next_token(what):
        try:
            return next(tokens)
        except StopIteration:
            raise ImageFormatError(f"unexpected end of file, expected {what}", 0, 0) from None

    magic, line, col = next_token("magic number")
    if magic != "P2":
        raise ImageFormatError(f"expected plain-ASCII PGM magic 'P2', got {magic!r}", line, col)

    header = []
    for what in ("width", "height", "maxval"):
        token, line, col = next_token(what)
        try:
            value = int(token)
        except ValueError:
            raise ImageFormatError(f"{what} must be an integer, got {token!r}", line, col) from None
        if value < 1:
            raise ImageFormatError(f"{what} must be >= 1, got {value}", line, col)
        header.append(value)
    width, height, maxval = header
    _require_square_power_of_two(height, width, line, col)

    pixels = np.empty(width * height, dtype=np.int64)
    for i in range(pixels.size):
        token, line, col = next_token("pixel value")
        try:
            value = int(token)
        except ValueError:
            raise ImageFormatError(f"pixel must be an integer, got {token!r}", line, col) from None
        if not 0 <= value <= maxval:
            raise ImageFormatError(f"pixel {value} outside [0, {maxval}]", line, col)
        pixels[i] = value
    for token, line, col in tokens:
        raise ImageFormatError(f"trailing data {token!r} after {pixels.size} pixels", line, col)
    return ClassicalImage(pixels.reshape(height, width), maxval)


def read_csv_image(path, max_value: int = 255) -> ClassicalImage:
    """Comma-separated integer rows; max_value comes from the caller."""
    rows = []
    width = None
    for lineno, line in enumerate(Path(path).read_text().splitlines(), start=1):
        if not line.strip():
            continue
        cells = line.split(",")
        row = []
        col = 1
        for cell in cells:
            try:
                value = int(cell.strip())
            except ValueError:
                raise ImageFormatError(f"expected an integer, got {cell.strip()!r}", lineno, col) from None
            if not 0 <= value <= max_value:
                raise ImageFormatError(f"pixel {value} outside [0, {max_value}]", lineno, col)
            row.append(value)
            col += len(cell) + 1
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise ImageFormatError(f"row has {len(row)} values, expected {width}", lineno, 1)
        rows.append(row)
    if not rows:
        raise ImageFormatError("empty image file", 1, 1)
    _require_square_power_of_two(len(rows), width)
    return ClassicalImage(np.array(rows, dtype=np.int64), max_value)


def read_image(path, fmt: str | None = None, max_value: int = 255) -> ClassicalImage:
    """Dispatch on ``fmt`` or the file suffix (.pgm / .csv)."""
    if fmt is None:
        fmt = Path(path).suffix.lstrip(".").lower()
    if fmt == "pgm":
        return read_pgm(path)
    if fmt == "csv":
        return read_csv_image(path, max_value)
    raise ValueError(f"unsupported image format {fmt!r} (expected pgm or csv)")


def write_image(image: ClassicalImage, path, fmt: str | None = None):
    if fmt is None:
        fmt = Path(path).suffix.lstrip(".").lower()
    if fmt == "pgm":
        lines = ["P2", f"{image.width} {image.height}", str(image.max_value)]
        lines += [" ".join(str(v) for v in row) for row in image.pixels]
        text = "\n".join(lines) + "\n"
    elif fmt == "csv":
        text = "\n".join(",".join(str(v) for v in row) for row in image.pixels) + "\n"
    elif fmt == "json":
        obj = {
            "width": image.width,
            "height": image.height,
            "max_value": image.max_value,
            "pixels": image.pixels.tolist(),
        }
        text = json.dumps(obj, indent=1) + "\n"
    else:
        raise ValueError(f"unsupported image format {fmt!r} (expected pgm, csv or json)")
    Path(path).write_text(text)


def _round_probability(p: float) -> float:
    return float(f"{p:.12g}")


def distribution_json(record: MeasurementRecord) -> str:
    """JSON text of a record: labels, probabilities (12 significant digits),
    counts/shots/seed when present; label order is ascending."""
    obj = {
        "labels": list(record.basis_labels),
        "probabilities": [_round_probability(p) for p in record.probabilities],
    }
    if record.counts is not None:
        obj["counts"] = [int(c) for c in record.counts]
        obj["shots"] = int(record.shots)
        if record.seed is not None:
            obj["seed"] = int(record.seed)
    return json.dumps(obj, indent=1) + "\n"


def write_distribution(record: MeasurementRecord, path, fmt: str = "json"):
    if fmt == "json":
        text = distribution_json(record)
    elif fmt == "csv":
        lines = []
        for i, (label, p) in enumerate(zip(record.basis_labels, record.probabilities)):
            row = f"{label},{_round_probability(p)!r}"
            if record.counts is not None:
                row += f",{int(record.counts[i])}"
            lines.append(row)
        text = "\n".join(lines) + "\n"
    else:
        raise ValueError(f"unsupported distribution format {fmt!r} (expected json or csv)")
    Path(path).write_text(text)


def read_distribution(path) -> MeasurementRecord:
    obj = json.loads(Path(path).read_text())
    counts = obj.get("counts")
    return MeasurementRecord(
        list(obj["labels"]),
        np.asarray(obj["probabilities"], dtype=np.float64),
        counts=None if counts is None else np.asarray(counts, dtype=np.int64),
        shots=obj.get("shots"),
        seed=obj.get("seed"),
    )


def render_histogram(record: MeasurementRecord) -> str:
    """One bar row per basis label; bar length scales a fixed 50-char width,
    percentage printed to one decimal."""
    lines = []
    for label, p in zip(record.basis_labels, record.probabilities):
        bar = "#" * int(round(p * HISTOGRAM_WIDTH))
        lines.append(f"|{label}> {bar:<{HISTOGRAM_WIDTH}} {100.0 * p:5.1f}%")
    return "\n".join(lines) + "\n"


def write_state(state: StateVector, path, meta: dict | None = None):
    """Amplitude dump: [re, im] pairs by basis index, with a header pinning
    the bit layout and codec convention so fixtures are self-describing."""
    obj = {"num_qubits": state.num_qubits, "layout": LAYOUT_NOTE}
    for key, value in (meta or {}).items():
        obj[key] = value
    obj["amplitudes"] = [[float(a.real), float(a.imag)] for a in state.amplitudes]
    Path(path).write_text(json.dumps(obj, indent=1) + "\n")


def read_state(path) -> tuple[StateVector, dict]:
    obj = json.loads(Path(path).read_text())
    pairs = obj.pop("amplitudes")
    amplitudes = np.array([complex(re, im) for re, im in pairs], dtype=np.complex128)
    state = StateVector.from_amplitudes(amplitudes)
    if state.num_qubits != obj.get("num_qubits"):
        raise ValueError(
            f"amplitude count {amplitudes.size} does not match num_qubits={obj.get('num_qubits')}"
        )
    norm = state.norm()
    if not math.isfinite(norm) or abs(norm - 1.0) > 1e-8:
        raise ValueError(f"state file is not normalized (norm {norm!r})")
    return state, obj
