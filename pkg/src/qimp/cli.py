"""Command-line front-end.

Exit codes: 0 success, 1 usage error, 2 data error (unreadable/invalid
input, malformed state files, decode failures).

Sampling seeds resolve as: --seed flag, else the QIMP_SEED environment
variable, else the fixed default 123456789, so default runs reproduce.
"""

import argparse
import json
import os
import sys
from pathlib import Path

from . import imaging
from .io import (
    read_image,
    read_state,
    render_histogram,
    write_distribution,
    write_image,
    write_state,
)
from .qft import qft_circuit

DEFAULT_SEED = 123456789
SEED_ENV_VAR = "QIMP_SEED"

_EPILOG = """\
conventions:
  bit order      qubit 0 is the most significant bit of every basis label
  angle map      theta = (pi/2) * value / max_value
  frqi layout    color qubit 0 (sin theta at color=0, cos theta at color=1),
                 then 2n row-major position qubits
  neqr layout    q intensity qubits (most significant) then 2n position qubits
  sampling       PCG64 inverse-CDF; --seed > QIMP_SEED env > 123456789
"""


class _Parser(argparse.ArgumentParser):
    # Usage problems must exit 1 (argparse defaults to 2, which is our data-error code).
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _frqi_meta(n: int, max_value: int) -> dict:
    return {
        "model": "frqi",
        "n": n,
        "max_value": max_value,
        "convention": "color qubit 0; amplitudes (sin theta at color=0, cos theta at color=1); "
        "theta = (pi/2) * value / max_value",
    }


def _neqr_meta(n: int, q: int, max_value: int) -> dict:
    return {
        "model": "neqr",
        "n": n,
        "q": q,
        "max_value": max_value,
        "convention": "intensity register qubits 0..q-1 (most significant), then row-major position qubits",
    }


def _resolve_seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get(SEED_ENV_VAR)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"{SEED_ENV_VAR} must be an integer, got {env!r}") from None
    return DEFAULT_SEED


def _load_image(args) -> imaging.ClassicalImage:
    return read_image(args.input, args.format, args.max_value)


def _encode(args, image: imaging.ClassicalImage):
    if args.model == "frqi":
        frqi, circuit = imaging.frqi_prepare(imaging.to_angles(image))
        return frqi.state, _frqi_meta(frqi.n, image.max_value), circuit
    neqr, circuit = imaging.neqr_prepare(image, args.bit_depth)
    return neqr.state, _neqr_meta(neqr.n, neqr.q, image.max_value), circuit


def cmd_encode(args) -> int:
    state, meta, _ = _encode(args, _load_image(args))
    write_state(state, args.output, meta)
    return 0


def cmd_decode(args) -> int:
    state, meta = read_state(args.input)
    model = meta.get("model")
    if model == "frqi":
        frqi = imaging.FrqiState(state, int(meta["n"]))
        if args.shots is not None:
            angles, _ = imaging.frqi_decode_sampled(frqi, args.shots, _resolve_seed(args))
        else:
            angles = imaging.frqi_decode_exact(frqi)
        image = imaging.angles_to_image(angles, int(meta["max_value"]))
    elif model == "neqr":
        neqr = imaging.NeqrState(state, int(meta["n"]), int(meta["q"]))
        decoded = imaging.neqr_decode(neqr)
        max_value = int(meta.get("max_value", decoded.max_value))
        image = imaging.ClassicalImage(decoded.pixels, max_value)
    else:
        raise ValueError(f"state file does not declare a known model (got {model!r})")
    write_image(image, args.output, args.format)
    return 0


def cmd_measure(args) -> int:
    state, _ = read_state(args.input)
    if args.qubits is not None:
        if args.shots is not None:
            raise ValueError("--qubits gives an exact marginal; it cannot be combined with --shots")
        qubits = tuple(int(q) for q in args.qubits.split(","))
        record = state.measure_subset(qubits)
    elif args.shots is not None:
        record = state.sample(args.shots, _resolve_seed(args))
    else:
        record = state.probabilities()
    write_distribution(record, args.output, args.format)
    sys.stdout.write(render_histogram(record))
    return 0


def cmd_qft(args) -> int:
    if Path(args.input).suffix.lower() == ".json":
        state, _ = read_state(args.input)
    else:
        state, _, _ = _encode(args, _load_image(args))
    qft_circuit(state.num_qubits, args.sign).run(state)
    if args.shots is not None:
        record = state.sample(args.shots, _resolve_seed(args))
    else:
        record = state.probabilities()
    write_distribution(record, args.output, args.dist_format)
    sys.stdout.write(render_histogram(record))
    return 0


def cmd_invert(args) -> int:
    state, meta = read_state(args.input)
    if meta.get("model") != "frqi":
        raise ValueError("invert operates on angle-encoded (frqi) state files")
    inverted = imaging.frqi_invert(imaging.FrqiState(state, int(meta["n"])))
    carried = {k: v for k, v in meta.items() if k not in ("num_qubits", "layout")}
    write_state(inverted.state, args.output, carried)
    return 0


def cmd_resources(args) -> int:
    _, _, circuit = _encode(args, _load_image(args))
    if args.decompose:
        circuit = circuit.decomposed()
    report = circuit.resources()
    obj = {
        "num_qubits": report.num_qubits,
        "gate_count_by_kind": dict(sorted(report.gate_count_by_kind.items())),
        "total_elementary_gates": report.total_elementary_gates,
        "circuit_depth": report.circuit_depth,
    }
    text = json.dumps(obj, indent=1) + "\n"
    if args.output is None:
        sys.stdout.write(text)
    else:
        Path(args.output).write_text(text)
    return 0


def _add_image_input(parser, with_model=True):
    parser.add_argument("--in", dest="input", required=True, help="input image file")
    parser.add_argument("--format", choices=("pgm", "csv"), help="input image format (default: by suffix)")
    parser.add_argument("--max-value", type=int, default=255, help="intensity ceiling for CSV input (default 255)")
    if with_model:
        parser.add_argument("--model", choices=("frqi", "neqr"), default="frqi", help="image encoding (default frqi)")
        parser.add_argument("--bit-depth", type=int, help="neqr intensity bits (default: fits max-value)")


def _add_sampling(parser):
    parser.add_argument("--shots", type=int, help="sample this many shots instead of exact probabilities")
    parser.add_argument("--seed", type=int, help=f"sampling seed (default {DEFAULT_SEED}; env {SEED_ENV_VAR})")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="qimp",
        description="Quantum image processing on a dense state-vector simulator.",
        epilog=_EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("encode", help="encode an image into a state file")
    _add_image_input(p)
    p.add_argument("--out", dest="output", required=True, help="output state .json")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="reconstruct the image from a state file")
    p.add_argument("--in", dest="input", required=True, help="input state .json")
    p.add_argument("--out", dest="output", required=True, help="output image file")
    p.add_argument("--format", choices=("pgm", "csv", "json"), help="output image format (default: by suffix)")
    _add_sampling(p)
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("measure", help="measurement distribution of a state file")
    p.add_argument("--in", dest="input", required=True, help="input state .json")
    p.add_argument("--out", dest="output", required=True, help="output distribution file")
    p.add_argument("--format", choices=("json", "csv"), default="json", help="distribution format (default json)")
    p.add_argument("--qubits", help="comma-separated qubit indices for an exact marginal")
    _add_sampling(p)
    p.set_defaults(func=cmd_measure)

    p = sub.add_parser("qft", help="Fourier-transform an image (or state file) and report the distribution")
    _add_image_input(p)
    p.add_argument("--out", dest="output", required=True, help="output distribution file")
    p.add_argument("--sign", type=int, choices=(1, -1), default=1, help="transform exponent sign (default +1)")
    p.add_argument("--dist-format", dest="dist_format", choices=("json", "csv"), default="json")
    _add_sampling(p)
    p.set_defaults(func=cmd_qft)

    p = sub.add_parser("invert", help="negate an angle-encoded image state")
    p.add_argument("--in", dest="input", required=True, help="input state .json")
    p.add_argument("--out", dest="output", required=True, help="output state .json")
    p.set_defaults(func=cmd_invert)

    p = sub.add_parser("resources", help="gate counts and depth of the preparation circuit")
    _add_image_input(p)
    p.add_argument("--out", dest="output", help="output report .json (default: stdout)")
    p.add_argument("--decompose", action="store_true", help="expand controlled rotations to CNOT + Ry first")
    p.set_defaults(func=cmd_resources)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        print(f"qimp: error: cannot read {exc.filename}: file not found", file=sys.stderr)
        return 2
    except (ValueError, OSError, KeyError, json.JSONDecodeError) as exc:
        print(f"qimp: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
