"""Command-line front end: codegen, codec, framing and simulation as
subcommands.

Payload files are streamed in 40-byte records: the 270 payload bits of
one frame occupy record bits 0..269 (big-endian bit order) and the
trailing 50 bits must be zero. A final partial record is zero-padded.
With that convention `encode | decode` round-trips byte-identically.

Exit codes: 0 success, 1 usage error, 2 data/format error.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from .framing import (FRAME_BYTES, INFO_BITS_PER_FRAME, build_frame,
                      bytes_to_frame, frame_to_bytes, unframe)
from .harness import ChannelConfig, emit_stats, run_simulation, run_sweep
from .parallel_encoder import parity_bits
from .parallel_gen import (build_xor3_network, derive_parity_matrix,
                           emit_netlist, matrix_from_text, matrix_to_text,
                           parse_netlist, N_INFO_BITS)

REFERENCE_DESIGN_FANIN = 70
REFERENCE_DESIGN_DEPTH = 4

_ENCODER_NAMES = {"ref": "reference", "lfsr": "lfsr", "parallel": "parallel"}


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; this tool reserves 2 for data errors."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _load_matrix(path: str | None):
    if path is None:
        return derive_parity_matrix()
    with open(path, "r", encoding="ascii") as fh:
        return matrix_from_text(fh.read())


def _cmd_gen_matrix(args) -> int:
    with open(args.output, "w", encoding="ascii") as fh:
        fh.write(matrix_to_text(derive_parity_matrix()))
    return 0


def _cmd_emit_netlist(args) -> int:
    matrix = _load_matrix(args.matrix)
    net = build_xor3_network(matrix)
    with open(args.output, "w", encoding="ascii") as fh:
        fh.write(emit_netlist(net))
    print(f"max fan-in: {matrix.max_fanin} (reference design: {REFERENCE_DESIGN_FANIN})")
    print(f"max XOR3 depth: {net.max_depth} (reference design: {REFERENCE_DESIGN_DEPTH})")
    return 0


def _cmd_check_netlist(args) -> int:
    with open(args.netlist, "r", encoding="ascii") as fh:
        net = parse_netlist(fh.read())
    matrix = _load_matrix(args.matrix)
    rng = np.random.default_rng(args.seed)
    for trial in range(args.trials):
        info = rng.integers(0, 2, size=N_INFO_BITS).tolist()
        if net.evaluate(info) != parity_bits(info, matrix):
            print(f"mismatch on trial {trial}", file=sys.stderr)
            return 2
    print(f"equivalent on {args.trials} random inputs")
    return 0


def _cmd_encode(args) -> int:
    with open(args.input, "rb") as fh:
        data = fh.read()
    if len(data) % FRAME_BYTES:
        data += bytes(FRAME_BYTES - len(data) % FRAME_BYTES)
    encoder = _ENCODER_NAMES[args.encoder]
    with open(args.output, "wb") as fh:
        for pos in range(0, len(data), FRAME_BYTES):
            bits = bytes_to_frame(data[pos:pos + FRAME_BYTES])
            if any(bits[INFO_BITS_PER_FRAME:]):
                raise ValueError(
                    f"payload record at byte {pos} has nonzero padding bits "
                    f"(bits {INFO_BITS_PER_FRAME}..319 must be zero)")
            frame = build_frame(bits[:INFO_BITS_PER_FRAME], encoder=encoder)
            fh.write(frame_to_bytes(frame))
    return 0


def _cmd_decode(args) -> int:
    with open(args.input, "rb") as fh:
        data = fh.read()
    if len(data) % FRAME_BYTES:
        raise ValueError(f"frame stream length {len(data)} is not a multiple of {FRAME_BYTES}")
    stats_lines = []
    with open(args.output, "wb") as fh:
        for index, pos in enumerate(range(0, len(data), FRAME_BYTES)):
            res = unframe(bytes_to_frame(data[pos:pos + FRAME_BYTES]))
            fh.write(frame_to_bytes(res.info + [0] * (8 * FRAME_BYTES - INFO_BITS_PER_FRAME)))
            stats_lines.append(
                f"frame={index}"
                f" status_a={res.result_a.status} corrected_a={res.result_a.corrected_symbols}"
                f" status_b={res.result_b.status} corrected_b={res.result_b.corrected_symbols}"
                f" header_ok={int(res.header_ok)}")
    if args.stats:
        with open(args.stats, "w", encoding="ascii") as fh:
            fh.write("\n".join(stats_lines) + ("\n" if stats_lines else ""))
    return 0


def _channel_config(args, ber: float) -> ChannelConfig:
    return ChannelConfig(ber=ber, burst_len=args.burst_len,
                         burst_rate=args.burst_rate, seed=args.seed,
                         frames=args.frames)


def _cmd_simulate(args) -> int:
    cfg = _channel_config(args, args.ber)
    stats = run_simulation(cfg, jobs=args.jobs)
    sys.stdout.write(emit_stats([(cfg, stats)], csv=args.csv))
    return 0


def _cmd_sweep(args) -> int:
    try:
        bers = [float(tok) for tok in args.ber_list.split(",") if tok]
    except ValueError:
        raise ValueError(f"--ber-list must be comma-separated floats, got {args.ber_list!r}")
    if not bers:
        raise ValueError("--ber-list is empty")
    cfgs = [_channel_config(args, ber) for ber in bers]
    stats = run_sweep(cfgs, jobs=args.jobs)
    sys.stdout.write(emit_stats(list(zip(cfgs, stats)), csv=args.csv))
    return 0


def _add_channel_flags(sub) -> None:
    sub.add_argument("--burst-len", type=int, default=0)
    sub.add_argument("--burst-rate", type=float, default=0.0)
    sub.add_argument("--frames", type=int, required=True)
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--jobs", type=int, default=1)
    sub.add_argument("--csv", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rs3127", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    subs = parser.add_subparsers(dest="command", required=True,
                                 parser_class=_Parser)

    sub = subs.add_parser("gen-matrix", help="derive and write the parity matrix")
    sub.add_argument("-o", "--output", required=True)
    sub.set_defaults(func=_cmd_gen_matrix)

    sub = subs.add_parser("emit-netlist", help="build the XOR3 network and write the netlist")
    sub.add_argument("-m", "--matrix", help="matrix file (derived if omitted)")
    sub.add_argument("-o", "--output", required=True)
    sub.set_defaults(func=_cmd_emit_netlist)

    sub = subs.add_parser("check-netlist", help="differential netlist-vs-matrix evaluation")
    sub.add_argument("-n", "--netlist", required=True)
    sub.add_argument("-m", "--matrix", help="matrix file (derived if omitted)")
    sub.add_argument("--trials", type=int, default=10000)
    sub.add_argument("--seed", type=int, default=0)
    sub.set_defaults(func=_cmd_check_netlist)

    sub = subs.add_parser("encode", help="payload records -> 40-byte frames")
    sub.add_argument("-i", "--input", required=True)
    sub.add_argument("-o", "--output", required=True)
    sub.add_argument("--encoder", choices=sorted(_ENCODER_NAMES), default="parallel")
    sub.set_defaults(func=_cmd_encode)

    sub = subs.add_parser("decode", help="frames -> payload records (+ per-frame status)")
    sub.add_argument("-i", "--input", required=True)
    sub.add_argument("-o", "--output", required=True)
    sub.add_argument("--stats", help="write per-frame decode status lines here")
    sub.set_defaults(func=_cmd_decode)

    sub = subs.add_parser("simulate", help="full-chain channel trial, stats to stdout")
    sub.add_argument("--ber", type=float, required=True)
    _add_channel_flags(sub)
    sub.set_defaults(func=_cmd_simulate)

    sub = subs.add_parser("sweep", help="one stats record per BER point")
    sub.add_argument("--ber-list", required=True)
    _add_channel_flags(sub)
    sub.set_defaults(func=_cmd_sweep)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"rs3127: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
