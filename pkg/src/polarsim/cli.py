"""Command-line front end.

Subcommands: construct, encode, decode, simulate, psu-trace, hw-estimate.
All outputs are CSV with a leading ``# config:`` comment line. Exit codes:
0 ok, 2 usage error, 3 contract violation.
"""

import argparse
import csv
import sys

import numpy as np

from . import __version__
from .codes import PolarCode, bec_erasure_probs, construct_frozen_set
from .decode import PartialSumMismatch, sc_decode
from .encode import encode_graph, encode_matrix, expand, sequential_encode
from .hwcost import nand_equivalent, resource_counts
from .psu import PsuStateError, make_psu
from .schedule import build_line_schedule
from .simulate import SimConfig, make_vector_writer, simulate_sweep, write_sweep_csv

ENGINES = {
    "matrix": encode_matrix,
    "graph": encode_graph,
    "sequential": sequential_encode,
}


class ContractViolation(RuntimeError):
    pass


def _parse_bits(text):
    if not text or set(text) - {"0", "1"}:
        raise ValueError(f"expected a non-empty 01-string, got {text!r}")
    return np.frombuffer(text.encode(), dtype=np.uint8) - ord("0")


def _bits_str(bits):
    return "".join(str(int(b)) for b in bits)


def _parse_n_value(text):
    text = text.strip()
    if "^" in text:
        base, exp = text.split("^", 1)
        return int(base) ** int(exp)
    return int(text)


def _parse_n_range(text):
    if ".." in text:
        lo, hi = (_parse_n_value(t) for t in text.split("..", 1))
    else:
        lo = hi = _parse_n_value(text)
    if lo < 4 or hi < lo or lo & (lo - 1) or hi & (hi - 1):
        raise ValueError(f"bad codelength range {text!r}")
    sizes = []
    while lo <= hi:
        sizes.append(lo)
        lo *= 2
    return sizes


def _code_from_args(args):
    if getattr(args, "frozen", None):
        frozen = [int(t) for t in args.frozen.split(",") if t != ""]
        return PolarCode(args.n, frozen)
    k = args.k if args.k is not None else (1 << args.n) // 2
    return construct_frozen_set(args.n, k, args.epsilon)


def _open_out(args):
    return open(args.out, "w") if args.out else sys.stdout


def _add_code_args(p):
    p.add_argument("--n", type=int, required=True, help="log2 of the code length")
    p.add_argument("--k", type=int, default=None,
                   help="code dimension (default N/2 unless --frozen given)")
    p.add_argument("--epsilon", type=float, default=0.5,
                   help="design erasure probability for construction")
    p.add_argument("--frozen", type=str, default=None,
                   help="explicit comma-separated frozen indices (overrides --k)")


def cmd_construct(args):
    out = _open_out(args)
    code = construct_frozen_set(args.n, args.k if args.k is not None else (1 << args.n) // 2,
                                args.epsilon)
    z = bec_erasure_probs(args.n, args.epsilon)
    out.write(f"# config: construct n={args.n} K={code.K} epsilon={args.epsilon:g}\n")
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["index", "z", "frozen"])
    for i in range(code.N):
        writer.writerow([i, f"{z[i]:.17g}", int(code.frozen_mask[i])])
    if out is not sys.stdout:
        out.close()
    return 0


def cmd_encode(args):
    code = _code_from_args(args)
    d = _parse_bits(args.data)
    if d.size != code.K:
        raise ValueError(f"expected {code.K} data bits, got {d.size}")
    u = expand(code, d)
    if args.cross_check:
        words = {name: fn(code, u) for name, fn in ENGINES.items()}
        first = words[args.engine]
        for name, word in words.items():
            if not np.array_equal(word, first):
                raise ContractViolation(f"engine {name} disagrees with {args.engine}")
        x = first
    else:
        x = ENGINES[args.engine](code, u)
    out = _open_out(args)
    out.write(_bits_str(x) + "\n")
    if out is not sys.stdout:
        out.close()
    return 0


def cmd_decode(args):
    code = _code_from_args(args)
    if args.llrs == "-":
        text = sys.stdin.read()
    else:
        with open(args.llrs) as fh:
            text = fh.read()
    llrs = np.array([float(t) for t in text.split()], dtype=np.float64)
    if llrs.size != code.N:
        raise ValueError(f"expected {code.N} LLRs, got {llrs.size}")
    result = sc_decode(code, llrs, psu=args.arch, verify_reads=args.verify_reads)
    out = _open_out(args)
    out.write(f"# config: decode n={args.n} K={code.K} arch={args.arch}\n")
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["u_hat", "info_hat"])
    writer.writerow([_bits_str(result.u_hat), _bits_str(result.info_hat)])
    if out is not sys.stdout:
        out.close()
    return 0


def cmd_simulate(args):
    config = SimConfig(
        n=args.n,
        K=args.k if args.k is not None else (1 << args.n) // 2,
        epsilon=args.epsilon,
        channel=args.channel,
        snr_start_db=args.snr_start,
        snr_stop_db=args.snr_stop,
        points=args.points,
        trials=args.trials,
        seed=args.seed,
        arch=args.arch,
        target_frame_errors=args.stop_frame_errors,
        noiseless=args.noiseless,
        batch_size=args.batch_size,
    )
    sink = None
    dump = None
    if args.dump_vectors:
        dump = open(args.dump_vectors, "w")
        sink = make_vector_writer(dump)
    result = simulate_sweep(config, vector_sink=sink)
    if dump is not None:
        dump.close()
    out = _open_out(args)
    write_sweep_csv(result, out)
    if out is not sys.stdout:
        out.close()
    return 0


def cmd_psu_trace(args):
    code = PolarCode(args.n, [])
    out = _open_out(args)
    writer = csv.writer(out, lineterminator="\n")
    schedule = build_line_schedule(code)
    if args.schedule:
        out.write(f"# config: psu-trace schedule n={args.n}\n")
        writer.writerow(["clock", "stage", "kind", "edges", "read_positions"])
        for op in schedule.ops:
            writer.writerow(
                [
                    op.clock,
                    op.stage,
                    op.kind,
                    ";".join(str(int(e)) for e in op.edges),
                    ";".join(str(a.read_position) for a in op.pe_assignments),
                ]
            )
        if out is not sys.stdout:
            out.close()
        return 0

    bits = _parse_bits(args.bits)
    if bits.size > code.N:
        raise ValueError(f"at most {code.N} decision bits, got {bits.size}")
    unit = make_psu(args.arch, code)
    out.write(f"# config: psu-trace n={args.n} arch={args.arch} bits={args.bits}\n")
    writer.writerow(["step", "reads", "pushed_bit", "state"])
    pushed = 0
    pending = []
    for op in schedule.ops:
        if op.kind == "G":
            span = 1 << op.stage
            for pe, edge, pos in op.pe_assignments:
                value = unit.read(edge - span, op.stage, pos)
                pending.append(f"S({edge - span},{op.stage})@R{pos}={int(value[0])}")
        if op.stage == 0:
            if pushed == bits.size:
                break
            unit.push(bits[pushed])
            writer.writerow(
                [pushed, ";".join(pending), int(bits[pushed]), _state_str(unit)]
            )
            pending = []
            pushed += 1
    if out is not sys.stdout:
        out.close()
    return 0


def _state_str(unit):
    if hasattr(unit, "registers"):
        return _bits_str(unit.registers[0])
    if hasattr(unit, "cells"):
        return _bits_str(unit.cells[0])
    return _bits_str(unit.bits[0, : unit.step_count])


def cmd_hw_estimate(args):
    archs = ["SR", "IF", "FB"] if args.arch == "all" else [args.arch.upper()]
    sizes = _parse_n_range(args.n_range)
    out = _open_out(args)
    out.write(f"# config: hw-estimate arch={args.arch} n_range={args.n_range}\n")
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["arch", "N", "dff", "xor", "mux", "and", "nand_equivalent",
                     "critical_path"])
    for N in sizes:
        for arch in archs:
            report = resource_counts(arch, N)
            nand = nand_equivalent(arch, N)
            nand_text = str(int(nand)) if nand.denominator == 1 else f"{float(nand):.2f}"
            path = report.critical_path
            writer.writerow(
                [
                    arch,
                    N,
                    _na(report.dff),
                    _na(report.xor),
                    _na(report.mux),
                    _na(report.and_gates),
                    nand_text,
                    ";".join(f"{g}:{c}" for g, c in path) if path else "",
                ]
            )
    if out is not sys.stdout:
        out.close()
    return 0


def _na(value):
    return "" if value is None else value


def build_parser():
    parser = argparse.ArgumentParser(
        prog="polarsim",
        description="Polar code encoding, SC decoding, PSU hardware models "
        "and Monte-Carlo simulation.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="frozen-set construction")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--epsilon", type=float, default=0.5)
    p.add_argument("--out", type=str, default=None)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("encode", help="encode a data word")
    _add_code_args(p)
    p.add_argument("--data", type=str, required=True, help="K data bits as a 01-string")
    p.add_argument("--engine", choices=sorted(ENGINES), default="graph")
    p.add_argument("--cross-check", action="store_true",
                   help="run all engines and fail on any disagreement")
    p.add_argument("--out", type=str, default=None)
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="SC-decode channel LLRs")
    _add_code_args(p)
    p.add_argument("--llrs", type=str, default="-",
                   help="file of LLRs, one float per line ('-' for stdin)")
    p.add_argument("--arch", choices=["sr", "if", "oracle"], default="sr")
    p.add_argument("--verify-reads", action="store_true",
                   help="check every PSU read against the brute-force sum")
    p.add_argument("--out", type=str, default=None)
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("simulate", help="Monte-Carlo BER/FER sweep")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--epsilon", type=float, default=0.5)
    p.add_argument("--channel", choices=["awgn", "bec"], default="awgn",
                   help="with bec, sweep values are erasure probabilities")
    p.add_argument("--snr-start", type=float, default=0.0)
    p.add_argument("--snr-stop", type=float, default=3.0)
    p.add_argument("--points", type=int, default=7)
    p.add_argument("--trials", type=int, default=2500)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--arch", choices=["sr", "if", "oracle"], default="sr")
    p.add_argument("--stop-frame-errors", type=int, default=None,
                   help="stop a point once this many frame errors are seen")
    p.add_argument("--noiseless", action="store_true")
    p.add_argument("--batch-size", type=int, default=256)
    p.add_argument("--dump-vectors", type=str, default=None,
                   help="write per-frame test vectors to this file")
    p.add_argument("--out", type=str, default=None)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("psu-trace", help="per-clock PSU state dump")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--bits", type=str, default="",
                   help="decision bits to push, as a 01-string")
    p.add_argument("--arch", choices=["sr", "if", "oracle"], default="sr")
    p.add_argument("--schedule", action="store_true",
                   help="dump the decode schedule instead of a state trace")
    p.add_argument("--out", type=str, default=None)
    p.set_defaults(func=cmd_psu_trace)

    p = sub.add_parser("hw-estimate", help="hardware cost table")
    p.add_argument("--arch", choices=["sr", "if", "fb", "all"], default="all")
    p.add_argument("--n-range", type=str, default="2^10..2^14",
                   help="codelength range, e.g. 2^10..2^14 or 1024")
    p.add_argument("--out", type=str, default=None)
    p.set_defaults(func=cmd_hw_estimate)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ContractViolation, PartialSumMismatch, PsuStateError) as exc:
        print(f"contract violation: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
