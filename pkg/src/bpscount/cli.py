"""Command-line entry point. Every command prints a JSON document on stdout.

Exit status: 0 success, 1 a check failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import sys

from . import arith, io
from .checks import check_local_integrality, check_relative_integrality, check_takahashi
from .correspondence import (
    NonIntegralEntry,
    build_c_matrix,
    composed_oracle_matrix,
    invert_c_matrix,
    local_from_relative,
    relative_from_local,
)
from .transforms import (
    Kind,
    TangencyContext,
    local_bps_from_gw,
    local_gw_from_bps,
    relative_bps_from_gw,
    relative_gw_from_bps,
)

EXIT_OK, EXIT_CHECK_FAILED, EXIT_INPUT_ERROR = 0, 1, 2

# target -> (function, input kind)
TRANSFORMS = {
    "local-bps": (local_bps_from_gw, Kind.LOCAL_GW),
    "local-gw": (local_gw_from_bps, Kind.LOCAL_BPS),
    "relative-bps": (relative_bps_from_gw, Kind.RELATIVE_GW),
    "relative-gw": (relative_gw_from_bps, Kind.RELATIVE_BPS),
    "local-from-relative": (local_from_relative, Kind.RELATIVE_BPS),
    "relative-from-local": (relative_from_local, Kind.LOCAL_BPS),
}


class InputError(Exception):
    pass


def _load(path: str, args) -> io.SequenceFile:
    if path.endswith(".csv"):
        if args.kind is None or args.w is None:
            raise InputError("CSV input needs --kind and --w")
        return io.ingest_csv(path, args.kind, args.w)
    return io.read_sequence(path)


def _emit(doc: dict, out: str | None) -> None:
    text = io.dumps(doc)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    print(text)


def cmd_nt(args) -> int:
    fn = getattr(arith, args.function)
    result = fn(args.n)
    key = "values" if isinstance(result, list) else "value"
    if args.function == "factorize":
        result = [list(pair) for pair in result]
    _emit({"function": args.function, "n": args.n, key: result}, None)
    return EXIT_OK


def cmd_transform(args) -> int:
    fn, kind = TRANSFORMS[args.target]
    sf = _load(args.input, args)
    if sf.sequence.kind is not kind:
        raise InputError(f"{args.target} needs a {kind} input, got {sf.sequence.kind}")
    result = fn(sf.sequence, sf.context)
    _emit(io.sequence_to_dict(io.SequenceFile(result, sf.context, sf.provenance)), args.out)
    return EXIT_OK


def cmd_cmatrix(args) -> int:
    ctx = TangencyContext(args.w, args.n)
    if args.action == "verify-oracle":
        c = build_c_matrix(ctx).dense()
        oracle = composed_oracle_matrix(ctx)
        mismatches = [
            {"s": s, "t": t, "closed_form": str(c[s - 1][t - 1]), "oracle": str(oracle[s - 1][t - 1])}
            for s in range(1, ctx.N + 1)
            for t in range(1, s + 1)
            if c[s - 1][t - 1] != oracle[s - 1][t - 1]
        ]
        _emit({"check": "c-oracle", "w": ctx.w, "N": ctx.N, "overall": not mismatches,
               "mismatches": mismatches}, args.out)
        return EXIT_CHECK_FAILED if mismatches else EXIT_OK
    c = build_c_matrix(ctx)
    if args.action == "invert":
        c = invert_c_matrix(c)
    _emit(io.matrix_to_dict(c), args.out)
    return EXIT_OK


def cmd_check(args) -> int:
    sf = _load(args.input, args)
    seq, ctx = sf.sequence, sf.context
    if args.name == "takahashi":
        if args.counts is None:
            raise InputError("takahashi needs --counts FILE with curve counts")
        if seq.kind is Kind.LOCAL_GW:
            seq = local_bps_from_gw(seq, ctx)
        if seq.kind is not Kind.LOCAL_BPS:
            raise InputError(f"takahashi needs local BPS or GW data, got {seq.kind}")
        report = check_takahashi(io.read_sequence(args.counts).sequence, seq)
    elif args.name == "local-integrality":
        if seq.kind is Kind.LOCAL_GW:
            seq = local_bps_from_gw(seq, ctx)
        if seq.kind is not Kind.LOCAL_BPS:
            raise InputError(f"local-integrality needs local BPS or GW data, got {seq.kind}")
        report = check_local_integrality(seq)
    else:
        if seq.kind is Kind.RELATIVE_GW:
            seq = relative_bps_from_gw(seq, ctx)
        elif seq.kind is Kind.LOCAL_BPS:
            seq = relative_from_local(seq, ctx)
        if seq.kind is not Kind.RELATIVE_BPS:
            raise InputError(f"relative-integrality needs relative or local BPS data, got {seq.kind}")
        report = check_relative_integrality(seq)
    _emit(io.report_to_dict(report), args.out)
    return EXIT_OK if report.overall else EXIT_CHECK_FAILED


def cmd_ingest(args) -> int:
    sf = io.ingest_csv(args.csv, args.kind, args.w, args.provenance)
    _emit(io.sequence_to_dict(sf), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bpscount", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("nt", help="number-theory helpers")
    p.add_argument("function", choices=["omega", "mobius", "divisors", "iset", "factorize"])
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_nt)

    def add_input(p, required=True):
        p.add_argument("--in", dest="input", required=required, metavar="FILE")
        p.add_argument("--kind", choices=[k.value for k in Kind], help="kind of a CSV input")
        p.add_argument("--w", type=int, help="tangency w of a CSV input")
        p.add_argument("--out", metavar="FILE", help="also write the result here")

    p = sub.add_parser("transform", help="GW <-> BPS transforms and the C-matrix correspondence")
    p.add_argument("target", choices=list(TRANSFORMS))
    add_input(p)
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("cmatrix", help="build, invert or cross-check the matrix C")
    p.add_argument("action", choices=["build", "invert", "verify-oracle"])
    p.add_argument("--w", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_cmatrix)

    p = sub.add_parser("check", help="integrality and Takahashi checks")
    p.add_argument("name", choices=["local-integrality", "relative-integrality", "takahashi"])
    add_input(p)
    p.add_argument("--counts", metavar="FILE", help="curve counts m_d for takahashi")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("ingest", help="convert a degree,value CSV into a sequence document")
    p.add_argument("--csv", required=True)
    p.add_argument("--kind", required=True, choices=[k.value for k in Kind])
    p.add_argument("--w", type=int, required=True)
    p.add_argument("--provenance")
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_ingest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT_ERROR if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (InputError, ValueError, TypeError, OSError, NonIntegralEntry) as exc:
        print(f"bpscount: error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


run_command = main

if __name__ == "__main__":
    sys.exit(main())
