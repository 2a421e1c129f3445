"""Command-line interface.

Exit codes: 0 success / MDS, 1 usage error, 2 verified not MDS,
3 oracle refused (order above cap), 4 internal consistency error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .census import CensusError, census
from .circulant import CirculantSpec, Variant
from .gf2m import FieldError, FieldSpec
from .reducer import build_reduced_set
from .verifier import DEFAULT_ORACLE_CAP, OracleRefused, is_mds_bruteforce, is_mds_reduced

EXIT_OK, EXIT_USAGE, EXIT_NOT_MDS, EXIT_REFUSED, EXIT_INTERNAL = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_int(text: str) -> int:
    """Hex with a 0x prefix, otherwise decimal."""
    text = text.strip()
    try:
        return int(text, 16) if text.lower().startswith("0x") else int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None


def parse_entries(text: str) -> list[int]:
    return [parse_int(t) for t in text.split(",") if t.strip()]


def _add_matrix_args(p):
    p.add_argument("--n", type=int, required=True, help="circulant order")
    p.add_argument("--field", type=int, required=True, metavar="M",
                   help="field degree m of GF(2^m)")
    p.add_argument("--poly", type=parse_int, required=True,
                   help="reduction polynomial, e.g. 0x11B")
    p.add_argument("--entries", type=parse_entries, required=True,
                   help="a0,...,a(n-1); hex with 0x prefix or bare decimal")
    p.add_argument("--variant", choices=["L", "R"], default="L")
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    p.add_argument("--format", choices=["text", "json"], default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="circmds",
                     description="Reduced submatrix sets and MDS checks for circulant matrices.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("reduce", help="construct the reduced set")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--variant", choices=["L", "R"], default="L")
    p.add_argument("--out", help="output file (default stdout)")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--counts-only", action="store_true",
                   help="emit only the header with per-order counts")

    p = sub.add_parser("census", help="closed-form counts")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--construct", action="store_true",
                   help="also run the reducer and report its count")
    p.add_argument("--format", choices=["table", "csv", "json"], default="table")

    p = sub.add_parser("verify", help="MDS check over the reduced set")
    _add_matrix_args(p)
    p = sub.add_parser("oracle", help="MDS check over all square submatrices")
    _add_matrix_args(p)
    p.add_argument("--cap", type=int, default=DEFAULT_ORACLE_CAP,
                   help="largest order the brute force accepts")
    p = sub.add_parser("witness", help="print a singular submatrix or MDS")
    _add_matrix_args(p)
    return parser


def _spec_from_args(args) -> CirculantSpec:
    try:
        field = FieldSpec(args.field, args.poly)
    except FieldError as e:
        raise UsageError(str(e)) from None
    if len(args.entries) != args.n:
        raise UsageError(f"--entries has {len(args.entries)} values, --n is {args.n}")
    if args.n < 2:
        raise UsageError("--n must be >= 2")
    try:
        return CirculantSpec.from_values(field, args.entries, Variant(args.variant))
    except FieldError as e:
        raise UsageError(str(e)) from None


def _write(text: str, out):
    if not text.endswith("\n"):
        text += "\n"
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _print_verdict(verdict, fmt):
    if fmt == "json":
        print(json.dumps(verdict.to_dict()))
    elif verdict.is_mds:
        print(f"MDS (checked {verdict.checked} determinants in {verdict.elapsed:.3f}s)")
    else:
        print(f"NOT MDS witness {json.dumps(verdict.witness.to_json())} "
              f"(checked {verdict.checked} determinants)")


def _cmd_reduce(args):
    if args.n < 3:
        raise UsageError("--n must be >= 3")
    rs = build_reduced_set(args.n, args.variant, counts_only=args.counts_only)
    if args.counts_only or args.format == "json":
        _write(rs.to_json(counts_only=args.counts_only), args.out)
    else:
        _write(rs.to_csv(), args.out)
    return EXIT_OK


def _cmd_census(args):
    if args.n < 2:
        raise UsageError("--n must be >= 2")
    constructed = None
    if args.construct:
        if args.n < 3:
            raise UsageError("--construct needs --n >= 3")
        constructed = build_reduced_set(args.n, counts_only=True).total
    report = census(args.n, constructed)
    if args.format == "json":
        print(json.dumps(report.to_dict()))
    elif args.format == "csv":
        print(report.to_csv())
    else:
        print(report.table())
    if constructed is not None:
        if report.exact is not None and constructed != report.exact:
            print(f"constructed {constructed} != closed form {report.exact}", file=sys.stderr)
            return EXIT_INTERNAL
        if not report.within_bounds:
            print(f"constructed {constructed} outside sandwich bound", file=sys.stderr)
            return EXIT_INTERNAL
    return EXIT_OK


def _cmd_verify(args):
    verdict = is_mds_reduced(_spec_from_args(args), threads=args.threads)
    _print_verdict(verdict, args.format)
    return EXIT_OK if verdict.is_mds else EXIT_NOT_MDS


def _cmd_oracle(args):
    verdict = is_mds_bruteforce(_spec_from_args(args), cap=args.cap, threads=args.threads)
    _print_verdict(verdict, args.format)
    return EXIT_OK if verdict.is_mds else EXIT_NOT_MDS


def _cmd_witness(args):
    verdict = is_mds_reduced(_spec_from_args(args), threads=args.threads)
    if verdict.is_mds:
        print("MDS")
        return EXIT_OK
    print(json.dumps(verdict.witness.to_json()))
    return EXIT_NOT_MDS


COMMANDS = {
    "reduce": _cmd_reduce,
    "census": _cmd_census,
    "verify": _cmd_verify,
    "oracle": _cmd_oracle,
    "witness": _cmd_witness,
}


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except UsageError as e:
        print(f"circmds: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OracleRefused as e:
        print(f"circmds: {e}", file=sys.stderr)
        return EXIT_REFUSED
    except CensusError as e:
        print(f"circmds: internal consistency error: {e}", file=sys.stderr)
        return EXIT_INTERNAL


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
