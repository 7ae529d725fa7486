"""Command-line front end: exact invariant computations as batch commands.

Every subcommand is deterministic given its arguments (and seed where one
applies); JSON output is byte-identical across runs and thread counts, with
all rationals serialized as decimal strings, never floats.  Exit codes:
0 success/true, 1 mathematically false, 2 usage/parse/domain error.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from fractions import Fraction

from .beauville import (
    beauville_closed_form,
    beauville_pipeline,
    equivalence_witness,
    prop48_rank,
    same_j_data,
    thm48_decompose,
    verify_keyprop,
)
from .forms import BinaryForm
from .invariants import (
    graded_dimension,
    monomial_basis,
    quintic_invariants,
    sylvester_specialize,
    SylvesterPoint,
    verify_disc,
    verify_dims,
    verify_relation,
)

_VERIFY_TARGETS = ("keyprop", "relation", "disc", "prop48", "dims")


def _thread_cap() -> int:
    """Honor the BINFORM_THREADS cap (the implementation is sequential, so
    any positive cap is satisfied trivially)."""
    raw = os.environ.get("BINFORM_THREADS")
    if raw is None:
        return 1
    try:
        cap = int(raw)
    except ValueError:
        print("warning: ignoring non-integer BINFORM_THREADS", file=sys.stderr)
        return 1
    return max(cap, 1)


def _emit(payload) -> None:
    print(json.dumps(payload, indent=2))


def _parse_quintic(text: str) -> BinaryForm:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 6:
        raise ValueError(
            f"expected six comma-separated coefficients, got {len(parts)}")
    try:
        values = [Fraction(p) for p in parts]
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"cannot parse coefficient: {exc}") from None
    if all(v == 0 for v in values):
        raise ValueError("zero form")
    return BinaryForm(values)


def _cmd_invariants(args) -> int:
    form = _parse_quintic(args.coeffs)
    vector = quintic_invariants(form)
    _emit(vector.to_json_dict())
    return 0


def _cmd_beauville(args) -> int:
    form = _parse_quintic(args.coeffs)
    vector = quintic_invariants(form)
    if vector.Disc == 0:
        print("warning: discriminant is zero (repeated roots); b0 = 0",
              file=sys.stderr)
    if args.pipeline:
        result, _ = beauville_pipeline(form)
        route = "pipeline"
    else:
        result = beauville_closed_form(form)
        route = "closed-form"
    _emit({"route": route, "b": result.to_json_list()})
    return 0


def _cmd_verify(args) -> int:
    target = args.target
    if target == "keyprop":
        report = verify_keyprop()
        holds = report["all_match"]
        if not args.timing:
            report.pop("seconds", None)
    elif target == "relation":
        import time
        start = time.perf_counter()
        vector = quintic_invariants(
            sylvester_specialize(SylvesterPoint.symbolic()))
        holds = verify_relation(vector)
        report = {"holds": holds, "mode": "symbolic-canonical"}
        if args.timing:
            report["seconds"] = time.perf_counter() - start
    elif target == "disc":
        import time
        start = time.perf_counter()
        report = verify_disc(seed=args.seed)
        holds = report["holds"]
        if args.timing:
            report["seconds"] = time.perf_counter() - start
    elif target == "prop48":
        import time
        start = time.perf_counter()
        _, rank = prop48_rank()
        holds = rank == 19
        report = {"holds": holds, "rows": 19, "cols": 21, "rank": rank}
        if args.timing:
            report["seconds"] = time.perf_counter() - start
    else:  # dims
        import time
        start = time.perf_counter()
        report = verify_dims()
        holds = report["holds"]
        if args.timing:
            report["seconds"] = time.perf_counter() - start
    _emit(report)
    return 0 if holds else 1


def _cmd_dim(args) -> int:
    dimension = graded_dimension(args.degree)
    if args.json:
        _emit({"degree": args.degree, "dimension": dimension})
    else:
        print(dimension)
    return 0


def _cmd_basis(args) -> int:
    basis = monomial_basis(args.degree)
    if args.json:
        _emit({"degree": args.degree,
               "basis": [list(triple) for triple in basis]})
    else:
        for a1, a2, a3 in basis:
            print(f"({a1},{a2},{a3})")
    return 0


def _cmd_decompose48(args) -> int:
    factors = thm48_decompose((args.a1, args.a2, args.a3))
    if args.json:
        _emit({"input": [args.a1, args.a2, args.a3],
               "factors": [list(triple) for triple in factors]})
    else:
        for a1, a2, a3 in factors:
            print(f"({a1},{a2},{a3})")
    return 0


def _cmd_equiv(args) -> int:
    first = _parse_quintic(args.first)
    second = _parse_quintic(args.second)
    witness = equivalence_witness(first, second)
    _emit(witness)
    return 0 if witness["equivalent"] else 1


def _cmd_jdata(args) -> int:
    first = _parse_quintic(args.first)
    second = _parse_quintic(args.second)
    same = same_j_data(first, second)
    _emit({"same_j_data": same})
    return 0 if same else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="binform",
        description="Exact invariants of binary quartics and quintics.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants",
                       help="J, K, L, H, Disc of a quintic")
    p.add_argument("coeffs", help='six rationals "a0,a1,a2,a3,a4,a5"')
    p.set_defaults(func=_cmd_invariants)

    p = sub.add_parser("beauville",
                       help="the six degree-24 invariants b0..b5")
    p.add_argument("coeffs", help='six rationals "a0,a1,a2,a3,a4,a5"')
    p.add_argument("--pipeline", action="store_true",
                   help="force the full resultant route")
    p.set_defaults(func=_cmd_beauville)

    p = sub.add_parser("verify", help="run a headline verification")
    p.add_argument("target", choices=_VERIFY_TARGETS)
    p.add_argument("--timing", action="store_true",
                   help="include wall-clock seconds in the report")
    p.add_argument("--seed", type=int, default=0,
                   help="seed for the randomized checks (verify disc)")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("dim", help="dimension of the degree-d component")
    p.add_argument("degree", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_dim)

    p = sub.add_parser("basis", help="monomial basis of the degree-d component")
    p.add_argument("degree", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_basis)

    p = sub.add_parser("decompose48",
                       help="split a JKL monomial into degree-48 factors")
    p.add_argument("a1", type=int)
    p.add_argument("a2", type=int)
    p.add_argument("a3", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_decompose48)

    p = sub.add_parser("equiv",
                       help="decide scaled-GL2 equivalence of two quintics")
    p.add_argument("first", help='six rationals "a0,...,a5"')
    p.add_argument("second", help='six rationals "a0,...,a5"')
    p.set_defaults(func=_cmd_equiv)

    p = sub.add_parser("jdata",
                       help="decide equality of five-point j-data")
    p.add_argument("first", help='six rationals "a0,...,a5"')
    p.add_argument("second", help='six rationals "a0,...,a5"')
    p.set_defaults(func=_cmd_jdata)

    return parser


_DATA_TOKEN = re.compile(r"^-(\d|\.\d)")
_OPTIONS_WITH_VALUE = {"--seed"}


def _reorder_argv(argv):
    """Move flags ahead of positional data and fence the data with '--'.

    Coefficient strings routinely start with a minus sign ("-2,-15,...");
    without the fence argparse would read them as option flags.  A token is
    data when a digit follows the leading dash — no registered option looks
    like that.
    """
    if not argv or argv[0].startswith("-"):
        return argv
    head, opts, data = [argv[0]], [], []
    rest = iter(argv[1:])
    for token in rest:
        if token == "--":
            data.extend(rest)
            break
        if token.startswith("-") and not _DATA_TOKEN.match(token):
            opts.append(token)
            if token in _OPTIONS_WITH_VALUE:
                value = next(rest, None)
                if value is not None:
                    opts.append(value)
        else:
            data.append(token)
    return head + opts + ["--"] + data


def main(argv=None) -> int:
    _thread_cap()
    if argv is None:
        argv = sys.argv[1:]
    argv = _reorder_argv(list(argv))
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 for --help
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # contract: never panic
        print(f"error: internal failure: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
