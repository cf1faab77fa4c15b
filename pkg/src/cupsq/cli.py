"""Command-line interface: cup, sq, count, bench, verify.

stdout carries data only, stderr the diagnostics.  Exit codes:
0 success, 2 parse/validation error, 3 semantic error (support outside
the complex), 4 not a cocycle, 5 benchmark table mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys

from .cochains import Cochain, is_cocycle
from .counting import table1
from .cup import cup_product
from .errors import (FileFormatError, NotACocycle, NotInComplex,
                     SupportNotInComplex)
from .formats import formal_sum_to_dict, load_cochain, load_complex
from .mod2 import is_coboundary_mod2
from .rings import Ring, Z, Z2
from .steenrod import sq

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_SEMANTIC = 3
EXIT_NOT_COCYCLE = 4
EXIT_BENCH_MISMATCH = 5

_TABLE1_EXPECTED = (
    20, 6,
    28, 12,
    11628, 1260,
    18009460, 621621,
    4925156775, 68222616,
    162699437009655, 970224,
    225368761961739396, 33701394635724816,
    163331343055757216550, 97902024,
)


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except NotACocycle as exc:
        print(f"error: not a cocycle: {exc}", file=sys.stderr)
        return EXIT_NOT_COCYCLE
    except (SupportNotInComplex, NotInComplex) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SEMANTIC
    except (FileFormatError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


def _cmd_cup(args) -> int:
    K = load_complex(args.complex)
    c = load_cochain(args.cochain)
    cprime = load_cochain(args.cochain2)
    ring = _ring_from_flags(args)
    if ring is not None:
        c = _coerce(c, ring)
        cprime = _coerce(cprime, ring)
    elif c.ring != cprime.ring:
        raise FileFormatError(
            f"cochain rings differ ({c.ring} vs {cprime.ring}); pass --ring to coerce")
    result = cup_product(c, cprime, args.n, K, workers=args.threads)
    if args.json:
        _emit_json(formal_sum_to_dict(result))
    else:
        for s, coeff in result.items():
            print(f"{coeff}  {_fmt_simplex(s)}")
    return EXIT_OK


def _cmd_sq(args) -> int:
    K = load_complex(args.complex)
    c = load_cochain(args.cochain)
    ring = _ring_from_flags(args)
    if ring is not None:
        if ring != Z2:
            raise FileFormatError("sq computes with Z/2 coefficients; use --ring Z2")
        c = _coerce(c, Z2)
    if c.ring != Z2:
        raise FileFormatError(
            'sq needs Z/2 coefficients (ring "Zmod", modulus 2); pass --ring Z2 to coerce')
    result = sq(args.i, c, K, workers=args.threads)
    doc = formal_sum_to_dict(result)
    lines = [_fmt_simplex(s) for s, _ in result.items()]
    if args.check_class:
        out = Cochain(c.degree + args.i, Z2, result.terms)
        member = is_coboundary_mod2(out, K)
        doc["coboundary"] = member
        lines.append(f"coboundary: {'true' if member else 'false'}")
    if args.json:
        _emit_json(doc)
    else:
        for line in lines:
            print(line)
    return EXIT_OK


def _cmd_count(args) -> int:
    from .counting import count_bounded, count_oracle
    full = count_oracle(args.p, args.q, args.n)
    restricted = count_bounded(args.p, args.q, args.n)
    if args.json:
        _emit_json({"thm2": full, "thm3": restricted})
    else:
        print(f"thm2: {full}  thm3: {restricted}")
    return EXIT_OK


def _cmd_bench(args) -> int:
    rows = table1()
    expected = [(_TABLE1_EXPECTED[2 * k], _TABLE1_EXPECTED[2 * k + 1])
                for k in range(len(rows))]
    mismatches = []
    payload = []
    for (label, full, restricted), (want_full, want_restricted) in zip(rows, expected):
        payload.append({"label": label, "thm2": full, "thm3": restricted})
        if (full, restricted) != (want_full, want_restricted):
            mismatches.append(
                f"{label}: computed {full}/{restricted}, "
                f"expected {want_full}/{want_restricted}")
    if args.json:
        _emit_json({"rows": payload})
    else:
        for row in payload:
            print(f"{row['label']}  thm2: {row['thm2']}  thm3: {row['thm3']}")
    if mismatches:
        for line in mismatches:
            print(f"error: benchmark mismatch: {line}", file=sys.stderr)
        return EXIT_BENCH_MISMATCH
    return EXIT_OK


def _cmd_verify(args) -> int:
    K = load_complex(args.complex)
    c = load_cochain(args.cochain)
    cocycle = is_cocycle(c, K)
    doc = {"cocycle": cocycle}
    lines = [f"cocycle: {'yes' if cocycle else 'no'}"]
    if args.check_class:
        if c.ring != Z2:
            raise FileFormatError("--class needs Z/2 coefficients")
        member = is_coboundary_mod2(c, K)
        doc["coboundary"] = member
        lines.append(f"coboundary: {'yes' if member else 'no'}")
    if args.json:
        _emit_json(doc)
    else:
        for line in lines:
            print(line)
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cupsq",
        description="Chain-level cup-n products and mod-2 squares "
                    "on ordered simplicial complexes.")
    sub = parser.add_subparsers(dest="command", required=True)

    cup = sub.add_parser("cup", help="cup-n product of two cochains over a complex")
    cup.add_argument("complex", help="complex JSON file")
    cup.add_argument("cochain", help="first cochain JSON file")
    cup.add_argument("cochain2", help="second cochain JSON file")
    cup.add_argument("n", type=_nonnegative, help="product level n")
    _common_flags(cup)
    _ring_flags(cup)
    cup.set_defaults(handler=_cmd_cup)

    sq_cmd = sub.add_parser("sq", help="degree-i square of a mod-2 cocycle")
    sq_cmd.add_argument("complex", help="complex JSON file")
    sq_cmd.add_argument("cochain", help="cochain JSON file (Z/2 coefficients)")
    sq_cmd.add_argument("i", type=_nonnegative, help="power i")
    sq_cmd.add_argument("--check-class", action="store_true",
                        help="also report whether the output is a coboundary")
    _common_flags(sq_cmd)
    _ring_flags(sq_cmd)
    sq_cmd.set_defaults(handler=_cmd_sq)

    count = sub.add_parser("count", help="summand counts for degrees p, q at level n")
    count.add_argument("p", type=_nonnegative)
    count.add_argument("q", type=_nonnegative)
    count.add_argument("n", type=_nonnegative)
    count.add_argument("--json", action="store_true")
    count.set_defaults(handler=_cmd_count)

    bench = sub.add_parser("bench", help="recompute the benchmark count table")
    bench.add_argument("--json", action="store_true")
    bench.set_defaults(handler=_cmd_bench)

    verify = sub.add_parser("verify", help="cocycle (and optional class) check")
    verify.add_argument("complex", help="complex JSON file")
    verify.add_argument("cochain", help="cochain JSON file")
    verify.add_argument("--class", dest="check_class", action="store_true",
                        help="also decide coboundary membership (Z/2 only)")
    verify.add_argument("--json", action="store_true")
    verify.set_defaults(handler=_cmd_verify)

    return parser


def _common_flags(cmd) -> None:
    cmd.add_argument("--json", action="store_true", help="machine-readable output")
    cmd.add_argument("--threads", type=_positive, default=1, metavar="N",
                     help="worker count for pair enumeration (same output for any N)")


def _ring_flags(cmd) -> None:
    cmd.add_argument("--ring", choices=("Z", "Z2", "Zp"),
                     help="coerce cochain coefficients into this ring")
    cmd.add_argument("--modulus", type=int, metavar="M",
                     help="modulus for --ring Zp")


def _ring_from_flags(args):
    name = getattr(args, "ring", None)
    if name is None:
        return None
    if name == "Z":
        return Z
    if name == "Z2":
        return Z2
    if args.modulus is None:
        raise FileFormatError("--ring Zp needs --modulus M")
    return Ring(args.modulus)


def _coerce(c: Cochain, ring: Ring) -> Cochain:
    return Cochain(c.degree, ring, c.support)


def _fmt_simplex(s) -> str:
    return "[" + ",".join(map(str, s)) + "]"


def _emit_json(doc) -> None:
    print(json.dumps(doc, sort_keys=True))


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"{text} is negative")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"{text} is not a positive integer")
    return value
