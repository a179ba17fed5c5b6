"""Command-line front end: batch invariant computation and verification.

Exit codes: 0 on success, 1 on verification failure, 2 on input errors.
All values are exact rationals rendered as ``p/q`` (or ``p`` when ``q`` is 1);
no floating point appears in any output.  Timing goes to stderr so stdout is
byte-stable across runs.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .diagrams import GaussCodeError, GaussDiagram, braid_closure_to_gauss, parse_gauss_code
from .invariants import (WeightConstraintError, v2_lannes, v2_polyak_viro,
                         v3_lannes, v3_polyak_viro, v4_new, v4_polyak_viro)
from .verify import SUITES, default_w4, run_suite
from .weights import weight_space_dimension, weight_system_from_lines

FORMULAS = ("v2pv", "v2l", "v3pv", "v3l", "v4pv", "v4new")


def render(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return "%d/%d" % (value.numerator, value.denominator)


@dataclass
class InvariantReport:
    """Per-diagram computation results."""

    input_kind: str
    input_text: str
    values: dict = field(default_factory=dict)
    elapsed_ms: float = 0.0

    def to_json(self) -> str:
        return json.dumps({
            "input": {"kind": self.input_kind, "text": self.input_text},
            "values": {k: render(v) for k, v in self.values.items()},
        }, indent=2, sort_keys=True)

    def to_text(self):
        lines = ["%s: %s" % (self.input_kind, self.input_text or "(empty)")]
        for name, value in self.values.items():
            lines.append("  %-6s = %s" % (name, render(value)))
        return "\n".join(lines)


def compute_report(g: GaussDiagram, kind, text, formulas, w4) -> InvariantReport:
    table = {
        "v2pv": v2_polyak_viro,
        "v2l": v2_lannes,
        "v3pv": v3_polyak_viro,
        "v3l": v3_lannes,
        "v4pv": v4_polyak_viro,
        "v4new": lambda d: v4_new(d, w4),
    }
    start = time.perf_counter()
    report = InvariantReport(kind, text)
    for name in formulas:
        report.values[name] = table[name](g)
    report.elapsed_ms = (time.perf_counter() - start) * 1000.0
    return report


def _cmd_compute(args) -> int:
    if (args.gauss is None) == (args.braid is None):
        print("error: provide exactly one of --gauss or --braid", file=sys.stderr)
        return 2
    formulas = FORMULAS
    if args.formulas:
        formulas = tuple(f.strip() for f in args.formulas.split(",") if f.strip())
        unknown = [f for f in formulas if f not in FORMULAS]
        if unknown:
            print("error: unknown formulas %s (known: %s)"
                  % (",".join(unknown), ",".join(FORMULAS)), file=sys.stderr)
            return 2
    w4 = default_w4()
    if args.w4_file:
        with open(args.w4_file) as fh:
            w4 = weight_system_from_lines(fh.readlines(), name=args.w4_file)
    try:
        if args.gauss is not None:
            g = parse_gauss_code(args.gauss)
            kind, text = "gauss", args.gauss
        else:
            strands, word = args.braid
            g = braid_closure_to_gauss(word, strands)
            kind, text = "braid", "%d: %s" % (strands, " ".join(map(str, word)))
        report = compute_report(g, kind, text, formulas, w4)
    except (GaussCodeError, WeightConstraintError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    print(report.to_json() if args.json else report.to_text())
    print("computed in %.1f ms" % report.elapsed_ms, file=sys.stderr)
    return 0


def _cmd_dims(args) -> int:
    if args.max > 6:
        print("error: --max must be <= 6", file=sys.stderr)
        return 2
    ns = list(range(args.max + 1))
    dims_w = [weight_space_dimension(n) for n in ns]
    dims_v = []
    total = 0
    for d in dims_w:
        total += d
        dims_v.append(total)

    def cell(n, value):
        return ("%d*" if n >= 5 else "%d") % value

    width = 4
    print("n        " + "".join(("%-*s" % (width, n)) for n in ns))
    print("dim W_n  " + "".join("%-*s" % (width, cell(n, d)) for n, d in zip(ns, dims_w)))
    print("dim V_n  " + "".join("%-*s" % (width, cell(n, d)) for n, d in zip(ns, dims_v)))
    if args.max >= 5:
        print("* columns n >= 5 are derived by the exact solver, beyond the"
              " built-in reference tables")
    return 0


def _cmd_verify(args) -> int:
    try:
        report = run_suite(args.suite, seed=args.seed, trials=args.trials)
    except KeyError:
        print("error: unknown suite %r" % args.suite, file=sys.stderr)
        return 2
    for line in report.render():
        print(line)
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vassiliev",
        description="Finite-type knot invariants of orders 2, 3 and 4 "
                    "from Gauss codes and braid closures.")
    sub = parser.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("compute", help="evaluate invariants on one diagram")
    pc.add_argument("--gauss", help='signed Gauss code, e.g. "O1+ U2+ O3+ U1+ O2+ U3+"')
    pc.add_argument("--braid", nargs=2, metavar=("STRANDS", "WORD"),
                    type=str, help='braid closure, e.g. --braid 2 "1 1 1"')
    pc.add_argument("--json", action="store_true", help="machine-readable output")
    pc.add_argument("--formulas", help="comma-separated subset of %s" % ",".join(FORMULAS))
    pc.add_argument("--w4-file", help="weight-system file for the v4new formula")
    pc.set_defaults(func=_cmd_compute)

    pd = sub.add_parser("dims", help="print weight/invariant space dimensions")
    pd.add_argument("--max", type=int, default=4, help="largest order (<= 6)")
    pd.set_defaults(func=_cmd_dims)

    pv = sub.add_parser("verify", help="run a verification suite")
    pv.add_argument("suite", choices=sorted(SUITES))
    pv.add_argument("--seed", type=int, default=7)
    pv.add_argument("--trials", type=int, default=None)
    pv.set_defaults(func=_cmd_verify)
    return parser


def _parse_braid_arg(args):
    if args.braid is None:
        return
    strands_text, word_text = args.braid
    try:
        strands = int(strands_text)
        word = tuple(int(t) for t in word_text.split())
    except ValueError:
        raise GaussCodeError("braid arguments must be integers") from None
    args.braid = (strands, word)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _parse_braid_arg(args)
    except GaussCodeError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
