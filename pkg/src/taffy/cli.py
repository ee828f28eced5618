"""Command-line front end: ``taffy list | analyze | braid | compile | table``."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import report
from .braids import BraidWord, burau_minus_one, char_poly, spectral_radius
from .devices import compile_braid, device, load_spec
from .dynnikov import entropy
from .errors import TaffyError


def _cmd_list(args) -> int:
    for entry in report.DEVICES.values():
        fixed = f" ({entry.fixed})" if entry.fixed else ""
        print(f"{entry.name:<16} {entry.rods}{fixed} rods   p={entry.period_fraction}")
    for entry in report.APPENDIX.values():
        fixed = f" ({entry.fixed})" if entry.fixed else ""
        print(f"{entry.name:<16} {entry.rods}{fixed} rods   p={entry.period_fraction}   [braid word required]")
    return 0


def _cmd_analyze(args) -> int:
    braid = BraidWord.parse(args.braid, args.strands) if args.braid else None
    result = report.analyze(args.name, tol=args.tol, braid=braid, max_iter=args.max_iter,
                            compiled=args.compiled)
    if args.json:
        print(json.dumps(result.as_dict(), indent=2))
        return 0
    print(f"device       {result.name}")
    print(f"rods         {result.rods_total} ({result.rods_fixed} fixed)")
    print(f"braid        {result.braid}  on {result.braid.n_strands} strands")
    if result.char_poly is not None:
        print(f"polynomial   {result.char_poly}")
    print(f"dilatation   {result.dilatation:.6f}")
    print(f"p            {result.period_fraction}")
    print(f"efficiency   {result.efficiency:.6f}")
    if result.entropy is not None:
        e = result.entropy
        print(f"entropy      {e.value:.6f}  ({e.iterations} iterations, converged={e.converged})")
    if result.flag:
        print(f"note         {result.flag}")
    return 0


def _cmd_braid(args) -> int:
    b = BraidWord.parse(args.letters, args.strands)
    show_all = not (args.entropy or args.burau or args.charpoly)
    if args.burau or show_all:
        for row in burau_minus_one(b):
            print(" ".join(f"{x:4d}" for x in row))
    if args.charpoly or show_all:
        p = char_poly(burau_minus_one(b))
        print(f"charpoly  {p}")
        print(f"spectral radius  {spectral_radius(p):.10f}")
    if args.entropy or show_all:
        e = entropy(b, tol=args.tol, max_iter=args.max_iter)
        print(f"entropy  {e.value:.10f}  iterations={e.iterations}  converged={e.converged}")
    return 0


def _cmd_compile(args) -> int:
    try:
        spec = load_spec(args.spec_file)
    except FileNotFoundError:
        spec = device(args.spec_file)
    duration = Fraction(args.duration) if args.duration else None
    print(compile_braid(spec, duration=duration, samples=args.samples))
    return 0


def _cmd_table(args) -> int:
    extra = report.load_extra_braids(args.extra_braids) if args.extra_braids else None
    rows = report.table(tol=args.tol, extra_braids=extra, max_iter=args.max_iter)
    if args.json:
        _write(args.json, report.to_json(rows))
    else:
        _write(args.csv, report.to_csv(rows))
    failures = [row for row in rows if isinstance(row, tuple)]
    for name, message in failures:
        print(f"taffy: {name}: {message}", file=sys.stderr)
    return 1 if failures and args.strict else 0


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="taffy", description="Braid analysis of taffy pullers.")
    sub = parser.add_subparsers(dest="command", required=True)

    def tuning(p):
        p.add_argument("--tol", type=float, default=1e-4, help="entropy convergence tolerance")
        p.add_argument("--max-iter", type=int, default=60, help="entropy iteration cap")

    p = sub.add_parser("list", help="catalog names and rod counts")
    p.set_defaults(func=_cmd_list)

    p = sub.add_parser("analyze", help="analyse one device")
    p.add_argument("name")
    tuning(p)
    p.add_argument("--json", action="store_true", help="print the analysis as JSON")
    p.add_argument("--braid", help="use this braid word instead of the device's own")
    p.add_argument("--strands", type=int, default=3, help="strand count for --braid")
    p.add_argument("--compiled", action="store_true",
                   help="compile the bundled geometry even when a braid word ships with the device")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("braid", help="Burau matrix, polynomial and entropy of a braid word")
    p.add_argument("letters", help='signed generator indices, e.g. "1 -2"')
    p.add_argument("--strands", type=int, required=True)
    p.add_argument("--entropy", action="store_true")
    p.add_argument("--burau", action="store_true")
    p.add_argument("--charpoly", action="store_true")
    tuning(p)
    p.set_defaults(func=_cmd_braid)

    p = sub.add_parser("compile", help="compile a device spec file to a braid word")
    p.add_argument("spec_file", help="JSON spec file, or the name of a bundled device")
    p.add_argument("--duration", help="time span as num/den of a period (default: the device's period fraction)")
    p.add_argument("--samples", type=int, default=512)
    p.set_defaults(func=_cmd_compile)

    p = sub.add_parser("table", help="efficiency table for the whole catalog")
    out = p.add_mutually_exclusive_group()
    out.add_argument("--csv", metavar="PATH", nargs="?", const="-", help="write CSV (default: stdout)")
    out.add_argument("--json", metavar="PATH", nargs="?", const="-", help="write JSON")
    tuning(p)
    p.add_argument("--extra-braids", metavar="FILE",
                   help='JSON file {"name": {"strands": N, "braid": "..."}} for appendix devices')
    p.add_argument("--strict", action="store_true", help="exit nonzero if any device fails")
    p.set_defaults(func=_cmd_table)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (TaffyError, OSError, KeyError, ValueError) as exc:  # JSON decode errors are ValueErrors
        print(f"taffy: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
