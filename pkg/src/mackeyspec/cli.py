"""Command line interface: ``mackeyspec <verb> <group> [options]``."""

from __future__ import annotations

import argparse
import logging
import sys
import warnings
from pathlib import Path

from .golden import GOLDEN, golden_check
from .groups import DEFAULT_ORDER_CAP, DescriptorError, GroupError, OrderCapExceeded, build_group, is_prime
from .ideals import EnumerationLimitExceeded, count_admissible_local, enumerate_admissible_local, slice_primes
from .render import (
    FigureDocument,
    burnside_document,
    compare_document,
    spectrum_document,
    subgroups_document,
    to_ascii,
    to_dot,
)
from .spectrum import build_spectrum

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_CAP = 4
EXIT_GOLDEN = 5

log = logging.getLogger("mackeyspec")


def _prime(text: str) -> int:
    try:
        p = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not is_prime(p):
        raise argparse.ArgumentTypeError(f"{p} is not a prime")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("group", help="group descriptor, e.g. D8, S3, 'C2 x C4', 'perm:(0 1 2),(0 1)'")
    common.add_argument("--local", type=_prime, metavar="P", help="restrict to the slots 0 and P")
    common.add_argument("--format", choices=("ascii", "dot", "json"), default="ascii")
    common.add_argument("--cap", type=int, default=DEFAULT_ORDER_CAP, help="maximum group order")
    common.add_argument("--no-color", action="store_true", help="no colors in DOT output or plots")
    common.add_argument("--plot", type=Path, metavar="FILE", help="also render a matplotlib figure to FILE")
    common.add_argument("-o", "--output", type=Path, metavar="FILE", help="write the document to FILE")

    parser = argparse.ArgumentParser(
        prog="mackeyspec",
        description="Spectra of derived Mackey functors and Burnside rings of finite groups.",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="verb", required=True)
    sub.add_parser("spec", parents=[common], help="points and specialization order")
    sub.add_parser("burnside", parents=[common], help="gluing classes of the comparison map")
    cmp_ = sub.add_parser("compare", parents=[common], help="side-by-side comparison map")
    cmp_.add_argument("--shg", action="store_true", help="annotate chromatic heights of the image")
    ideals = sub.add_parser("ideals", parents=[common], help="admissible subsets (thick tensor-ideals)")
    mode = ideals.add_mutually_exclusive_group()
    mode.add_argument("--count", action="store_true", help="only count (default)")
    mode.add_argument("--list", action="store_true", help="list every admissible subset")
    sub.add_parser("subgroups", parents=[common], help="conjugacy classes of subgroups")
    golden = sub.add_parser("golden", help="check computations against stored reference data")
    golden.add_argument("group", nargs="?", help="group descriptor (omit with --all)")
    golden.add_argument("prime", nargs="?", type=_prime)
    golden.add_argument("--all", action="store_true", help="check every stored entry")
    return parser


def _document(args) -> FigureDocument:
    G = build_group(args.group, cap=args.cap)
    if args.verb == "subgroups":
        return subgroups_document(G)
    space = build_spectrum(G, local=args.local)
    if args.verb == "spec":
        return spectrum_document(space)
    if args.verb == "burnside":
        return burnside_document(space)
    if args.verb == "compare":
        return compare_document(space, shg=args.shg)
    # ideals
    doc = spectrum_document(space, kind="ideals")
    primes = [args.local] if args.local else slice_primes(space)
    counts = {p: count_admissible_local(space, p) for p in primes}
    if args.local:
        doc.admissible_count = counts[args.local]
        if args.list:
            try:
                with warnings.catch_warnings():
                    # the exception below carries the same message
                    warnings.simplefilter("ignore")
                    doc.admissible = [a.tokens() for a in enumerate_admissible_local(space, args.local)]
            except EnumerationLimitExceeded as exc:
                print(f"mackeyspec: {exc}", file=sys.stderr)
    else:
        if args.list:
            print("mackeyspec: --list needs --local P; reporting counts per prime", file=sys.stderr)
        doc.extra["admissible_counts"] = {str(p): n for p, n in counts.items()}
        doc.admissible_count = None
    return doc


def _render(doc: FigureDocument, fmt: str, color: bool) -> str:
    if fmt == "json":
        return doc.to_json()
    if fmt == "dot":
        return to_dot(doc, color=color)
    text = to_ascii(doc)
    counts = doc.extra.get("admissible_counts")
    if counts:
        text += "".join(f"admissible subsets of the {p}-local slice: {n}\n" for p, n in counts.items())
    return text


def _golden(args) -> int:
    if args.all:
        targets = sorted(GOLDEN)
    elif args.group and args.prime:
        targets = [(args.group, args.prime)]
    else:
        print("mackeyspec: golden needs GROUP PRIME or --all", file=sys.stderr)
        return EXIT_USAGE
    status = EXIT_OK
    for d, p in targets:
        report = golden_check(d, p)
        print(report)
        if not report.ok:
            status = EXIT_GOLDEN
    return status


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    try:
        if args.verb == "golden":
            return _golden(args)
        doc = _document(args)
        text = _render(doc, args.format, color=not args.no_color)
        if args.output:
            args.output.write_text(text)
        else:
            sys.stdout.write(text)
        if args.plot:
            from .plotting import plot_document

            plot_document(doc, args.plot, color=not args.no_color)
            log.info("wrote %s", args.plot)
    except DescriptorError as exc:
        print(f"mackeyspec: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OrderCapExceeded as exc:
        print(f"mackeyspec: {exc}", file=sys.stderr)
        return EXIT_CAP
    except KeyError as exc:
        print(f"mackeyspec: {exc.args[0]}", file=sys.stderr)
        return EXIT_USAGE
    except (GroupError, ValueError) as exc:
        print(f"mackeyspec: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
