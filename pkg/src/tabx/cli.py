"""Command line front end: ``tabx <subcommand> ...``.

Exit codes: 0 success, 1 a check failed, 2 parse or usage error,
3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path
from typing import Sequence

from tabx.admissible import is_admissible, kinds
from tabx.bijection import AdmissibilityFailure, UncoveredInadmissible, phi, psi
from tabx.clusters import ClusterStructure, NotAdmissibleError
from tabx.cycles import CycleError, ParityClass, cycle, cycles, move_through
from tabx.enumerate import count_syt, enum_admissible, enum_classes, enum_sdt, enum_syt
from tabx.fixtures import fixtures, replay, write_files
from tabx.shapes import GroupType, parse_partition
from tabx.signed import format_signed, parse_signed
from tabx.tableau import InvariantError, ParseError, ValidationError, parse_tableau, render
from tabx.tau import tau
from tabx.verify import SUITES, verify

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_INVARIANT = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit 2 itself; keep control here
        raise UsageError(f"{self.prog}: {message}")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _tableau(args):
    return parse_tableau(_read(args.input), args.type)


def _types(text: str) -> list[GroupType]:
    return [GroupType.parse(p) for p in text.split(",") if p.strip()]


def cmd_admissible(args) -> int:
    T = _tableau(args)
    verdict = is_admissible(T)
    if verdict:
        print("admissible")
        if args.kinds:
            for k, v in kinds(T).items():
                print(f"{k} {v.value}")
        return EXIT_OK
    print(f"not admissible: prefix {verdict.failing_index} has shape outside the orbit shapes")
    return EXIT_FAILED


def cmd_cycles(args) -> int:
    T = _tableau(args)
    c = ParityClass.parse(args.cls)
    found = [cycle(T, args.label, c)] if args.label is not None else cycles(T, c)
    for cy in found:
        line = cy.describe()
        if not cy.closed:
            line += f" vacated={cy.vacated} acquired={cy.acquired}"
        print(line)
    return EXIT_OK


def cmd_move_through(args) -> int:
    T = _tableau(args)
    print(render(move_through(T, args.label, ParityClass.parse(args.cls)), header=args.header))
    return EXIT_OK


def cmd_clusters(args) -> int:
    cs = ClusterStructure(_tableau(args))
    for c in cs.clusters:
        print(c.describe())
    return EXIT_OK


def cmd_phi(args) -> int:
    x = parse_signed(_read(args.input), args.type, args.mode)
    print(render(phi(x, check_order=args.check_order), header=args.header))
    return EXIT_OK


def cmd_psi(args) -> int:
    T = _tableau(args)
    print(format_signed(psi(T, mode=args.mode or "opcl")))
    return EXIT_OK


def cmd_tau(args) -> int:
    T = _tableau(args)
    result = tau(T)
    print(result.describe())
    if result.unverified:
        marked = ",".join(str(i) for i in sorted(result.unverified))
        print(f"# indices {marked} use an unverified convention in type D (marked *)", file=sys.stderr)
    return EXIT_OK


def cmd_enum(args) -> int:
    if (args.shape is None) == (args.size is None):
        raise UsageError("give exactly one of --shape and --size")
    shape = parse_partition(args.shape) if args.shape is not None else None
    if args.what == "syt":
        if shape is None:
            raise UsageError("--what syt needs --shape")
        if args.count_only:
            print(count_syt(shape))
        else:
            print("\n\n".join("\n".join(" ".join(map(str, r)) for r in tab) for tab in enum_syt(shape)))
        return EXIT_OK
    if args.type is None:
        raise UsageError(f"--what {args.what} needs --type")
    t = GroupType.parse(args.type)
    if args.what == "classes":
        items = enum_classes(t, args.mode or "opcl", shape=shape, size=args.size)
        text = [format_signed(x) for x in items]
    else:
        gen = enum_sdt if args.what == "sdt" else enum_admissible
        items = gen(t, shape=shape, size=args.size)
        text = [render(T) for T in items]
    if args.count_only:
        print(len(items))
    else:
        print("\n\n".join(text))
    return EXIT_OK


def cmd_verify(args) -> int:
    max_size = args.max_size
    cap = os.environ.get("TABX_MAX_SIZE")
    if cap:
        try:
            max_size = min(max_size, int(cap))
        except ValueError:
            raise UsageError(f"TABX_MAX_SIZE must be an integer, got {cap!r}") from None
    report = verify(args.suite, _types(args.type), max_size)
    print(report.to_json() if args.format == "json" else report.to_text())
    if args.report:
        Path(args.report).write_text(report.to_json() + "\n")
    return EXIT_OK if report.ok else EXIT_FAILED


def cmd_fixtures(args) -> int:
    if args.write:
        for path in write_files(args.write):
            print(path)
        return EXIT_OK
    bad = 0
    for fx in fixtures():
        mismatches = replay(fx)
        bad += bool(mismatches)
        print(f"{fx.name} {'ok' if not mismatches else 'MISMATCH'}")
        for m in mismatches:
            print(f"  {m}")
    return EXIT_FAILED if bad else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="tabx", description="Domino tableaux, clusters and signed classes for types B, C and D.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_input(sp, typed=True):
        sp.add_argument("--in", dest="input", default="-", help="input file (default: stdin)")
        if typed:
            sp.add_argument("--type", choices=["B", "C", "D"], type=str.upper, help="group type (or a 'type:' header)")
        return sp

    sp = with_input(sub.add_parser("admissible", help="admissibility verdict"))
    sp.add_argument("--kinds", action="store_true", help="also print the kind of every domino")
    sp.set_defaults(func=cmd_admissible)

    sp = with_input(sub.add_parser("cycles", help="list cycles of one parity class"))
    sp.add_argument("--class", dest="cls", required=True, choices=["BC", "DD"], type=str.upper)
    sp.add_argument("--label", type=int)
    sp.set_defaults(func=cmd_cycles)

    sp = with_input(sub.add_parser("move-through", help="move through the cycle of a label"))
    sp.add_argument("--class", dest="cls", required=True, choices=["BC", "DD"], type=str.upper)
    sp.add_argument("--label", type=int, required=True)
    sp.add_argument("--header", action="store_true", help="print a type header")
    sp.set_defaults(func=cmd_move_through)

    sp = with_input(sub.add_parser("clusters", help="clusters of an admissible tableau"))
    sp.set_defaults(func=cmd_clusters)

    sp = with_input(sub.add_parser("phi", help="image of a signed class"))
    sp.add_argument("--mode", choices=["opcl", "cl"], type=str.lower)
    sp.add_argument("--header", action="store_true")
    sp.add_argument("--check-order", action="store_true", help="compare every moving order")
    sp.set_defaults(func=cmd_phi)

    sp = with_input(sub.add_parser("psi", help="signed class of a standard tableau"))
    sp.add_argument("--mode", choices=["opcl", "cl"], type=str.lower)
    sp.set_defaults(func=cmd_psi)

    sp = with_input(sub.add_parser("tau", help="tau-invariant"))
    sp.set_defaults(func=cmd_tau)

    sp = sub.add_parser("enum", help="enumerate tableaux or classes")
    sp.add_argument("--what", required=True, choices=["sdt", "syt", "admissible", "classes"])
    sp.add_argument("--type", choices=["B", "C", "D"], type=str.upper)
    sp.add_argument("--shape", help="partition such as 3,3")
    sp.add_argument("--size", type=int, help="number of dominos")
    sp.add_argument("--mode", choices=["opcl", "cl"], type=str.lower)
    sp.add_argument("--count-only", action="store_true")
    sp.set_defaults(func=cmd_enum)

    sp = sub.add_parser("verify", help="run exhaustive verification suites")
    sp.add_argument("--suite", default="all", choices=[*SUITES, "all"])
    sp.add_argument("--type", default="B,C,D", help="comma separated types")
    sp.add_argument("--max-size", type=int, default=4)
    sp.add_argument("--report", help="also write a JSON report here")
    sp.add_argument("--format", choices=["text", "json"], default="text")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("fixtures", help="replay the bundled worked examples")
    sp.add_argument("--write", metavar="DIR", help="write the fixture files instead")
    sp.set_defaults(func=cmd_fixtures)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except (InvariantError, UncoveredInadmissible, AdmissibilityFailure) as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except CycleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILED
    except (ParseError, ValidationError, NotAdmissibleError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
