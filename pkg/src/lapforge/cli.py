"""Command-line front end.

``lapforge compute <what> <file>`` prints one JSON line with the requested
artifact; ``lapforge verify <suite>`` runs a seeded suite and prints JSON
lines, with a one-line summary on standard error.

Exit codes: 0 success, 1 failed verification or internal inconsistency,
2 unreadable or malformed input, 3 violated precondition.
"""

from __future__ import annotations

import argparse
import sys

from lapforge import __version__, jsonio
from lapforge.bounds import isoperimetric_constant
from lapforge.charpoly import charpoly
from lapforge.errors import LapforgeError, ParseError, PreconditionError
from lapforge.fields import KINDS
from lapforge.reduction import kron_reduce, star_mesh
from lapforge.spectra import eigenvalues
from lapforge.suites import SUITE_NAMES, SUITES, census_lines, run_suite
from lapforge.symfunc import csf

EXIT_FAIL, EXIT_PARSE, EXIT_PRECONDITION = 1, 2, 3
COMPUTE = ("charpoly", "eigenvalues", "csf", "theta", "kron", "starmesh")


def parse_vertex(text: str) -> tuple[int, ...]:
    """``"3"`` or ``"1,2"`` to a vertex id."""
    try:
        return tuple(sorted(int(x) for x in text.split(",")))
    except ValueError:
        raise ParseError(f"bad vertex id {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lapforge", description="Exact weighted-graph Laplacian toolkit.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    comp = sub.add_parser("compute", help="compute an artifact from a graph-JSON file")
    comp.add_argument("what", choices=COMPUTE)
    comp.add_argument("file", help="graph-JSON path, or - for standard input")
    comp.add_argument("--kind", choices=KINDS, default="weighted", help="Laplacian kind for eigenvalues")
    comp.add_argument("--set", nargs="+", dest="subset", metavar="ID", help="vertices to eliminate (kron)")
    comp.add_argument("--vertex", metavar="ID", help="vertex to eliminate (starmesh)")

    ver = sub.add_parser("verify", help="run a seeded verification suite")
    ver.add_argument("suite", choices=SUITE_NAMES)
    ver.add_argument("n", nargs="?", type=int, help="tree size (census only)")
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--count", type=int, default=None, help="instances per check (suite default if omitted)")
    return parser


def _read(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def compute(args) -> dict:
    G = jsonio.parse_graph(_read(args.file))
    if args.what == "charpoly":
        return jsonio.poly_to_json(charpoly(G))
    if args.what == "eigenvalues":
        return jsonio.spectrum_to_json(eigenvalues(G, args.kind))
    if args.what == "csf":
        return jsonio.psym_to_json(csf(G))
    if args.what == "theta":
        return jsonio.cut_to_json(isoperimetric_constant(G))
    if args.what == "kron":
        if not args.subset:
            raise PreconditionError("kron needs --set")
        return jsonio.graph_to_json(kron_reduce(G, [parse_vertex(x) for x in args.subset]))
    if args.vertex is None:
        raise PreconditionError("starmesh needs --vertex")
    return jsonio.graph_to_json(star_mesh(G, parse_vertex(args.vertex)))


def verify(args) -> tuple[list[dict], bool, str]:
    if args.suite == "census":
        if args.n is None:
            raise PreconditionError("census needs a tree size")
        return census_lines(args.n)
    if args.n is not None:
        raise PreconditionError(f"suite {args.suite} takes no size argument")
    report = run_suite(SUITES[args.suite], args.seed, args.count)
    return report.lines(), report.ok, report.summary()


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "compute":
            print(jsonio.dumps(compute(args)))
            return 0
        lines, ok, summary = verify(args)
    except ParseError as exc:
        print(f"lapforge: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except PreconditionError as exc:
        print(f"lapforge: precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except LapforgeError as exc:
        print(f"lapforge: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    for line in lines:
        print(jsonio.dumps(line))
    print(summary, file=sys.stderr)
    return 0 if ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
