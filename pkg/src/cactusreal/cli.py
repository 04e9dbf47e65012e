"""Command-line front end.

Exit codes: 0 realizable / verified / no mismatches, 1 not realizable /
not verified / mismatches found, 2 invalid input (bad sequence, unknown
family, unreadable graph file, out-of-range oracle size). Payload goes to
stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .decide import decide, explain
from .graphcheck import (
    Family,
    Graph,
    GraphError,
    degree_sequence_of,
    read_graph,
    verify_realization,
    write_graph,
)
from .oracle import OracleRangeError, crosscheck
from .realize import NotRealizableError, realize
from .seqcore import (
    OddVolumeError,
    SequenceError,
    bicactus_edge_bound,
    cactus_edge_bound,
    parse_sequence,
    params,
)

EXIT_OK, EXIT_NO, EXIT_ERROR = 0, 1, 2

FAMILY_HELP = "family name: " + ", ".join(f.value for f in Family)


class UsageError(Exception):
    """Bad input detected after argument parsing; maps to exit 2."""


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def render(g: Graph, fmt: str = "edges") -> str:
    """Serialize ``g`` as the edge-list file format, DOT, or JSON."""
    if fmt == "edges":
        return write_graph(g)
    edges = g.sorted_edges()
    if fmt == "json":
        return _dumps({"n": g.n, "edges": [list(e) for e in edges]}) + "\n"
    if fmt == "dot":
        deg = g.degrees()
        lines = ["graph G {"]
        for v in range(1, g.n + 1):
            lines.append(f'  {v} [label="{v} (d={deg[v - 1]})"];')
        for u, v in edges:
            lines.append(f"  {u} -- {v};")
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def _family(text: str) -> Family:
    try:
        return Family.parse(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"unknown family {text!r} ({FAMILY_HELP})") from None


def _sequence(text: str):
    try:
        return parse_sequence(text)
    except SequenceError as exc:
        raise UsageError(f"malformed sequence: {exc}") from None


def cmd_params(args) -> int:
    d = _sequence(args.sequence)
    try:
        p = params(d)
    except OddVolumeError as exc:
        raise UsageError(str(exc)) from None
    out = p.as_dict()
    out["cactus_bound"] = cactus_edge_bound(p.n, p.beta)
    out["bicactus_bound"] = bicactus_edge_bound(p.n, p.beta)
    if args.format == "json":
        print(_dumps(out))
    else:
        for key, value in out.items():
            print(f"{key}: {value}")
    return EXIT_OK


def cmd_decide(args) -> int:
    v = decide(args.family, _sequence(args.sequence))
    if args.format == "json":
        print(_dumps(v.as_dict()))
    else:
        print(explain(v))
    return EXIT_OK if v.realizable else EXIT_NO


def cmd_realize(args) -> int:
    d = _sequence(args.sequence)
    try:
        g = realize(args.family, d)
    except NotRealizableError as exc:
        print(explain(exc.verdict), file=sys.stderr)
        return EXIT_NO
    sys.stdout.write(render(g, args.format))
    return EXIT_OK


def _read_graph_arg(path: str) -> Graph:
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        return read_graph(text)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except GraphError as exc:
        raise UsageError(f"bad graph file {path}: {exc}") from None


def cmd_verify(args) -> int:
    g = _read_graph_arg(args.graph)
    if args.sequence is not None:
        d = _sequence(args.sequence)
    else:
        # membership check against the graph's own degrees
        if any(x == 0 for x in g.degrees()):
            print("not verified: graph has an isolated vertex", file=sys.stderr)
            return EXIT_NO
        d = degree_sequence_of(g)
    ok = verify_realization(args.family, d, g)
    print("verified" if ok else "not verified")
    return EXIT_OK if ok else EXIT_NO


def cmd_oracle(args) -> int:
    try:
        report = crosscheck(
            args.family, args.n, jobs=args.jobs,
            allow_n8=args.allow_n8, witnesses=not args.no_witnesses,
        )
    except OracleRangeError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        print(_dumps(report.as_dict()))
    else:
        print(f"family: {report.family.value}")
        print(f"n: {report.n}")
        print(f"candidates: {report.candidates}")
        print(f"realizable: {len(report.realizable_multisets)}")
        print(f"mismatches: {len(report.mismatches)}")
        print(f"witness failures: {len(report.witness_failures)}")
        for seq, said, truth in report.mismatches:
            print(f"  {','.join(map(str, seq))}: decide={said} oracle={truth}")
    return EXIT_OK if report.ok else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cactusreal",
        description="Decide and construct cactus-family realizations of degree sequences.",
        epilog=FAMILY_HELP + ". Exit codes: 0 yes, 1 no, 2 invalid input.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("params", help="print the scalar parameters of a sequence")
    p.add_argument("sequence", help='e.g. "9,5^5,4^2,3^4,2,1^8"')
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(run=cmd_params)

    p = sub.add_parser("decide", help="is the sequence realizable in the family?")
    p.add_argument("--family", type=_family, required=True, help=FAMILY_HELP)
    p.add_argument("sequence")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(run=cmd_decide)

    p = sub.add_parser("realize", help="construct a witness graph")
    p.add_argument("--family", type=_family, required=True, help=FAMILY_HELP)
    p.add_argument("sequence")
    p.add_argument("--format", choices=["edges", "dot", "json"], default="edges")
    p.set_defaults(run=cmd_realize)

    p = sub.add_parser("verify", help="check a graph file for family membership")
    p.add_argument("--family", type=_family, required=True, help=FAMILY_HELP)
    p.add_argument("graph", nargs="?", default="-", help="graph file, '-' for stdin (default)")
    p.add_argument("--sequence", help="also require these degrees (as a multiset)")
    p.set_defaults(run=cmd_verify)

    p = sub.add_parser("oracle", help="cross-check decide against exhaustive enumeration")
    p.add_argument("--family", type=_family, required=True, help=FAMILY_HELP)
    p.add_argument("--n", type=int, required=True, help="vertex count, 1..7")
    p.add_argument("--jobs", type=int, default=None,
                   help="worker processes (default: $CACTUSREAL_JOBS or 1)")
    p.add_argument("--allow-n8", action="store_true", help="permit n = 8 (slow)")
    p.add_argument("--no-witnesses", action="store_true", help="skip realizing accepted multisets")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(run=cmd_oracle)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse uses 2 for usage errors and 0 for --help/--version
        return EXIT_ERROR if exc.code else EXIT_OK
    try:
        return args.run(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except BrokenPipeError:
        return EXIT_OK


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
