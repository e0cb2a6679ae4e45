"""Command-line entry point: ``dihedral-loci <subcommand> ...``.

Exit codes: 0 all checks pass, 1 a mismatch, 2 usage error, 3 node cap reached.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .classify import (
    DEFAULT_NS,
    classify,
    parse_in,
    vector_words,
    verify_all,
    verify_tables,
)
from .covers import CoverType, enumerate_admissible
from .groups import (
    GroupError,
    automorphisms,
    automorphisms_fixing,
    distinguished_subgroup,
    make_group,
)
from .hurwitz import HurwitzError
from .orbits import orbit
from .report import render

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # keep exit code 2, but route through our handler
        self.print_usage(sys.stderr)
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _common(p: argparse.ArgumentParser, *, n: bool = True) -> None:
    if n:
        p.add_argument("--n", type=int, required=True, help="rotation order of D_n")
    p.add_argument("--format", choices=("json", "md"), default="json")
    p.add_argument("--out", metavar="FILE", help="write the report here instead of stdout")
    p.add_argument("--node-cap", type=int, default=None,
                   help="maximum canonical states per orbit search (env DIHEDRAL_LOCI_NODE_CAP)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dihedral-loci", description="Classify dihedral Hurwitz vectors and check the tables.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("enumerate", help="list admissible vectors")
    p.add_argument("--cover-type", required=True)
    p.add_argument("--group-type", default="1")
    _common(p)

    p = sub.add_parser("classify", help="orbits of admissible vectors, matched to the listed normal forms")
    p.add_argument("--cover-type", required=True)
    p.add_argument("--group-type", default="1")
    _common(p)

    p = sub.add_parser("tables", help="recompute the restriction tables at one n")
    _common(p)

    p = sub.add_parser("verify-all", help="every check over the default n set")
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--ns", type=lambda s: tuple(int(t) for t in s.split(",")), default=DEFAULT_NS,
                   help="comma-separated n values (default %(default)s)")
    _common(p, n=False)

    p = sub.add_parser("orbit", help="orbit of one vector under braids and automorphisms")
    p.add_argument("--vector", required=True, help='e.g. "((y,1),(yx,1),(yx,1),(e,1),(y,0))"')
    p.add_argument("--group-type", default="1")
    p.add_argument("--aut", choices=("H", "full", "none"), default="H",
                   help="automorphisms used: those fixing H, all, or none")
    _common(p)
    return parser


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _code(report) -> int:
    if report.partial:
        return EXIT_CAP
    return EXIT_OK if report.ok else EXIT_MISMATCH


def _enumerate(args) -> int:
    group = make_group(args.group_type, args.n)
    sub = distinguished_subgroup(group)
    vectors = enumerate_admissible(group, sub, CoverType.parse(args.cover_type))
    doc = {"schema": 1, "kind": "enumerate", "cover_type": CoverType.parse(args.cover_type).value,
           "group": group.name, "n": args.n, "count": len(vectors),
           "vectors": [vector_words(v) for v in vectors]}
    if args.format == "json":
        _emit(render(doc, "json"), args.out)
    else:
        lines = [f"## Admissible vectors: cover {doc['cover_type']}, {group.name}", "",
                 f"count: {len(vectors)}", ""]
        lines += [f"- ({', '.join(w)})" for w in doc["vectors"]]
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def _orbit(args) -> int:
    group = make_group(args.group_type, args.n)
    v = parse_in(group, args.vector)
    auts = {"H": lambda: automorphisms_fixing(group, distinguished_subgroup(group)),
            "full": lambda: automorphisms(group), "none": lambda: []}[args.aut]()
    oc = orbit(v, auts, node_cap=args.node_cap)
    doc = {"schema": 1, "kind": "orbit", "group": group.name, "n": args.n, "automorphisms": args.aut,
           "vector": vector_words(v), "representative": vector_words(oc.representative),
           "size": oc.size, "canonical_states": int(len(oc.states)), "exhausted": oc.exhausted}
    if args.format == "json":
        _emit(render(doc, "json"), args.out)
    else:
        _emit("\n".join([f"## Orbit in {group.name}", "", *(f"- {k}: {doc[k]}" for k in (
            "vector", "automorphisms", "representative", "size", "canonical_states", "exhausted"))]) + "\n",
              args.out)
    return EXIT_OK if oc.exhausted else EXIT_CAP


def _progress(name: str) -> None:
    print(f"[verify-all] {name}", file=sys.stderr)


def run(args) -> int:
    if args.command == "enumerate":
        return _enumerate(args)
    if args.command == "orbit":
        return _orbit(args)
    if args.command == "classify":
        report = classify(args.cover_type, args.group_type, args.n, args.node_cap)
    elif args.command == "tables":
        report = verify_tables(args.n, args.node_cap)
        print(report.note(), file=sys.stderr)
    else:
        report = verify_all(args.n_max, args.ns, args.node_cap, progress=_progress)
        for name, ok in report.summary():
            print(f"{'PASS' if ok else 'FAIL'}  {name}", file=sys.stderr)
    _emit(render(report, args.format), args.out)
    return _code(report)


def cli_main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"dihedral-loci: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.node_cap is not None and args.node_cap < 1:
        print("dihedral-loci: error: --node-cap must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        return run(args)
    except (GroupError, HurwitzError, ValueError) as exc:
        print(f"dihedral-loci: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
