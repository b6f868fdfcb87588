"""Command-line entry point: ``gposition {compute,scan,family,audit,oracle}``.

Exit codes: 0 success, 1 audit violation or oracle mismatch, 2 input error,
3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from .audit import family_claims, suite_graphs, random_corpus, theorem_audit, tree_corpus
from .codecs import edgelist_encode, g6_encode, parse_graph, read_g6_stream
from .errors import CapExceeded, GraphError, ParameterError
from .families import FAMILY_NAMES, FamilySpec, generate
from .gp import brute_force_gp, gp_number
from .graph import Graph
from .removal import RECORD_FIELDS, RemovalRecord, edge_scan, flag_names, vertex_scan

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


def _int_params(tokens: Sequence[str]) -> tuple[int, ...]:
    out = []
    for tok in tokens:
        for piece in tok.split(","):
            if piece:
                try:
                    out.append(int(piece))
                except ValueError:
                    raise ParameterError(f"parameter {piece!r} is not an integer") from None
    return tuple(out)


def family_spec(name: str, params: Sequence[str]) -> FamilySpec:
    """``cone_over_mis`` takes an inner family as its parameters, e.g. ``grid 3 3``."""
    if name not in FAMILY_NAMES:
        raise ParameterError(f"unknown family {name!r}; choose from {', '.join(FAMILY_NAMES)}")
    if name == "cone_over_mis":
        if not params:
            raise ParameterError("cone_over_mis needs a base family, e.g. --params grid 3 3")
        base, _ = generate(family_spec(params[0], params[1:]))
        return FamilySpec(name, (), base)
    return FamilySpec(name, _int_params(params))


def load_graph(args: argparse.Namespace) -> tuple[Graph, dict]:
    if args.family and args.input:
        raise ParameterError("give exactly one input source: --input or --family")
    if args.family:
        return generate(family_spec(args.family, args.params or []))
    if args.params:
        raise ParameterError("--params needs --family")
    if args.input and args.input != "-":
        try:
            with open(args.input) as fh:
                text = fh.read()
        except OSError as exc:
            raise GraphError(f"cannot read {args.input}: {exc.strerror}") from None
    else:
        text = sys.stdin.read()
    return parse_graph(text), {}


def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", metavar="FILE", help="graph6 or edge-list file ('-' for stdin)")
    p.add_argument("--family", metavar="NAME", help="generate the input from a named family")
    p.add_argument("--params", nargs="+", metavar="P", help="family parameters")


def _landmarks_json(marks: dict) -> dict:
    return {k: list(v) if isinstance(v, tuple) else v for k, v in marks.items()}


def cmd_compute(args, out) -> int:
    g, _ = load_graph(args)
    cert = gp_number(g)
    if args.json:
        payload = {"gp": cert.value}
        if args.witness:
            payload["witness"] = list(cert.witness)
        out.write(json.dumps(payload) + "\n")
    else:
        out.write(f"gp = {cert.value}\n")
        if args.witness:
            out.write("witness = " + " ".join(map(str, cert.witness)) + "\n")
    return EXIT_OK


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if value == float("inf"):
        return "inf"
    return str(value)


def write_records(records: list[RemovalRecord], out, as_json: bool) -> None:
    flags = flag_names(records)
    if as_json:
        out.write(json.dumps([r.as_row() for r in records], indent=1) + "\n")
        return
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([*RECORD_FIELDS, *flags])
    for rec in records:
        row = {**rec.as_row(), "diam_before": rec.diam_before, "diam_after": rec.diam_after}
        writer.writerow([_csv_cell(row[k]) for k in (*RECORD_FIELDS, *flags)])
    out.write(buf.getvalue())


def cmd_scan(args, out) -> int:
    g, _ = load_graph(args)
    scan = vertex_scan if args.what == "vertices" else edge_scan
    write_records(scan(g, workers=args.threads), out, args.json)
    return EXIT_OK


def cmd_family(args, out) -> int:
    g, marks = generate(family_spec(args.name, args.params or []))
    out.write(edgelist_encode(g) if args.emit == "edges" else g6_encode(g) + "\n")
    side = json.dumps(_landmarks_json(marks), sort_keys=True)
    if args.landmarks:
        with open(args.landmarks, "w") as fh:
            fh.write(side + "\n")
    else:
        sys.stderr.write(side + "\n")
    return EXIT_OK


def cmd_audit(args, out) -> int:
    ok = True
    if args.suite:
        for claim in family_claims():
            out.write(str(claim) + "\n")
            ok &= claim.passed
        corpus = suite_graphs()
    elif args.g6_stream:
        try:
            with open(args.g6_stream) as handle:
                corpus = [(f"line{ln}", g) for ln, g in read_g6_stream(handle)]
        except OSError as exc:
            raise GraphError(f"cannot read {args.g6_stream}: {exc.strerror}") from None
    else:
        corpus = random_corpus(args.samples, args.seed, args.max_n, args.p)
    if args.trees:
        corpus = [*corpus, *tree_corpus(args.trees, args.seed)]
    report = theorem_audit(corpus, workers=args.threads)
    for line in report.summary_lines():
        out.write(line + "\n")
    ok &= report.ok
    return EXIT_OK if ok else EXIT_VIOLATION


def cmd_oracle(args, out) -> int:
    g, _ = load_graph(args)
    oracle = brute_force_gp(g)
    out.write(f"gp = {oracle.value}\n")
    if args.compare:
        solver = gp_number(g)
        same = solver.value == oracle.value
        out.write(f"solver gp = {solver.value}: {'match' if same else 'MISMATCH'}\n")
        return EXIT_OK if same else EXIT_VIOLATION
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gposition", description="Exact general position numbers and deletion experiments.")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("compute", help="gp number of one graph")
    _add_input(p)
    p.add_argument("--witness", action="store_true", help="also print a maximum general position set")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("scan", help="delete each vertex or edge and recompute")
    p.add_argument("what", choices=("vertices", "edges"))
    _add_input(p)
    p.add_argument("--json", action="store_true", help="JSON rows instead of CSV")
    p.add_argument("--threads", type=int, default=1, help="worker processes (default 1)")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("family", help="emit a generated graph")
    p.add_argument("name", choices=FAMILY_NAMES)
    p.add_argument("--params", nargs="+", metavar="P")
    p.add_argument("--emit", choices=("g6", "edges"), default="g6")
    p.add_argument("--landmarks", metavar="FILE", help="landmark JSON destination (default stderr)")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("audit", help="check every deletion bound over a corpus")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--g6-stream", metavar="FILE")
    src.add_argument("--samples", type=int, metavar="N")
    src.add_argument("--suite", choices=("paper",))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--p", type=float, default=None, help="fixed edge probability")
    p.add_argument("--trees", type=int, default=0, help="also audit this many seeded random trees")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("oracle", help="brute-force gp (n <= 20)")
    _add_input(p)
    p.add_argument("--compare", action="store_true", help="also run the main solver; exit 1 on mismatch")
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except CapExceeded as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_CAP
    except (GraphError, ParameterError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
