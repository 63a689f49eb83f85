"""Command line entry point.

Exit codes: 0 success, 1 verification failure, 2 parse error, 3 precondition
error, 4 internal verification failure, 5 oracle undecided. Data goes to stdout
or the ``--out`` file, human summaries to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import covers, decomposition, oracle, witness
from .covers import ConstructionError
from .graph_core import Graph, GraphFormatError, named_graph, parse_graph, random_cubic, to_edgelist, to_graph6

OK, VERIFY_FAILED, PARSE_ERROR, PRECONDITION, INTERNAL, UNDECIDED = range(6)


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _add_graph_args(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("graph selection")
    g.add_argument("--name", help="named graph (petersen, C5, flower_snark, random, ...)")
    g.add_argument("--k", type=int, help="size parameter for parametrised names")
    g.add_argument("--n", type=int, help="vertex count for --name random")
    g.add_argument("--seed", type=int, default=0, help="seed for --name random")
    g.add_argument("--input", type=Path, help="graph file")
    g.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")


def load_graph(args: argparse.Namespace, required: bool = True) -> Graph | None:
    try:
        if args.input is not None:
            return parse_graph(args.input.read_bytes(), args.format)
        if args.name == "random":
            if args.n is None:
                raise CliError(PARSE_ERROR, "--name random needs --n")
            return random_cubic(args.n, args.seed)
        if args.name is not None:
            return named_graph(args.name, args.k)
    except (GraphFormatError, KeyError, ValueError, OSError) as exc:
        raise CliError(PARSE_ERROR, f"cannot load graph: {exc}") from exc
    if required:
        raise CliError(PARSE_ERROR, "give --name or --input")
    return None


def _check_arms_graph(g: Graph) -> None:
    bad = sorted({d for d in g.degrees() if d not in (1, 3)})
    if bad:
        raise CliError(PRECONDITION, f"degrees must be 1 or 3, found {bad}")
    if not g.is_connected():
        raise CliError(PRECONDITION, "graph must be connected")


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text)


def cmd_generate(args) -> int:
    g = load_graph(args)
    data = to_graph6(g) + b"\n" if args.output_format == "graph6" else to_edgelist(g)
    _emit(data.decode(), args.out)
    return OK


def cmd_witness(args) -> int:
    g = load_graph(args)
    _check_arms_graph(g)
    try:
        cert = witness.build_certificate(g)
    except ConstructionError as exc:
        raise CliError(INTERNAL, f"construction failed: {exc}") from exc
    wit = witness.to_normality_witness(cert)
    for report in (witness.verify_certificate(g, cert), witness.verify_witness(wit.host, wit)):
        if not report:
            raise CliError(INTERNAL, f"self-check failed: {report.failure}")
    _emit(witness.certificate_to_json(cert, wit), args.out)
    print(f"|V|={g.n} |E|={g.m} |cover|={len(cert.cover)} stables={len(wit.stables)}",
          file=sys.stderr)
    return OK


def cmd_verify(args) -> int:
    try:
        cert, wit = witness.certificate_from_json(args.certificate.read_text())
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise CliError(PARSE_ERROR, f"cannot read certificate: {exc}") from exc
    g = load_graph(args, required=False) or cert.graph
    from .graph_core import line_graph

    report = witness.verify_certificate(g, cert)
    if report:
        try:
            report = witness.verify_witness(line_graph(g), wit)
        except ValueError as exc:
            report = witness.Report(False, f"coverage: {exc}")
    if not report:
        print(f"FAILED: {report.failure}", file=sys.stderr)
        return VERIFY_FAILED
    print("verified", file=sys.stderr)
    return OK


def _read_cover(path: Path) -> frozenset[int]:
    text = path.read_text().strip()
    try:
        data = json.loads(text)
        if isinstance(data, dict):
            data = data["cover"]
        return frozenset(int(v) for v in data)
    except (json.JSONDecodeError, KeyError, TypeError):
        return frozenset(int(tok) for tok in text.replace(",", " ").split())


def cmd_oracle(args) -> int:
    g = load_graph(args)
    budget = oracle.SearchBudget(max_vertices=args.max_vertices, max_millis=args.budget_ms,
                                 node_limit=args.node_limit)
    if args.subcheck == "normal":
        result = oracle.brute_normal(g, budget)
    elif args.subcheck == "edge-normal":
        result = oracle.brute_edge_normal(g, budget)
    elif args.subcheck == "strong":
        result = oracle.brute_strongly_edge_normal(g, budget)
    else:
        if args.cover is None:
            raise CliError(PARSE_ERROR, "oracle good needs --cover")
        result = oracle.Decision.of(oracle.brute_good(g, _read_cover(args.cover)))
    print(result)
    return UNDECIDED if result is oracle.Decision.UNKNOWN else OK


def cmd_decompose(args) -> int:
    g = load_graph(args)
    _check_arms_graph(g)
    tree = decomposition.decompose(g)
    doc = {
        "pieces": [{"body": sorted(p.labels[v] for v in p.body),
                    "arms": sorted(p.labels[v] for v in p.arms)} for p in tree.pieces],
        "links": [{"pieces": [l.piece_a, l.piece_b], "bridge": list(l.bridge)} for l in tree.links],
    }
    if args.json:
        print(json.dumps(doc))
    else:
        for i, p in enumerate(doc["pieces"]):
            print(f"piece {i}: body {len(p['body'])} arms {len(p['arms'])}")
        for link in doc["links"]:
            print(f"link {link['pieces'][0]}-{link['pieces'][1]} bridge {tuple(link['bridge'])}")
    print(f"{len(tree.pieces)} pieces, {len(tree.links)} links", file=sys.stderr)
    return OK


def cmd_diagnose(args) -> int:
    g = load_graph(args)
    try:
        c = _read_cover(args.cover)
    except (OSError, ValueError) as exc:
        raise CliError(PARSE_ERROR, f"cannot read cover: {exc}") from exc
    if not g.is_cubic():
        raise CliError(PRECONDITION, "diagnose needs a cubic graph")
    if not covers.is_minimal_cover(g, c):
        raise CliError(PRECONDITION, "cover is not a minimal vertex cover")
    try:
        ws = decomposition.find_wrong_set(g, c)
    except ConstructionError as exc:
        raise CliError(INTERNAL, str(exc)) from exc
    if ws is None:
        print(json.dumps({"good": True}) if args.json else "good")
        return OK
    clauses = decomposition.check_technical_exclusions(ws, g, c)
    doc = {
        "good": False,
        "type": ws.type,
        "W": sorted(ws.W), "Z": sorted(ws.Z), "Y": sorted(ws.Y), "U": list(ws.U),
        "bridge": list(ws.bridge),
        "stats": dict(zip(("delta", "epsilon", "p", "t"), ws.stats)),
        "checks": {"single_exit_edge": True, "deficiency_one": True,
                   "excluded_configurations": clauses},
    }
    if args.json:
        print(json.dumps(doc))
    else:
        print(f"wrong set of type {ws.type}")
        for key in ("W", "Z", "Y", "U", "bridge"):
            print(f"  {key}: {doc[key]}")
        print(f"  delta={ws.stats[0]} epsilon={ws.stats[1]} p={ws.stats[2]} t={ws.stats[3]}")
        print(f"  forbidden configurations present: {clauses or 'none'}")
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cubic-normality", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write a named or random graph")
    _add_graph_args(p)
    p.add_argument("--output-format", choices=("graph6", "edgelist"), default="graph6")
    p.add_argument("--out", type=Path)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("witness", help="certify that the line graph is normal")
    _add_graph_args(p)
    p.add_argument("--out", type=Path)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("verify", help="re-check a certificate file")
    _add_graph_args(p)
    p.add_argument("--certificate", type=Path, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="brute-force deciders")
    p.add_argument("subcheck", choices=("normal", "edge-normal", "strong", "good"))
    _add_graph_args(p)
    p.add_argument("--cover", type=Path)
    p.add_argument("--budget-ms", type=int, default=60_000)
    p.add_argument("--node-limit", type=int, default=5_000_000)
    p.add_argument("--max-vertices", type=int, default=16)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("decompose", help="split along bridges")
    _add_graph_args(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("diagnose", help="explain why a minimal cover is not good")
    _add_graph_args(p)
    p.add_argument("--cover", type=Path, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_diagnose)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
